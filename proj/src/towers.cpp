#include "shiftdisc/towers.hpp"

#include <cmath>
#include <limits>

namespace shiftdisc {

TowerValue tower(TowerKind kind, int height, int x, std::int64_t bit_limit) {
    if (height < 1 || x < 1)
        throw validation_error("tower requires height >= 1 and x >= 1");
    if (bit_limit < 1)
        throw validation_error("tower requires bit_limit >= 1");

    TowerValue out;
    out.kind = kind;
    out.height = height;
    out.base_arg = x;

    bigint v = (kind == TowerKind::standard) ? bigint(x) : bigint(2) * x;
    for (int h = 2; h <= height; ++h) {
        bigint exponent = (kind == TowerKind::standard) ? v : v / 2;
        // 2^e has bit length e+1
        if (exponent + 1 > bit_limit) {
            out.exact = false;
            out.bit_length_bound = exponent;
            return out;
        }
        v = bigint(1) << static_cast<unsigned>(exponent);
    }
    if (boost::multiprecision::msb(v) + 1 > static_cast<unsigned>(bit_limit)) {
        out.exact = false;
        out.bit_length_bound = boost::multiprecision::msb(v); // bit length - 1
        return out;
    }
    out.value = v;
    return out;
}

bool tower_domination_check(int i, int x) {
    if (i < 1 || i > 4)
        throw validation_error("tower_domination_check supports 1 <= i <= 4",
                               "range-error");
    if (x < 2)
        throw validation_error("tower_domination_check requires x >= 2");
    const std::int64_t limit = std::int64_t(1) << 24; // exact big-int range
    TowerValue lhs = tower(TowerKind::sqrt2, i, 2 * x, limit);
    TowerValue rhs = tower(TowerKind::standard, i, x, limit);
    if (!lhs.exact || !rhs.exact)
        throw validation_error("tower values not exactly representable for this (i, x)",
                               "range-error");
    return lhs.value >= 4 * rhs.value;
}

ParamsA::ParamsA(int k_, int l_) : k(k_), l(l_) {
    if (k < 1 || l < 1)
        throw validation_error("ParamsA requires positive k and l");
    if (k % (2 * l - 1) != 0)
        throw validation_error("ParamsA requires k divisible by 2l-1");
    n = k / (2 * l - 1);
    m = 2 * l * n;
    p_win = k - l + 1;
}

ParamsB::ParamsB(int k_, int l_, int c_) : k(k_), l(l_), c(c_) {
    if (k < 1 || l < 1)
        throw validation_error("ParamsB requires positive k and l");
    if (k % l != 0)
        throw validation_error("ParamsB requires k divisible by l");
    if (c < 3 || c % 2 == 0)
        throw validation_error("ParamsB requires odd c >= 3");
    n = k / l;
    m = n * (l + 1);
}

namespace {

double require(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw validation_error("missing bound parameter: " + key);
    return it->second;
}

} // namespace

BoundResult bound_calculator(const std::string& name,
                             const std::map<std::string, double>& params) {
    BoundResult r;
    if (name == "chernoff_hit") {
        double n = require(params, "n");
        if (n <= 0) throw validation_error("chernoff_hit requires n > 0");
        r.exponent = -n / (8.0 * std::exp(1.0));
        r.value = std::exp(r.exponent);
    } else if (name == "image_count") {
        double p = require(params, "p");
        if (p <= 0) throw validation_error("image_count requires p > 0");
        r.exponent = p * std::log(84.0);
        r.value = std::pow(84.0, p);
    } else if (name == "union_bound") {
        double k = require(params, "k");
        double l = require(params, "l");
        double delta = require(params, "delta");
        if (k <= 0 || l <= 0 || delta <= 0)
            throw validation_error("union_bound requires positive k, l, delta");
        // exponent = -2 delta^2 2^{k/12l} + k ln 84, evaluated in log space
        // so huge towers collapse to -inf instead of overflowing.
        double log2_term = 1.0 + 2.0 * std::log2(delta) + k / (12.0 * l);
        double term = (log2_term > 1020.0) ? std::numeric_limits<double>::infinity()
                                           : std::exp2(log2_term);
        r.exponent = -term + k * std::log(84.0);
        r.value = (r.exponent < -700.0) ? 0.0 : std::exp(r.exponent);
        r.has_feasible = true;
        r.feasible = r.exponent < 0.0;
    } else if (name == "l_bound") {
        double k = require(params, "k");
        if (k <= 0) throw validation_error("l_bound requires k > 0");
        r.value = k / (20.0 * std::log2(5.0 * k));
        r.exponent = std::numeric_limits<double>::quiet_NaN();
    } else if (name == "azuma_hit" || name == "cover_fraction_B") {
        double l = require(params, "l");
        double delta = require(params, "delta");
        if (l <= 0 || delta <= 0)
            throw validation_error(name + " requires positive l and delta");
        r.exponent = -std::pow(l, delta) / 8.0;
        r.value = 2.0 * std::exp(r.exponent);
    } else {
        throw validation_error("unknown bound name: " + name);
    }
    return r;
}

} // namespace shiftdisc
