#include "shiftdisc/parity.hpp"

#include <cmath>

namespace shiftdisc {

std::vector<double> mod_distribution(const ParityParams& params) {
    params.validate();
    std::vector<double> cur(static_cast<std::size_t>(params.l), 0.0);
    std::vector<double> next(cur);
    cur[0] = 1.0;
    double q = 1.0 - params.p;
    for (int step = 0; step < params.n; ++step) {
        for (int r = 0; r < params.l; ++r) next[static_cast<std::size_t>(r)] = 0.0;
        for (int r = 0; r < params.l; ++r) {
            double mass = cur[static_cast<std::size_t>(r)];
            next[static_cast<std::size_t>(r)] += q * mass;
            next[static_cast<std::size_t>((r + 1) % params.l)] += params.p * mass;
        }
        cur.swap(next);
    }
    return cur;
}

double parity_bound(const ParityParams& params) {
    params.validate();
    double q = 1.0 - params.p;
    double base = 1.0 - 2.0 * params.p * q * (1.0 - std::cos(2.0 * M_PI / params.l));
    if (base < 0.0) base = 0.0; // roundoff guard; analytically base >= 0
    return std::pow(base, params.n / 2.0);
}

double alpha_c(int c) {
    if (c < 3 || c % 2 == 0)
        throw validation_error("alpha_c requires odd c >= 3");
    return 1.0 - (1.0 - std::cos(2.0 * M_PI / c)) / 2.0;
}

} // namespace shiftdisc
