#ifndef SHIFTDISC_TOWERS_HPP
#define SHIFTDISC_TOWERS_HPP

#include <map>
#include <string>

#include "shiftdisc/sorted_set.hpp"

namespace shiftdisc {

enum class TowerKind { standard, sqrt2 };

// tw_1(x) = x, tw_{i+1}(x) = 2^{tw_i(x)};
// the sqrt2 variant: tw'_1(x) = 2x, tw'_{i+1}(x) = 2^{tw'_i(x)/2}.
struct TowerValue {
    TowerKind kind;
    int height = 0;
    int base_arg = 0;
    bool exact = true;
    bigint value;            // when exact
    bigint bit_length_bound; // when not exact: bit length > this
};

// Exact value if its bit length fits in bit_limit, otherwise the
// exceeds-limit marker with a lower bound on the bit length. Sweeps over
// heights never abort on overflow.
TowerValue tower(TowerKind kind, int height, int x, std::int64_t bit_limit);

// tw'_i(2x) >= 4*tw_i(x), decided with exact arithmetic; i in [1,4].
bool tower_domination_check(int i, int x);

struct ParamsA {
    int k = 0, l = 0;
    int n = 0;     // k / (2l-1)
    int m = 0;     // 2*l*n
    int p_win = 0; // k - l + 1
    ParamsA(int k_, int l_);
};

struct ParamsB {
    int k = 0, l = 0, c = 0;
    int n = 0; // k / l
    int m = 0; // n * (l+1)
    ParamsB(int k_, int l_, int c_);
};

// Closed-form bound values with every o(1) factor fixed to 0
// (multiplicative factor 1); advisory numbers, not guarantees.
struct BoundResult {
    double value = 0.0;
    double exponent = 0.0;  // natural-log exponent where meaningful
    bool has_feasible = false;
    bool feasible = false;
    std::string note = "asymptotic form, constants dropped";
};

// Names: chernoff_hit(n), union_bound(k,l,delta), l_bound(k),
// azuma_hit(l,delta), cover_fraction_B(l,delta), image_count(p).
BoundResult bound_calculator(const std::string& name,
                             const std::map<std::string, double>& params);

} // namespace shiftdisc

#endif
