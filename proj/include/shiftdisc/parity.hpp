#ifndef SHIFTDISC_PARITY_HPP
#define SHIFTDISC_PARITY_HPP

#include <vector>

#include "shiftdisc/errors.hpp"

namespace shiftdisc {

// Sum of n independent Bernoulli(p) variables, reduced mod l.
struct ParityParams {
    double p = 0.5; // success probability, in (0,1)
    int n = 1;      // number of variables
    int l = 2;      // modulus, >= 2
    int h = 0;      // residue of interest, in [0,l)

    void validate() const {
        if (!(p > 0.0 && p < 1.0))
            throw validation_error("parity requires 0 < p < 1");
        if (n < 1) throw validation_error("parity requires n >= 1");
        if (l < 2) throw validation_error("parity requires l >= 2");
        if (h < 0 || h >= l) throw validation_error("parity requires 0 <= h < l");
    }
};

// Exact residue distribution P[sum = r mod l], r = 0..l-1, by DP.
std::vector<double> mod_distribution(const ParityParams& params);

// (1 - 2pq(1 - cos(2pi/l)))^(n/2); dominates |P[sum = h] - 1/l|.
double parity_bound(const ParityParams& params);

// 1 - (1 - cos(2pi/c))/2 for odd c >= 3.
double alpha_c(int c);

} // namespace shiftdisc

#endif
