#include "shiftdisc/colorings.hpp"

namespace shiftdisc {

std::vector<int> window_vector(const SortedSet& X, const ColoringPipeline& kappa) {
    int k = X.size(), l = kappa.l;
    if (k < l)
        throw validation_error("window_vector requires |X| >= l");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k - l + 1));
    for (int j = 1; j <= k - l + 1; ++j)
        out.push_back(kappa.color(X.window(j, l)) + 1);
    for (std::size_t j = 1; j < out.size(); ++j)
        if (out[j] == out[j - 1])
            throw consistency_error("adjacent windows received equal colors");
    return out;
}

int gamma_explicit(const SortedSet& X, const ColoringPipeline& kappa, int c) {
    int k = X.size(), l = kappa.l;
    if (!kappa.three_color)
        throw validation_error("gamma_explicit requires a 3-color pipeline");
    if (k % l != 0)
        throw validation_error("gamma_explicit requires |X| divisible by l");
    if (c < 3 || c % 2 == 0)
        throw validation_error("gamma_explicit requires odd c >= 3");
    int sum = 0;
    for (int b = 0; b < k / l; ++b)
        sum = (sum + kappa.color(X.window(b * l + 1, l))) % c;
    return sum;
}

int gamma_randomized(const SortedSet& X, const ColoringPipeline& kappa,
                     std::uint64_t seed) {
    std::uint64_t state = seed;
    for (int v : window_vector(X, kappa))
        state = splitmix64_mix(state ^ (static_cast<std::uint64_t>(v) +
                                        0x9e3779b97f4a7c15ULL));
    return (state & 1) ? 1 : -1;
}

} // namespace shiftdisc
