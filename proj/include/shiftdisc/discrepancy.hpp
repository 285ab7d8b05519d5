#ifndef SHIFTDISC_DISCREPANCY_HPP
#define SHIFTDISC_DISCREPANCY_HPP

#include <functional>

#include "shiftdisc/cubes.hpp"

namespace shiftdisc {

// A coloring of k-sets into ids 0..num_colors-1.
using ColorFn = std::function<int(const SortedSet&)>;

struct DiscrepancyReport {
    int num_colors = 0;
    std::vector<std::int64_t> counts;  // per color id
    std::vector<double> freqs;
    double deviation = 0.0;            // max_i |freq_i - 1/num_colors|
    std::string method;                // "exact" or "monte_carlo"
    std::int64_t total = 0;            // sets counted (samples for MC)
    std::uint64_t seed = 0;
    double confidence_radius = 0.0;    // 0 for exact, 99% Hoeffding for MC
    bool has_signed_sum = false;       // 2-color case
    std::int64_t signed_sum = 0;       // counts[1] - counts[0]
};

// Full enumeration of C(S,k) in lexicographic order; C(|S|,k) <= budget.
DiscrepancyReport exact_discrepancy(const ColorFn& coloring, const SortedSet& S, int k,
                                    int num_colors, std::int64_t budget, int threads = 1);

// Uniform k-subsets of S by rank unranking with per-index derived seeds;
// identical output for any thread count.
DiscrepancyReport mc_discrepancy(const ColorFn& coloring, const SortedSet& S, int k,
                                 int num_colors, std::int64_t samples, std::uint64_t seed,
                                 int threads = 1);

struct CubeCoverReport {
    std::int64_t total_sets = 0;
    std::int64_t covered_sets = 0;
    std::int64_t num_cubes = 0;
    double covered_fraction = 0.0;
    double uncovered_fraction = 0.0;
    std::vector<std::pair<int, double>> per_cube; // (dimension, exact deviation)
    double composition_bound = 0.0;
    double overall_exact_deviation = 0.0;
};

// Partitions C(S,k) into maximal cubes plus the uncovered remainder and
// checks the composition inequality: overall deviation <= (max deviation
// over cubes of dimension >= dim_threshold) + (mass outside those cubes).
CubeCoverReport cube_cover_report(const IntervalPartition& partition,
                                  const ColorFn& coloring, int num_colors,
                                  int dim_threshold, std::int64_t budget);

struct WorstSetReport {
    std::string mode;
    std::int64_t sets_scanned = 0;
    double max_deviation = 0.0;
    SortedSet argmax;
};

// Max deviation of the coloring over ground sets S in C([N], m), each S
// evaluated exactly when C(m,k) <= budget, else by MC with a derived seed.
WorstSetReport worst_set_scan(int N, int m, int k, const ColorFn& coloring,
                              int num_colors, const std::string& mode,
                              std::int64_t samples, std::uint64_t seed,
                              std::int64_t budget);

// sqrt(ln(2c/0.01) / (2 samples)): the 99% Hoeffding radius.
double hoeffding_radius(int num_colors, std::int64_t samples);

} // namespace shiftdisc

#endif
