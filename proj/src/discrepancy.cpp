#include "shiftdisc/discrepancy.hpp"

#include <cmath>
#include <thread>

namespace shiftdisc {

double hoeffding_radius(int num_colors, std::int64_t samples) {
    return std::sqrt(std::log(2.0 * num_colors / 0.01) / (2.0 * static_cast<double>(samples)));
}

namespace {

void finish(DiscrepancyReport& rep) {
    rep.freqs.assign(static_cast<std::size_t>(rep.num_colors), 0.0);
    double uniform = 1.0 / rep.num_colors;
    rep.deviation = 0.0;
    for (int c = 0; c < rep.num_colors; ++c) {
        double f = static_cast<double>(rep.counts[static_cast<std::size_t>(c)]) /
                   static_cast<double>(rep.total);
        rep.freqs[static_cast<std::size_t>(c)] = f;
        rep.deviation = std::max(rep.deviation, std::fabs(f - uniform));
    }
    if (rep.num_colors == 2) {
        rep.has_signed_sum = true;
        rep.signed_sum = rep.counts[1] - rep.counts[0];
    }
}

int checked_color(const ColorFn& coloring, const SortedSet& X, int num_colors) {
    int c = coloring(X);
    if (c < 0 || c >= num_colors)
        throw validation_error("coloring returned an id outside [0, num_colors)");
    return c;
}

} // namespace

DiscrepancyReport exact_discrepancy(const ColorFn& coloring, const SortedSet& S, int k,
                                    int num_colors, std::int64_t budget, int threads) {
    if (num_colors < 2) throw validation_error("need at least 2 colors");
    if (k < 1 || k > S.size()) throw validation_error("need 1 <= k <= |S|");
    bigint total = binomial(S.size(), k);
    if (total > budget)
        throw budget_error("exact enumeration needs " + total.str() + " sets, over budget",
                           total.str());
    std::int64_t n_sets = static_cast<std::int64_t>(total);

    DiscrepancyReport rep;
    rep.num_colors = num_colors;
    rep.method = "exact";
    rep.total = n_sets;
    rep.counts.assign(static_cast<std::size_t>(num_colors), 0);

    int nthreads = std::max(1, threads);
    auto run_range = [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& counts) {
        counts.assign(static_cast<std::size_t>(num_colors), 0);
        if (lo >= hi) return;
        std::vector<int> idx = unrank_subset(S.size(), k, lo).elems();
        for (std::int64_t r = lo; r < hi; ++r) {
            std::vector<int> v;
            v.reserve(static_cast<std::size_t>(k));
            for (int i : idx) v.push_back(S[i - 1]);
            ++counts[static_cast<std::size_t>(checked_color(coloring, SortedSet(std::move(v)),
                                                            num_colors))];
            next_subset(idx, S.size());
        }
    };

    if (nthreads == 1) {
        run_range(0, n_sets, rep.counts);
    } else {
        std::vector<std::vector<std::int64_t>> part(static_cast<std::size_t>(nthreads));
        std::vector<std::thread> pool;
        std::int64_t chunk = (n_sets + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(run_range, t * chunk,
                              std::min<std::int64_t>(n_sets, (t + 1) * chunk),
                              std::ref(part[static_cast<std::size_t>(t)]));
        for (auto& th : pool) th.join();
        for (const auto& counts : part)
            for (int c = 0; c < num_colors; ++c)
                rep.counts[static_cast<std::size_t>(c)] += counts[static_cast<std::size_t>(c)];
    }
    finish(rep);
    return rep;
}

DiscrepancyReport mc_discrepancy(const ColorFn& coloring, const SortedSet& S, int k,
                                 int num_colors, std::int64_t samples, std::uint64_t seed,
                                 int threads) {
    if (num_colors < 2) throw validation_error("need at least 2 colors");
    if (k < 1 || k > S.size()) throw validation_error("need 1 <= k <= |S|");
    if (samples < 1) throw validation_error("samples must be >= 1");

    DiscrepancyReport rep;
    rep.num_colors = num_colors;
    rep.method = "monte_carlo";
    rep.total = samples;
    rep.seed = seed;
    rep.confidence_radius = hoeffding_radius(num_colors, samples);
    rep.counts.assign(static_cast<std::size_t>(num_colors), 0);

    auto run_range = [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& counts) {
        counts.assign(static_cast<std::size_t>(num_colors), 0);
        for (std::int64_t i = lo; i < hi; ++i) {
            Rng rng(splitmix64_mix(seed ^ (0x9e3779b97f4a7c15ULL *
                                           static_cast<std::uint64_t>(i + 1))));
            SortedSet X = sample_subset(rng, S, k);
            ++counts[static_cast<std::size_t>(checked_color(coloring, X, num_colors))];
        }
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        run_range(0, samples, rep.counts);
    } else {
        std::vector<std::vector<std::int64_t>> part(static_cast<std::size_t>(nthreads));
        std::vector<std::thread> pool;
        std::int64_t chunk = (samples + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(run_range, t * chunk,
                              std::min<std::int64_t>(samples, (t + 1) * chunk),
                              std::ref(part[static_cast<std::size_t>(t)]));
        for (auto& th : pool) th.join();
        for (const auto& counts : part)
            for (int c = 0; c < num_colors; ++c)
                rep.counts[static_cast<std::size_t>(c)] += counts[static_cast<std::size_t>(c)];
    }
    finish(rep);
    return rep;
}

CubeCoverReport cube_cover_report(const IntervalPartition& partition,
                                  const ColorFn& coloring, int num_colors,
                                  int dim_threshold, std::int64_t budget) {
    if (num_colors < 2) throw validation_error("need at least 2 colors");
    const SortedSet& S = partition.ground();
    int k = partition.k();
    bigint total = binomial(S.size(), k);
    if (total > budget)
        throw budget_error("cover report needs " + total.str() + " sets, over budget",
                           total.str());

    CubeCoverReport rep;
    rep.total_sets = static_cast<std::int64_t>(total);

    struct CubeAcc {
        int dim = 0;
        std::int64_t members = 0;
        std::vector<std::int64_t> counts;
    };
    // keyed by (J, R), which identifies a cube within one partition
    std::map<std::pair<std::vector<int>, std::vector<int>>, CubeAcc> cubes;
    std::vector<std::int64_t> overall(static_cast<std::size_t>(num_colors), 0);

    std::vector<int> idx;
    for (int i = 1; i <= k; ++i) idx.push_back(i);
    do {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(k));
        for (int i : idx) v.push_back(S[i - 1]);
        SortedSet X(std::move(v));
        int c = coloring(X);
        if (c < 0 || c >= num_colors)
            throw validation_error("coloring returned an id outside [0, num_colors)");
        ++overall[static_cast<std::size_t>(c)];
        auto cube = maximal_cube(X, partition);
        if (!cube) continue;
        ++rep.covered_sets;
        auto& acc = cubes[{cube->J(), cube->R().elems()}];
        if (acc.counts.empty()) {
            acc.dim = cube->dimension();
            acc.counts.assign(static_cast<std::size_t>(num_colors), 0);
        }
        ++acc.members;
        ++acc.counts[static_cast<std::size_t>(c)];
    } while (next_subset(idx, S.size()));

    rep.num_cubes = static_cast<std::int64_t>(cubes.size());
    rep.covered_fraction = static_cast<double>(rep.covered_sets) / rep.total_sets;
    rep.uncovered_fraction = 1.0 - rep.covered_fraction;

    double uniform = 1.0 / num_colors;
    double max_big_dev = 0.0;
    std::int64_t outside_mass = rep.total_sets - rep.covered_sets;
    for (const auto& [key, acc] : cubes) {
        if (acc.members != (std::int64_t(1) << acc.dim))
            throw consistency_error("maximal cube collected " + std::to_string(acc.members) +
                                    " members, expected 2^" + std::to_string(acc.dim));
        double dev = 0.0;
        for (std::int64_t cnt : acc.counts)
            dev = std::max(dev, std::fabs(static_cast<double>(cnt) / acc.members - uniform));
        rep.per_cube.emplace_back(acc.dim, dev);
        if (acc.dim >= dim_threshold)
            max_big_dev = std::max(max_big_dev, dev);
        else
            outside_mass += acc.members;
    }
    rep.composition_bound =
        max_big_dev + static_cast<double>(outside_mass) / rep.total_sets;

    for (std::int64_t cnt : overall)
        rep.overall_exact_deviation =
            std::max(rep.overall_exact_deviation,
                     std::fabs(static_cast<double>(cnt) / rep.total_sets - uniform));
    if (rep.overall_exact_deviation > rep.composition_bound + 1e-12)
        throw consistency_error("overall deviation exceeds the composition bound");
    return rep;
}

WorstSetReport worst_set_scan(int N, int m, int k, const ColorFn& coloring,
                              int num_colors, const std::string& mode,
                              std::int64_t samples, std::uint64_t seed,
                              std::int64_t budget) {
    if (m < k || N < m) throw validation_error("need N >= m >= k");
    WorstSetReport rep;
    rep.mode = mode;
    SortedSet ground = SortedSet::range(1, N);
    bigint per_set = binomial(m, k);
    bool exact = per_set <= budget;

    auto eval = [&](const SortedSet& S, std::uint64_t sub_seed) {
        if (exact)
            return exact_discrepancy(coloring, S, k, num_colors, budget).deviation;
        return mc_discrepancy(coloring, S, k, num_colors, samples, sub_seed).deviation;
    };

    if (mode == "exhaustive") {
        bigint total = binomial(N, m);
        if (total > budget)
            throw budget_error("worst-set scan needs " + total.str() + " ground sets, over budget",
                               total.str());
        std::vector<int> idx;
        for (int i = 1; i <= m; ++i) idx.push_back(i);
        std::uint64_t counter = 0;
        do {
            SortedSet S{std::vector<int>(idx)};
            double dev = eval(S, splitmix64_mix(seed ^ ++counter));
            ++rep.sets_scanned;
            if (dev > rep.max_deviation || rep.argmax.empty()) {
                rep.max_deviation = dev;
                rep.argmax = S;
            }
        } while (next_subset(idx, N));
        return rep;
    }
    if (mode != "sampled")
        throw validation_error("mode must be exhaustive or sampled");
    if (samples < 1) throw validation_error("sampled mode requires samples >= 1");
    for (std::int64_t i = 0; i < samples; ++i) {
        Rng rng(splitmix64_mix(seed ^ (0x9e3779b97f4a7c15ULL *
                                       static_cast<std::uint64_t>(i + 1))));
        SortedSet S = sample_subset(rng, ground, m);
        double dev = eval(S, splitmix64_mix(seed + static_cast<std::uint64_t>(i) * 2 + 1));
        ++rep.sets_scanned;
        if (dev > rep.max_deviation || rep.argmax.empty()) {
            rep.max_deviation = dev;
            rep.argmax = S;
        }
    }
    return rep;
}

} // namespace shiftdisc
