#include "shiftdisc/shift_graph.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace shiftdisc {

bool is_shift_edge(const SortedSet& a, const SortedSet& b) {
    if (a.size() != b.size() || a.empty())
        throw validation_error("is_shift_edge requires non-empty sets of equal size");
    int l = a.size();
    for (int i = 0; i + 1 < l; ++i)
        if (a[i + 1] != b[i]) return false;
    return b[l - 1] > a.max();
}

const char* step_kind_name(StepKind k) {
    switch (k) {
    case StepKind::base: return "base";
    case StepKind::delta: return "delta";
    case StepKind::subset6: return "subset6";
    case StepKind::subset4: return "subset4";
    case StepKind::k4: return "k4";
    }
    return "?";
}

namespace {

// bits needed for ids 0..count-1
int bit_width_of(int count) {
    if (count <= 2) return 1;
    return std::bit_width(static_cast<unsigned>(count - 1));
}

constexpr std::size_t kMemoCap = std::size_t(1) << 22;

// min(set(cp) \ set(cs)) - 1 over the lexicographic k-subsets of [n];
// tabulated once since only (6,3) and (4,2) occur.
int subset_diff_min(int n, int k, int cp, int cs) {
    auto build = [](int n_, int k_) {
        int cnt = static_cast<int>(binomial(n_, k_));
        std::vector<int> t(static_cast<std::size_t>(cnt * cnt), -1);
        for (int a = 0; a < cnt; ++a)
            for (int b = 0; b < cnt; ++b) {
                if (a == b) continue;
                SortedSet d = set_difference(unrank_subset(n_, k_, a), unrank_subset(n_, k_, b));
                t[static_cast<std::size_t>(a * cnt + b)] = d.min() - 1;
            }
        return t;
    };
    static const std::vector<int> t63 = build(6, 3);
    static const std::vector<int> t42 = build(4, 2);
    const std::vector<int>& t = (n == 6) ? t63 : t42;
    int cnt = (n == 6) ? 20 : 6;
    (void)k;
    return t[static_cast<std::size_t>(cp * cnt + cs)];
}

int pair_step(StepKind kind, int cp, int cs) {
    switch (kind) {
    case StepKind::delta: {
        unsigned x = static_cast<unsigned>(cp ^ cs);
        int i = std::countr_zero(x);
        return 2 * i + ((cp >> i) & 1);
    }
    case StepKind::subset6:
        return subset_diff_min(6, 3, cp, cs);
    case StepKind::subset4:
        return subset_diff_min(4, 2, cp, cs);
    default:
        throw consistency_error("unexpected step kind");
    }
}

int k4_step(int a0, int b0, int c0) {
    int a = a0 + 1, b = b0 + 1, c = c0 + 1;
    if (a == b || b == c)
        throw consistency_error("k4 step saw equal adjacent window colors");
    if (b != 4) return b - 1;
    for (int d = 1; d <= 3; ++d)
        if (d != a && d != c) return d - 1;
    throw consistency_error("k4 step found no free color");
}

} // namespace

struct ColoringPipeline::Memo {
    std::mutex mu;
    std::map<std::vector<int>, int> cache;
    std::vector<std::set<int>> used;
};

ColoringPipeline::ColoringPipeline() : memo_(std::make_unique<Memo>()) {}
ColoringPipeline::~ColoringPipeline() = default;
ColoringPipeline::ColoringPipeline(ColoringPipeline&&) noexcept = default;
ColoringPipeline& ColoringPipeline::operator=(ColoringPipeline&&) noexcept = default;

int ColoringPipeline::color(const SortedSet& block) const {
    {
        std::lock_guard<std::mutex> lk(memo_->mu);
        auto it = memo_->cache.find(block.elems());
        if (it != memo_->cache.end()) return it->second;
    }
    int v = color_uncached(block);
    {
        std::lock_guard<std::mutex> lk(memo_->mu);
        if (memo_->cache.size() < kMemoCap) memo_->cache.emplace(block.elems(), v);
        if (memo_->used.size() < static_cast<std::size_t>(l))
            memo_->used.resize(static_cast<std::size_t>(l));
        memo_->used[static_cast<std::size_t>(block.size() - 1)].insert(v);
    }
    return v;
}

int ColoringPipeline::color_uncached(const SortedSet& block) const {
    int h = block.size();
    if (h < 1 || h > l)
        throw validation_error("block exceeds pipeline levels");
    if (block.min() < 1 || block.max() > N)
        throw validation_error("block outside ground range [1,N]");

    if (h == l && final_color_override)
        return *final_color_override;

    StepKind kind = levels[static_cast<std::size_t>(h - 1)].kind;
    if (kind == StepKind::base)
        return block[0] - 1;

    if (kind == StepKind::k4) {
        int w = h - 2;
        return k4_step(color(block.window(1, w)), color(block.window(2, w)),
                       color(block.window(3, w)));
    }

    int cp = color(block.window(1, h - 1));
    int cs = color(block.window(2, h - 1));
    if (cp == cs)
        throw consistency_error("level " + std::to_string(h - 1) +
                                " colored a shift edge monochromatically");
    return pair_step(kind, cp, cs);
}

std::vector<int> ColoringPipeline::used_counts() const {
    std::lock_guard<std::mutex> lk(memo_->mu);
    std::vector<int> out(static_cast<std::size_t>(l), 0);
    for (std::size_t i = 0; i < memo_->used.size() && i < out.size(); ++i)
        out[i] = static_cast<int>(memo_->used[i].size());
    return out;
}

bigint max_admissible_bits(int l) {
    if (l == 4) return 3; // max N = 6
    // Backward from the subset6 entry bound of 20 through l-5 delta levels:
    // a delta producing <= c colors accepts up to 2^(c/2) input colors.
    bigint v = 20;
    for (int step = 0; step < l - 5; ++step) {
        bigint e = v / 2;
        if (e > (std::int64_t(1) << 24))
            throw validation_error("admissible bound too large to evaluate", "range-error");
        v = bigint(1) << static_cast<unsigned>(e);
    }
    return boost::multiprecision::msb(v) + 1;
}

namespace {

ColoringPipeline make_pipeline(int N, int l) {
    ColoringPipeline p;
    p.N = N;
    p.l = l;
    return p;
}

} // namespace

ColoringPipeline build_pipeline(int N, int l) {
    if (l < 4)
        throw validation_error("3-color pipeline requires l >= 4 (use the fallback for smaller l)");
    if (N < l)
        throw validation_error("build_pipeline requires N >= l");

    ColoringPipeline p = make_pipeline(N, l);
    p.three_color = true;
    p.levels.push_back({StepKind::base, N});

    if (l == 4) {
        if (N > 6)
            throw validation_error(
                "N too large for l=4: maximal admissible N has bit length " +
                    max_admissible_bits(l).str(),
                "n-exceeds-tower-bound");
        p.levels.push_back({StepKind::subset4, 4});
    } else {
        int cur = N;
        for (int h = 2; h <= l - 4; ++h) {
            cur = 2 * bit_width_of(cur);
            p.levels.push_back({StepKind::delta, cur});
        }
        if (cur > 20)
            throw validation_error(
                "N too large for l=" + std::to_string(l) +
                    ": maximal admissible N has bit length " + max_admissible_bits(l).str(),
                "n-exceeds-tower-bound");
        p.levels.push_back({StepKind::subset6, 6});
        p.levels.push_back({StepKind::subset4, 4});
    }
    p.levels.push_back({StepKind::delta, 4});
    p.levels.push_back({StepKind::k4, 3});
    return p;
}

ColoringPipeline build_fallback_pipeline(int N, int l) {
    if (l < 2)
        throw validation_error("fallback pipeline requires l >= 2");
    if (N < l)
        throw validation_error("build_fallback_pipeline requires N >= l");
    ColoringPipeline p = make_pipeline(N, l);
    p.three_color = false;
    p.levels.push_back({StepKind::base, N});
    int cur = N;
    for (int h = 2; h <= l; ++h) {
        cur = 2 * bit_width_of(cur);
        p.levels.push_back({StepKind::delta, cur});
    }
    return p;
}

VerifyReport verify_proper(const ColoringPipeline& pipe, const std::string& mode,
                           std::int64_t budget, std::uint64_t seed,
                           std::int64_t samples, int threads) {
    VerifyReport rep;
    rep.mode = mode;
    int l = pipe.l, N = pipe.N;

    auto check_witness = [&](const SortedSet& w) {
        return pipe.color(w.window(1, l)) != pipe.color(w.window(2, l));
    };

    if (mode == "exhaustive") {
        bigint total = binomial(N, l + 1);
        if (total > budget)
            throw budget_error("exhaustive verification needs " + total.str() +
                                   " witnesses, over budget",
                               total.str());
        std::vector<int> w;
        for (int i = 1; i <= l + 1; ++i) w.push_back(i);
        do {
            ++rep.edges_checked;
            if (!check_witness(SortedSet(w))) ++rep.violations;
        } while (next_subset(w, N));
        return rep;
    }
    if (mode != "sampled")
        throw validation_error("mode must be exhaustive or sampled");
    if (samples < 1)
        throw validation_error("sampled verification requires samples >= 1");
    if (N < l + 1)
        throw validation_error("sampled verification needs N >= l + 1");

    // Per-index derived seeds: counts are summed and color sets unioned, so
    // any thread split of the index range yields the identical report.
    // Each witness is evaluated level by level in local buffers — the same
    // step rules as color(), without memo traffic.
    std::size_t ll = static_cast<std::size_t>(l);
    auto run_range = [&](std::int64_t lo, std::int64_t hi, std::int64_t& bad,
                         std::vector<std::set<int>>& used) {
        std::int64_t local = 0;
        std::vector<int> w(static_cast<std::size_t>(l + 1));
        std::vector<std::vector<int>> cols(ll);
        for (int h = 1; h <= l; ++h)
            cols[static_cast<std::size_t>(h - 1)].resize(static_cast<std::size_t>(l + 2 - h));
        for (std::int64_t i = lo; i < hi; ++i) {
            Rng rng(splitmix64_mix(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1))));
            for (int j = 0; j <= l; ++j) { // uniform (l+1)-subset by distinct draws
                for (;;) {
                    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(N))) + 1;
                    bool dup = false;
                    for (int t = 0; t < j; ++t)
                        if (w[static_cast<std::size_t>(t)] == v) { dup = true; break; }
                    if (!dup) { w[static_cast<std::size_t>(j)] = v; break; }
                }
            }
            std::sort(w.begin(), w.end());
            for (int j = 0; j <= l; ++j) cols[0][static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] - 1;
            for (int h = 2; h <= l; ++h) {
                StepKind kind = pipe.levels[static_cast<std::size_t>(h - 1)].kind;
                auto& row = cols[static_cast<std::size_t>(h - 1)];
                for (int j = 0; j < l + 2 - h; ++j) {
                    int v;
                    if (h == l && pipe.final_color_override) {
                        v = *pipe.final_color_override;
                    } else if (kind == StepKind::k4) {
                        const auto& low = cols[static_cast<std::size_t>(h - 3)];
                        v = k4_step(low[static_cast<std::size_t>(j)],
                                    low[static_cast<std::size_t>(j + 1)],
                                    low[static_cast<std::size_t>(j + 2)]);
                    } else {
                        const auto& prev = cols[static_cast<std::size_t>(h - 2)];
                        int cp = prev[static_cast<std::size_t>(j)];
                        int cs = prev[static_cast<std::size_t>(j + 1)];
                        if (cp == cs)
                            throw consistency_error("level " + std::to_string(h - 1) +
                                                    " colored a shift edge monochromatically");
                        v = pair_step(kind, cp, cs);
                    }
                    row[static_cast<std::size_t>(j)] = v;
                }
            }
            for (int h = 1; h <= l; ++h)
                for (int j = 0; j < l + 2 - h; ++j)
                    used[static_cast<std::size_t>(h - 1)].insert(
                        cols[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(j)]);
            if (cols[ll - 1][0] == cols[ll - 1][1]) ++local;
        }
        bad = local;
    };

    int nthreads = std::max(threads, 1);
    std::vector<std::int64_t> bad(static_cast<std::size_t>(nthreads), 0);
    std::vector<std::vector<std::set<int>>> used(static_cast<std::size_t>(nthreads),
                                                 std::vector<std::set<int>>(ll));
    if (nthreads == 1) {
        run_range(0, samples, bad[0], used[0]);
    } else {
        std::vector<std::thread> pool;
        std::int64_t chunk = (samples + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::int64_t lo = t * chunk, hi = std::min<std::int64_t>(samples, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi, std::ref(bad[static_cast<std::size_t>(t)]),
                              std::ref(used[static_cast<std::size_t>(t)]));
        }
        for (auto& th : pool) th.join();
    }
    for (std::int64_t b : bad) rep.violations += b;
    {
        std::lock_guard<std::mutex> lk(pipe.memo_->mu);
        if (pipe.memo_->used.size() < ll) pipe.memo_->used.resize(ll);
        for (std::size_t h = 0; h < ll; ++h)
            for (const auto& u : used)
                pipe.memo_->used[h].insert(u[h].begin(), u[h].end());
    }
    rep.edges_checked = samples;
    return rep;
}

bool odd_cycle_check(int N, int l, std::int64_t budget) {
    if (l < 1 || N < l)
        throw validation_error("odd_cycle_check requires N >= l >= 1");
    bigint total = binomial(N, l);
    if (total > budget)
        throw budget_error("odd_cycle_check needs " + total.str() + " vertices, over budget",
                           total.str());
    std::size_t nv = static_cast<std::size_t>(total);
    std::vector<signed char> side(nv, -1);
    std::vector<std::size_t> queue;

    auto neighbors = [&](const SortedSet& v, std::vector<bigint>& out) {
        out.clear();
        std::vector<int> e = v.elems();
        // successors: drop min, append y > max
        std::vector<int> succ(e.begin() + 1, e.end());
        succ.push_back(0);
        for (int y = v.max() + 1; y <= N; ++y) {
            succ.back() = y;
            out.push_back(rank_subset(N, SortedSet(succ)));
        }
        // predecessors: prepend y < min, drop max
        std::vector<int> pred(e.size());
        std::copy(e.begin(), e.end() - 1, pred.begin() + 1);
        for (int y = 1; y < v.min(); ++y) {
            pred[0] = y;
            out.push_back(rank_subset(N, SortedSet(pred)));
        }
    };

    std::vector<bigint> nbr;
    for (std::size_t start = 0; start < nv; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        queue.assign(1, start);
        while (!queue.empty()) {
            std::size_t r = queue.back();
            queue.pop_back();
            SortedSet v = unrank_subset(N, l, r);
            neighbors(v, nbr);
            for (const bigint& br : nbr) {
                std::size_t u = static_cast<std::size_t>(br);
                if (side[u] == -1) {
                    side[u] = static_cast<signed char>(1 - side[r]);
                    queue.push_back(u);
                } else if (side[u] == side[r]) {
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace shiftdisc
