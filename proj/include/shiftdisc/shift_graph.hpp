#ifndef SHIFTDISC_SHIFT_GRAPH_HPP
#define SHIFTDISC_SHIFT_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shiftdisc/sorted_set.hpp"

namespace shiftdisc {

// Sh(N,l): vertices are the l-subsets of [1,N]; a and b form an edge when
// b drops a's minimum and appends an element above a's maximum.
bool is_shift_edge(const SortedSet& a, const SortedSet& b);

enum class StepKind { base, delta, subset6, subset4, k4 };

const char* step_kind_name(StepKind k);

struct VerifyReport;

struct LevelSpec {
    StepKind kind;
    int color_bound; // declared upper bound on ids used at this level
};

// Layered coloring of Sh(N,h) for every h in [1,l].
//
// Level 1 colors {x} with x-1. A delta level colors the shift edge
// (prefix, suffix) by 2i + bit_i(color(prefix)), i the lowest differing
// bit. The subset levels embed color ids as fixed lexicographic 3-subsets
// of [6] (<=20 in) resp. 2-subsets of [4] (<=6 in) and color the edge by
// min(set(prefix) \ set(suffix)) - 1. The final k4 level reads the colors
// a,b,c of the three (l-2)-windows (shifted to {1..4}) and emits
// b if b != 4, else min({1,2,3} \ {a,c}) — then back to a 0-based id.
//
// The 3-color chain is base, delta...delta, subset6, subset4, delta, k4;
// the fallback chain (more colors, any l >= 2) is base followed by deltas.
class ColoringPipeline {
public:
    int N = 0;
    int l = 0;
    bool three_color = false;
    std::vector<LevelSpec> levels; // levels[h-1] describes level h

    // Test hook: forces this constant at the final level, which must make
    // verify_proper report violations.
    std::optional<int> final_color_override;

    ColoringPipeline();
    ~ColoringPipeline();
    ColoringPipeline(ColoringPipeline&&) noexcept;
    ColoringPipeline& operator=(ColoringPipeline&&) noexcept;

    int color(const SortedSet& block) const;

    // Distinct color ids observed at each level so far (memo-backed).
    std::vector<int> used_counts() const;

private:
    struct Memo; // mutex-guarded cache + per-level used-color sets
    std::unique_ptr<Memo> memo_;

    int color_uncached(const SortedSet& block) const;

    // The sampled verifier evaluates witnesses in local buffers and merges
    // the colors it saw into the used-color sets afterwards.
    friend VerifyReport verify_proper(const ColoringPipeline&, const std::string&,
                                             std::int64_t, std::uint64_t, std::int64_t, int);
};

// 3-color pipeline; l >= 4 and N within the admissible range for l
// (error code "n-exceeds-tower-bound" otherwise, naming the bit length of
// the maximal admissible N).
ColoringPipeline build_pipeline(int N, int l);

// Delta-only pipeline for any l >= 2; final color count is not 3.
ColoringPipeline build_fallback_pipeline(int N, int l);

// Bit length of the largest N accepted by build_pipeline for this l.
bigint max_admissible_bits(int l);

struct VerifyReport {
    std::string mode;
    std::int64_t edges_checked = 0;
    std::int64_t violations = 0;
};

// Checks color(prefix) != color(suffix) over (l+1)-set witnesses:
// all of them (exhaustive; C(N,l+1) <= budget or budget-error) or
// `samples` uniform draws with per-index derived seeds, so the result is
// independent of threading.
VerifyReport verify_proper(const ColoringPipeline& pipe, const std::string& mode,
                           std::int64_t budget, std::uint64_t seed,
                           std::int64_t samples = 0, int threads = 1);

// True iff Sh(N,l) is non-bipartite (odd cycle found by BFS 2-coloring).
bool odd_cycle_check(int N, int l, std::int64_t budget);

} // namespace shiftdisc

#endif
