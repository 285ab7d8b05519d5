#ifndef SHIFTDISC_CUBES_HPP
#define SHIFTDISC_CUBES_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "shiftdisc/colorings.hpp"

namespace shiftdisc {

enum class Variant { A, B };

// Consecutive slices of the ground set S: n intervals of length 2l
// (variant A) or l+1 (variant B).
class IntervalPartition {
public:
    IntervalPartition(SortedSet S, Variant variant, int l);

    const SortedSet& ground() const noexcept { return S_; }
    Variant variant() const noexcept { return variant_; }
    int l() const noexcept { return l_; }
    int n() const noexcept { return n_; }
    int interval_length() const noexcept { return variant_ == Variant::A ? 2 * l_ : l_ + 1; }
    int k() const noexcept { return variant_ == Variant::A ? n_ * (2 * l_ - 1) : n_ * l_; }
    SortedSet interval(int i) const; // 1-based

private:
    SortedSet S_;
    Variant variant_;
    int l_, n_;
};

// C(J,R) / C'(J,R): 2^|J| member k-sets agreeing with the frozen part R
// outside the intervals indexed by J and taking one of two completions
// inside each.
class Cube {
public:
    Cube(IntervalPartition partition, std::vector<int> J, SortedSet R);

    const IntervalPartition& partition() const noexcept { return partition_; }
    const std::vector<int>& J() const noexcept { return J_; }
    const SortedSet& R() const noexcept { return R_; }
    int dimension() const noexcept { return static_cast<int>(J_.size()); }

    // The two completion choices inside interval j (ascending order).
    std::pair<SortedSet, SortedSet> options(int j) const;

private:
    IntervalPartition partition_;
    std::vector<int> J_;
    SortedSet R_;
};

bool properly_hits_A(const SortedSet& X, const IntervalPartition& partition, int i);
bool properly_hits_B(const SortedSet& X, const IntervalPartition& partition, int i, int h);

// Z(X): properly hit intervals (variant A by the cardinality condition,
// variant B with h = 0).
int count_hits(const SortedSet& X, const IntervalPartition& partition);

// The unique maximal cube containing X, or nothing when Z(X) = 0.
std::optional<Cube> maximal_cube(const SortedSet& X, const IntervalPartition& partition);

// All 2^d members, lexicographically ordered.
std::vector<SortedSet> enumerate_cube(const Cube& cube);

struct MainProjections {
    std::map<int, int> j_of; // interval index in J -> window index
    std::vector<int> B;      // the window indices, sorted
};

// For each hit interval, the window index whose projection is the main
// projection of every member (Lemma-backed uniqueness; violations raise
// an internal-consistency error). Variant A only.
MainProjections main_projections(const Cube& cube);

// (B, sigma, {f_i}): the phi-image of a cube, compressed to the two colors
// per main-projection coordinate and, for every other coordinate, a table
// keyed by the nearest B-neighbors' colors (default 1 past the ends).
struct CubeImageCode {
    int p_win = 0;
    std::vector<int> B;
    std::vector<std::pair<int, int>> sigma; // per B entry, its two colors
    std::map<int, std::map<std::pair<int, int>, int>> f;
};

CubeImageCode encode_image(const Cube& cube, const ColoringPipeline& kappa);

// All 2^|B| color vectors the code describes.
std::set<std::vector<int>> decode_image(const CubeImageCode& code);

} // namespace shiftdisc

#endif
