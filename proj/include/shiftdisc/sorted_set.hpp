#ifndef SHIFTDISC_SORTED_SET_HPP
#define SHIFTDISC_SORTED_SET_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shiftdisc/errors.hpp"
#include "shiftdisc/rng.hpp"

namespace shiftdisc {

using bigint = boost::multiprecision::cpp_int;

// A strictly increasing tuple of positive integers. The universal
// representation of l-sets, k-sets and ground sets.
class SortedSet {
public:
    SortedSet() = default;

    explicit SortedSet(std::vector<int> elems) : elems_(std::move(elems)) {
        int prev = 0;
        for (int e : elems_) {
            if (e <= prev)
                throw validation_error("SortedSet requires strictly increasing positive elements");
            prev = e;
        }
    }

    static SortedSet range(int lo, int hi) { // inclusive
        std::vector<int> v;
        for (int x = lo; x <= hi; ++x) v.push_back(x);
        return SortedSet(std::move(v));
    }

    const std::vector<int>& elems() const noexcept { return elems_; }
    int size() const noexcept { return static_cast<int>(elems_.size()); }
    bool empty() const noexcept { return elems_.empty(); }
    int operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int min() const { return elems_.front(); }
    int max() const { return elems_.back(); }

    bool contains(int x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    bool operator==(const SortedSet& o) const { return elems_ == o.elems_; }
    bool operator!=(const SortedSet& o) const { return elems_ != o.elems_; }
    bool operator<(const SortedSet& o) const { return elems_ < o.elems_; }

    // Consecutive window {x_j, ..., x_{j+len-1}}, 1-based j.
    SortedSet window(int j, int len) const {
        std::vector<int> v(elems_.begin() + (j - 1), elems_.begin() + (j - 1) + len);
        return SortedSet(std::move(v));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(elems_[i]);
        }
        return s + "}";
    }

private:
    std::vector<int> elems_;
};

inline SortedSet set_union(const SortedSet& a, const SortedSet& b) {
    std::vector<int> v;
    std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(),
                   b.elems().end(), std::back_inserter(v));
    return SortedSet(std::move(v));
}

inline SortedSet set_difference(const SortedSet& a, const SortedSet& b) {
    std::vector<int> v;
    std::set_difference(a.elems().begin(), a.elems().end(), b.elems().begin(),
                        b.elems().end(), std::back_inserter(v));
    return SortedSet(std::move(v));
}

inline bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// --- Lexicographic rank <-> subset bijection (combinatorial number system).
//
// k-subsets of [n] are ordered lexicographically as increasing tuples;
// rank 0 is {1,...,k}. This single bijection backs exhaustive enumeration
// and Monte Carlo unranking, so both paths visit identical objects.

inline SortedSet unrank_subset(int n, int k, const bigint& rank) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    bigint r = rank;
    int x = 1;
    for (int slot = k; slot >= 1; --slot) {
        // count subsets starting at x: C(n - x, slot - 1)
        for (;; ++x) {
            bigint c = binomial(n - x, slot - 1);
            if (r < c) break;
            r -= c;
        }
        out.push_back(x);
        ++x;
    }
    return SortedSet(std::move(out));
}

inline bigint rank_subset(int n, const SortedSet& s) {
    bigint r = 0;
    int k = s.size();
    int prev = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int x = prev + 1; x < s[slot]; ++x)
            r += binomial(n - x, k - slot - 1);
        prev = s[slot];
    }
    return r;
}

// In-place lexicographic successor; returns false after the last subset.
inline bool next_subset(std::vector<int>& v, int n) {
    int k = static_cast<int>(v.size());
    for (int i = k - 1; i >= 0; --i) {
        if (v[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++v[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Uniform rank in [0, count) from the seeded generator, exact by rejection.
inline bigint uniform_bigint(Rng& rng, const bigint& count) {
    if (count <= 1) return 0;
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(count)) + 1;
    unsigned words = (bits + 63) / 64;
    for (;;) {
        bigint v = 0;
        for (unsigned w = 0; w < words; ++w) {
            v <<= 64;
            v |= bigint(rng.next());
        }
        v >>= (words * 64 - bits);
        if (v < count) return v;
    }
}

// Uniform k-subset of the elements of `ground`, drawn through the rank
// bijection so the sampled path and the exhaustive path agree on object
// identity.
inline SortedSet sample_subset(Rng& rng, const SortedSet& ground, int k) {
    int n = ground.size();
    bigint rank = uniform_bigint(rng, binomial(n, k));
    SortedSet idx = unrank_subset(n, k, rank);
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v.push_back(ground[idx[i] - 1]);
    return SortedSet(std::move(v));
}

} // namespace shiftdisc

#endif
