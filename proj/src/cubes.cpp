#include "shiftdisc/cubes.hpp"

namespace shiftdisc {

IntervalPartition::IntervalPartition(SortedSet S, Variant variant, int l)
    : S_(std::move(S)), variant_(variant), l_(l) {
    if (l_ < 1) throw validation_error("partition requires l >= 1");
    int len = interval_length();
    if (S_.size() == 0 || S_.size() % len != 0)
        throw validation_error("ground set size must be a positive multiple of the interval length");
    n_ = S_.size() / len;
}

SortedSet IntervalPartition::interval(int i) const {
    if (i < 1 || i > n_)
        throw validation_error("interval index out of range");
    return S_.window((i - 1) * interval_length() + 1, interval_length());
}

Cube::Cube(IntervalPartition partition, std::vector<int> J, SortedSet R)
    : partition_(std::move(partition)), J_(std::move(J)), R_(std::move(R)) {
    if (J_.empty())
        throw validation_error("cube requires non-empty J");
    int prev = 0;
    for (int j : J_) {
        if (j <= prev || j > partition_.n())
            throw validation_error("cube J must be increasing interval indices in [1,n]");
        prev = j;
    }
    for (int e : R_.elems())
        if (!partition_.ground().contains(e))
            throw validation_error("cube R must be a subset of the ground set");

    int l = partition_.l();
    if (partition_.variant() == Variant::A) {
        if (R_.size() + dimension() != partition_.k())
            throw validation_error("variant-A cube requires |R| + |J| = k");
        for (int j : J_) {
            SortedSet I = partition_.interval(j);
            SortedSet missing = set_difference(I, R_);
            if (missing.size() != 2)
                throw validation_error("variant-A cube requires |R ∩ S_j| = 2l-2 for j in J");
            // missing elements must sit at interval positions a and a+l
            int p1 = 0, p2 = 0;
            for (int t = 0; t < I.size(); ++t) {
                if (I[t] == missing[0]) p1 = t + 1;
                if (I[t] == missing[1]) p2 = t + 1;
            }
            if (p2 - p1 != l)
                throw validation_error("variant-A cube requires the missing pair at index distance l");
        }
    } else {
        if (R_.size() + l * dimension() != partition_.k())
            throw validation_error("variant-B cube requires |R| + l|J| = k");
        std::size_t ji = 0;
        int prefix = 0;
        for (int i = 1; i <= partition_.n() && ji < J_.size(); ++i) {
            SortedSet I = partition_.interval(i);
            int cnt = 0;
            for (int e : I.elems())
                if (R_.contains(e)) ++cnt;
            if (i == J_[ji]) {
                if (cnt != 0)
                    throw validation_error("variant-B cube requires R ∩ S_j = ∅ for j in J");
                if (prefix % l != 0)
                    throw validation_error("variant-B cube requires prefix |R| ≡ 0 (mod l) before each j in J");
                ++ji;
            }
            prefix += cnt;
        }
    }
}

std::pair<SortedSet, SortedSet> Cube::options(int j) const {
    SortedSet I = partition_.interval(j);
    if (partition_.variant() == Variant::A) {
        SortedSet missing = set_difference(I, R_);
        return {SortedSet({missing[0]}), SortedSet({missing[1]})};
    }
    std::vector<int> lo(I.elems().begin(), I.elems().end() - 1);
    std::vector<int> hi(I.elems().begin() + 1, I.elems().end());
    return {SortedSet(std::move(lo)), SortedSet(std::move(hi))};
}

bool properly_hits_A(const SortedSet& X, const IntervalPartition& partition, int i) {
    if (partition.variant() != Variant::A)
        throw validation_error("properly_hits_A requires a variant-A partition");
    SortedSet I = partition.interval(i);
    int cnt = 0;
    for (int e : I.elems())
        if (X.contains(e)) ++cnt;
    return cnt == 2 * partition.l() - 1;
}

bool properly_hits_B(const SortedSet& X, const IntervalPartition& partition, int i, int h) {
    if (partition.variant() != Variant::B)
        throw validation_error("properly_hits_B requires a variant-B partition");
    int l = partition.l();
    if (h < 0 || h >= l)
        throw validation_error("properly_hits_B requires 0 <= h < l");
    SortedSet I = partition.interval(i);
    int prefix = 0;
    for (int e : X.elems()) {
        if (e >= I.min()) break;
        ++prefix;
    }
    if (prefix % l != h) return false;
    std::vector<int> inter;
    for (int e : I.elems())
        if (X.contains(e)) inter.push_back(e);
    if (static_cast<int>(inter.size()) != l) return false;
    SortedSet got(std::move(inter));
    return got == set_difference(I, SortedSet({I.max()})) ||
           got == set_difference(I, SortedSet({I.min()}));
}

int count_hits(const SortedSet& X, const IntervalPartition& partition) {
    int z = 0;
    for (int i = 1; i <= partition.n(); ++i) {
        if (partition.variant() == Variant::A) {
            if (properly_hits_A(X, partition, i)) ++z;
        } else {
            if (properly_hits_B(X, partition, i, 0)) ++z;
        }
    }
    return z;
}

std::optional<Cube> maximal_cube(const SortedSet& X, const IntervalPartition& partition) {
    int l = partition.l();
    std::vector<int> J;
    SortedSet R = X;
    for (int i = 1; i <= partition.n(); ++i) {
        if (partition.variant() == Variant::A) {
            if (!properly_hits_A(X, partition, i)) continue;
            J.push_back(i);
            SortedSet I = partition.interval(i);
            SortedSet miss = set_difference(I, X); // the single absent element
            int j = 0;
            for (int t = 0; t < I.size(); ++t)
                if (I[t] == miss[0]) j = t + 1;
            int partner = (j <= l) ? j + l : j - l;
            R = set_difference(R, SortedSet({I[partner - 1]}));
        } else {
            if (!properly_hits_B(X, partition, i, 0)) continue;
            J.push_back(i);
            R = set_difference(R, partition.interval(i));
        }
    }
    if (J.empty()) return std::nullopt;
    return Cube(partition, std::move(J), std::move(R));
}

std::vector<SortedSet> enumerate_cube(const Cube& cube) {
    int d = cube.dimension();
    if (d > 24)
        throw budget_error("cube enumeration needs " + (bigint(1) << d).str() + " members",
                           (bigint(1) << d).str());
    std::vector<std::pair<SortedSet, SortedSet>> opts;
    for (int j : cube.J()) opts.push_back(cube.options(j));
    std::vector<SortedSet> out;
    out.reserve(std::size_t(1) << d);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << d); ++mask) {
        SortedSet X = cube.R();
        // top bit drives the leftmost interval, so the output is already
        // lexicographic by member set
        for (int t = 0; t < d; ++t) {
            bool high = (mask >> (d - 1 - t)) & 1;
            X = set_union(X, high ? opts[static_cast<std::size_t>(t)].second
                                  : opts[static_cast<std::size_t>(t)].first);
        }
        out.push_back(std::move(X));
    }
    return out;
}

MainProjections main_projections(const Cube& cube) {
    if (cube.partition().variant() != Variant::A)
        throw validation_error("main_projections requires a variant-A cube");
    int l = cube.partition().l();
    std::vector<SortedSet> members = enumerate_cube(cube);
    int k = members.front().size();
    int p_win = k - l + 1;

    MainProjections mp;
    for (std::size_t t = 0; t < cube.J().size(); ++t) {
        int i = cube.J()[t];
        SortedSet I = cube.partition().interval(i);
        auto opt = cube.options(i);
        std::set<int> candidates; // filled from the first member
        bool first = true;
        for (const SortedSet& X : members) {
            int e = X.contains(opt.first[0]) ? opt.first[0] : opt.second[0];
            std::set<int> cur;
            for (int j = 1; j <= p_win; ++j) {
                if (X[j - 1] < I.min() || X[j + l - 2] > I.max()) continue;
                SortedSet w = X.window(j, l);
                if (w.contains(e)) cur.insert(j);
            }
            if (first) {
                candidates = cur;
                first = false;
            } else {
                std::set<int> inter;
                for (int j : candidates)
                    if (cur.count(j)) inter.insert(j);
                candidates = inter;
            }
        }
        if (candidates.size() != 1)
            throw consistency_error("main projection not unique for interval " +
                                    std::to_string(i));
        mp.j_of[i] = *candidates.begin();
    }
    for (const auto& [i, j] : mp.j_of) mp.B.push_back(j);
    std::sort(mp.B.begin(), mp.B.end());
    if (static_cast<int>(mp.B.size()) != cube.dimension() ||
        std::adjacent_find(mp.B.begin(), mp.B.end()) != mp.B.end())
        throw consistency_error("main-projection indices are not distinct");
    return mp;
}

CubeImageCode encode_image(const Cube& cube, const ColoringPipeline& kappa) {
    if (cube.partition().variant() != Variant::A)
        throw validation_error("encode_image requires a variant-A cube");
    int d = cube.dimension();
    if (d > 24)
        throw budget_error("encoding needs " + (bigint(1) << d).str() + " members",
                           (bigint(1) << d).str());

    MainProjections mp = main_projections(cube);
    std::vector<SortedSet> members = enumerate_cube(cube);
    std::vector<std::vector<int>> image;
    image.reserve(members.size());
    for (const SortedSet& X : members) image.push_back(window_vector(X, kappa));

    CubeImageCode code;
    code.p_win = static_cast<int>(image.front().size());
    code.B = mp.B;

    std::set<std::vector<int>> restricted;
    for (const auto& q : image) {
        std::vector<int> r;
        for (int b : code.B) r.push_back(q[static_cast<std::size_t>(b - 1)]);
        restricted.insert(std::move(r));
    }
    if (restricted.size() != image.size())
        throw consistency_error("phi restricted to B is not injective on the cube");

    for (int b : code.B) {
        std::set<int> colors;
        for (const auto& q : image) colors.insert(q[static_cast<std::size_t>(b - 1)]);
        if (colors.size() != 2)
            throw consistency_error("main-projection coordinate " + std::to_string(b) +
                                    " does not take exactly two colors");
        code.sigma.emplace_back(*colors.begin(), *colors.rbegin());
    }

    for (int i = 1; i <= code.p_win; ++i) {
        if (std::binary_search(code.B.begin(), code.B.end(), i)) continue;
        auto up = std::upper_bound(code.B.begin(), code.B.end(), i);
        int right = (up == code.B.end()) ? 0 : *up;
        int left = (up == code.B.begin()) ? 0 : *(up - 1);
        auto& table = code.f[i];
        for (const auto& q : image) {
            int cl = left ? q[static_cast<std::size_t>(left - 1)] : 1;  // default 1
            int cr = right ? q[static_cast<std::size_t>(right - 1)] : 1;
            int v = q[static_cast<std::size_t>(i - 1)];
            auto [it, fresh] = table.emplace(std::make_pair(cl, cr), v);
            if (!fresh && it->second != v)
                throw consistency_error(
                    "coordinate " + std::to_string(i) +
                    " is not a function of its nearest main-projection neighbors");
        }
    }
    return code;
}

std::set<std::vector<int>> decode_image(const CubeImageCode& code) {
    int d = static_cast<int>(code.B.size());
    if (d == 0)
        throw validation_error("decode_image requires non-empty B", "malformed-code");
    if (static_cast<int>(code.sigma.size()) != d)
        throw validation_error("|sigma| must equal |B|", "malformed-code");

    std::set<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << d); ++mask) {
        std::vector<int> q(static_cast<std::size_t>(code.p_win), 0);
        for (int t = 0; t < d; ++t) {
            const auto& pr = code.sigma[static_cast<std::size_t>(t)];
            q[static_cast<std::size_t>(code.B[static_cast<std::size_t>(t)] - 1)] =
                ((mask >> t) & 1) ? pr.second : pr.first;
        }
        for (int i = 1; i <= code.p_win; ++i) {
            if (std::binary_search(code.B.begin(), code.B.end(), i)) continue;
            auto up = std::upper_bound(code.B.begin(), code.B.end(), i);
            int cl = (up == code.B.begin()) ? 1 : q[static_cast<std::size_t>(*(up - 1) - 1)];
            int cr = (up == code.B.end()) ? 1 : q[static_cast<std::size_t>(*up - 1)];
            auto ti = code.f.find(i);
            if (ti == code.f.end())
                throw validation_error("missing f-table for coordinate " + std::to_string(i),
                                       "malformed-code");
            auto vi = ti->second.find({cl, cr});
            if (vi == ti->second.end())
                throw validation_error("f-table undefined on a required pair at coordinate " +
                                           std::to_string(i),
                                       "malformed-code");
            q[static_cast<std::size_t>(i - 1)] = vi->second;
        }
        out.insert(std::move(q));
    }
    return out;
}

} // namespace shiftdisc
