#pragma once

#include "tamari/dyck_word.hpp"
#include "tamari/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace tamari {

enum class Flavor { greedy, ordinary };

inline const char* to_string(Flavor f) {
    return f == Flavor::greedy ? "greedy" : "ordinary";
}

namespace detail {

/// Common cover surgery: for each valley 01 of w, swap the valley's down
/// step with the Dyck factor that follows it (longest factor for the
/// greedy order, shortest for the ordinary one).
inline std::vector<DyckWord> covers_by_surgery(const DyckWord& w, bool longest) {
    std::vector<DyckWord> out;
    const int m = w.m();
    const int len = w.steps();
    auto steps = w.step_vector();
    for (int i = 0; i + 1 < len; ++i) {
        if (steps[static_cast<std::size_t>(i)] || !steps[static_cast<std::size_t>(i) + 1])
            continue; // not a valley
        // Scan the factor starting at the valley's up step i+1.
        int rel = 0, end = -1;
        for (int j = i + 1; j < len; ++j) {
            if (steps[static_cast<std::size_t>(j)]) {
                rel += m;
            } else {
                if (rel == 0) break; // factor would dip below its start
                --rel;
            }
            if (rel == 0) {
                end = j;
                if (!longest) break;
            }
        }
        // A valley is always followed by at least one return.
        std::vector<bool> res(steps.begin(), steps.begin() + i);
        for (int j = i + 1; j <= end; ++j) res.push_back(steps[static_cast<std::size_t>(j)]);
        res.push_back(false);
        for (int j = end + 1; j < len; ++j) res.push_back(steps[static_cast<std::size_t>(j)]);
        out.emplace_back(m, res);
    }
    return out;
}

} // namespace detail

inline std::vector<DyckWord> greedy_covers(const DyckWord& w) {
    return detail::covers_by_surgery(w, true);
}

inline std::vector<DyckWord> ordinary_covers(const DyckWord& w) {
    return detail::covers_by_surgery(w, false);
}

/// Hasse diagram of D_{m,n} under one order flavor. Node order is the
/// lexicographic enumeration order, which is a linear extension: every
/// cover edge goes to a strictly larger index.
struct CoverGraph {
    int m = 1;
    int n = 1;
    Flavor flavor = Flavor::greedy;
    std::vector<DyckWord> nodes;
    std::vector<std::vector<int>> covers; // node -> indices of covering elements

    int index_of(const DyckWord& w) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
        if (it == nodes.end() || *it != w)
            throw std::invalid_argument("CoverGraph: word not in poset");
        return static_cast<int>(it - nodes.begin());
    }
};

inline CoverGraph build_poset(int m, int n, Flavor flavor, std::size_t cap = 10'000'000) {
    if (m < 1 || n < 1) throw std::invalid_argument("build_poset: need m >= 1, n >= 1");
    CoverGraph g;
    g.m = m;
    g.n = n;
    g.flavor = flavor;
    g.nodes = enumerate_paths(m, n, cap);
    g.covers.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        auto ws = flavor == Flavor::greedy ? greedy_covers(g.nodes[i])
                                           : ordinary_covers(g.nodes[i]);
        for (const auto& w : ws) {
            int j = g.index_of(w);
            if (j <= static_cast<int>(i))
                throw std::logic_error("build_poset: cover edge not increasing");
            g.covers[i].push_back(j);
        }
        std::sort(g.covers[i].begin(), g.covers[i].end());
    }
    return g;
}

/// Bitset of nodes reachable from src (including src) along cover edges.
inline std::vector<std::uint64_t> reachable_from(const CoverGraph& g, int src) {
    const std::size_t nb = (g.nodes.size() + 63) / 64;
    std::vector<std::uint64_t> bits(nb, 0);
    std::vector<int> stack{src};
    auto test = [&](int i) {
        return (bits[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
    };
    auto set = [&](int i) {
        bits[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
    };
    set(src);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.covers[static_cast<std::size_t>(v)])
            if (!test(w)) {
                set(w);
                stack.push_back(w);
            }
    }
    return bits;
}

/// Full transitive closure with one descendant bitset per node.
class Reachability {
public:
    explicit Reachability(const CoverGraph& g)
        : count_(g.nodes.size()), blocks_((g.nodes.size() + 63) / 64) {
        desc_.assign(count_, std::vector<std::uint64_t>(blocks_, 0));
        for (int i = static_cast<int>(count_) - 1; i >= 0; --i) {
            auto& d = desc_[static_cast<std::size_t>(i)];
            d[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
            for (int j : g.covers[static_cast<std::size_t>(i)]) {
                const auto& dj = desc_[static_cast<std::size_t>(j)];
                for (std::size_t b = 0; b < blocks_; ++b) d[b] |= dj[b];
            }
        }
    }

    bool leq(int v, int w) const {
        return (desc_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w) / 64] >>
                (w % 64)) & 1u;
    }

    const std::vector<std::uint64_t>& descendants(int v) const {
        return desc_[static_cast<std::size_t>(v)];
    }

    /// Calls fn(v, w) for every interval v <= w.
    void for_each_interval(const std::function<void(int, int)>& fn) const {
        for (std::size_t v = 0; v < count_; ++v) {
            const auto& d = desc_[v];
            for (std::size_t b = 0; b < blocks_; ++b) {
                std::uint64_t bits = d[b];
                while (bits) {
                    int w = static_cast<int>(b * 64) + std::countr_zero(bits);
                    bits &= bits - 1;
                    fn(static_cast<int>(v), w);
                }
            }
        }
    }

    std::size_t interval_count() const {
        std::size_t total = 0;
        for (const auto& d : desc_)
            for (auto b : d) total += static_cast<std::size_t>(std::popcount(b));
        return total;
    }

private:
    std::size_t count_;
    std::size_t blocks_;
    std::vector<std::vector<std::uint64_t>> desc_;
};

/// One interval [v, w] with the statistics the counting series track.
struct IntervalRecord {
    DyckWord lower, upper;
    int d_upper = 0;
    int contacts_lower = 0;
    int first_ascent_upper = 0;
    std::map<int, int> ascent_profile_upper;
    int chain_length = -1; // longest chain v -> w; -1 = not computed
};

inline IntervalRecord make_record(const CoverGraph& g, int v, int w) {
    IntervalRecord r;
    r.lower = g.nodes[static_cast<std::size_t>(v)];
    r.upper = g.nodes[static_cast<std::size_t>(w)];
    auto su = stats(r.upper);
    r.d_upper = su.final_descent;
    r.first_ascent_upper = su.first_ascent;
    r.ascent_profile_upper = su.ascent_profile;
    r.contacts_lower = stats(r.lower).contacts;
    return r;
}

/// Longest chains (in cover steps) from src to every node; -1 if unreachable.
inline std::vector<int> longest_chains_from(const CoverGraph& g, int src) {
    std::vector<int> dist(g.nodes.size(), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t i = static_cast<std::size_t>(src); i < g.nodes.size(); ++i) {
        if (dist[i] < 0) continue;
        for (int j : g.covers[i])
            dist[static_cast<std::size_t>(j)] =
                std::max(dist[static_cast<std::size_t>(j)], dist[i] + 1);
    }
    return dist;
}

inline int longest_chain(const CoverGraph& g, const DyckWord& v, const DyckWord& w) {
    int d = longest_chains_from(g, g.index_of(v))[static_cast<std::size_t>(g.index_of(w))];
    if (d < 0) throw std::invalid_argument("longest_chain: v is not below w");
    return d;
}

/// Shape classification of a nonempty word per the J_i / K_i families:
/// j_level is the largest index with a nonempty part in the canonical
/// decomposition (0 for the unit), and k_levels is {j_level} when that part
/// is exactly 1 0^m.
struct Classification {
    int j_level = 0;
    std::set<int> k_levels;
};

inline Classification classify(const DyckWord& v) {
    if (v.empty()) throw std::invalid_argument("classify: empty word");
    Classification c;
    auto parts = decompose(v);
    int i = v.m();
    while (i >= 0 && parts[static_cast<std::size_t>(i)].empty()) --i;
    c.j_level = i + 1;
    if (c.j_level >= 1 && parts[static_cast<std::size_t>(i)] == DyckWord::unit(v.m()))
        c.k_levels.insert(c.j_level);
    return c;
}

using Interval = std::pair<DyckWord, DyckWord>;

inline DyckWord star_fold(const std::vector<DyckWord>& factors, int m) {
    DyckWord acc = DyckWord::unit(m);
    for (const auto& f : factors) acc = star(acc, f);
    return acc;
}

/// phi: split [v, w] in J_i \ J_{i-1} as [v', w'] * [v'', w''] where
/// [v', w'] is the first generator of the interval monoid factorization.
inline std::pair<Interval, Interval> phi(const DyckWord& v, const DyckWord& w) {
    const int m = v.m();
    auto cls = classify(v);
    if (cls.j_level < 1) throw std::invalid_argument("phi: v is the unit");
    auto parts = decompose(v);
    DyckWord vsecond = parts[static_cast<std::size_t>(cls.j_level - 1)];
    parts[static_cast<std::size_t>(cls.j_level - 1)] = DyckWord::unit(m);
    DyckWord vfirst = compose(m, parts);
    // Split w by size: the unique suffix of w's factorization whose *-product
    // has the size of v''.
    auto gens = factorize(w);
    if (gens.size() == 1 && gens[0] == DyckWord::unit(m)) gens.clear();
    int suffix_size = 1;
    int j = static_cast<int>(gens.size());
    while (j > 0 && suffix_size != vsecond.size()) {
        --j;
        suffix_size += gens[static_cast<std::size_t>(j)].size() - 1;
    }
    if (suffix_size != vsecond.size())
        throw std::logic_error("phi: no size-matching split of the upper word");
    DyckWord wfirst = star_fold({gens.begin(), gens.begin() + j}, m);
    DyckWord wsecond = star_fold({gens.begin() + j, gens.end()}, m);
    return {{vfirst, wfirst}, {vsecond, wsecond}};
}

inline Interval phi_inverse(const Interval& a, const Interval& b) {
    return {star(a.first, b.first), star(a.second, b.second)};
}

/// Removes the last peak (last up step and the m down steps after it).
inline DyckWord delete_last_peak(const DyckWord& w) {
    if (w.empty()) throw std::invalid_argument("delete_last_peak: empty word");
    const int m = w.m();
    int last_up = w.steps() - 1;
    while (!w.up(last_up)) --last_up;
    std::vector<bool> steps;
    for (int i = 0; i < w.steps(); ++i)
        if (i != last_up && (i < last_up || i > last_up + m)) steps.push_back(w.up(i));
    return DyckWord(m, steps);
}

/// Inserts a peak 1 0^m in the final descent of w, with the new up step
/// starting at height h (0 <= h <= d(w)).
inline DyckWord insert_peak(const DyckWord& w, int h) {
    if (w.empty()) {
        if (h != 0) throw std::invalid_argument("insert_peak: bad height for empty word");
        return DyckWord::unit(w.m());
    }
    if (h < 0 || h > stats(w).final_descent)
        throw std::invalid_argument("insert_peak: height outside the final descent");
    const int m = w.m();
    std::vector<bool> steps;
    const int pos = w.steps() - h; // h down steps remain after the new peak
    for (int i = 0; i < pos; ++i) steps.push_back(w.up(i));
    steps.push_back(true);
    for (int k = 0; k < m; ++k) steps.push_back(false);
    for (int i = pos; i < w.steps(); ++i) steps.push_back(w.up(i));
    return DyckWord(m, steps);
}

struct PsiResult {
    Interval base;
    int h = 0;
};

/// psi: delete the last peak of both paths of a K_i interval of size >= 2
/// and remember the insertion height of the peak of w.
inline PsiResult psi(const DyckWord& v, const DyckWord& w) {
    auto cls = classify(v);
    if (cls.k_levels.empty()) throw std::invalid_argument("psi: v does not have K_i shape");
    if (v.size() < 2) throw std::invalid_argument("psi: size must be at least 2");
    PsiResult r;
    r.base = {delete_last_peak(v), delete_last_peak(w)};
    r.h = stats(w).final_descent - w.m();
    return r;
}

/// Rebuilds the K_i interval from ([v', w'], h).
inline Interval psi_inverse(const Interval& base, int i, int h) {
    const DyckWord& vp = base.first;
    if (vp.empty())
        throw std::invalid_argument("psi_inverse: base interval must be nonempty");
    const int m = vp.m();
    auto parts = decompose(vp);
    if (classify(vp).j_level > i - 1)
        throw std::invalid_argument("psi_inverse: base not in J_{i-1}");
    parts[static_cast<std::size_t>(i - 1)] = DyckWord::unit(m);
    for (std::size_t j = static_cast<std::size_t>(i); j <= static_cast<std::size_t>(m); ++j)
        parts[j] = DyckWord(m);
    DyckWord v = compose(m, parts);
    DyckWord w = insert_peak(base.second, h);
    return {v, w};
}

/// Ordinary K-shape: the last nonempty part of v's decomposition has final
/// descent exactly m, i.e. it is (some word) . 1 0^m. The greedy K-shape
/// (part equal to 1 0^m) is the special case with an empty prefix.
inline bool has_ordinary_k_shape(const DyckWord& v) {
    auto cls = classify(v);
    if (cls.j_level < 1) return false;
    DyckWord part = decompose(v)[static_cast<std::size_t>(cls.j_level) - 1];
    return stats(part).final_descent == v.m();
}

/// Ordinary phi: split [v, w] with v in Jbar_i \ Jbar_{i-1} as
/// [v', w'] * [v'', w''] where v'' is the maximal prime suffix of v's last
/// nonempty part (Lemma 5.2 factorization) and v' keeps the prefix with a
/// trailing peak appended.
inline std::pair<Interval, Interval> ordinary_phi(const DyckWord& v, const DyckWord& w) {
    const int m = v.m();
    auto cls = classify(v);
    if (cls.j_level < 1) throw std::invalid_argument("ordinary_phi: v is the unit");
    auto parts = decompose(v);
    auto [head, prime] = prime_suffix_split(parts[static_cast<std::size_t>(cls.j_level) - 1]);
    parts[static_cast<std::size_t>(cls.j_level) - 1] = concat(head, DyckWord::unit(m));
    DyckWord vfirst = compose(m, parts);
    auto gens = factorize(w);
    if (gens.size() == 1 && gens[0] == DyckWord::unit(m)) gens.clear();
    int suffix_size = 1;
    int j = static_cast<int>(gens.size());
    while (j > 0 && suffix_size != prime.size()) {
        --j;
        suffix_size += gens[static_cast<std::size_t>(j)].size() - 1;
    }
    if (suffix_size != prime.size())
        throw std::logic_error("ordinary_phi: no size-matching split of the upper word");
    DyckWord wfirst = star_fold({gens.begin(), gens.begin() + j}, m);
    DyckWord wsecond = star_fold({gens.begin() + j, gens.end()}, m);
    return {{vfirst, wfirst}, {prime, wsecond}};
}

/// Ordinary psi on Kbar_i intervals: delete the last peak of both paths;
/// the insertion height is h = d(w) - m as in the greedy case, but the base
/// interval stays in Jbar_i (the peak is removed from inside part i).
inline PsiResult ordinary_psi(const DyckWord& v, const DyckWord& w) {
    if (!has_ordinary_k_shape(v))
        throw std::invalid_argument("ordinary_psi: v does not have Kbar shape");
    PsiResult r;
    r.base = {delete_last_peak(v), delete_last_peak(w)};
    r.h = stats(w).final_descent - w.m();
    return r;
}

/// Rebuilds the Kbar_i interval from ([v', w'], h): append a peak to part i
/// of v' and insert a peak at height h in the final descent of w'.
inline Interval ordinary_psi_inverse(const Interval& base, int i, int h) {
    const DyckWord& vp = base.first;
    if (vp.empty())
        throw std::invalid_argument("ordinary_psi_inverse: base must be nonempty");
    const int m = vp.m();
    if (classify(vp).j_level > i)
        throw std::invalid_argument("ordinary_psi_inverse: base not in Jbar_i");
    auto parts = decompose(vp);
    parts[static_cast<std::size_t>(i) - 1] =
        concat(parts[static_cast<std::size_t>(i) - 1], DyckWord::unit(m));
    for (std::size_t j = static_cast<std::size_t>(i); j <= static_cast<std::size_t>(m); ++j)
        parts[j] = DyckWord(m);
    return {compose(m, parts), insert_peak(base.second, h)};
}

/// Number of labelings of the up steps of w with 1..n increasing along each
/// ascent: the multinomial n! / prod(l! over ascent lengths l).
inline Int labelled_weight(const DyckWord& w) {
    Int r = factorial(w.size());
    for (auto [len, mult] : stats(w).ascent_profile)
        for (int k = 0; k < mult; ++k) r /= factorial(len);
    return r;
}

} // namespace tamari
