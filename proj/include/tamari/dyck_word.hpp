#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamari {

/// An m-Dyck path: n up steps of rise m and m*n unit down steps, never
/// dipping below the axis. Encoded as a binary word, 1 = up, 0 = down,
/// bit-packed most-significant-first so that block comparison is
/// lexicographic with 0 < 1.
class DyckWord {
public:
    DyckWord() = default;

    explicit DyckWord(int m) : m_(m) {
        if (m < 1) throw std::invalid_argument("DyckWord: m must be >= 1");
    }

    DyckWord(int m, const std::vector<bool>& steps) : DyckWord(m) {
        if (!valid_steps(m, steps))
            throw std::invalid_argument("DyckWord: not a valid m-Dyck word");
        assign(steps);
    }

    static DyckWord from_string(int m, std::string_view s) {
        std::vector<bool> steps;
        steps.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("DyckWord: word must be over {0,1}");
            steps.push_back(c == '1');
        }
        return DyckWord(m, steps);
    }

    /// The single-peak path 1 0^m, unit of the * monoid.
    static DyckWord unit(int m) {
        std::vector<bool> steps(static_cast<std::size_t>(m) + 1, false);
        steps[0] = true;
        return DyckWord(m, steps);
    }

    int m() const { return m_; }
    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    int steps() const { return n_ * (m_ + 1); }

    /// Step i, 0-based: true = up.
    bool up(int i) const {
        return (bits_[static_cast<std::size_t>(i) / 64] >> (63 - i % 64)) & 1u;
    }

    /// Height after step i (heights are >= 0, height after last step is 0).
    int height_after(int i) const {
        int h = 0;
        for (int j = 0; j <= i; ++j) h += up(j) ? m_ : -1;
        return h;
    }

    std::vector<int> heights() const {
        std::vector<int> h(static_cast<std::size_t>(steps()) + 1, 0);
        for (int i = 0; i < steps(); ++i)
            h[static_cast<std::size_t>(i) + 1] = h[i] + (up(i) ? m_ : -1);
        return h;
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(steps()), '0');
        for (int i = 0; i < steps(); ++i)
            if (up(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    std::vector<bool> step_vector() const {
        std::vector<bool> v(static_cast<std::size_t>(steps()));
        for (int i = 0; i < steps(); ++i) v[static_cast<std::size_t>(i)] = up(i);
        return v;
    }

    /// Lexicographic order with 0 < 1; words of different m or size compare
    /// by (m, size) first.
    friend std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) {
        if (auto c = a.m_ <=> b.m_; c != 0) return c;
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (std::size_t k = 0; k < a.bits_.size(); ++k)
            if (auto c = a.bits_[k] <=> b.bits_[k]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const DyckWord& a, const DyckWord& b) = default;

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(m_) * 31 + std::hash<int>{}(n_);
        for (auto b : bits_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(b);
        return h;
    }

    static bool valid_steps(int m, const std::vector<bool>& steps) {
        if (m < 1) return false;
        long ups = 0, downs = 0, h = 0;
        for (bool b : steps) {
            if (b) {
                ++ups;
                h += m;
            } else {
                ++downs;
                if (--h < 0) return false;
            }
        }
        return h == 0 && downs == static_cast<long>(m) * ups;
    }

private:
    void assign(const std::vector<bool>& steps) {
        n_ = static_cast<int>(steps.size()) / (m_ + 1);
        bits_.assign((steps.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < steps.size(); ++i)
            if (steps[i]) bits_[i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }

    int m_ = 1;
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Path statistics of a single word.
struct PathStats {
    int final_descent = 0;          // d(w), length of the all-down suffix
    int contacts = 0;               // interior vertices at height 0
    int first_ascent = 0;           // length of the leading up-run
    std::map<int, int> ascent_profile; // ascent length -> multiplicity
    bool is_prime = false;          // no contacts
};

inline bool is_valid(int m, std::string_view word) {
    if (m < 1) return false;
    std::vector<bool> steps;
    steps.reserve(word.size());
    for (char c : word) {
        if (c != '0' && c != '1') return false;
        steps.push_back(c == '1');
    }
    return DyckWord::valid_steps(m, steps);
}

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All m-Dyck words of size n in lexicographic order (0 < 1).
/// Throws EnumerationCapExceeded if more than `cap` words would be produced.
inline std::vector<DyckWord> enumerate_paths(int m, int n, std::size_t cap = 10'000'000) {
    if (m < 1 || n < 0) throw std::invalid_argument("enumerate_paths: bad (m, n)");
    std::vector<DyckWord> out;
    std::vector<bool> steps(static_cast<std::size_t>(n) * (m + 1));
    // Try '0' before '1' at each position: emits words in lex order.
    auto rec = [&](auto&& self, int pos, int ups, int height) -> void {
        if (pos == static_cast<int>(steps.size())) {
            if (out.size() >= cap)
                throw EnumerationCapExceeded("enumerate_paths: cap exceeded");
            out.emplace_back(m, steps);
            return;
        }
        if (height > 0) {
            steps[static_cast<std::size_t>(pos)] = false;
            self(self, pos + 1, ups, height - 1);
        }
        if (ups < n) {
            steps[static_cast<std::size_t>(pos)] = true;
            self(self, pos + 1, ups + 1, height + m);
            steps[static_cast<std::size_t>(pos)] = false;
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

inline PathStats stats(const DyckWord& w) {
    PathStats s;
    if (w.empty()) return s;
    const int len = w.steps();
    int i = len - 1;
    while (i >= 0 && !w.up(i)) --i;
    s.final_descent = len - 1 - i;
    int h = 0;
    for (int j = 0; j < len - 1; ++j) {
        h += w.up(j) ? w.m() : -1;
        if (h == 0) ++s.contacts;
    }
    int run = 0;
    for (int j = 0; j < len; ++j) {
        if (w.up(j)) {
            ++run;
        } else if (run > 0) {
            if (s.first_ascent == 0) s.first_ascent = run;
            ++s.ascent_profile[run];
            run = 0;
        }
    }
    s.is_prime = (s.contacts == 0);
    return s;
}

/// The unique expression w = 1 (w1 0)(w2 0)...(wm 0) w_{m+1}; returns the
/// m+1 parts. Cuts at the first descents to heights m-1, m-2, ..., 0 after
/// the initial up step.
inline std::vector<DyckWord> decompose(const DyckWord& w) {
    if (w.empty()) throw std::invalid_argument("decompose: empty word");
    const int m = w.m();
    std::vector<DyckWord> parts;
    parts.reserve(static_cast<std::size_t>(m) + 1);
    int h = m; // height after the initial up step
    int start = 1;
    int target = m - 1;
    for (int i = 1; i < w.steps() && target >= 0; ++i) {
        h += w.up(i) ? m : -1;
        if (!w.up(i) && h == target) {
            std::vector<bool> part;
            for (int j = start; j < i; ++j) part.push_back(w.up(j));
            parts.emplace_back(m, part);
            start = i + 1;
            --target;
        }
    }
    std::vector<bool> tail;
    for (int j = start; j < w.steps(); ++j) tail.push_back(w.up(j));
    parts.emplace_back(m, tail);
    return parts;
}

/// Inverse of decompose: 1 (w1 0)...(wm 0) w_{m+1}.
inline DyckWord compose(int m, const std::vector<DyckWord>& parts) {
    if (static_cast<int>(parts.size()) != m + 1)
        throw std::invalid_argument("compose: expected m+1 parts");
    std::vector<bool> steps;
    steps.push_back(true);
    for (int i = 0; i < m; ++i) {
        for (bool b : parts[static_cast<std::size_t>(i)].step_vector()) steps.push_back(b);
        steps.push_back(false);
    }
    for (bool b : parts[static_cast<std::size_t>(m)].step_vector()) steps.push_back(b);
    return DyckWord(m, steps);
}

/// w1 * w2: replace the rightmost peak (the last up step and the m down
/// steps after it) of w1 by w2. Associative, unit 1 0^m.
inline DyckWord star(const DyckWord& w1, const DyckWord& w2) {
    if (w1.m() != w2.m()) throw std::invalid_argument("star: m mismatch");
    if (w1.empty() || w2.empty()) throw std::invalid_argument("star: empty operand");
    const int m = w1.m();
    int last_up = w1.steps() - 1;
    while (!w1.up(last_up)) --last_up;
    std::vector<bool> steps;
    for (int i = 0; i < last_up; ++i) steps.push_back(w1.up(i));
    for (bool b : w2.step_vector()) steps.push_back(b);
    for (int i = last_up + m + 1; i < w1.steps(); ++i) steps.push_back(w1.up(i));
    return DyckWord(m, steps);
}

/// The unique factorization of w into generators of the free monoid
/// (D_m, *). The unit factorizes as [unit].
inline std::vector<DyckWord> factorize(const DyckWord& w) {
    if (w.empty()) throw std::invalid_argument("factorize: empty word");
    const int m = w.m();
    const DyckWord u = DyckWord::unit(m);
    std::vector<DyckWord> gens;
    DyckWord cur = w;
    for (;;) {
        if (cur == u) {
            if (gens.empty()) gens.push_back(u);
            return gens;
        }
        auto parts = decompose(cur);
        int i = m;
        while (parts[static_cast<std::size_t>(i)].empty()) --i;
        DyckWord rest = parts[static_cast<std::size_t>(i)];
        parts[static_cast<std::size_t>(i)] = u;
        for (int j = i + 1; j <= m; ++j) parts[static_cast<std::size_t>(j)] = DyckWord(m);
        gens.push_back(compose(m, parts));
        if (rest == u) return gens; // the generator absorbed the unit
        cur = rest;
    }
}

/// Concatenation of two words of the same rise (both possibly empty).
inline DyckWord concat(const DyckWord& a, const DyckWord& b) {
    if (a.m() != b.m()) throw std::invalid_argument("concat: m mismatch");
    std::vector<bool> steps = a.step_vector();
    for (bool s : b.step_vector()) steps.push_back(s);
    return DyckWord(a.m(), steps);
}

/// Splits w = u . p with p the maximal prime suffix (the part after the
/// last contact); u may be empty, p is empty only if w is.
inline std::pair<DyckWord, DyckWord> prime_suffix_split(const DyckWord& w) {
    if (w.empty()) return {w, w};
    int cut = 0, h = 0;
    for (int i = 0; i < w.steps() - 1; ++i) {
        h += w.up(i) ? w.m() : -1;
        if (h == 0) cut = i + 1;
    }
    std::vector<bool> head, tail;
    for (int i = 0; i < cut; ++i) head.push_back(w.up(i));
    for (int i = cut; i < w.steps(); ++i) tail.push_back(w.up(i));
    return {DyckWord(w.m(), head), DyckWord(w.m(), tail)};
}

/// Replace each up step of rise m by m unit up steps: order-preserving
/// embedding of D_{m,n} into D_{1,mn}.
inline DyckWord embed_unit_steps(const DyckWord& w) {
    std::vector<bool> steps;
    for (int i = 0; i < w.steps(); ++i) {
        if (w.up(i))
            for (int k = 0; k < w.m(); ++k) steps.push_back(true);
        else
            steps.push_back(false);
    }
    return DyckWord(1, steps);
}

} // namespace tamari

template <>
struct std::hash<tamari::DyckWord> {
    std::size_t operator()(const tamari::DyckWord& w) const { return w.hash(); }
};
