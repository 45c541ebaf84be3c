#pragma once

#include "tamari/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tamari {

/// Truncated power series in t with SparsePoly coefficients. The order N is
/// exclusive: coefficients t^0 .. t^{N-1} are stored, all arithmetic
/// truncates at N.
class TSeries {
public:
    explicit TSeries(int order) : c_(static_cast<std::size_t>(order)) {
        if (order < 1) throw std::invalid_argument("TSeries: order must be >= 1");
    }

    static TSeries from_poly(const SparsePoly& p, int order) {
        TSeries s(order);
        s.c_[0] = p;
        return s;
    }

    static TSeries one(int order) { return from_poly(SparsePoly::constant(1), order); }

    int order() const { return static_cast<int>(c_.size()); }

    const SparsePoly& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, SparsePoly p) { c_.at(static_cast<std::size_t>(n)) = std::move(p); }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Smallest n with a nonzero coefficient (order() if none).
    int valuation() const {
        for (int n = 0; n < order(); ++n)
            if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
        return order();
    }

    bool operator==(const TSeries&) const = default;

    TSeries truncated(int new_order) const {
        TSeries s(new_order);
        for (int n = 0; n < std::min(new_order, order()); ++n)
            s.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
        return s;
    }

    TSeries& operator+=(const TSeries& o) {
        check_order(o);
        for (int n = 0; n < order(); ++n)
            c_[static_cast<std::size_t>(n)] += o.c_[static_cast<std::size_t>(n)];
        return *this;
    }
    TSeries& operator-=(const TSeries& o) {
        check_order(o);
        for (int n = 0; n < order(); ++n)
            c_[static_cast<std::size_t>(n)] -= o.c_[static_cast<std::size_t>(n)];
        return *this;
    }
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    TSeries operator-() const {
        TSeries s(order());
        for (int n = 0; n < order(); ++n) s.c_[static_cast<std::size_t>(n)] = -coeff(n);
        return s;
    }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check_order(b);
        TSeries s(a.order());
        for (int i = 0; i < a.order(); ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; i + j < a.order(); ++j) {
                if (b.coeff(j).is_zero()) continue;
                s.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return s;
    }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    friend TSeries operator*(const SparsePoly& p, const TSeries& a) {
        TSeries s(a.order());
        for (int n = 0; n < a.order(); ++n)
            s.c_[static_cast<std::size_t>(n)] = p * a.coeff(n);
        return s;
    }
    friend TSeries operator*(const TSeries& a, const SparsePoly& p) { return p * a; }
    friend TSeries operator*(const Rat& r, const TSeries& a) {
        return SparsePoly::constant(r) * a;
    }

    /// Multiply by t^k (k >= 0), truncating.
    TSeries shift(int k) const {
        TSeries s(order());
        for (int n = 0; n + k < order(); ++n)
            s.c_[static_cast<std::size_t>(n + k)] = coeff(n);
        return s;
    }

    TSeries pow(int k) const {
        if (k < 0) throw std::invalid_argument("TSeries::pow: negative exponent");
        TSeries r = one(order());
        TSeries base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return r;
    }

    TSeries eval_at_one(Marker mk) const {
        TSeries s(order());
        for (int n = 0; n < order(); ++n)
            s.c_[static_cast<std::size_t>(n)] = coeff(n).eval_at_one(mk);
        return s;
    }

    /// Multiply every coefficient by marker^k (k may be negative; exact).
    TSeries mul_marker_pow(Marker mk, int k) const {
        TSeries s(order());
        for (int n = 0; n < order(); ++n)
            s.c_[static_cast<std::size_t>(n)] = coeff(n).mul_marker_pow(mk, k);
        return s;
    }

    /// Series division A / B, solving T * B = A order by order. The leading
    /// coefficient B_0 must divide exactly at every order.
    static TSeries divide(const TSeries& a, const TSeries& b) {
        a.check_order(b);
        if (b.coeff(0).is_zero())
            throw std::invalid_argument("TSeries::divide: divisor has zero constant term");
        TSeries t(a.order());
        for (int n = 0; n < a.order(); ++n) {
            SparsePoly num = a.coeff(n);
            for (int k = 1; k <= n; ++k)
                num -= b.coeff(k) * t.coeff(n - k);
            t.c_[static_cast<std::size_t>(n)] =
                num.is_zero() ? num : num.exact_div(b.coeff(0));
        }
        return t;
    }

    TSeries inverse() const { return divide(one(order()), *this); }

    /// One line per power of t: "t^n: <canonical polynomial>".
    std::string to_string(bool skip_zero = true) const {
        std::ostringstream os;
        for (int n = 0; n < order(); ++n) {
            if (skip_zero && coeff(n).is_zero()) continue;
            os << "t^" << n << ": " << coeff(n).to_string() << "\n";
        }
        return os.str();
    }

private:
    void check_order(const TSeries& o) const {
        if (o.order() != order())
            throw std::invalid_argument("TSeries: order mismatch");
    }

    std::vector<SparsePoly> c_;
};

inline TSeries series_t(int order) {
    TSeries s(order);
    if (order > 1) s.set_coeff(1, SparsePoly::constant(1));
    return s;
}

inline TSeries series_delta(const TSeries& s) {
    TSeries r(s.order());
    for (int n = 0; n < s.order(); ++n) r.set_coeff(n, delta(s.coeff(n)));
    return r;
}

inline TSeries series_delta_q(const TSeries& s) {
    TSeries r(s.order());
    for (int n = 0; n < s.order(); ++n) r.set_coeff(n, delta_q(s.coeff(n)));
    return r;
}

namespace detail {

/// One application of the right side of the greedy equation
/// x^2 I = t (x + x^2 I Delta)^(m+2) (1), given Ihat = x^2 I.
inline TSeries greedy_rhs(const TSeries& ihat, int m, bool q_deformed) {
    const int N = ihat.order();
    const SparsePoly x = SparsePoly::marker(Marker::x);
    TSeries f = TSeries::one(N);
    for (int k = 0; k < m + 2; ++k)
        f = x * f + ihat * (q_deformed ? series_delta_q(f) : series_delta(f));
    return f.shift(1);
}

} // namespace detail

/// Solves x^2 I = t (x + x^2 I Delta)^(m+2)(1) order by order in t and
/// returns I, the greedy interval series (x marks the final descent of the
/// upper path).
inline TSeries solve_greedy(int m, int N) {
    TSeries ihat(N);
    for (int n = 0; n < N; ++n) ihat = detail::greedy_rhs(ihat, m, false);
    return ihat.mul_marker_pow(Marker::x, -2);
}

/// q-deformed variant: Delta replaced by Delta_q; q marks the longest chain.
inline TSeries solve_greedy_q(int m, int N) {
    TSeries ihat(N);
    for (int n = 0; n < N; ++n) ihat = detail::greedy_rhs(ihat, m, true);
    return ihat.mul_marker_pow(Marker::x, -2);
}

/// The greedy system J_0 = x^m t, J_i / x^{m-i-1} = (x + x^2 I Delta)
/// (J_{i-1} / x^{m-i}); returns J_0 .. J_{m+1} (and J_{m+1} = I).
inline std::vector<TSeries> solve_greedy_system(int m, int N) {
    const SparsePoly x = SparsePoly::marker(Marker::x);
    TSeries ihat = solve_greedy(m, N).mul_marker_pow(Marker::x, 2);
    std::vector<TSeries> j;
    TSeries jhat = series_t(N) * x; // Jhat_0 = x t
    j.push_back(jhat.mul_marker_pow(Marker::x, m - 1)); // J_0 = x^m t
    for (int i = 1; i <= m + 1; ++i) {
        jhat = x * jhat + ihat * series_delta(jhat);
        j.push_back(jhat.mul_marker_pow(Marker::x, m - i - 1));
    }
    return j;
}

/// The implicit ordinary system Jb_i = Jb_{i-1} + Jb_m (x Jb_i -
/// x^{m+1-i} Jb_i(1)) / (x-1), solved order by order; returns
/// Jb_0 .. Jb_{m+1}, with Jb_{m+1} the ordinary interval series.
inline std::vector<TSeries> solve_ordinary_system(int m, int N) {
    const SparsePoly x = SparsePoly::marker(Marker::x);
    const SparsePoly xm1 = x - SparsePoly::constant(1);
    std::vector<TSeries> j(static_cast<std::size_t>(m) + 2, TSeries(N));
    if (N > 1) j[0].set_coeff(1, SparsePoly::marker(Marker::x, m));
    auto divided = [&](int i, int n) {
        // (x Jb_i - x^{m+1-i} Jb_i(1)) / (x-1) at order n
        const SparsePoly& c = j[static_cast<std::size_t>(i)].coeff(n);
        SparsePoly num = x * c -
            SparsePoly::marker(Marker::x, m + 1 - i) * c.eval_at_one(Marker::x);
        return num.is_zero() ? num : num.exact_div(xm1);
    };
    for (int n = 1; n < N; ++n) {
        for (int i = 1; i <= m + 1; ++i) {
            SparsePoly acc = j[static_cast<std::size_t>(i) - 1].coeff(n);
            for (int k = 1; k < n; ++k) {
                const SparsePoly& jm = j[static_cast<std::size_t>(m)].coeff(k);
                if (jm.is_zero()) continue;
                acc += jm * divided(i, n - k);
            }
            j[static_cast<std::size_t>(i)].set_coeff(n, acc);
        }
    }
    return j;
}

/// Solves T = x + x t (T Delta)^(m+1)(x): ordinary intervals with x marking
/// contacts of the lower path plus one.
inline TSeries solve_contacts(int m, int N) {
    const SparsePoly x = SparsePoly::marker(Marker::x);
    TSeries t = TSeries::from_poly(x, N);
    for (int n = 0; n < N; ++n) {
        TSeries f = TSeries::from_poly(x, N);
        for (int k = 0; k < m + 1; ++k) f = t * series_delta(f);
        t = TSeries::from_poly(x, N) + (x * f.shift(1));
    }
    return t;
}

/// Solves C = 1 + x t (C + Delta)^(m+1)(1): (m+1)-constellations with x
/// marking the white-root-face degree divided by m+1.
inline TSeries solve_constellations(int m, int N) {
    const SparsePoly x = SparsePoly::marker(Marker::x);
    TSeries c = TSeries::one(N);
    for (int n = 0; n < N; ++n) {
        TSeries f = TSeries::one(N);
        for (int k = 0; k < m + 1; ++k) f = c * f + series_delta(f);
        c = TSeries::one(N) + (x * f.shift(1));
    }
    return c;
}

} // namespace tamari
