#pragma once

#include "tamari/rational.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tamari {

/// Named markers of the polynomial ring. x is the catalytic variable,
/// q tracks chain length, z and u carry the parametrizations.
enum class Marker : int { x = 0, q = 1, z = 2, u = 3 };

inline const char* marker_name(Marker mk) {
    switch (mk) {
        case Marker::x: return "x";
        case Marker::q: return "q";
        case Marker::z: return "z";
        default: return "u";
    }
}

/// Exact sparse multivariate polynomial over Q in the markers x, q, z, u.
/// No zero coefficients are stored.
class SparsePoly {
public:
    using Exp = std::array<int, 4>;
    using Terms = std::map<Exp, Rat>;

    SparsePoly() = default;

    static SparsePoly constant(Rat c) {
        SparsePoly p;
        if (c != 0) p.terms_[{0, 0, 0, 0}] = std::move(c);
        return p;
    }

    static SparsePoly term(Rat c, Exp e) {
        SparsePoly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    static SparsePoly marker(Marker mk, int exp = 1, Rat c = 1) {
        Exp e{0, 0, 0, 0};
        e[static_cast<std::size_t>(mk)] = exp;
        return term(std::move(c), e);
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    bool operator==(const SparsePoly&) const = default;

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    SparsePoly operator-() const {
        SparsePoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend SparsePoly operator*(const SparsePoly& a, const Rat& s) {
        SparsePoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }
    friend SparsePoly operator*(const Rat& s, const SparsePoly& a) { return a * s; }

    SparsePoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("SparsePoly::pow: negative exponent");
        SparsePoly r = constant(1);
        SparsePoly base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return r;
    }

    /// Specialize one marker at 1 (drop its exponent).
    SparsePoly eval_at_one(Marker mk) const {
        SparsePoly r;
        const auto idx = static_cast<std::size_t>(mk);
        for (const auto& [e, c] : terms_) {
            Exp f = e;
            f[idx] = 0;
            r.add_term(f, c);
        }
        return r;
    }

    /// Substitute x -> x*q.
    SparsePoly subst_x_to_xq() const {
        SparsePoly r;
        for (const auto& [e, c] : terms_) {
            Exp f = e;
            f[1] += e[0];
            r.add_term(f, c);
        }
        return r;
    }

    /// Substitute one marker by an arbitrary polynomial.
    SparsePoly substitute(Marker mk, const SparsePoly& value) const {
        const auto idx = static_cast<std::size_t>(mk);
        std::map<int, SparsePoly> powers; // cache value^e
        powers[0] = constant(1);
        SparsePoly r;
        for (const auto& [e, c] : terms_) {
            int d = e[idx];
            if (d < 0) throw std::invalid_argument("substitute: negative exponent");
            if (!powers.count(d)) {
                auto it = std::prev(powers.upper_bound(d)); // largest cached <= d
                SparsePoly p = it->second;
                for (int k = it->first; k < d; ++k) p *= value;
                powers[d] = std::move(p);
            }
            Exp f = e;
            f[idx] = 0;
            r += term(c, f) * powers[d];
        }
        return r;
    }

    /// Multiply by marker^k; k may be negative, in which case every term
    /// must have exponent >= -k.
    SparsePoly mul_marker_pow(Marker mk, int k) const {
        const auto idx = static_cast<std::size_t>(mk);
        SparsePoly r;
        for (const auto& [e, c] : terms_) {
            if (e[idx] + k < 0)
                throw std::logic_error("mul_marker_pow: inexact division by marker");
            Exp f = e;
            f[idx] += k;
            r.terms_[f] = c;
        }
        return r;
    }

    /// Exact division; throws if the divisor does not divide exactly.
    /// Single-divisor reduction in lex order (x > q > z > u).
    SparsePoly exact_div(const SparsePoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
        SparsePoly q, r = *this;
        const auto& [de, dc] = *d.terms_.rbegin(); // leading term
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.rbegin();
            Exp e{re[0] - de[0], re[1] - de[1], re[2] - de[2], re[3] - de[3]};
            if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0)
                throw std::logic_error("exact_div: nonzero remainder");
            SparsePoly t = term(rc / dc, e);
            q += t;
            r -= t * d;
        }
        return q;
    }

    int degree(Marker mk) const {
        const auto idx = static_cast<std::size_t>(mk);
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    int valuation(Marker mk) const {
        const auto idx = static_cast<std::size_t>(mk);
        int v = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            v = first ? e[idx] : std::min(v, e[idx]);
            first = false;
        }
        return v;
    }

    /// Polynomial coefficient of marker^k.
    SparsePoly coeff_of(Marker mk, int k) const {
        const auto idx = static_cast<std::size_t>(mk);
        SparsePoly r;
        for (const auto& [e, c] : terms_) {
            if (e[idx] != k) continue;
            Exp f = e;
            f[idx] = 0;
            r.terms_[f] = c;
        }
        return r;
    }

    /// The constant term as a rational.
    Rat constant_value() const {
        auto it = terms_.find(Exp{0, 0, 0, 0});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0, 0, 0});
    }

    bool depends_on(Marker mk) const {
        const auto idx = static_cast<std::size_t>(mk);
        for (const auto& [e, c] : terms_)
            if (e[idx] != 0) return true;
        return false;
    }

    bool has_integer_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (denominator(c) != 1) return false;
        return true;
    }

    bool has_nonnegative_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    /// Canonical form: terms in descending lex order, rationals as p/q.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rat a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_marker = e != Exp{0, 0, 0, 0};
            if (a != 1 || !has_marker) os << a;
            bool dot = a != 1;
            for (std::size_t i = 0; i < 4; ++i) {
                if (e[i] == 0) continue;
                if (dot || !has_marker) os << "*";
                dot = true;
                os << marker_name(static_cast<Marker>(i));
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

/// Divided difference: (F - F(1)) / (x - 1); the division is exact.
inline SparsePoly delta(const SparsePoly& p) {
    SparsePoly num = p - p.eval_at_one(Marker::x);
    if (num.is_zero()) return num;
    return num.exact_div(SparsePoly::marker(Marker::x) - SparsePoly::constant(1));
}

/// q-deformation: (F(xq) - F(1)) / (xq - 1), with F(1) the specialization
/// at x = 1 leaving q intact. At q = 1 this reduces to delta.
inline SparsePoly delta_q(const SparsePoly& p) {
    SparsePoly num = p.subst_x_to_xq() - p.eval_at_one(Marker::x);
    if (num.is_zero()) return num;
    SparsePoly xq = SparsePoly::marker(Marker::x) * SparsePoly::marker(Marker::q);
    return num.exact_div(xq - SparsePoly::constant(1));
}

} // namespace tamari
