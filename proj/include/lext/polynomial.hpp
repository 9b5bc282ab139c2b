#pragma once

#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

#include "lext/errors.hpp"
#include "lext/numeric.hpp"

namespace lext {

/// Dense univariate polynomial with exact rational coefficients.
/// Always stored normalized (no trailing zero coefficients); the zero
/// polynomial has an empty coefficient vector and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static RatPoly constant(Rational v) { return RatPoly{std::vector<Rational>{std::move(v)}}; }
    static RatPoly monomial(std::size_t deg, Rational lead = 1) {
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = std::move(lead);
        return RatPoly{std::move(c)};
    }

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the degree).
    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RatPoly{std::move(c)};
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RatPoly{std::move(c)};
    }
    friend RatPoly operator-(const RatPoly& a) { return RatPoly{} - a; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly{};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly{std::move(c)};
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            if (!first) os << " + ";
            os << "(" << c_[k].str() << ")";
            if (k > 0) os << "*x^" << k;
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Quotient and remainder of a by b; deg(rem) < deg(b).
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw division_by_zero_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const Rational& lead = bc.back();
    if (rem.size() < bc.size()) return {RatPoly{}, a};
    std::vector<Rational> quot(rem.size() - bc.size() + 1, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + bc.size() - 1] / lead;
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= q * bc[i];
    }
    return {RatPoly{std::move(quot)}, RatPoly{std::move(rem)}};
}

/// Division that must be exact; a nonzero remainder is an arithmetic bug.
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw internal_inconsistency_error("polynomial division expected to be exact, remainder " +
                                           r.str());
    }
    return q;
}

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by the
/// product of the cyclotomic polynomials of all proper divisors of n.
/// Monic, integer coefficients, degree totient(n).
inline RatPoly cyclotomic_poly(long long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly requires n >= 1");
    std::vector<std::pair<long long, RatPoly>> known;  // (d, Phi_d) for d | n, ascending
    for (long long d : divisors(n)) {
        RatPoly p = RatPoly::monomial(static_cast<std::size_t>(d)) - RatPoly::constant(1);
        for (const auto& [e, phi_e] : known) {
            if (d % e == 0) p = exact_div(p, phi_e);
        }
        known.emplace_back(d, std::move(p));
    }
    return known.back().second;
}

/// Determinant of a square matrix with polynomial entries via fraction-free
/// (Bareiss) elimination; every interior division is exact.
inline RatPoly poly_mat_det(std::vector<std::vector<RatPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return RatPoly::constant(1);
    RatPoly prev = RatPoly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return RatPoly{};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = RatPoly{};
        }
        prev = m[k][k];
    }
    RatPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace lext
