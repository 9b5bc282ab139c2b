#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "lext/errors.hpp"
#include "lext/numeric.hpp"
#include "lext/polynomial.hpp"

namespace lext {

namespace detail {

/// Per-order reduction data for the power basis of Q(zeta_n):
/// x^k mod Phi_n for every k needed by products and by zeta_pow.
struct CycBasis {
    long long order = 1;
    std::size_t dim = 1;                            // totient(order)
    std::vector<std::vector<Rational>> power_mod;   // x^k mod Phi_n, k = 0..max_pow
};

inline const CycBasis& cyc_basis(long long n) {
    static std::mutex mtx;
    static std::map<long long, CycBasis> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CycBasis b;
    b.order = n;
    RatPoly phi = cyclotomic_poly(n);
    b.dim = static_cast<std::size_t>(phi.degree());
    // x^dim == -(low-order part of Phi_n), since Phi_n is monic.
    std::vector<Rational> top(b.dim, Rational(0));
    for (std::size_t i = 0; i < b.dim; ++i) top[i] = -phi.coeff(i);

    std::size_t max_pow = std::max<std::size_t>(static_cast<std::size_t>(n - 1),
                                                b.dim == 0 ? 0 : 2 * b.dim - 2);
    b.power_mod.reserve(max_pow + 1);
    std::vector<Rational> cur(b.dim, Rational(0));
    cur[0] = 1;
    b.power_mod.push_back(cur);
    for (std::size_t k = 1; k <= max_pow; ++k) {
        Rational carry = cur.back();
        for (std::size_t i = b.dim; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (std::size_t i = 0; i < b.dim; ++i) cur[i] += carry * top[i];
        }
        b.power_mod.push_back(cur);
    }
    return cache.emplace(n, std::move(b)).first->second;
}

}  // namespace detail

/// An element of the n-th cyclotomic field in exact canonical form: a vector
/// of totient(n) rationals, the residue modulo Phi_n in the power basis
/// 1, z, ..., z^{phi(n)-1} of a primitive n-th root of unity z. Canonical
/// forms are unique, so equality is coefficient comparison. Values are
/// immutable after construction and freely shareable.
class CycNum {
public:
    CycNum() : CycNum(1) {}
    explicit CycNum(long long order)
        : order_(order), coeffs_(detail::cyc_basis(order).dim, Rational(0)) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    }

    static CycNum zero(long long order) { return CycNum(order); }
    static CycNum one(long long order) { return from_rational(order, 1); }
    static CycNum from_rational(long long order, Rational v) {
        CycNum x(order);
        x.coeffs_[0] = std::move(v);
        return x;
    }
    static CycNum from_coeffs(long long order, std::vector<Rational> coeffs) {
        CycNum x(order);
        if (coeffs.size() != x.coeffs_.size()) {
            throw std::invalid_argument("coefficient vector must have totient(order) entries");
        }
        x.coeffs_ = std::move(coeffs);
        return x;
    }

    long long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    /// The value as a rational number, when it lies in Q (all higher power
    /// basis coordinates vanish).
    std::optional<Rational> as_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return std::nullopt;
        }
        return coeffs_[0];
    }

    std::optional<Integer> as_integer() const {
        auto q = as_rational();
        if (!q || !is_integral(*q)) return std::nullopt;
        return numerator(*q);
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        require_same_order(a, b);
        CycNum r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        require_same_order(a, b);
        CycNum r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    friend CycNum operator-(const CycNum& a) {
        CycNum r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        require_same_order(a, b);
        const auto& basis = detail::cyc_basis(a.order_);
        const std::size_t d = basis.dim;
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.coeffs_[j] == 0) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        CycNum r(a.order_);
        for (std::size_t k = 0; k < d; ++k) r.coeffs_[k] = conv[k];
        for (std::size_t k = d; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const auto& red = basis.power_mod[k];
            for (std::size_t i = 0; i < d; ++i) r.coeffs_[i] += conv[k] * red[i];
        }
        return r;
    }
    friend CycNum operator*(const CycNum& a, const Rational& s) {
        CycNum r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend CycNum operator*(const Rational& s, const CycNum& a) { return a * s; }

    /// Multiplicative inverse, via the extended Euclidean algorithm against
    /// Phi_n (which is irreducible, so any nonzero residue is a unit).
    CycNum inv() const {
        if (is_zero()) throw division_by_zero_error("inverse of zero cyclotomic value");
        RatPoly a{std::vector<Rational>(coeffs_)};
        RatPoly m = cyclotomic_poly(order_);
        // Invariants: r0 = u0*a mod m, r1 = u1*a mod m.
        RatPoly r0 = a, r1 = m;
        RatPoly u0 = RatPoly::constant(1), u1{};
        while (!r1.is_zero()) {
            auto [q, rem] = divmod(r0, r1);
            RatPoly u2 = u0 - q * u1;
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = std::move(u2);
        }
        if (r0.degree() != 0) {
            throw internal_inconsistency_error("gcd with cyclotomic polynomial is not constant");
        }
        Rational lead = r0.coeff(0);
        std::vector<Rational> out(coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = u0.coeff(i) / lead;
        return from_coeffs(order_, std::move(out));
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

    /// Complex conjugation z -> z^{-1}, re-expanded in the power basis.
    CycNum conj() const {
        const auto& basis = detail::cyc_basis(order_);
        CycNum r(order_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            std::size_t k = static_cast<std::size_t>(
                mod_residue(-static_cast<long long>(i), order_));
            const auto& red = basis.power_mod[k];
            for (std::size_t t = 0; t < r.coeffs_.size(); ++t) r.coeffs_[t] += coeffs_[i] * red[t];
        }
        return r;
    }

    CycNum pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        CycNum acc = one(order_);
        CycNum base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ",";
            os << coeffs_[i].str();
        }
        os << "]@" << order_;
        return os.str();
    }

private:
    static void require_same_order(const CycNum& a, const CycNum& b) {
        if (a.order_ != b.order_) {
            throw order_mismatch_error("cyclotomic orders differ: " + std::to_string(a.order_) +
                                       " vs " + std::to_string(b.order_));
        }
    }

    long long order_;
    std::vector<Rational> coeffs_;
};

/// zeta_n^k in canonical form; k is taken mod n.
inline CycNum zeta_pow(long long n, long long k) {
    if (n < 1) throw std::invalid_argument("zeta_pow requires n >= 1");
    const auto& basis = detail::cyc_basis(n);
    return CycNum::from_coeffs(n, basis.power_mod[static_cast<std::size_t>(mod_residue(k, n))]);
}

/// Dense matrix over one cyclotomic field; all entries share the order fixed
/// at construction.
class CycMatrix {
public:
    CycMatrix(std::size_t rows, std::size_t cols, long long order)
        : rows_(rows), cols_(cols), order_(order), e_(rows * cols, CycNum::zero(order)) {}

    static CycMatrix identity(std::size_t n, long long order) {
        CycMatrix m(n, n, order);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum::one(order);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long long order() const { return order_; }

    CycNum& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, CycNum v) {
        if (v.order() != order_) throw order_mismatch_error("matrix entry has foreign order");
        e_[i * cols_ + j] = std::move(v);
    }

    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw std::invalid_argument("matrix shape mismatch in addition");
        }
        CycMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        CycMatrix r(a.rows_, b.cols_, a.order_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycNum& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
                }
            }
        }
        return r;
    }

    friend CycMatrix operator*(const CycNum& s, const CycMatrix& a) {
        CycMatrix r = a;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    CycNum trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        CycNum t = CycNum::zero(order_);
        for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    long long order_;
    std::vector<CycNum> e_;
};

/// Rank over the cyclotomic field by exact Gaussian elimination. Pivot is the
/// first nonzero entry in column order, so runs are deterministic.
inline std::size_t exact_rank(CycMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        }
        CycNum inv_pivot = m.at(rank, col).inv();
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycNum factor = m.at(i, col) * inv_pivot;
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) = m.at(i, j) - factor * m.at(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace lext
