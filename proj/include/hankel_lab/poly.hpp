#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials in t with arbitrary-precision integer
 * coefficients.
 *
 * Coefficients are stored in ascending order (index d holds the coefficient
 * of t^d) and kept canonical: the last stored coefficient is nonzero, and the
 * zero polynomial is the empty list.
 *
 *   Poly{2, 3, 1}          // t^2 + 3*t + 2
 *   pow(Poly{1, 1}, 3)     // 1 + 3t + 3t^2 + t^3
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hankel_lab/errors.hpp"

namespace hankel_lab {

using Integer = boost::multiprecision::cpp_int;

class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr std::ptrdiff_t kZeroDegree = -1;

    Poly() = default;
    Poly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly constant(const Integer& c) { return Poly{c}; }

    static Poly monomial(const Integer& c, std::size_t degree) {
        std::vector<Integer> cs(degree + 1);
        cs[degree] = c;
        return Poly(std::move(cs));
    }

    /// The weight variable t.
    static Poly t() { return monomial(1, 1); }

    /// 1 + t, the factor relating large and small Schroeder numbers.
    static Poly one_plus_t() { return Poly{1, 1}; }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::ptrdiff_t degree() const noexcept {
        return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }

    /// Coefficient of t^d; zero beyond the degree.
    Integer coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Integer{0}; }

    const Integer& leading() const { return coeffs_.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    Poly& operator*=(const Integer& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Integer& s) { return a *= s; }
    friend Poly operator*(const Integer& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        Integer term;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                boost::multiprecision::multiply(term, a.coeffs_[i], b.coeffs_[j]);
                out[i + j] += term;
            }
        }
        return Poly(std::move(out));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline Poly add(const Poly& a, const Poly& b) { return a + b; }
inline Poly mul(const Poly& a, const Poly& b) { return a * b; }

/**
 * Exact quotient a / b in Z[t].
 *
 * Throws NonExactDivision when a nonzero remainder is left or when some
 * quotient coefficient would not be an integer, and std::domain_error when b
 * is zero.
 */
inline Poly div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NonExactDivision("div_exact: divisor degree exceeds dividend degree");

    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quot(rem.size() - db);
    Integer r, term;
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        Integer& top = rem[qi + db];
        if (top == 0) continue;
        boost::multiprecision::divide_qr(top, b.leading(), quot[qi], r);
        if (r != 0) throw NonExactDivision("div_exact: non-integer quotient coefficient");
        for (std::size_t j = 0; j <= db; ++j) {
            boost::multiprecision::multiply(term, quot[qi], bc[j]);
            rem[qi + j] -= term;
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (rem[i] != 0) throw NonExactDivision("div_exact: nonzero remainder");
    }
    return Poly(std::move(quot));
}

/// Horner evaluation at an integer point.
inline Integer eval_at(const Poly& a, const Integer& x) {
    Integer acc = 0;
    const auto& cs = a.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Poly pow(Poly base, unsigned long long e) {
    Poly result{1};
    while (e > 0) {
        if (e & 1ULL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

inline Integer ipow(Integer base, unsigned long long e) {
    Integer result = 1;
    while (e > 0) {
        if (e & 1ULL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

/// Human-readable form in descending powers, e.g. "t^2 + 3*t + 2".
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& cs = p.coeffs();
    for (std::size_t d = cs.size(); d-- > 0;) {
        const Integer& c = cs[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 't';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

} // namespace hankel_lab
