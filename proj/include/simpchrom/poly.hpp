#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "simpchrom/bigint.hpp"
#include "simpchrom/errors.hpp"

namespace simpchrom {

// Dense polynomial over Z, coefficients indexed by exponent. Trailing zero
// coefficients are always stripped, so the representation is canonical and
// operator== is coefficient equality. The zero polynomial has an empty list;
// its "degree" is the sentinel below, never a usable index.
class IntPolynomial {
public:
    static constexpr int kZeroDegree = -1;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }
    IntPolynomial(std::initializer_list<Integer> coeffs)
        : coeffs_(coeffs) {
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({Integer(1)}); }
    static IntPolynomial constant(Integer c) { return IntPolynomial({std::move(c)}); }
    static IntPolynomial monomial(int deg, Integer c = 1) {
        if (deg < 0) throw InvalidArgument("monomial exponent must be >= 0");
        std::vector<Integer> v(static_cast<size_t>(deg) + 1);
        v.back() = std::move(c);
        return IntPolynomial(std::move(v));
    }
    static IntPolynomial t() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

    Integer coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<size_t>(k)];
    }
    Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    Integer eval(const Integer& x) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
        return g;  // 0 for the zero polynomial
    }

    IntPolynomial operator-() const {
        auto v = coeffs_;
        for (auto& c : v) c = -c;
        return IntPolynomial(std::move(v));
    }

    IntPolynomial& operator+=(const IntPolynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& rhs) { return *this += -rhs; }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(v));
    }
    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
        auto v = p.coeffs_;
        for (auto& c : v) c *= s;
        return IntPolynomial(std::move(v));
    }

    IntPolynomial pow(unsigned k) const {
        IntPolynomial out = one(), base = *this;
        while (k) {
            if (k & 1u) out = out * base;
            base = base * base;
            k >>= 1u;
        }
        return out;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    // Human-facing rendering, e.g. "t^3 - t" or "0". Not a wire format.
    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Integer c = coeff(k);
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Integer a = boost::multiprecision::abs(c);
            if (k == 0) {
                out << a;
            } else {
                if (a != 1) out << a << "*";
                out << var;
                if (k > 1) out << "^" << k;
            }
            first = false;
        }
        return out.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

// Polynomial with rational coefficients. Used for Ehrhart interpolation and
// for division remainders; deliberately minimal.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }
    QPolynomial(const IntPolynomial& p) {  // NOLINT: implicit widening is intended
        coeffs_.reserve(p.coefficients().size());
        for (const auto& c : p.coefficients()) coeffs_.emplace_back(c);
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        return coeffs_.empty() ? IntPolynomial::kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<size_t>(k)];
    }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational eval(const Integer& x) const { return eval(Rational(x)); }

    // Exact integer evaluation; the caller asserts integrality holds.
    Integer eval_integer(const Integer& x) const {
        Rational v = eval(x);
        if (!is_integral(v)) throw InvalidArgument("polynomial value is not an integer");
        return to_integer(v);
    }

    bool all_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return is_integral(c); });
    }
    IntPolynomial to_int_polynomial() const {
        if (!all_integral()) throw InvalidArgument("polynomial has non-integer coefficients");
        std::vector<Integer> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(to_integer(c));
        return IntPolynomial(std::move(v));
    }

    QPolynomial operator-() const {
        auto v = coeffs_;
        for (auto& c : v) c = -c;
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a + (-b); }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator*(const Rational& s, const QPolynomial& p) {
        auto v = p.coeffs_;
        for (auto& c : v) c *= s;
        return QPolynomial(std::move(v));
    }
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Unique interpolating polynomial of degree < points.size() through
    // pairwise-distinct abscissae. Exact Lagrange form.
    static QPolynomial interpolate(const std::vector<std::pair<Integer, Integer>>& points) {
        if (points.empty()) throw EmptyInput("no interpolation points");
        QPolynomial acc;
        for (size_t i = 0; i < points.size(); ++i) {
            QPolynomial basis({Rational(1)});
            Rational denom = 1;
            for (size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                if (points[j].first == points[i].first)
                    throw InvalidArgument("repeated interpolation abscissa");
                basis = basis * QPolynomial({Rational(-points[j].first), Rational(1)});
                denom *= Rational(points[i].first - points[j].first);
            }
            acc = acc + (Rational(points[i].second) / denom) * basis;
        }
        return acc;
    }

    std::string to_string(const std::string& var = "m") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Rational c = coeff(k);
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Rational a = boost::multiprecision::abs(c);
            if (k == 0) {
                out << a;
            } else {
                if (a != 1) out << a << "*";
                out << var;
                if (k > 1) out << "^" << k;
            }
            first = false;
        }
        return out.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Exact division failed; the Q[t] remainder is carried for diagnostics.
class DivisionNotExact : public Error {
public:
    DivisionNotExact(const std::string& msg, QPolynomial remainder)
        : Error("DivisionNotExact", msg + " (remainder " + remainder.to_string("t") + ")"),
          remainder_(std::move(remainder)) {}

    const QPolynomial& remainder() const { return remainder_; }

private:
    QPolynomial remainder_;
};

// Coefficient reversal within an explicit degree bound: exponent k -> D - k.
// D must dominate deg(p); reversal with the exact degree inverts itself.
inline IntPolynomial reverse(const IntPolynomial& p, int bound) {
    if (bound < 0) throw InvalidBound("reversal bound must be >= 0");
    if (bound < p.degree()) throw InvalidBound("reversal bound below polynomial degree");
    if (p.is_zero()) return IntPolynomial::zero();
    std::vector<Integer> v(static_cast<size_t>(bound) + 1);
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<size_t>(bound - k)] = p.coeff(k);
    return IntPolynomial(std::move(v));
}

// Division in Z[t]: succeeds only when num = quot * den exactly with an
// integer quotient; anything else raises DivisionNotExact with the remainder.
inline IntPolynomial exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw ZeroDenominator("exact_divide by the zero polynomial");
    if (num.is_zero()) return IntPolynomial::zero();
    std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) throw DivisionNotExact("divisor degree exceeds dividend", QPolynomial(num));
    std::vector<Rational> quot(static_cast<size_t>(dn - dd) + 1);
    Rational lead(den.leading());
    for (int k = dn - dd; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + dd)] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k + j)] -= q * Rational(den.coeff(j));
    }
    QPolynomial remainder(std::move(rem));
    if (!remainder.is_zero())
        throw DivisionNotExact("nonzero remainder", remainder);
    QPolynomial q(std::move(quot));
    if (!q.all_integral())
        throw DivisionNotExact("quotient not integral", QPolynomial());
    return q.to_int_polynomial();
}

// Quotient of integer polynomials in the canonical form: joint integer
// content 1 and positive denominator leading coefficient. No polynomial-gcd
// cancellation happens; equality is semantic (cross-multiplication).
class RationalFunction {
public:
    RationalFunction() : num_(IntPolynomial::zero()), den_(IntPolynomial::one()) {}
    RationalFunction(IntPolynomial num, IntPolynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
        canonicalize();
    }
    RationalFunction(const IntPolynomial& p) : num_(p), den_(IntPolynomial::one()) {  // NOLINT
        canonicalize();
    }

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    // Semantic equality: a/b == c/d iff ad == cb. Canonical forms of equal
    // values may still differ structurally when a common factor survives.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string to_string(const std::string& var = "t") const {
        if (den_ == IntPolynomial::one()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

private:
    void canonicalize() {
        Integer g = boost::multiprecision::gcd(num_.content(), den_.content());
        if (g > 1) {
            auto divided = [&g](const IntPolynomial& p) {
                std::vector<Integer> v = p.coefficients();
                for (auto& c : v) c /= g;
                return IntPolynomial(std::move(v));
            };
            num_ = divided(num_);
            den_ = divided(den_);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

// f(t) -> f(1/t) as a rational function: reverse numerator and denominator
// within the common bound max(deg num, deg den).
inline RationalFunction substitute_reciprocal(const RationalFunction& f) {
    int bound = std::max(f.num().degree(), f.den().degree());
    if (bound < 0) bound = 0;  // zero numerator: 0/den -> 0/rev(den)
    return RationalFunction(reverse(f.num(), bound), reverse(f.den(), bound));
}

// First order+1 Taylor coefficients of f at t = 0, exact. Integral
// expansions come back with denominator 1; anything else stays rational.
inline std::vector<Rational> series_expand(const RationalFunction& f, int order) {
    if (order < 0) throw InvalidArgument("series order must be >= 0");
    if (f.den().coeff(0) == 0) throw PoleAtZero("denominator vanishes at t = 0");
    Rational d0(f.den().coeff(0));
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Rational acc(f.num().coeff(k));
        for (int j = 1; j <= k; ++j)
            acc -= Rational(f.den().coeff(j)) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / d0;
    }
    return out;
}

}  // namespace simpchrom
