#pragma once

/**
 * Exact scalars for the observable algebra.
 *
 * GaussianRational is an element of Q(i). HPolynomial is a sparse polynomial
 * in the two formal Planck constants h1, h2 over Q(i), and RationalFunction
 * is the field of fractions of those polynomials, always held in canonical
 * form: numerator and denominator coprime, denominator monic under
 * graded-lex order (h1 > h2). Canonical form makes equality syntactic.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pmech/errors.hpp"

namespace pmech {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a decimal such as "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order (re, then im) so values can key ordered containers.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    /// Rendering in the expression grammar: "3/2", "-i", "2*i", "(1-3*i)".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

enum class Hbar : std::uint8_t { h1, h2 };

/// Exponent pair (power of h1, power of h2).
struct HExponent {
    std::uint32_t h1 = 0;
    std::uint32_t h2 = 0;

    std::uint32_t total() const { return h1 + h2; }
    bool divides(const HExponent& o) const { return h1 <= o.h1 && h2 <= o.h2; }

    friend bool operator==(const HExponent&, const HExponent&) = default;
};

/// Graded-lex: higher total degree first, ties broken by the power of h1.
inline bool grlex_greater(const HExponent& a, const HExponent& b) {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.h1 > b.h1;
}

/// Variable names used when rendering. Jets of the quantum-classical sector
/// print h1 as "h".
struct HNames {
    std::string h1 = "h1";
    std::string h2 = "h2";
};

class HPolynomial {
public:
    using Term = std::pair<HExponent, GaussianRational>;

    HPolynomial() = default;
    HPolynomial(GaussianRational c);  // NOLINT(google-explicit-constructor)
    HPolynomial(long c) : HPolynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

    static HPolynomial monomial(HExponent e, GaussianRational c = 1);
    static HPolynomial variable(Hbar v);

    /// Terms sorted by descending graded-lex exponent; never holds a zero coefficient.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Returns the constant term value if the polynomial is constant.
    GaussianRational constant_value() const;

    const Term& leading_term() const { return terms_.front(); }
    std::uint32_t degree(Hbar v) const;
    bool depends_on(Hbar v) const { return degree(v) > 0; }

    HPolynomial operator-() const;
    HPolynomial& operator+=(const HPolynomial& o);
    HPolynomial& operator-=(const HPolynomial& o);
    HPolynomial& operator*=(const HPolynomial& o);
    HPolynomial& operator*=(const GaussianRational& c);

    friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
    friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
    friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);
    friend HPolynomial operator*(HPolynomial a, const GaussianRational& c) { return a *= c; }

    friend bool operator==(const HPolynomial& a, const HPolynomial& b) { return a.terms_ == b.terms_; }

    HPolynomial pow(unsigned e) const;
    HPolynomial diff(Hbar v) const;
    /// Substitutes a value for one variable; the result no longer depends on it.
    HPolynomial substitute(Hbar v, const GaussianRational& value) const;
    GaussianRational evaluate(const GaussianRational& h1, const GaussianRational& h2) const;

    /// Exact quotient; throws std::logic_error if `d` does not divide `*this`.
    HPolynomial divide_exact(const HPolynomial& d) const;

    /// Scales so the graded-lex leading coefficient is 1 (zero stays zero).
    HPolynomial monic() const;

    std::string to_string(const HNames& names = {}) const;

private:
    friend HPolynomial from_sorted_terms(std::vector<Term> terms);
    std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q(i)[h1, h2]; gcd(0, 0) = 0.
HPolynomial gcd(const HPolynomial& a, const HPolynomial& b);

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Rational c) : num_(GaussianRational(std::move(c))), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(HPolynomial p);  // NOLINT(google-explicit-constructor)
    /// Reduces to canonical form. Throws DivisionByZero if `den` is zero.
    RationalFunction(HPolynomial num, HPolynomial den);

    static RationalFunction variable(Hbar v) { return {HPolynomial::variable(v)}; }
    static RationalFunction i() { return {GaussianRational::i()}; }

    const HPolynomial& num() const noexcept { return num_; }
    const HPolynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool depends_on(Hbar v) const { return num_.depends_on(v) || den_.depends_on(v); }
    bool is_hbar_free() const { return is_constant(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const;
    RationalFunction pow(unsigned e) const;

    /// Quotient-rule derivative.
    RationalFunction diff(Hbar v) const;

    /// Substitutes a value for one variable. Throws PoleAtEvaluation when the
    /// denominator vanishes identically after substitution.
    RationalFunction substitute(Hbar v, const GaussianRational& value) const;

    /// Throws PoleAtEvaluation on a zero denominator.
    GaussianRational evaluate(const GaussianRational& h1, const GaussianRational& h2) const;

    std::string to_string(const HNames& names = {}) const;

private:
    void reduce();

    HPolynomial num_;
    HPolynomial den_;
};

/// 1-jet in h2 at h2 = 0: (a|_{h2=0}, (d a / d h2)|_{h2=0}), both functions of h1 only.
struct HJet {
    RationalFunction value;
    RationalFunction derivative;
};

/// Throws PoleAtClassicalLimit if the denominator vanishes identically at h2 = 0.
HJet h2_jet(const RationalFunction& a);

}  // namespace pmech
