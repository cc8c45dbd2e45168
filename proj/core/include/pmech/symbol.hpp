#pragma once

/**
 * Phase-space observables on the double group.
 *
 * A Symbol is a polynomial in the phase variables q_{s,i}, p_{s,i} of the two
 * sectors s = 1, 2 (i = 1..n) with RationalFunction coefficients. Terms are
 * kept in canonical graded-lex order so equality is syntactic.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pmech/exactnum.hpp"

namespace pmech {

enum class Kind : std::uint8_t { q, p };

struct VarId {
    int sector = 1;  // 1 or 2
    Kind kind = Kind::q;
    int index = 1;  // 1..n

    /// Slot in the exponent vector of a Monomial with `n` degrees of freedom per sector.
    std::size_t slot(unsigned n) const {
        return static_cast<std::size_t>(sector - 1) * 2 * n + (kind == Kind::p ? n : 0) +
               static_cast<std::size_t>(index - 1);
    }
    static VarId from_slot(std::size_t slot, unsigned n);

    /// "q1", "p2", "q1_2" (index suffix only when index > 1).
    std::string name() const;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(unsigned n) : exps_(4 * static_cast<std::size_t>(n), 0) {}
    static Monomial variable(unsigned n, VarId v, Exponent power = 1);

    unsigned n() const { return static_cast<unsigned>(exps_.size() / 4); }
    Exponent operator[](std::size_t slot) const { return exps_[slot]; }
    Exponent& operator[](std::size_t slot) { return exps_[slot]; }
    Exponent exponent(VarId v) const { return exps_[v.slot(n())]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    unsigned total_degree() const;
    bool is_one() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "q1*p2^2"; empty string for the unit monomial.
    std::string to_string() const;

private:
    std::vector<Exponent> exps_;
};

/// Canonical term order: higher total degree first, then lexicographically larger exponent vector.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct PhasePoint;

class Symbol {
public:
    using TermMap = std::map<Monomial, RationalFunction, MonomialOrder>;

    explicit Symbol(unsigned n = 1) : n_(n) {}
    Symbol(unsigned n, const RationalFunction& c);
    static Symbol variable(unsigned n, VarId v);
    static Symbol term(const Monomial& m, const RationalFunction& c);

    unsigned n() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    RationalFunction coefficient(const Monomial& m) const;
    unsigned total_degree() const;

    /// True when no coefficient depends on h1 or h2.
    bool is_hbar_free() const;
    bool depends_on(Hbar v) const;

    /// Adds c·m in place, dropping the term when it cancels.
    void add_term(const Monomial& m, const RationalFunction& c);

    Symbol operator-() const;
    Symbol& operator+=(const Symbol& o);
    Symbol& operator-=(const Symbol& o);
    Symbol& operator*=(const RationalFunction& c);

    friend Symbol operator+(Symbol a, const Symbol& b) { return a += b; }
    friend Symbol operator-(Symbol a, const Symbol& b) { return a -= b; }
    /// Commutative pointwise product.
    friend Symbol operator*(const Symbol& a, const Symbol& b);
    friend Symbol operator*(Symbol a, const RationalFunction& c) { return a *= c; }
    friend Symbol operator*(const RationalFunction& c, Symbol a) { return a *= c; }

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    Symbol pow(unsigned e) const;
    Symbol diff(VarId v) const;

    /// Applies `f` to every coefficient, dropping terms that become zero.
    template <typename F>
    Symbol map_coefficients(F&& f) const {
        Symbol out(n_);
        for (const auto& [m, c] : terms_) out.add_term(m, f(c));
        return out;
    }

    Symbol substitute(Hbar v, const GaussianRational& value) const;

    /// Exact evaluation. Variables missing from `point` are zero.
    /// Throws PoleAtEvaluation if any coefficient has a pole at (h1, h2).
    GaussianRational evaluate(const PhasePoint& point, const GaussianRational& h1, const GaussianRational& h2) const;

    std::string to_string(const HNames& names = {}) const;

private:
    void check_same_n(const Symbol& o) const;

    unsigned n_;
    TermMap terms_;
};

/// Values of phase variables; unspecified variables evaluate to zero.
struct PhasePoint {
    std::map<VarId, Rational> values;
    Rational at(VarId v) const {
        auto it = values.find(v);
        return it == values.end() ? Rational(0) : it->second;
    }
};

/// 1-jet in h2 at h2 = 0 of an observable; both parts have coefficients in h1 only.
struct JetObservable {
    Symbol value;
    Symbol derivative;

    friend bool operator==(const JetObservable&, const JetObservable&) = default;
};

/// Componentwise coefficient jet. Throws PoleAtClassicalLimit naming the offending monomial.
JetObservable jet(const Symbol& a);

/// Truncated-jet product: (A, A')·(B, B') = (AB, AB' + A'B).
JetObservable jet_multiply(const JetObservable& a, const JetObservable& b);

/// Floating-point rendering of an exact value.
struct ComplexValue {
    double re;
    double im;
};
ComplexValue to_double(const GaussianRational& z);

}  // namespace pmech
