#pragma once

/**
 * p-Mechanisation of classical polynomials and the sector projections.
 *
 * Mechanisation substitutes p_{j,i} -> L_j p_{j,i} with the regularising
 * factors L_1 = h2/(h1+h2) and L_2 = h1/(h1+h2); positions are unchanged.
 * The projections reproduce the columns of the representation table:
 * quantum-quantum (the formal symbol or a numeric specialisation),
 * quantum-classical (the h2-jet at 0, with h1 renamed h), and
 * classical-classical (the recorded classical preimage).
 */

#include <optional>

#include "pmech/symbol.hpp"

namespace pmech {

/// L_sector = h_{3-sector} / (h1 + h2).
const RationalFunction& lambda_factor(int sector);

/// A Symbol whose coefficients are free of h1 and h2.
class ClassicalPolynomial {
public:
    /// Throws NotClassical if `s` mentions h1 or h2.
    explicit ClassicalPolynomial(Symbol s);

    const Symbol& symbol() const noexcept { return symbol_; }
    friend bool operator==(const ClassicalPolynomial&, const ClassicalPolynomial&) = default;

private:
    Symbol symbol_;
};

class MechanisedObservable {
public:
    /// Wraps a hand-built symbol with no recorded preimage.
    static MechanisedObservable from_symbol(Symbol s) { return MechanisedObservable(std::move(s), std::nullopt); }

    const Symbol& symbol() const noexcept { return symbol_; }
    const std::optional<ClassicalPolynomial>& preimage() const noexcept { return preimage_; }

private:
    friend MechanisedObservable mechanise_universal(const ClassicalPolynomial& f);
    MechanisedObservable(Symbol s, std::optional<ClassicalPolynomial> pre)
        : symbol_(std::move(s)), preimage_(std::move(pre)) {}

    Symbol symbol_;
    std::optional<ClassicalPolynomial> preimage_;
};

MechanisedObservable mechanise_universal(const ClassicalPolynomial& f);

/// Convenience for symbols known to be classical. Throws NotClassical otherwise.
inline Symbol mechanise(const Symbol& f) { return mechanise_universal(ClassicalPolynomial(f)).symbol(); }

/// Classical column: the recorded preimage. A symbol without preimage is
/// returned unchanged when it is already h-free; otherwise throws NoPreimage.
ClassicalPolynomial project_cc(const MechanisedObservable& m);

/// Quantum-quantum column: identity when formal, or a specialisation at
/// nonzero numeric h1/h2. Throws PoleAtEvaluation on a denominator zero.
Symbol project_qq(const MechanisedObservable& m, const std::optional<Rational>& h1 = std::nullopt,
                  const std::optional<Rational>& h2 = std::nullopt);

/// Quantum-classical columns (value, d/dh2 at h2 = 0).
JetObservable project_qc(const MechanisedObservable& m);

}  // namespace pmech
