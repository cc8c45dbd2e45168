#pragma once

// Group-level computations on H^n and D^n = H^n + H^n with exact rational coordinates.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "pmech/exactnum.hpp"

namespace pmech {

using RationalVector = std::vector<Rational>;

/// (s, x, y) in H^n.
struct HGroupElement {
    Rational s;
    RationalVector x;
    RationalVector y;

    HGroupElement() = default;
    /// Throws DimensionMismatch unless x and y have the same length n >= 1.
    HGroupElement(Rational s, RationalVector x, RationalVector y);

    static HGroupElement identity(std::size_t n);
    std::size_t dimension() const { return x.size(); }
    std::string to_string() const;

    friend bool operator==(const HGroupElement&, const HGroupElement&) = default;
};

/// (g1; g2) in D^n.
struct DGroupElement {
    HGroupElement g1;
    HGroupElement g2;

    DGroupElement() = default;
    DGroupElement(HGroupElement a, HGroupElement b);

    static DGroupElement identity(std::size_t n);
    std::size_t dimension() const { return g1.dimension(); }
    std::string to_string() const;

    friend bool operator==(const DGroupElement&, const DGroupElement&) = default;
};

/// (h, q, p) in the dual of the Lie algebra.
struct CoadjointPoint {
    Rational hbar;
    RationalVector q;
    RationalVector p;

    std::string to_string() const;
    friend bool operator==(const CoadjointPoint&, const CoadjointPoint&) = default;
};

/// omega(x, y; x', y') = sum_j x_j y'_j - x'_j y_j
Rational symplectic_form(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> xp,
                         std::span<const Rational> yp);

/// (s + s' + omega/2, x + x', y + y')
HGroupElement hn_multiply(const HGroupElement& g, const HGroupElement& h);
HGroupElement hn_inverse(const HGroupElement& g);

DGroupElement dn_multiply(const DGroupElement& d, const DGroupElement& e);
DGroupElement dn_inverse(const DGroupElement& d);

/// (h, q + h y, p - h x)
CoadjointPoint coadjoint(const HGroupElement& g, const CoadjointPoint& f);

/// A group element moving `from` to `to` along a co-adjoint orbit. Both points
/// need the same nonzero h; for h = 0 the orbit is a single point and only
/// from == to has a witness (the identity). Throws MathError otherwise.
HGroupElement coadjoint_witness(const CoadjointPoint& from, const CoadjointPoint& to);

/// Phase exponent theta = q.x + p.y of the one-dimensional representation
/// rho_(q,p)(g) = exp(-2 pi i theta). The centre coordinate s drops out.
Rational classical_rep_phase(std::span<const Rational> q, std::span<const Rational> p, const HGroupElement& g);

/// theta reduced into [0, 1).
Rational phase_mod1(const Rational& theta);

/// exp(-2 pi i theta) in floating point.
std::complex<double> phase_value(const Rational& theta);

}  // namespace pmech
