#include "pmech/heisenberg.hpp"

#include <cmath>
#include <numbers>

namespace pmech {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string join(const RationalVector& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += v[k].get_str();
    }
    return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
    RationalVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

RationalVector negate(const RationalVector& a) {
    RationalVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
}

}  // namespace

HGroupElement::HGroupElement(Rational s_, RationalVector x_, RationalVector y_)
    : s(std::move(s_)), x(std::move(x_)), y(std::move(y_)) {
    require_same(x.size(), y.size(), "group element x/y");
    if (x.empty()) throw DimensionMismatch("group element needs n >= 1");
}

HGroupElement HGroupElement::identity(std::size_t n) {
    return {Rational(0), RationalVector(n, Rational(0)), RationalVector(n, Rational(0))};
}

std::string HGroupElement::to_string() const { return s.get_str() + ";" + join(x) + ";" + join(y); }

DGroupElement::DGroupElement(HGroupElement a, HGroupElement b) : g1(std::move(a)), g2(std::move(b)) {
    require_same(g1.dimension(), g2.dimension(), "double group components");
}

DGroupElement DGroupElement::identity(std::size_t n) { return {HGroupElement::identity(n), HGroupElement::identity(n)}; }

std::string DGroupElement::to_string() const { return g1.to_string() + "|" + g2.to_string(); }

std::string CoadjointPoint::to_string() const { return hbar.get_str() + ";" + join(q) + ";" + join(p); }

Rational symplectic_form(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> xp,
                         std::span<const Rational> yp) {
    require_same(x.size(), y.size(), "symplectic form");
    require_same(x.size(), xp.size(), "symplectic form");
    require_same(x.size(), yp.size(), "symplectic form");
    Rational w = 0;
    for (std::size_t j = 0; j < x.size(); ++j) w += x[j] * yp[j] - xp[j] * y[j];
    return w;
}

HGroupElement hn_multiply(const HGroupElement& g, const HGroupElement& h) {
    require_same(g.dimension(), h.dimension(), "group law");
    Rational s = g.s + h.s + symplectic_form(g.x, g.y, h.x, h.y) / 2;
    return {std::move(s), add(g.x, h.x), add(g.y, h.y)};
}

HGroupElement hn_inverse(const HGroupElement& g) { return {-g.s, negate(g.x), negate(g.y)}; }

DGroupElement dn_multiply(const DGroupElement& d, const DGroupElement& e) {
    return {hn_multiply(d.g1, e.g1), hn_multiply(d.g2, e.g2)};
}

DGroupElement dn_inverse(const DGroupElement& d) { return {hn_inverse(d.g1), hn_inverse(d.g2)}; }

CoadjointPoint coadjoint(const HGroupElement& g, const CoadjointPoint& f) {
    require_same(g.dimension(), f.q.size(), "co-adjoint action");
    require_same(f.q.size(), f.p.size(), "co-adjoint point");
    CoadjointPoint r{f.hbar, f.q, f.p};
    for (std::size_t j = 0; j < f.q.size(); ++j) {
        r.q[j] += f.hbar * g.y[j];
        r.p[j] -= f.hbar * g.x[j];
    }
    return r;
}

HGroupElement coadjoint_witness(const CoadjointPoint& from, const CoadjointPoint& to) {
    require_same(from.q.size(), to.q.size(), "co-adjoint witness");
    if (from.hbar != to.hbar) throw MathError("points lie on orbits with different h");
    std::size_t n = from.q.size();
    if (sgn(from.hbar) == 0) {
        if (!(from == to)) throw MathError("h = 0 orbits are single points");
        return HGroupElement::identity(n);
    }
    RationalVector x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
        y[j] = (to.q[j] - from.q[j]) / from.hbar;
        x[j] = (from.p[j] - to.p[j]) / from.hbar;
    }
    return {Rational(0), std::move(x), std::move(y)};
}

Rational classical_rep_phase(std::span<const Rational> q, std::span<const Rational> p, const HGroupElement& g) {
    require_same(q.size(), g.dimension(), "one-dimensional representation");
    require_same(p.size(), g.dimension(), "one-dimensional representation");
    Rational theta = 0;
    for (std::size_t j = 0; j < q.size(); ++j) theta += q[j] * g.x[j] + p[j] * g.y[j];
    return theta;
}

Rational phase_mod1(const Rational& theta) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), theta.get_num_mpz_t(), theta.get_den_mpz_t());
    return theta - Rational(fl);
}

std::complex<double> phase_value(const Rational& theta) {
    double angle = -2.0 * std::numbers::pi * phase_mod1(theta).get_d();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace pmech
