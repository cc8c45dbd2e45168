#include <cmath>

#include "pmech/heisenberg.hpp"
#include "support.hpp"

using namespace pmech;

namespace {

HGroupElement H(Rational s, RationalVector x, RationalVector y) { return {std::move(s), std::move(x), std::move(y)}; }

HGroupElement random_h(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    RationalVector x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = r();
        y[j] = r();
        x[j].canonicalize();
        y[j].canonicalize();
    }
    Rational s = r();
    s.canonicalize();
    return {s, x, y};
}

}  // namespace

TEST_CASE("symplectic form") {
    RationalVector one{1}, zero{0};
    CHECK(symplectic_form(one, zero, zero, one) == 1);
    CHECK(symplectic_form(one, one, one, one) == 0);
    RationalVector x{2, 0}, y{0, 1}, xp{1, 1}, yp{1, 0};
    CHECK(symplectic_form(x, y, xp, yp) == 1);
    CHECK_THROWS_AS(symplectic_form(x, y, one, yp), DimensionMismatch);
}

TEST_CASE("H^n group law") {
    CHECK(hn_multiply(H(0, {1}, {0}), H(0, {0}, {1})) == H(Rational(1, 2), {1}, {1}));
    HGroupElement g = H(3, {1, 2}, {Rational(1, 3), -1});
    CHECK(hn_multiply(g, HGroupElement::identity(2)) == g);
    CHECK(hn_inverse(g) == H(-3, {-1, -2}, {Rational(-1, 3), 1}));
    CHECK(hn_multiply(g, hn_inverse(g)) == HGroupElement::identity(2));
    CHECK_THROWS_AS(H(0, {1}, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(hn_multiply(g, HGroupElement::identity(1)), DimensionMismatch);
    CHECK(g.to_string() == "3;1,2;1/3,-1");
}

TEST_CASE("D^n group law") {
    DGroupElement a{H(0, {1}, {0}), HGroupElement::identity(1)};
    DGroupElement b{H(0, {0}, {1}), HGroupElement::identity(1)};
    CHECK(dn_multiply(a, b) == DGroupElement{H(Rational(1, 2), {1}, {1}), HGroupElement::identity(1)});
    CHECK(dn_multiply(a, DGroupElement::identity(1)) == a);
    CHECK(dn_multiply(a, dn_inverse(a)) == DGroupElement::identity(1));
    CHECK(dn_multiply(a, b).to_string() == "1/2;1;1|0;0;0");
}

TEST_CASE("group properties on random elements") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + t % 3;
        HGroupElement a = random_h(rng, n), b = random_h(rng, n), c = random_h(rng, n);
        CHECK(hn_multiply(hn_multiply(a, b), c) == hn_multiply(a, hn_multiply(b, c)));
        DGroupElement d{a, b}, e{b, c}, f{c, a};
        CHECK(dn_multiply(dn_multiply(d, e), f) == dn_multiply(d, dn_multiply(e, f)));
        // centre elements commute with everything
        DGroupElement z{H(a.s, RationalVector(n, 0), RationalVector(n, 0)), H(c.s, RationalVector(n, 0), RationalVector(n, 0))};
        CHECK(dn_multiply(z, d) == dn_multiply(d, z));
    }
}

TEST_CASE("co-adjoint action") {
    CoadjointPoint f{1, {0}, {0}};
    CHECK(coadjoint(H(0, {1}, {0}), f) == CoadjointPoint{1, {0}, {-1}});
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        HGroupElement g = random_h(rng, 2), h = random_h(rng, 2);
        CoadjointPoint p{Rational(t % 3), {Rational(t), 1}, {2, Rational(-t, 7)}};
        p.p[1].canonicalize();
        CHECK(coadjoint(hn_multiply(g, h), p) == coadjoint(g, coadjoint(h, p)));
        CoadjointPoint classical{0, p.q, p.p};
        CHECK(coadjoint(g, classical) == classical);
    }
    CoadjointPoint from{2, {1}, {1}}, to{2, {3}, {-1}};
    CHECK(coadjoint(coadjoint_witness(from, to), from) == to);
    CHECK_THROWS(coadjoint_witness(from, CoadjointPoint{1, {0}, {0}}));
}

TEST_CASE("one-dimensional representations") {
    RationalVector q{1}, p{0};
    Rational theta = classical_rep_phase(q, p, H(5, {Rational(1, 2)}, {3}));
    CHECK(theta == Rational(1, 2));
    CHECK(std::abs(phase_value(theta) - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(classical_rep_phase(q, p, H(9, {0}, {0})) == 0);
    CHECK(phase_mod1(Rational(7, 4)) == Rational(3, 4));
    CHECK(phase_mod1(Rational(-1, 4)) == Rational(3, 4));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        HGroupElement g = random_h(rng, 2), h = random_h(rng, 2);
        RationalVector qq{Rational(t), -2}, pp{Rational(1, 3), 5};
        CHECK(classical_rep_phase(qq, pp, hn_multiply(g, h)) ==
              classical_rep_phase(qq, pp, g) + classical_rep_phase(qq, pp, h));
    }
}
