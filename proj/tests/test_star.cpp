#include "pmech/mechanise.hpp"
#include "pmech/verify.hpp"
#include "support.hpp"

using namespace pmech;
using namespace pmech::test;

TEST_CASE("star examples") {
    const StarConfig s1 = StarConfig::sector1_only();
    CHECK(star(S("q1"), S("p1"), s1) == S("q1*p1 + i*h1/2"));
    CHECK(star(S("p1"), S("q1"), s1) == S("q1*p1 - i*h1/2"));
    CHECK(star(S("q1^2"), S("p1^2"), s1) == S("q1^2*p1^2 + 2*i*h1*q1*p1 - h1^2/2"));
    CHECK(star(S("q1*p1"), S("q2*p2")) == S("q1*p1*q2*p2"));
    CHECK(star(S("p1*p2"), S("q1*q2")) == S("(q1*p1 - i*h1/2)*(q2*p2 - i*h2/2)"));
}

TEST_CASE("star commutator examples") {
    CHECK(star_commutator(S("q1"), S("p1")) == S("i*h1"));
    CHECK(star_commutator(S("q2"), S("p2")) == S("i*h2"));
    CHECK(star_commutator(S("q1"), S("q2")).is_zero());
    CHECK(star_commutator(S("q1^3*p2"), S("p1^2*q2"), StarConfig::classical()).is_zero());
}

TEST_CASE("Moyal bracket examples") {
    CHECK(moyal_bracket(S("q1^2"), S("p1^2"), Hbar::h1) == S("4*q1*p1"));
    CHECK(moyal_bracket(S("q1^3"), S("p1^3"), Hbar::h1) == S("9*q1^2*p1^2 - 3/2*h1^2"));
    CHECK(moyal_bracket(S("q1"), S("q1^2"), Hbar::h1).is_zero());
}

TEST_CASE("Poisson bracket examples") {
    CHECK(poisson_bracket(S("q1"), S("p1")) == S("1"));
    CHECK(poisson_bracket(S("q1*p2 - q2*p1"), S("q1")) == S("q2"));
    Symbol a = S("q1^2*p2 + 3*p1");
    CHECK(poisson_bracket(a, a).is_zero());
    CHECK(poisson_bracket(S("q2"), S("p2"), {1}).is_zero());
}

TEST_CASE("universal bracket examples") {
    CHECK(universal_factor() == C("(h1+h2)/(i*h1*h2)"));
    CHECK(universal_bracket(S("q1"), S("h2/(h1+h2)*p1")) == S("1"));
    CHECK(universal_bracket(S("q1"), S("q2")).is_zero());
    CHECK(universal_bracket(S("q1"), S("p1")) == S("1 + h1/h2"));
}

TEST_CASE("sector brackets on the rotation Hamiltonian") {
    const Symbol Hc = rotation_hamiltonian();
    const Symbol H = mechanise(Hc);
    CHECK(H == S("h1/(h1+h2)*q1*p2 - h2/(h1+h2)*q2*p1"));
    CHECK(universal_bracket(H, S("q1")) == S("q2"));
    CHECK(universal_bracket(H, S("q2")) == S("-q1"));
    CHECK(universal_bracket(H, mechanise(S("p1"))) == mechanise(S("p2")));
    CHECK(universal_bracket(H, mechanise(S("p2"))) == -mechanise(S("p1")));

    CHECK(qq_bracket(H, S("q1"), Rational(1), Rational(1)) == S("q2"));
    CHECK(qq_bracket(H, mechanise(S("p1")), Rational(2), Rational(1)) == S("2/3*p2"));
    CHECK_THROWS_AS(qq_bracket(H, S("q1"), Rational(0), Rational(1)), PoleAtEvaluation);

    CHECK(cc_bracket(Hc, S("q1")) == S("q2"));
    CHECK(cc_bracket(Hc, S("p1")) == S("p2"));
    CHECK(cc_bracket(S("q2"), S("p2")) == S("1"));
    CHECK_THROWS_AS(cc_bracket(H, S("q1")), NotClassical);
}

TEST_CASE("quantum-classical bracket examples") {
    const Symbol H = mechanise(rotation_hamiltonian());
    CHECK(qc_bracket(H, S("q1")) == J("q2", "0"));
    CHECK(qc_bracket(H, S("q2")) == J("-q1", "0"));
    CHECK(qc_bracket(H, mechanise(S("p1"))) == J("p2", "-1/h1*p2"));
    CHECK(qc_bracket(H, mechanise(S("p2"))) == J("0", "-1/h1*p1"));
    try {
        (void)qc_bracket(S("q1"), S("p1"));
        FAIL("expected a pole");
    } catch (const PoleAtClassicalLimit& e) {
        CHECK(std::string(e.what()).starts_with("pole at h2=0: pair is not quantum-classically admissible"));
    }
}

TEST_CASE("Aleksandrov bracket and the third term") {
    const Symbol H = mechanise(rotation_hamiltonian());
    CHECK(aleksandrov_bracket(jet(H), jet(S("q1"))).is_zero());
    CHECK(aleksandrov_bracket(jet(H), jet(S("q2"))) == S("-q1"));
    CHECK(aleksandrov_bracket(jet(S("q1")), jet(mechanise(S("p1")))).is_zero());
    CHECK(qc_third_term(H, S("q1")) == S("q2"));
    CHECK(qc_third_term(H, S("q2")).is_zero());
    CHECK(qc_third_term(H, H).is_zero());
    QcBreakdown b = qc_breakdown(H, S("q1"));
    CHECK(b.bracket.value == b.aleksandrov + b.third_term);
}

TEST_CASE("star product is associative") {
    std::mt19937_64 rng(31);
    RandomSymbolSpec spec{1, 3, 3, true};
    for (int t = 0; t < 25; ++t) {
        Symbol a = random_symbol(rng, spec), b = random_symbol(rng, spec), c = random_symbol(rng, spec);
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
    }
}

TEST_CASE("commutator identities with n = 2") {
    std::mt19937_64 rng(37);
    RandomSymbolSpec spec{2, 3, 3, false};
    for (int t = 0; t < 15; ++t) {
        Symbol a = random_symbol(rng, spec), b = random_symbol(rng, spec);
        CHECK(star_commutator(a, b) == star(a, b) - star(b, a));
        CHECK(universal_bracket(a, b) == -universal_bracket(b, a));
    }
}

TEST_CASE("sector_bracket dispatch") {
    const Symbol H = mechanise(rotation_hamiltonian());
    CHECK(sector_bracket(Sector::qc, H, S("q1")).is_jet());
    CHECK(sector_bracket(Sector::universal, H, S("q1")).symbol() == S("q2"));
    CHECK(sector_bracket(Sector::cc, rotation_hamiltonian(), S("q1")).symbol() == S("q2"));
    CHECK(parse_sector("qq") == Sector::qq);
    CHECK_THROWS_AS(parse_sector("xx"), InputError);
}
