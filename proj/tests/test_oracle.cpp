#include "pmech/oracle.hpp"
#include "pmech/verify.hpp"
#include "support.hpp"

using namespace pmech;
using namespace pmech::test;

namespace {

const StarConfig S1 = StarConfig::sector1_only();

NCElement word(std::uint16_t a, std::uint16_t b, const RationalFunction& c = 1) {
    NCElement e(1, S1);
    e.add_term({{a, b}, {0, 0}}, c);
    return e;
}

Monomial mono(std::string_view text) { return S(text).terms().begin()->first; }

}  // namespace

TEST_CASE("normal ordering") {
    DofNormalForm pq = normal_order("pq", Hbar::h1, true);
    CHECK(pq.size() == 2);
    CHECK(pq[{1, 1}] == HPolynomial(1));
    CHECK(pq[{0, 0}] == HPolynomial::monomial(HExponent{1, 0}, -GaussianRational::i()));
    CHECK(normal_order("pq", Hbar::h1, false).size() == 1);
}

TEST_CASE("nc_multiply examples") {
    CHECK(nc_multiply(word(0, 1), word(1, 0)) == word(1, 1) + word(0, 0, -I * h1));
    CHECK(nc_multiply(word(1, 1), word(1, 0)) == word(2, 1) + word(1, 0, -I * h1));
}

TEST_CASE("nc_multiply is associative") {
    std::mt19937_64 rng(43);
    RandomSymbolSpec spec{1, 4, 2, true};
    for (int t = 0; t < 20; ++t) {
        auto a = weyl_quantize(random_symbol(rng, spec), StarConfig::universal());
        auto b = weyl_quantize(random_symbol(rng, spec), StarConfig::universal());
        auto c = weyl_quantize(random_symbol(rng, spec), StarConfig::universal());
        CHECK(nc_multiply(nc_multiply(a, b), c) == nc_multiply(a, nc_multiply(b, c)));
    }
}

TEST_CASE("rewriting is confluent") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> len(0, 8), coin(0, 1);
    for (int t = 0; t < 60; ++t) {
        std::string letters;
        for (int k = len(rng); k > 0; --k) letters += coin(rng) ? 'p' : 'q';
        CHECK(normal_order(letters, Hbar::h2, true) == normal_order_random(letters, Hbar::h2, true, rng));
    }
}

TEST_CASE("weyl_quantize examples") {
    CHECK(weyl_quantize(mono("q1*p1"), S1) == word(1, 1) + word(0, 0, -I * h1 / RationalFunction(2)));
    CHECK(weyl_quantize(mono("q1^2"), S1) == word(2, 0));
    CHECK(weyl_quantize(mono("q1*p1^2"), S1) == word(1, 2) + word(0, 1, -I * h1));
}

TEST_CASE("Weyl symbols of real polynomials are self-adjoint") {
    std::mt19937_64 rng(53);
    RandomSymbolSpec spec{1, 5, 3, false};
    for (int t = 0; t < 30; ++t) {
        NCElement w = weyl_quantize(random_symbol(rng, spec), StarConfig::universal());
        CHECK(w.adjoint() == w);
    }
    // i*q1*p1 is anti-self-adjoint
    NCElement a = weyl_quantize(S("i*q1*p1"), StarConfig::universal());
    CHECK(a.adjoint() == NCElement(1, StarConfig::universal()) - a);
}

TEST_CASE("oracle_star_check examples") {
    CHECK(oracle_star_check(mono("q1"), mono("p1")));
    CHECK(oracle_star_check(mono("q1^2"), mono("p1^2")));
    CHECK(oracle_star_check(mono("q1*p2^2"), mono("p1^3*q2")));
    CHECK(oracle_star_check(mono("q1^2*p1"), mono("q1*p1^2"), S1));
}

TEST_CASE("oracle with n = 2") {
    auto monos = all_monomials(2, 2);
    CHECK(monos.size() == 45);
    int checked = 0;
    for (std::size_t i = 0; i < monos.size(); i += 3)
        for (std::size_t j = 0; j < monos.size(); j += 4) {
            CHECK(oracle_star_check(monos[i], monos[j]));
            ++checked;
        }
    CHECK(checked > 100);
}
