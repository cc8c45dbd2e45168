#include <cmath>

#include "pmech/dynamics.hpp"
#include "pmech/mechanise.hpp"
#include "pmech/verify.hpp"
#include "support.hpp"

using namespace pmech;
using namespace pmech::test;

namespace {
std::vector<Symbol> syms(std::initializer_list<const char*> texts) {
    std::vector<Symbol> out;
    for (const char* t : texts) out.push_back(S(t));
    return out;
}
}  // namespace

TEST_CASE("classical rotation series") {
    auto s = evolve_taylor(Sector::cc, rotation_hamiltonian(), S("q1"), 4);
    CHECK(s.coeffs == syms({"q1", "q2", "-q1", "-q2", "q1"}));
    auto r = evolve_taylor(Sector::cc, rotation_hamiltonian(), S("q1"), 2, {BracketOrder::observable_first, {}, {}});
    CHECK(r.coeffs == syms({"q1", "-q2", "-q1"}));
    CHECK_THROWS_AS(evolve_taylor(Sector::cc, mechanise(rotation_hamiltonian()), S("q1"), 2), NotClassical);
}

TEST_CASE("universal rotation of momenta") {
    const Symbol H = mechanise(rotation_hamiltonian());
    auto s = evolve_taylor(Sector::universal, H, mechanise(S("p1")), 4);
    const Symbol a = mechanise(S("p1")), b = mechanise(S("p2"));
    CHECK(s.coeffs == std::vector<Symbol>{a, b, -a, -b, a});
}

TEST_CASE("conserved Hamiltonian") {
    const Symbol H = mechanise(rotation_hamiltonian());
    for (Sector sector : {Sector::universal, Sector::qq, Sector::qc}) {
        auto s = evolve_taylor(sector, H, H, 3);
        for (std::size_t k = 1; k < s.coeffs.size(); ++k) CHECK(s.coeffs[k].is_zero());
    }
    auto c = evolve_taylor(Sector::cc, rotation_hamiltonian(), rotation_hamiltonian(), 3);
    CHECK(c.coeffs[1].is_zero());
}

TEST_CASE("quantum-classical jets") {
    const Symbol H = mechanise(rotation_hamiltonian());
    auto q = evolve_qc_jet(H, S("q1"), 2);
    CHECK(q == std::vector<JetObservable>{J("q1", "0"), J("q2", "0"), J("-q1", "0")});
    auto p = evolve_qc_jet(H, mechanise(S("p1")), 2);
    CHECK(p == std::vector<JetObservable>{J("0", "1/h1*p1"), J("p2", "-1/h1*p2"), J("0", "-1/h1*p1")});
    CHECK(evolve_qc_jet(H, S("q2"), 0) == std::vector<JetObservable>{J("q2", "0")});
    CHECK_THROWS_AS(evolve_taylor(Sector::qc, S("q1*p1"), S("p1"), 1), PoleAtClassicalLimit);
}

TEST_CASE("numeric trajectories") {
    auto s = evolve_taylor(Sector::cc, rotation_hamiltonian(), S("q1"), 8);
    PhasePoint pt;
    pt.values[{1, Kind::q, 1}] = 1;
    auto rows = trajectory_numeric(s, pt, 0, 0, {Rational(0), Rational(1)});
    CHECK(rows[0].value == GaussianRational(1));
    CHECK(std::abs(to_double(rows[1].value).re - std::cos(1.0)) < 3e-5);

    const Symbol H = mechanise(rotation_hamiltonian());
    EvolveOptions opts;
    opts.h1 = 2;
    opts.h2 = 1;
    auto qq = evolve_taylor(Sector::qq, H, mechanise(S("p1")), 1, opts);
    // p1 carries L1 = 1/3 and the slope carries L2 = 2/3
    CHECK(qq.coeffs[0] == S("p1/3"));
    CHECK(qq.coeffs[1] == S("2/3*p2"));
}
