#include "pmech/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "pmech/dynamics.hpp"
#include "pmech/expr.hpp"
#include "pmech/io.hpp"
#include "pmech/mechanise.hpp"
#include "pmech/oracle.hpp"
#include "pmech/star.hpp"

namespace pmech {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.passed ? 0 : 1;
    return f;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"canonical", "lemma1", "poisson-limit", "star-oracle", "rotation",
                                                "qc-example"};
    return names;
}

Symbol rotation_hamiltonian() { return parse_symbol("q1*p2 - q2*p1", 1); }

std::vector<Monomial> all_monomials(unsigned n, unsigned max_degree) {
    const std::size_t vars = 4 * static_cast<std::size_t>(n);
    std::vector<Monomial> out;
    Monomial m(n);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t slot, unsigned budget) {
        if (slot == vars) {
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            m[slot] = static_cast<Monomial::Exponent>(e);
            rec(slot + 1, budget - e);
        }
        m[slot] = 0;
    };
    rec(0, max_degree);
    return out;
}

Symbol random_symbol(std::mt19937_64& rng, const RandomSymbolSpec& spec) {
    std::uniform_int_distribution<int> n_terms(1, static_cast<int>(spec.max_terms));
    std::uniform_int_distribution<int> degree(0, static_cast<int>(spec.max_degree));
    std::uniform_int_distribution<std::size_t> slot(0, 4 * static_cast<std::size_t>(spec.n) - 1);
    std::uniform_int_distribution<long> numer(-5, 5);
    std::uniform_int_distribution<long> denom(1, 3);
    std::uniform_int_distribution<int> flavour(0, 5);

    Symbol s(spec.n);
    int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(spec.n);
        int d = degree(rng);
        for (int k = 0; k < d; ++k) ++m[slot(rng)];
        long a = numer(rng);
        if (a == 0) a = 1;
        RationalFunction c(Rational(a, denom(rng)));
        if (spec.hbar_coefficients) {
            switch (flavour(rng)) {
                case 0: c *= RationalFunction::i(); break;
                case 1: c *= RationalFunction::variable(Hbar::h1); break;
                case 2: c *= RationalFunction::variable(Hbar::h2); break;
                case 3: c += RationalFunction::i() * RationalFunction::variable(Hbar::h1); break;
                default: break;
            }
        }
        s.add_term(m, c);
    }
    if (s.is_zero()) s = Symbol::variable(spec.n, {1, Kind::q, 1});
    return s;
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) { report_.suite = std::move(suite); }

    void check(std::string name, bool ok, std::string detail = {}) {
        report_.checks.push_back({std::move(name), ok, std::move(detail)});
    }

    /// Runs `body`; any exception fails the check with its message.
    template <typename F>
    void guarded(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(name, false, std::string("exception: ") + e.what());
        }
    }

    SuiteReport finish() {
        report_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    SuiteReport report_;
    std::chrono::steady_clock::time_point start_;
};

std::string mismatch(const std::string& got, const std::string& want) { return "got " + got + ", want " + want; }

// --- canonical -------------------------------------------------------------

SuiteReport suite_canonical() {
    Recorder rec("canonical");
    for (unsigned n = 1; n <= 2; ++n) {
        std::vector<VarId> qs, ps;
        for (int s = 1; s <= 2; ++s)
            for (int i = 1; i <= static_cast<int>(n); ++i) {
                qs.push_back({s, Kind::q, i});
                ps.push_back({s, Kind::p, i});
            }
        auto mech = [&](VarId v) { return mechanise(Symbol::variable(n, v)); };
        auto classical = [&](VarId v) { return Symbol::variable(n, v); };

        std::size_t bad_universal = 0, bad_cc = 0, bad_qc = 0, total = 0;
        std::string first_failure;
        auto note = [&](std::size_t& counter, const std::string& what) {
            ++counter;
            if (first_failure.empty()) first_failure = what;
        };

        auto pairs = [&](const std::vector<VarId>& left, const std::vector<VarId>& right, bool qp) {
            for (const auto& a : left) {
                for (const auto& b : right) {
                    ++total;
                    long expected = (qp && a.sector == b.sector && a.index == b.index) ? 1 : 0;
                    Symbol want(n, RationalFunction(expected));
                    std::string label = "[" + a.name() + "," + b.name() + "]";

                    Symbol ub = universal_bracket(mech(a), mech(b));
                    if (!(ub == want)) note(bad_universal, "universal " + label + ": " + mismatch(ub.to_string(), want.to_string()));

                    Symbol cc = cc_bracket(project_cc(mechanise_universal(ClassicalPolynomial(classical(a)))).symbol(),
                                           project_cc(mechanise_universal(ClassicalPolynomial(classical(b)))).symbol());
                    if (!(cc == want)) note(bad_cc, "cc " + label + ": " + mismatch(cc.to_string(), want.to_string()));

                    JetObservable qc = qc_bracket(mech(a), mech(b));
                    JetObservable want_jet{want, Symbol(n)};
                    if (!(qc == want_jet)) note(bad_qc, "qc " + label + ": " + mismatch(to_string(qc), to_string(want_jet)));
                }
            }
        };
        rec.guarded("canonical n=" + std::to_string(n), [&] {
            pairs(qs, ps, true);
            pairs(qs, qs, false);
            pairs(ps, ps, false);
            std::string tag = " n=" + std::to_string(n) + " (" + std::to_string(total) + " pairs)";
            rec.check("universal bracket canonical relations" + tag, bad_universal == 0, first_failure);
            rec.check("cc bracket canonical relations" + tag, bad_cc == 0, first_failure);
            rec.check("qc bracket canonical relations" + tag, bad_qc == 0, first_failure);
        });
    }
    return rec.finish();
}

// --- lemma1 ----------------------------------------------------------------

SuiteReport suite_lemma1(std::uint64_t seed) {
    Recorder rec("lemma1");
    std::mt19937_64 rng(seed);
    const RandomSymbolSpec spec{1, 4, 3, true};
    const int trials = 100;
    int bilinear = 0, antisym = 0, leibniz = 0, jacobi = 0;
    std::string detail;
    rec.guarded("lemma1 random triples", [&] {
        std::uniform_int_distribution<long> small(-4, 4);
        for (int t = 0; t < trials; ++t) {
            Symbol a = random_symbol(rng, spec);
            Symbol b = random_symbol(rng, spec);
            Symbol c = random_symbol(rng, spec);
            RationalFunction alpha(Rational(small(rng), 1));
            RationalFunction beta = RationalFunction(Rational(small(rng), 3)) + RationalFunction::variable(Hbar::h2);

            Symbol ab = universal_bracket(a, b);
            Symbol ac = universal_bracket(a, c);
            Symbol bc = universal_bracket(b, c);

            if (universal_bracket(a * alpha + b * beta, c) == universal_bracket(a, c) * alpha + bc * beta &&
                universal_bracket(c, a * alpha + b * beta) == universal_bracket(c, a) * alpha + universal_bracket(c, b) * beta)
                ++bilinear;
            else if (detail.empty())
                detail = "bilinearity fails at trial " + std::to_string(t);

            if (universal_bracket(b, a) == -ab)
                ++antisym;
            else if (detail.empty())
                detail = "antisymmetry fails at trial " + std::to_string(t);

            if (universal_bracket(a, star(b, c)) == star(ab, c) + star(b, ac))
                ++leibniz;
            else if (detail.empty())
                detail = "Leibniz fails at trial " + std::to_string(t);

            if ((universal_bracket(ab, c) + universal_bracket(bc, a) + universal_bracket(universal_bracket(c, a), b))
                    .is_zero())
                ++jacobi;
            else if (detail.empty())
                detail = "Jacobi fails at trial " + std::to_string(t);
        }
    });
    auto tally = [&](const std::string& name, int ok) {
        rec.check(name + " (" + std::to_string(ok) + "/" + std::to_string(trials) + " triples, degree <= 4)",
                  ok == trials, detail);
    };
    tally("bilinearity", bilinear);
    tally("antisymmetry", antisym);
    tally("Leibniz over star", leibniz);
    tally("Jacobi identity", jacobi);
    return rec.finish();
}

// --- poisson-limit ---------------------------------------------------------

SuiteReport suite_poisson_limit() {
    Recorder rec("poisson-limit");
    const unsigned max_total = 5;
    auto monos = all_monomials(1, max_total);
    for (Hbar h : {Hbar::h1, Hbar::h2}) {
        int sector = h == Hbar::h1 ? 1 : 2;
        std::size_t pairs = 0, bad = 0;
        std::string detail;
        rec.guarded("poisson limit", [&] {
            for (const auto& ma : monos) {
                for (const auto& mb : monos) {
                    if (ma.total_degree() + mb.total_degree() > max_total) continue;
                    ++pairs;
                    Symbol a = Symbol::term(ma, 1);
                    Symbol b = Symbol::term(mb, 1);
                    Symbol limit = moyal_bracket(a, b, h).substitute(h, GaussianRational());
                    Symbol pb = poisson_bracket(a, b, {sector});
                    if (!(limit == pb)) {
                        ++bad;
                        if (detail.empty())
                            detail = "{" + a.to_string() + ", " + b.to_string() + "}: " +
                                     mismatch(limit.to_string(), pb.to_string());
                    }
                }
            }
        });
        rec.check(std::string("Moyal(") + (h == Hbar::h1 ? "h1" : "h2") + ") at h=0 equals Poisson, " +
                      std::to_string(pairs) + " monomial pairs of total degree <= 5",
                  bad == 0 && pairs > 0, detail);
    }
    return rec.finish();
}

// --- star-oracle -----------------------------------------------------------

SuiteReport suite_star_oracle() {
    Recorder rec("star-oracle");
    const unsigned max_total = 6;
    auto monos = all_monomials(1, max_total);
    std::size_t pairs = 0, bad = 0;
    std::string detail;
    rec.guarded("star oracle", [&] {
        for (const auto& ma : monos) {
            for (const auto& mb : monos) {
                if (ma.total_degree() + mb.total_degree() > max_total) continue;
                ++pairs;
                if (!oracle_star_check(ma, mb, StarConfig::universal())) {
                    ++bad;
                    if (detail.empty()) detail = "mismatch for (" + ma.to_string() + ", " + mb.to_string() + ")";
                }
            }
        }
    });
    rec.check("Weyl(a*b) = Weyl(a) Weyl(b) for " + std::to_string(pairs) + " monomial pairs of total degree <= 6",
              bad == 0 && pairs > 0, detail);
    return rec.finish();
}

// --- rotation --------------------------------------------------------------

/// k-th derivative at 0 of cos and sin.
long cos_d(unsigned k) { return k % 4 == 0 ? 1 : (k % 4 == 2 ? -1 : 0); }
long sin_d(unsigned k) { return k % 4 == 1 ? 1 : (k % 4 == 3 ? -1 : 0); }

/// Taylor coefficients of cos t * x + sin t * y.
std::vector<Symbol> rotation_series(const Symbol& x, const Symbol& y, unsigned order) {
    std::vector<Symbol> out;
    for (unsigned k = 0; k <= order; ++k) out.push_back(x * RationalFunction(cos_d(k)) + y * RationalFunction(sin_d(k)));
    return out;
}

SuiteReport suite_rotation() {
    Recorder rec("rotation");
    const unsigned order = 8;
    const Symbol H = rotation_hamiltonian();
    auto sym = [](const char* text) { return parse_symbol(text, 1); };

    // Classical matrices: q1(t) = cos q1 + sin q2, q2(t) = -sin q1 + cos q2, and the same for p.
    struct Case {
        const char* name;
        Symbol f, x, y;
    };
    std::vector<Case> classical{{"q1", sym("q1"), sym("q1"), sym("q2")},
                                {"q2", sym("q2"), sym("q2"), sym("-q1")},
                                {"p1", sym("p1"), sym("p1"), sym("p2")},
                                {"p2", sym("p2"), sym("p2"), sym("-p1")}};
    for (const auto& c : classical) {
        rec.guarded(std::string("cc rotation ") + c.name, [&] {
            auto series = evolve_taylor(Sector::cc, H, c.f, order);
            bool ok = series.coeffs == rotation_series(c.x, c.y, order);
            rec.check(std::string("cc evolution of ") + c.name + " matches cos/sin Taylor coefficients to order 8", ok,
                      ok ? "" : "coefficient mismatch");
        });
    }

    rec.guarded("cc numeric trajectory", [&] {
        auto series = evolve_taylor(Sector::cc, H, sym("q1"), order);
        PhasePoint at_q1, at_q2;
        at_q1.values[{1, Kind::q, 1}] = 1;
        at_q2.values[{2, Kind::q, 1}] = 1;
        auto cos_row = trajectory_numeric(series, at_q1, 0, 0, {Rational(1)});
        auto sin_row = trajectory_numeric(series, at_q2, 0, 0, {Rational(1)});
        double ec = std::abs(to_double(cos_row[0].value).re - std::cos(1.0));
        double es = std::abs(to_double(sin_row[0].value).re - std::sin(1.0));
        rec.check("q1(1) within 3e-5 of cos(1) and sin(1) (order 8)", ec < 3e-5 && es < 3e-5,
                  "errors " + std::to_string(ec) + ", " + std::to_string(es));
    });

    const RationalFunction& l1 = lambda_factor(1);
    const RationalFunction& l2 = lambda_factor(2);
    const Symbol Hm = mechanise(H);

    rec.guarded("universal rotation p1", [&] {
        auto series = evolve_taylor(Sector::universal, Hm, mechanise(sym("p1")), order);
        bool cycle = series.coeffs == rotation_series(sym("p1") * l1, sym("p2") * l2, order);
        rec.check("universal evolution of mechanised p1 cycles L1 p1 -> L2 p2 -> -L1 p1 -> -L2 p2", cycle);

        // Divide by L1: p1(t) = cos t p1 + (h1/h2) sin t p2.
        RationalFunction ratio = parse_coefficient("h1/h2");
        std::vector<Symbol> normalised;
        for (const auto& c : series.coeffs) normalised.push_back(c * l1.inverse());
        bool ratio_ok = normalised == rotation_series(sym("p1"), sym("p2") * ratio, order);
        rec.check("p1(t) = cos t p1(0) + (h1/h2) sin t p2(0) exactly", ratio_ok);

        // At h1 = h2 the normalised series is the classical one.
        std::vector<Symbol> equal_h;
        for (const auto& c : normalised) equal_h.push_back(c.substitute(Hbar::h2, GaussianRational(1)).substitute(Hbar::h1, GaussianRational(1)));
        auto classical_series = evolve_taylor(Sector::cc, H, sym("p1"), order);
        rec.check("at h1 = h2 the momentum dynamics coincide with the classical matrix",
                  equal_h == classical_series.coeffs);
    });

    rec.guarded("universal rotation p2", [&] {
        auto series = evolve_taylor(Sector::universal, Hm, mechanise(sym("p2")), order);
        bool cycle = series.coeffs == rotation_series(sym("p2") * l2, sym("-p1") * l1, order);
        rec.check("universal evolution of mechanised p2: h1 p2(t) = -h2 sin t p1(0) + h1 cos t p2(0)", cycle);
    });

    rec.guarded("universal rotation q", [&] {
        auto s1 = evolve_taylor(Sector::universal, Hm, sym("q1"), order);
        auto s2 = evolve_taylor(Sector::universal, Hm, sym("q2"), order);
        bool ok = s1.coeffs == rotation_series(sym("q1"), sym("q2"), order) &&
                  s2.coeffs == rotation_series(sym("q2"), sym("-q1"), order);
        rec.check("universal evolution of q1, q2 is the classical rotation", ok);
    });

    rec.guarded("qq numeric ratio", [&] {
        EvolveOptions opts;
        opts.h1 = 2;
        opts.h2 = 1;
        auto series = evolve_taylor(Sector::qq, Hm, mechanise(sym("p1")), 2, opts);
        // Slope of p1 relative to its own scale L1: (L2/L1) p2 = (h1/h2) p2 = 2 p2.
        Symbol slope = series.coeffs[1] * series.coeffs[0].coefficient(Monomial::variable(1, {1, Kind::p, 1})).inverse();
        rec.check("qq at h1=2, h2=1: p1 slope is 2 p2(0)", slope == sym("2*p2"), slope.to_string());
    });
    return rec.finish();
}

// --- qc-example ------------------------------------------------------------

SuiteReport suite_qc_example(std::uint64_t seed) {
    Recorder rec("qc-example");
    auto sym = [](const char* text) { return parse_symbol(text, 1); };
    const Symbol H = mechanise(rotation_hamiltonian());
    const Symbol Q1 = mechanise(sym("q1"));
    const Symbol Q2 = mechanise(sym("q2"));
    const Symbol P1 = mechanise(sym("p1"));
    const Symbol P2 = mechanise(sym("p2"));
    auto jet_of = [&](const char* value, const char* deriv) { return JetObservable{sym(value), sym(deriv)}; };
    auto expect_jet = [&](const std::string& name, const JetObservable& got, const JetObservable& want) {
        rec.check(name, got == want, got == want ? "" : mismatch(to_string(got), to_string(want)));
    };

    rec.guarded("aleksandrov(H, Q1)", [&] {
        Symbol a = aleksandrov_bracket(jet(H), jet(Q1));
        rec.check("Aleksandrov bracket of H with Q1 vanishes", a.is_zero(), a.to_string());
    });
    rec.guarded("qc(H, Q1)", [&] { expect_jet("qc(H, Q1) = (q2, 0)", qc_bracket(H, Q1), jet_of("q2", "0")); });
    rec.guarded("qc(H, Q2)", [&] { expect_jet("qc(H, Q2) = (-q1, 0)", qc_bracket(H, Q2), jet_of("-q1", "0")); });
    rec.guarded("qc(H, P1)", [&] {
        JetObservable got = qc_bracket(H, P1);
        expect_jet("qc(H, P1) = (p2, -(1/h) p2)", got, jet_of("p2", "-1/h*p2"));
        expect_jet("qc(H, P1) = jet(mechanised p2)", got, jet(P2));
    });
    rec.guarded("qc(H, P2)", [&] {
        JetObservable got = qc_bracket(H, P2);
        expect_jet("qc(H, P2) = (0, -(1/h) p1)", got, jet_of("0", "-1/h*p1"));
        JetObservable p1 = jet(P1);
        expect_jet("qc(H, P2) = -jet(mechanised p1)", got, JetObservable{-p1.value, -p1.derivative});
    });
    rec.guarded("third term", [&] {
        Symbol t1 = qc_third_term(H, Q1);
        rec.check("analytic term of qc(H, Q1) is q2", t1 == sym("q2"), t1.to_string());
        Symbol t2 = qc_third_term(H, Q2);
        rec.check("analytic term of qc(H, Q2) is 0", t2.is_zero(), t2.to_string());
    });
    rec.guarded("qc momentum dynamics", [&] {
        auto jets = evolve_qc_jet(H, P1, 4);
        std::vector<JetObservable> want{jet_of("0", "1/h*p1"), jet_of("p2", "-1/h*p2"), jet_of("0", "-1/h*p1"),
                                        jet_of("-p2", "1/h*p2"), jet_of("0", "1/h*p1")};
        rec.check("qc evolution of P1 follows the jet cycle", jets == want);
    });

    rec.guarded("pole detection", [&] {
        Symbol ub = universal_bracket(sym("q1"), sym("p1"));
        rec.check("UB(q1, p1) = 1 + h1/h2", ub == sym("1 + h1/h2"), ub.to_string());
        bool raised = false;
        try {
            (void)qc_bracket(sym("q1"), sym("p1"));
        } catch (const PoleAtClassicalLimit&) {
            raised = true;
        }
        rec.check("qc(q1, p1) on un-mechanised symbols reports PoleAtClassicalLimit", raised);
    });

    rec.guarded("qc Jacobi", [&] {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        const RandomSymbolSpec spec{1, 3, 3, false};
        const int trials = 50;
        int ok = 0;
        for (int t = 0; t < trials; ++t) {
            Symbol a = mechanise(random_symbol(rng, spec));
            Symbol b = mechanise(random_symbol(rng, spec));
            Symbol c = mechanise(random_symbol(rng, spec));
            Symbol sum = universal_bracket(universal_bracket(a, b), c) + universal_bracket(universal_bracket(b, c), a) +
                         universal_bracket(universal_bracket(c, a), b);
            JetObservable j = jet(sum);
            if (j.value.is_zero() && j.derivative.is_zero()) ++ok;
        }
        rec.check("jet of the Jacobi sum vanishes on " + std::to_string(ok) + "/" + std::to_string(trials) +
                      " mechanised triples (degree <= 3)",
                  ok == trials);
    });
    return rec.finish();
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "canonical") return suite_canonical();
    if (name == "lemma1") return suite_lemma1(seed);
    if (name == "poisson-limit") return suite_poisson_limit();
    if (name == "star-oracle") return suite_star_oracle();
    if (name == "rotation") return suite_rotation();
    if (name == "qc-example") return suite_qc_example(seed);
    throw InputError("unknown verification suite '" + name + "'");
}

}  // namespace pmech
