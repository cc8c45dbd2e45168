#include "pmech/mechanise.hpp"

namespace pmech {

const RationalFunction& lambda_factor(int sector) {
    static const RationalFunction sum = RationalFunction::variable(Hbar::h1) + RationalFunction::variable(Hbar::h2);
    static const RationalFunction l1 = RationalFunction::variable(Hbar::h2) / sum;
    static const RationalFunction l2 = RationalFunction::variable(Hbar::h1) / sum;
    return sector == 1 ? l1 : l2;
}

ClassicalPolynomial::ClassicalPolynomial(Symbol s) : symbol_(std::move(s)) {
    if (!symbol_.is_hbar_free()) throw NotClassical("classical polynomial must not depend on h1, h2: " + symbol_.to_string());
}

MechanisedObservable mechanise_universal(const ClassicalPolynomial& f) {
    const Symbol& s = f.symbol();
    const unsigned n = s.n();
    Symbol out(n);
    for (const auto& [m, c] : s.terms()) {
        unsigned p1 = 0, p2 = 0;
        for (unsigned i = 1; i <= n; ++i) {
            p1 += m.exponent({1, Kind::p, static_cast<int>(i)});
            p2 += m.exponent({2, Kind::p, static_cast<int>(i)});
        }
        out.add_term(m, c * lambda_factor(1).pow(p1) * lambda_factor(2).pow(p2));
    }
    return {std::move(out), f};
}

ClassicalPolynomial project_cc(const MechanisedObservable& m) {
    if (m.preimage()) return *m.preimage();
    if (m.symbol().is_hbar_free()) return ClassicalPolynomial(m.symbol());
    throw NoPreimage("observable has no recorded classical preimage: " + m.symbol().to_string());
}

Symbol project_qq(const MechanisedObservable& m, const std::optional<Rational>& h1, const std::optional<Rational>& h2) {
    if ((h1 && sgn(*h1) == 0) || (h2 && sgn(*h2) == 0))
        throw PoleAtEvaluation("quantum-quantum projection needs nonzero Planck constants");
    Symbol s = m.symbol();
    if (h1) s = s.substitute(Hbar::h1, GaussianRational(*h1));
    if (h2) s = s.substitute(Hbar::h2, GaussianRational(*h2));
    return s;
}

JetObservable project_qc(const MechanisedObservable& m) { return jet(m.symbol()); }

}  // namespace pmech
