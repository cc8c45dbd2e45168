#include "pmech/star.hpp"

#include <map>

namespace pmech {

namespace {

mpz_class falling(unsigned a, unsigned r) {
    if (r > a) return 0;
    mpz_class f = 1;
    for (unsigned t = 0; t < r; ++t) f *= a - t;
    return f;
}

/// One term of the single-degree-of-freedom expansion: q^qe p^pe with
/// coefficient `coeff` * (i h / 2)^order.
struct DofTerm {
    unsigned qe;
    unsigned pe;
    unsigned order;
    mpq_class coeff;
};

mpz_class factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

/// q^a p^b * q^c p^d for one degree of freedom.
std::vector<DofTerm> dof_star(unsigned a, unsigned b, unsigned c, unsigned d, bool quantum) {
    std::vector<DofTerm> out;
    out.push_back({a + c, b + d, 0, 1});
    if (!quantum) return out;
    unsigned kmax = std::min(a + b, c + d);
    for (unsigned k = 1; k <= kmax; ++k) {
        for (unsigned j = 0; j <= k; ++j) {
            // d_q^{k-j} d_p^j (q^a p^b) * d_q^j d_p^{k-j} (q^c p^d)
            if (k - j > a || j > b || j > c || k - j > d) continue;
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            mpq_class coeff(binom * falling(a, k - j) * falling(b, j) * falling(c, j) * falling(d, k - j),
                            factorial(k));
            coeff.canonicalize();
            if (j % 2 == 1) coeff = -coeff;
            out.push_back({a + c - k, b + d - k, k, coeff});
        }
    }
    return out;
}

/// (i/2)^k
GaussianRational order_factor(unsigned k) {
    GaussianRational f(1);
    for (unsigned m = 1; m <= k; ++m) f *= GaussianRational(Rational(0), Rational(1, 2));
    return f;
}

enum class Parity { all, odd };

/// Sum over term pairs of the bidifferential expansion; `parity == odd` keeps
/// only odd total orders, which is half the star commutator.
Symbol expand(const Symbol& a, const Symbol& b, StarConfig cfg, Parity parity) {
    if (a.n() != b.n())
        throw DimensionMismatch("symbols have different degrees of freedom: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
    const unsigned n = a.n();
    const std::size_t dofs = 2 * static_cast<std::size_t>(n);

    struct Partial {
        Monomial mono;
        std::uint32_t h1 = 0;
        std::uint32_t h2 = 0;
        mpq_class coeff = 1;
        unsigned order = 0;
    };

    Symbol result(n);
    std::map<Monomial, HPolynomial, MonomialOrder> local;
    std::vector<Partial> partials;
    std::vector<Partial> next;

    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            partials.assign(1, Partial{Monomial(n)});
            for (std::size_t dof = 0; dof < dofs; ++dof) {
                int sector = dof < n ? 1 : 2;
                std::size_t idx = dof % n;
                std::size_t qs = static_cast<std::size_t>(sector - 1) * 2 * n + idx;
                std::size_t ps = qs + n;
                unsigned ea = ma[qs], eb = ma[ps], ec = mb[qs], ed = mb[ps];
                if (ea + eb + ec + ed == 0) continue;
                auto pieces = dof_star(ea, eb, ec, ed, cfg.quantum(sector));
                next.clear();
                for (const auto& part : partials) {
                    for (const auto& piece : pieces) {
                        Partial p = part;
                        p.mono[qs] = static_cast<Monomial::Exponent>(piece.qe);
                        p.mono[ps] = static_cast<Monomial::Exponent>(piece.pe);
                        (sector == 1 ? p.h1 : p.h2) += piece.order;
                        p.order += piece.order;
                        p.coeff *= piece.coeff;
                        next.push_back(std::move(p));
                    }
                }
                std::swap(partials, next);
            }
            local.clear();
            for (auto& p : partials) {
                if (parity == Parity::odd && p.order % 2 == 0) continue;
                GaussianRational c = order_factor(p.order) * GaussianRational(p.coeff);
                local[p.mono] += HPolynomial::monomial(HExponent{p.h1, p.h2}, c);
            }
            RationalFunction cab = ca * cb;
            for (auto& [m, poly] : local)
                if (!poly.is_zero()) result.add_term(m, cab * RationalFunction(std::move(poly)));
        }
    }
    return result;
}

}  // namespace

Symbol star(const Symbol& a, const Symbol& b, StarConfig cfg) { return expand(a, b, cfg, Parity::all); }

Symbol star_commutator(const Symbol& a, const Symbol& b, StarConfig cfg) {
    return expand(a, b, cfg, Parity::odd) * RationalFunction(2);
}

Symbol moyal_bracket(const Symbol& a, const Symbol& b, Hbar hbar) {
    StarConfig cfg = hbar == Hbar::h1 ? StarConfig::sector1_only() : StarConfig::sector2_only();
    RationalFunction scale = (RationalFunction::i() * RationalFunction::variable(hbar)).inverse();
    return star_commutator(a, b, cfg) * scale;
}

Symbol poisson_bracket(const Symbol& a, const Symbol& b, const std::set<int>& sectors) {
    if (a.n() != b.n()) throw DimensionMismatch("symbols have different degrees of freedom");
    Symbol out(a.n());
    for (int s : sectors) {
        for (unsigned i = 1; i <= a.n(); ++i) {
            VarId q{s, Kind::q, static_cast<int>(i)};
            VarId p{s, Kind::p, static_cast<int>(i)};
            out += a.diff(q) * b.diff(p) - a.diff(p) * b.diff(q);
        }
    }
    return out;
}

const RationalFunction& universal_factor() {
    static const RationalFunction f = (RationalFunction::i() * RationalFunction::variable(Hbar::h1)).inverse() +
                                      (RationalFunction::i() * RationalFunction::variable(Hbar::h2)).inverse();
    return f;
}

Symbol universal_bracket(const Symbol& a, const Symbol& b) {
    return star_commutator(a, b, StarConfig::universal()) * universal_factor();
}

Symbol qq_bracket(const Symbol& a, const Symbol& b, const std::optional<Rational>& h1,
                  const std::optional<Rational>& h2) {
    if ((h1 && sgn(*h1) == 0) || (h2 && sgn(*h2) == 0))
        throw PoleAtEvaluation("quantum-quantum bracket needs nonzero Planck constants");
    Symbol ub = universal_bracket(a, b);
    if (h1) ub = ub.substitute(Hbar::h1, GaussianRational(*h1));
    if (h2) ub = ub.substitute(Hbar::h2, GaussianRational(*h2));
    return ub;
}

Symbol cc_bracket(const Symbol& a, const Symbol& b) {
    if (!a.is_hbar_free() || !b.is_hbar_free())
        throw NotClassical("classical bracket needs observables free of h1, h2");
    return poisson_bracket(a, b, {1, 2});
}

JetObservable qc_bracket(const Symbol& a, const Symbol& b) {
    try {
        return jet(universal_bracket(a, b));
    } catch (const PoleAtClassicalLimit& e) {
        std::string detail = e.what();
        const std::string prefix = "pole at h2=0: ";
        if (detail.starts_with(prefix)) detail.erase(0, prefix.size());
        throw PoleAtClassicalLimit(prefix + "pair is not quantum-classically admissible; " + detail);
    }
}

Symbol aleksandrov_bracket(const JetObservable& a, const JetObservable& b) {
    const Symbol& A = a.value;
    const Symbol& B = b.value;
    if (A.n() != B.n()) throw DimensionMismatch("jets have different degrees of freedom");
    const StarConfig s1 = StarConfig::sector1_only();
    RationalFunction scale = (RationalFunction::i() * RationalFunction::variable(Hbar::h1)).inverse();
    Symbol out = star_commutator(A, B, s1) * scale;

    auto p2_star = [&](const Symbol& f, const Symbol& g) {
        Symbol acc(f.n());
        for (unsigned i = 1; i <= f.n(); ++i) {
            VarId q{2, Kind::q, static_cast<int>(i)};
            VarId p{2, Kind::p, static_cast<int>(i)};
            acc += star(f.diff(q), g.diff(p), s1) - star(f.diff(p), g.diff(q), s1);
        }
        return acc;
    };
    out += (p2_star(A, B) - p2_star(B, A)) * RationalFunction(Rational(1, 2));
    return out;
}

Symbol qc_third_term(const Symbol& a, const Symbol& b) { return qc_breakdown(a, b).third_term; }

QcBreakdown qc_breakdown(const Symbol& a, const Symbol& b) {
    JetObservable full = qc_bracket(a, b);
    Symbol alek = aleksandrov_bracket(jet(a), jet(b));
    Symbol third = full.value - alek;
    return {std::move(full), std::move(alek), std::move(third)};
}

}  // namespace pmech

namespace pmech {

std::string to_string(Sector s) {
    switch (s) {
        case Sector::universal: return "universal";
        case Sector::qq: return "qq";
        case Sector::cc: return "cc";
        case Sector::qc: return "qc";
    }
    return "?";
}

Sector parse_sector(const std::string& name) {
    if (name == "universal") return Sector::universal;
    if (name == "qq") return Sector::qq;
    if (name == "cc") return Sector::cc;
    if (name == "qc") return Sector::qc;
    throw InputError("unknown sector '" + name + "' (expected qq, cc, qc or universal)");
}

BracketResult sector_bracket(Sector sector, const Symbol& a, const Symbol& b, const std::optional<Rational>& h1,
                             const std::optional<Rational>& h2) {
    switch (sector) {
        case Sector::cc: return {cc_bracket(a, b)};
        case Sector::qq: return {qq_bracket(a, b, h1, h2)};
        case Sector::qc: return {qc_bracket(a, b)};
        case Sector::universal: break;
    }
    return {universal_bracket(a, b)};
}

}  // namespace pmech
