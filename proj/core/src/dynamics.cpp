#include "pmech/dynamics.hpp"

#include "pmech/star.hpp"

namespace pmech {

namespace {

void check_jet(const Symbol& s, std::size_t k) {
    try {
        (void)jet(s);
    } catch (const PoleAtClassicalLimit& e) {
        throw PoleAtClassicalLimit("Taylor coefficient " + std::to_string(k) + ": " + e.what());
    }
}

}  // namespace

EvolutionSeries evolve_taylor(Sector sector, const Symbol& hamiltonian, const Symbol& observable, unsigned order,
                              const EvolveOptions& options) {
    if (sector == Sector::cc && (!hamiltonian.is_hbar_free() || !observable.is_hbar_free()))
        throw NotClassical("classical evolution needs h-free Hamiltonian and observable");
    if (hamiltonian.n() != observable.n()) throw DimensionMismatch("Hamiltonian and observable differ in n");

    EvolutionSeries series{sector, hamiltonian, observable, {}};
    series.coeffs.reserve(order + 1);
    Symbol current = observable;
    for (unsigned k = 0; k <= order; ++k) {
        if (k > 0) {
            Symbol next = sector == Sector::cc ? cc_bracket(hamiltonian, current)
                                               : universal_bracket(hamiltonian, current);
            current = options.bracket_order == BracketOrder::hamiltonian_first ? next : -next;
        }
        if (sector == Sector::qc) check_jet(current, k);
        series.coeffs.push_back(current);
    }
    if (sector == Sector::qq && (options.h1 || options.h2)) {
        if ((options.h1 && sgn(*options.h1) == 0) || (options.h2 && sgn(*options.h2) == 0))
            throw PoleAtEvaluation("quantum-quantum evolution needs nonzero Planck constants");
        for (auto& c : series.coeffs) {
            if (options.h1) c = c.substitute(Hbar::h1, GaussianRational(*options.h1));
            if (options.h2) c = c.substitute(Hbar::h2, GaussianRational(*options.h2));
        }
    }
    return series;
}

std::vector<JetObservable> evolve_qc_jet(const Symbol& hamiltonian, const Symbol& observable, unsigned order,
                                         BracketOrder bracket_order) {
    EvolveOptions opts;
    opts.bracket_order = bracket_order;
    EvolutionSeries series = evolve_taylor(Sector::qc, hamiltonian, observable, order, opts);
    std::vector<JetObservable> jets;
    jets.reserve(series.coeffs.size());
    for (const auto& c : series.coeffs) jets.push_back(jet(c));
    return jets;
}

namespace {

/// sum_k t^k/k! v_k by Horner: (((v_N t/N + v_{N-1}) t/(N-1) + ...) t/1 + v_0.
GaussianRational horner(const std::vector<GaussianRational>& values, const Rational& t) {
    GaussianRational acc;
    for (std::size_t k = values.size(); k-- > 0;) {
        acc += values[k];
        if (k > 0) acc *= GaussianRational(t / static_cast<long>(k));
    }
    return acc;
}

}  // namespace

std::vector<TrajectoryPoint> trajectory_numeric(const EvolutionSeries& series, const PhasePoint& point,
                                                const GaussianRational& h1, const GaussianRational& h2,
                                                const std::vector<Rational>& times) {
    std::vector<GaussianRational> values;
    values.reserve(series.coeffs.size());
    for (const auto& c : series.coeffs) values.push_back(c.evaluate(point, h1, h2));
    std::vector<TrajectoryPoint> out;
    for (const auto& t : times) out.push_back({t, horner(values, t), std::nullopt});
    return out;
}

std::vector<TrajectoryPoint> trajectory_numeric(const std::vector<JetObservable>& jets, const PhasePoint& point,
                                                const GaussianRational& hbar, const std::vector<Rational>& times) {
    std::vector<GaussianRational> values, derivs;
    const GaussianRational zero;
    for (const auto& j : jets) {
        values.push_back(j.value.evaluate(point, hbar, zero));
        derivs.push_back(j.derivative.evaluate(point, hbar, zero));
    }
    std::vector<TrajectoryPoint> out;
    for (const auto& t : times) out.push_back({t, horner(values, t), horner(derivs, t)});
    return out;
}

}  // namespace pmech
