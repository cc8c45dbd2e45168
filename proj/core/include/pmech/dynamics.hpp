#pragma once

/**
 * Exact time evolution by iterated brackets.
 *
 * The Taylor coefficients of f(t) are f_0 = f, f_{k+1} = B(H, f_k), so
 * f(t) = sum_k t^k/k! f_k. B is the bracket of the chosen sector; the
 * default ordering puts the Hamiltonian first (df/dt = B(H, f)), and
 * BracketOrder::observable_first flips the sign of time.
 */

#include <optional>
#include <string>
#include <vector>

#include "pmech/star.hpp"

namespace pmech {

enum class BracketOrder : std::uint8_t { hamiltonian_first, observable_first };

struct EvolutionSeries {
    Sector sector = Sector::universal;
    Symbol hamiltonian;
    Symbol observable;
    std::vector<Symbol> coeffs;
};

struct EvolveOptions {
    BracketOrder bracket_order = BracketOrder::hamiltonian_first;
    /// Numeric Planck constants for the qq sector; applied to each output coefficient.
    std::optional<Rational> h1;
    std::optional<Rational> h2;
};

/// Throws NotClassical (cc with h-laden input) or PoleAtClassicalLimit (qc,
/// naming the first inadmissible order).
EvolutionSeries evolve_taylor(Sector sector, const Symbol& hamiltonian, const Symbol& observable, unsigned order,
                              const EvolveOptions& options = {});

/// Jets of the formal quantum-classical Taylor coefficients.
std::vector<JetObservable> evolve_qc_jet(const Symbol& hamiltonian, const Symbol& observable, unsigned order,
                                         BracketOrder bracket_order = BracketOrder::hamiltonian_first);

struct TrajectoryPoint {
    Rational t;
    GaussianRational value;
    std::optional<GaussianRational> derivative;
};

/// Horner evaluation of the truncated series sum_k t^k/k! f_k(point) at each time.
std::vector<TrajectoryPoint> trajectory_numeric(const EvolutionSeries& series, const PhasePoint& point,
                                                const GaussianRational& h1, const GaussianRational& h2,
                                                const std::vector<Rational>& times);

/// Same for jet series; `hbar` is the value of h in the jet coefficients.
std::vector<TrajectoryPoint> trajectory_numeric(const std::vector<JetObservable>& jets, const PhasePoint& point,
                                                const GaussianRational& hbar, const std::vector<Rational>& times);

}  // namespace pmech
