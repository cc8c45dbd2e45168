#pragma once

/**
 * Star products and the bracket family on the double group.
 *
 * The sector star product is the terminating bidifferential series
 *
 *   a * b = sum_k 1/k! (sum_j (i h_j / 2) P_j)^k (a, b),
 *   P_j(f, g) = sum_i d_{q_j,i} f d_{p_j,i} g - d_{p_j,i} f d_{q_j,i} g,
 *
 * where j runs over the quantum sectors; a classical sector contributes
 * only pointwise multiplication. With both sectors quantum and h1, h2 kept
 * formal this is the composition law of p-mechanical observables, and the
 * universal bracket is (1/(i h1) + 1/(i h2)) [a, b]_*.
 */

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "pmech/symbol.hpp"

namespace pmech {

enum class SectorMode : std::uint8_t { quantum, classical };

struct StarConfig {
    SectorMode sector1 = SectorMode::quantum;
    SectorMode sector2 = SectorMode::quantum;

    static constexpr StarConfig universal() { return {SectorMode::quantum, SectorMode::quantum}; }
    static constexpr StarConfig classical() { return {SectorMode::classical, SectorMode::classical}; }
    /// Only sector 1 quantum (h1); sector 2 multiplies pointwise.
    static constexpr StarConfig sector1_only() { return {SectorMode::quantum, SectorMode::classical}; }
    static constexpr StarConfig sector2_only() { return {SectorMode::classical, SectorMode::quantum}; }

    bool quantum(int sector) const { return (sector == 1 ? sector1 : sector2) == SectorMode::quantum; }
};

Symbol star(const Symbol& a, const Symbol& b, StarConfig cfg = StarConfig::universal());

/// a * b - b * a, computed from the odd-order terms of the series only.
Symbol star_commutator(const Symbol& a, const Symbol& b, StarConfig cfg = StarConfig::universal());

/// (1/(i h)) [a, b]_* with only the sector of `hbar` quantum.
Symbol moyal_bracket(const Symbol& a, const Symbol& b, Hbar hbar);

/// Sum over the chosen sectors of d_q a d_p b - d_p a d_q b.
Symbol poisson_bracket(const Symbol& a, const Symbol& b, const std::set<int>& sectors = {1, 2});

/// (h1 + h2)/(i h1 h2), i.e. 1/(i h1) + 1/(i h2).
const RationalFunction& universal_factor();

Symbol universal_bracket(const Symbol& a, const Symbol& b);

/// Universal bracket, optionally specialised at numeric Planck constants.
/// Throws PoleAtEvaluation if a substituted value hits a denominator zero.
Symbol qq_bracket(const Symbol& a, const Symbol& b, const std::optional<Rational>& h1 = std::nullopt,
                  const std::optional<Rational>& h2 = std::nullopt);

/// Poisson bracket over both sectors. Throws NotClassical if a or b mention h1 or h2.
Symbol cc_bracket(const Symbol& a, const Symbol& b);

/// The h2-jet at 0 of the universal bracket. Throws PoleAtClassicalLimit for
/// pairs outside the quantum-classical domain.
JetObservable qc_bracket(const Symbol& a, const Symbol& b);

/// (1/(i h1)) [A, B]_{*1} + (P2*(A, B) - P2*(B, A)) / 2 on the jet values, where
/// *1 is the sector-1 star product and P2*(f, g) = sum_i d_{q2,i} f *1 d_{p2,i} g - d_{p2,i} f *1 d_{q2,i} g.
Symbol aleksandrov_bracket(const JetObservable& a, const JetObservable& b);

/// qc_bracket(a, b).value - aleksandrov_bracket(jet(a), jet(b)): the analytic term.
Symbol qc_third_term(const Symbol& a, const Symbol& b);

/// Every piece of the quantum-classical bracket of one pair.
struct QcBreakdown {
    JetObservable bracket;
    Symbol aleksandrov;
    Symbol third_term;
};
QcBreakdown qc_breakdown(const Symbol& a, const Symbol& b);

/// Representation sectors: formal universal, quantum-quantum, classical-classical, quantum-classical.
enum class Sector : std::uint8_t { universal, qq, cc, qc };

std::string to_string(Sector s);
/// Throws InputError on an unknown name.
Sector parse_sector(const std::string& name);

/// A symbol for every sector except qc, which yields a jet.
struct BracketResult {
    std::variant<Symbol, JetObservable> value;

    bool is_jet() const { return std::holds_alternative<JetObservable>(value); }
    const Symbol& symbol() const { return std::get<Symbol>(value); }
    const JetObservable& jet() const { return std::get<JetObservable>(value); }
};

/// Dispatches to universal_bracket, qq_bracket, cc_bracket or qc_bracket.
BracketResult sector_bracket(Sector sector, const Symbol& a, const Symbol& b,
                             const std::optional<Rational>& h1 = std::nullopt,
                             const std::optional<Rational>& h2 = std::nullopt);

}  // namespace pmech
