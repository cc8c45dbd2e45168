#pragma once

/**
 * Self-verification suites exposed through `pm verify`.
 *
 *   canonical      canonical relations in the universal, cc and qc sectors (n = 1, 2)
 *   lemma1         bilinearity, antisymmetry, Leibniz over *, Jacobi on random triples
 *   poisson-limit  Moyal bracket at h = 0 equals the Poisson bracket
 *   star-oracle    star product against the word-rewriting Weyl algebra
 *   rotation       classical and two-Planck-constant rotation dynamics
 *   qc-example     quantum-classical bracket values, pole detection, formal Jacobi
 */

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pmech/symbol.hpp"

namespace pmech {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
};

const std::vector<std::string>& suite_names();

inline constexpr std::uint64_t default_seed = 20061016;

/// Throws InputError for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = default_seed);

struct RandomSymbolSpec {
    unsigned n = 1;
    unsigned max_degree = 4;
    unsigned max_terms = 4;
    /// When set, coefficients may carry i and powers of h1, h2.
    bool hbar_coefficients = true;
};

Symbol random_symbol(std::mt19937_64& rng, const RandomSymbolSpec& spec);

/// Every monomial in 4n variables of total degree <= max_degree.
std::vector<Monomial> all_monomials(unsigned n, unsigned max_degree);

/// The rotation Hamiltonian q1 p2 - q2 p1 for n = 1.
Symbol rotation_hamiltonian();

}  // namespace pmech
