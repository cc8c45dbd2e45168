#pragma once

/**
 * Independent check of the star product through the noncommutative Weyl algebra.
 *
 * Elements are stored normally ordered: per degree of freedom every q-hat
 * stands left of every p-hat. Products are normal-ordered by rewriting
 * p q -> q p - i h letter by letter, and Weyl quantisation averages all
 * distinct interleavings of the letters of a monomial. Neither step uses
 * the bidifferential series of star.hpp.
 */

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pmech/star.hpp"

namespace pmech {

/// q^a p^b exponents per degree of freedom; dof k < n is sector 1 index k+1,
/// dof k >= n is sector 2 index k-n+1.
using NCWord = std::vector<std::pair<std::uint16_t, std::uint16_t>>;

class NCElement {
public:
    NCElement(unsigned n, StarConfig cfg) : n_(n), cfg_(cfg) {}
    static NCElement scalar(unsigned n, StarConfig cfg, const RationalFunction& c);

    unsigned n() const noexcept { return n_; }
    StarConfig config() const noexcept { return cfg_; }
    const std::map<NCWord, RationalFunction>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const NCWord& w, const RationalFunction& c);

    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    NCElement& operator*=(const RationalFunction& c);
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend bool operator==(const NCElement& a, const NCElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Formal adjoint: conjugate coefficients and reverse every word, then normal-order.
    NCElement adjoint() const;

    std::string to_string() const;

private:
    unsigned n_;
    StarConfig cfg_;
    std::map<NCWord, RationalFunction> terms_;
};

/// Normal ordering of a raw word of letters 'q'/'p' for one degree of freedom,
/// as a map (a, b) -> coefficient polynomial in `hbar`. The leftmost-first
/// strategy is memoised; passing an engine picks a random "pq" site at each step.
using DofNormalForm = std::map<std::pair<std::uint16_t, std::uint16_t>, HPolynomial>;
DofNormalForm normal_order(const std::string& letters, Hbar hbar, bool quantum);
DofNormalForm normal_order_random(const std::string& letters, Hbar hbar, bool quantum, std::mt19937_64& rng);

NCElement nc_multiply(const NCElement& a, const NCElement& b);

NCElement weyl_quantize(const Monomial& m, StarConfig cfg);
/// Linear extension to symbols.
NCElement weyl_quantize(const Symbol& s, StarConfig cfg);

/// weyl_quantize(a * b) == weyl_quantize(a) weyl_quantize(b).
bool oracle_star_check(const Monomial& a, const Monomial& b, StarConfig cfg = StarConfig::universal());

}  // namespace pmech
