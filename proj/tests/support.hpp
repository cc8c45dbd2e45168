#pragma once

#include <doctest.h>

#include <random>
#include <sstream>

#include "pmech/expr.hpp"
#include "pmech/star.hpp"

namespace pmech::test {

inline Symbol S(std::string_view text, unsigned n = 1) { return parse_symbol(text, n); }
inline RationalFunction C(std::string_view text) { return parse_coefficient(text); }
inline const RationalFunction h1 = RationalFunction::variable(Hbar::h1);
inline const RationalFunction h2 = RationalFunction::variable(Hbar::h2);
inline const RationalFunction I = RationalFunction::i();

inline JetObservable J(std::string_view value, std::string_view derivative, unsigned n = 1) {
    return {S(value, n), S(derivative, n)};
}

/// Random rational function of low degree, never zero.
inline RationalFunction random_rf(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> e(0, 2);
    auto poly = [&] {
        HPolynomial p;
        for (int t = 0; t < 3; ++t) {
            GaussianRational z(Rational(c(rng)), Rational(c(rng)));
            p += HPolynomial::monomial(HExponent{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng))}, z);
        }
        return p;
    };
    HPolynomial num = poly(), den = poly();
    if (num.is_zero()) num = HPolynomial(1);
    if (den.is_zero()) den = HPolynomial(1);
    return {num, den};
}

}  // namespace pmech::test

namespace doctest {
template <>
struct StringMaker<pmech::Symbol> {
    static String convert(const pmech::Symbol& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<pmech::RationalFunction> {
    static String convert(const pmech::RationalFunction& r) { return r.to_string().c_str(); }
};
template <>
struct StringMaker<pmech::JetObservable> {
    static String convert(const pmech::JetObservable& j) {
        return ("(" + j.value.to_string() + ", " + j.derivative.to_string() + ")").c_str();
    }
};
template <>
struct StringMaker<pmech::GaussianRational> {
    static String convert(const pmech::GaussianRational& z) { return z.to_string().c_str(); }
};
}  // namespace doctest
