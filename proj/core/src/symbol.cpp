#include "pmech/symbol.hpp"

#include <algorithm>
#include <numeric>

namespace pmech {

VarId VarId::from_slot(std::size_t slot, unsigned n) {
    VarId v;
    v.sector = static_cast<int>(slot / (2 * n)) + 1;
    std::size_t rest = slot % (2 * n);
    v.kind = rest < n ? Kind::q : Kind::p;
    v.index = static_cast<int>(rest % n) + 1;
    return v;
}

std::string VarId::name() const {
    std::string s = kind == Kind::q ? "q" : "p";
    s += std::to_string(sector);
    if (index > 1) s += "_" + std::to_string(index);
    return s;
}

Monomial Monomial::variable(unsigned n, VarId v, Exponent power) {
    Monomial m(n);
    m.exps_[v.slot(n)] = power;
    return m;
}

unsigned Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] = static_cast<Monomial::Exponent>(r.exps_[k] + b.exps_[k]);
    return r;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += VarId::from_slot(k, n()).name();
        if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree();
    unsigned db = b.total_degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                        a.exponents().end());
}

// ---------------------------------------------------------------------------

Symbol::Symbol(unsigned n, const RationalFunction& c) : n_(n) {
    if (!c.is_zero()) terms_.emplace(Monomial(n), c);
}

Symbol Symbol::variable(unsigned n, VarId v) {
    if (v.index < 1 || static_cast<unsigned>(v.index) > n || v.sector < 1 || v.sector > 2)
        throw IndexOutOfRange("variable " + v.name() + " out of range for n=" + std::to_string(n));
    return term(Monomial::variable(n, v), RationalFunction(1));
}

Symbol Symbol::term(const Monomial& m, const RationalFunction& c) {
    Symbol s(m.n());
    s.add_term(m, c);
    return s;
}

RationalFunction Symbol::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

unsigned Symbol::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool Symbol::is_hbar_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_hbar_free(); });
}

bool Symbol::depends_on(Hbar v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.second.depends_on(v); });
}

void Symbol::add_term(const Monomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Symbol::check_same_n(const Symbol& o) const {
    if (n_ != o.n_)
        throw DimensionMismatch("symbols have different degrees of freedom: " + std::to_string(n_) + " vs " +
                                std::to_string(o.n_));
}

Symbol Symbol::operator-() const {
    Symbol r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Symbol& Symbol::operator+=(const Symbol& o) {
    check_same_n(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Symbol& Symbol::operator-=(const Symbol& o) {
    check_same_n(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Symbol& Symbol::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Symbol operator*(const Symbol& a, const Symbol& b) {
    a.check_same_n(b);
    Symbol r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Symbol Symbol::pow(unsigned e) const {
    Symbol result(n_, RationalFunction(1));
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
}

Symbol Symbol::diff(VarId v) const {
    std::size_t slot = v.slot(n_);
    Symbol r(n_);
    for (const auto& [m, c] : terms_) {
        auto e = m[slot];
        if (e == 0) continue;
        Monomial d = m;
        d[slot] = static_cast<Monomial::Exponent>(e - 1);
        r.add_term(d, c * RationalFunction(static_cast<long>(e)));
    }
    return r;
}

Symbol Symbol::substitute(Hbar v, const GaussianRational& value) const {
    return map_coefficients([&](const RationalFunction& c) { return c.substitute(v, value); });
}

GaussianRational Symbol::evaluate(const PhasePoint& point, const GaussianRational& h1,
                                  const GaussianRational& h2) const {
    std::vector<Rational> values(4 * static_cast<std::size_t>(n_));
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = point.at(VarId::from_slot(k, n_));
    GaussianRational sum;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c.evaluate(h1, h2);
        Rational mono = 1;
        for (std::size_t k = 0; k < values.size(); ++k)
            for (unsigned j = 0; j < m[k]; ++j) mono *= values[k];
        sum += t * GaussianRational(mono);
    }
    return sum;
}

namespace {

bool is_plain_rational(const RationalFunction& c) { return c.is_constant() && c.num().constant_value().is_real(); }

}  // namespace

std::string Symbol::to_string(const HNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono = m.to_string();
        bool negative = false;
        std::string coeff;
        if (is_plain_rational(c)) {
            Rational r = c.num().constant_value().re();
            negative = sgn(r) < 0;
            if (negative) r = -r;
            if (mono.empty() || r != 1) {
                coeff = r.get_str();
                if (!mono.empty() && mpz_cmp_ui(r.get_den_mpz_t(), 1) != 0) coeff = "(" + coeff + ")";
            }
        } else {
            coeff = c.to_string(names);
            if (coeff[0] == '-' && c.num().is_monomial()) {
                negative = true;
                coeff = (-c).to_string(names);
            }
            if (!mono.empty() || coeff.find_first_of("+-", 1) != std::string::npos) coeff = "(" + coeff + ")";
        }
        std::string term = coeff;
        if (!mono.empty()) term = coeff.empty() ? mono : coeff + "*" + mono;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

// ---------------------------------------------------------------------------

JetObservable jet(const Symbol& a) {
    JetObservable j{Symbol(a.n()), Symbol(a.n())};
    for (const auto& [m, c] : a.terms()) {
        HJet hj;
        try {
            hj = h2_jet(c);
        } catch (const PoleAtClassicalLimit& e) {
            std::string mono = m.is_one() ? "1" : m.to_string();
            throw PoleAtClassicalLimit(std::string(e.what()) + " (coefficient of " + mono + ")");
        }
        j.value.add_term(m, hj.value);
        j.derivative.add_term(m, hj.derivative);
    }
    return j;
}

JetObservable jet_multiply(const JetObservable& a, const JetObservable& b) {
    return {a.value * b.value, a.value * b.derivative + a.derivative * b.value};
}

ComplexValue to_double(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }

}  // namespace pmech
