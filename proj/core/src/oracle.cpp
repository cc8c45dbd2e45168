#include "pmech/oracle.hpp"

#include <mutex>
#include <unordered_map>

namespace pmech {

namespace {

/// -i h as a polynomial in the given Planck constant.
HPolynomial minus_i_hbar(Hbar hbar) { return HPolynomial::variable(hbar) * GaussianRational(Rational(0), Rational(-1)); }

std::pair<std::uint16_t, std::uint16_t> count_letters(const std::string& w) {
    std::uint16_t a = 0, b = 0;
    for (char ch : w) (ch == 'q' ? a : b)++;
    return {a, b};
}

void accumulate(DofNormalForm& into, const DofNormalForm& from, const HPolynomial& factor) {
    for (const auto& [k, v] : from) {
        HPolynomial& slot = into[k];
        slot += v * factor;
        if (slot.is_zero()) into.erase(k);
    }
}

std::string memo_key(const std::string& letters, Hbar hbar, bool quantum) {
    return letters + (hbar == Hbar::h1 ? '1' : '2') + (quantum ? 'Q' : 'C');
}

class NormalOrderCache {
public:
    DofNormalForm get(const std::string& letters, Hbar hbar, bool quantum) {
        std::string key = memo_key(letters, hbar, quantum);
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        DofNormalForm result = compute(letters, hbar, quantum);
        std::lock_guard lock(mutex_);
        cache_.emplace(std::move(key), result);
        return result;
    }

private:
    DofNormalForm compute(const std::string& w, Hbar hbar, bool quantum) {
        auto site = w.find("pq");
        if (site == std::string::npos) return {{count_letters(w), HPolynomial(1)}};
        std::string swapped = w;
        swapped[site] = 'q';
        swapped[site + 1] = 'p';
        DofNormalForm out = get(swapped, hbar, quantum);
        if (quantum) {
            std::string dropped = w.substr(0, site) + w.substr(site + 2);
            accumulate(out, get(dropped, hbar, quantum), minus_i_hbar(hbar));
        }
        return out;
    }

    std::mutex mutex_;
    std::unordered_map<std::string, DofNormalForm> cache_;
};

NormalOrderCache& normal_order_cache() {
    static NormalOrderCache cache;
    return cache;
}

std::string word_letters(std::uint16_t a, std::uint16_t b) { return std::string(a, 'q') + std::string(b, 'p'); }

Hbar dof_hbar(std::size_t dof, unsigned n) { return dof < n ? Hbar::h1 : Hbar::h2; }
bool dof_quantum(std::size_t dof, unsigned n, StarConfig cfg) { return cfg.quantum(dof < n ? 1 : 2); }

/// Combines per-dof normal forms (one per degree of freedom) into an element.
NCElement combine(unsigned n, StarConfig cfg, const std::vector<DofNormalForm>& per_dof, const RationalFunction& scale) {
    struct Partial {
        NCWord word;
        HPolynomial coeff;
    };
    std::vector<Partial> partials{{NCWord(2 * static_cast<std::size_t>(n), {0, 0}), HPolynomial(1)}};
    for (std::size_t dof = 0; dof < per_dof.size(); ++dof) {
        std::vector<Partial> next;
        for (const auto& part : partials) {
            for (const auto& [ab, poly] : per_dof[dof]) {
                Partial p = part;
                p.word[dof] = ab;
                p.coeff *= poly;
                next.push_back(std::move(p));
            }
        }
        partials = std::move(next);
    }
    NCElement out(n, cfg);
    for (auto& p : partials) out.add_term(p.word, scale * RationalFunction(std::move(p.coeff)));
    return out;
}

RationalFunction conjugate(const RationalFunction& c) {
    auto conj_poly = [](const HPolynomial& p) {
        HPolynomial r;
        for (const auto& [e, v] : p.terms()) r += HPolynomial::monomial(e, v.conj());
        return r;
    };
    return {conj_poly(c.num()), conj_poly(c.den())};
}

}  // namespace

DofNormalForm normal_order(const std::string& letters, Hbar hbar, bool quantum) {
    return normal_order_cache().get(letters, hbar, quantum);
}

DofNormalForm normal_order_random(const std::string& w, Hbar hbar, bool quantum, std::mt19937_64& rng) {
    std::vector<std::size_t> sites;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == 'p' && w[k + 1] == 'q') sites.push_back(k);
    if (sites.empty()) return {{count_letters(w), HPolynomial(1)}};
    std::size_t site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    std::string swapped = w;
    swapped[site] = 'q';
    swapped[site + 1] = 'p';
    DofNormalForm out = normal_order_random(swapped, hbar, quantum, rng);
    if (quantum) {
        std::string dropped = w.substr(0, site) + w.substr(site + 2);
        accumulate(out, normal_order_random(dropped, hbar, quantum, rng), minus_i_hbar(hbar));
    }
    return out;
}

// ---------------------------------------------------------------------------

NCElement NCElement::scalar(unsigned n, StarConfig cfg, const RationalFunction& c) {
    NCElement e(n, cfg);
    e.add_term(NCWord(2 * static_cast<std::size_t>(n), {0, 0}), c);
    return e;
}

void NCElement::add_term(const NCWord& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCElement& NCElement::operator+=(const NCElement& o) {
    if (n_ != o.n_) throw DimensionMismatch("NC elements differ in n");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
    if (n_ != o.n_) throw DimensionMismatch("NC elements differ in n");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCElement& NCElement::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

NCElement NCElement::adjoint() const {
    NCElement out(n_, cfg_);
    for (const auto& [w, c] : terms_) {
        std::vector<DofNormalForm> per_dof;
        for (std::size_t dof = 0; dof < w.size(); ++dof) {
            // (q^a p^b)^+ = p^b q^a
            std::string rev = std::string(w[dof].second, 'p') + std::string(w[dof].first, 'q');
            per_dof.push_back(normal_order(rev, dof_hbar(dof, n_), dof_quantum(dof, n_, cfg_)));
        }
        NCElement part = combine(n_, cfg_, per_dof, RationalFunction(1));
        for (const auto& [pw, pc] : part.terms()) out.add_term(pw, conjugate(c) * pc);
    }
    return out;
}

std::string NCElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string word;
        for (std::size_t dof = 0; dof < w.size(); ++dof) {
            int sector = dof < n_ ? 1 : 2;
            int index = static_cast<int>(dof % n_) + 1;
            auto letter = [&](Kind k, std::uint16_t e) {
                if (e == 0) return;
                if (!word.empty()) word += "*";
                word += VarId{sector, k, index}.name();
                if (e > 1) word += "^" + std::to_string(e);
            };
            letter(Kind::q, w[dof].first);
            letter(Kind::p, w[dof].second);
        }
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (!word.empty()) out += "*" + word;
    }
    return out;
}

NCElement nc_multiply(const NCElement& a, const NCElement& b) {
    if (a.n() != b.n()) throw DimensionMismatch("NC elements differ in n");
    const unsigned n = a.n();
    const StarConfig cfg = a.config();
    NCElement out(n, cfg);
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<DofNormalForm> per_dof;
            per_dof.reserve(wa.size());
            for (std::size_t dof = 0; dof < wa.size(); ++dof) {
                std::string letters = word_letters(wa[dof].first, wa[dof].second) +
                                      word_letters(wb[dof].first, wb[dof].second);
                per_dof.push_back(normal_order(letters, dof_hbar(dof, n), dof_quantum(dof, n, cfg)));
            }
            out += combine(n, cfg, per_dof, ca * cb);
        }
    }
    return out;
}

namespace {

DofNormalForm weyl_dof(std::uint16_t a, std::uint16_t b, Hbar hbar, bool quantum) {
    const unsigned len = a + b;
    DofNormalForm sum;
    long count = 0;
    // Every placement of the a q-letters among len positions is one distinct interleaving.
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != a) continue;
        std::string w(len, 'p');
        for (unsigned k = 0; k < len; ++k)
            if (mask & (1u << k)) w[k] = 'q';
        accumulate(sum, normal_order(w, hbar, quantum), HPolynomial(1));
        ++count;
    }
    GaussianRational inv(Rational(1, count));
    for (auto& [k, v] : sum) v *= inv;
    return sum;
}

}  // namespace

NCElement weyl_quantize(const Monomial& m, StarConfig cfg) {
    const unsigned n = m.n();
    std::vector<DofNormalForm> per_dof;
    for (std::size_t dof = 0; dof < 2 * static_cast<std::size_t>(n); ++dof) {
        int sector = dof < n ? 1 : 2;
        int index = static_cast<int>(dof % n) + 1;
        auto a = m.exponent({sector, Kind::q, index});
        auto b = m.exponent({sector, Kind::p, index});
        per_dof.push_back(weyl_dof(a, b, dof_hbar(dof, n), dof_quantum(dof, n, cfg)));
    }
    return combine(n, cfg, per_dof, RationalFunction(1));
}

NCElement weyl_quantize(const Symbol& s, StarConfig cfg) {
    NCElement out(s.n(), cfg);
    for (const auto& [m, c] : s.terms()) {
        NCElement w = weyl_quantize(m, cfg);
        w *= c;
        out += w;
    }
    return out;
}

bool oracle_star_check(const Monomial& a, const Monomial& b, StarConfig cfg) {
    Symbol sa = Symbol::term(a, RationalFunction(1));
    Symbol sb = Symbol::term(b, RationalFunction(1));
    return weyl_quantize(star(sa, sb, cfg), cfg) == nc_multiply(weyl_quantize(a, cfg), weyl_quantize(b, cfg));
}

}  // namespace pmech
