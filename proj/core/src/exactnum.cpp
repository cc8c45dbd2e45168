#include "pmech/exactnum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pmech {

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return InputError("not a rational number: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    std::string body = text.substr(pos);
    if (body.empty()) throw bad();
    Rational r;
    try {
        if (auto dot = body.find('.'); dot != std::string::npos) {
            std::string whole = body.substr(0, dot);
            std::string frac = body.substr(dot + 1);
            if ((whole.empty() && frac.empty()) ||
                !std::all_of(whole.begin(), whole.end(), ::isdigit) ||
                !std::all_of(frac.begin(), frac.end(), ::isdigit))
                throw bad();
            mpz_class scale = 1;
            for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
            mpz_class numer(whole.empty() ? "0" : whole);
            if (!frac.empty()) numer = numer * scale + mpz_class(frac);
            r = Rational(numer, scale);
        } else {
            auto slash = body.find('/');
            std::string n = body.substr(0, slash);
            std::string d = slash == std::string::npos ? "1" : body.substr(slash + 1);
            if (n.empty() || d.empty() || !std::all_of(n.begin(), n.end(), ::isdigit) ||
                !std::all_of(d.begin(), d.end(), ::isdigit))
                throw bad();
            mpz_class dz(d);
            if (dz == 0) throw DivisionByZero("zero denominator in '" + text + "'");
            r = Rational(mpz_class(n), dz);
        }
    } catch (const std::invalid_argument&) {
        throw bad();
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw DivisionByZero();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw DivisionByZero();
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    auto imag_part = [](const Rational& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return v.get_str() + "*i";
    };
    if (sgn(re_) == 0) return imag_part(im_);
    std::string im = imag_part(im_);
    if (im[0] != '-') im = "+" + im;
    return "(" + re_.get_str() + im + ")";
}

// ---------------------------------------------------------------------------
// HPolynomial

namespace {

struct GrlexGreater {
    bool operator()(const HExponent& a, const HExponent& b) const { return grlex_greater(a, b); }
};

using TermMap = std::map<HExponent, GaussianRational, GrlexGreater>;

}  // namespace

HPolynomial from_sorted_terms(std::vector<HPolynomial::Term> terms) {
    HPolynomial p;
    p.terms_ = std::move(terms);
    return p;
}

namespace {

HPolynomial from_map(TermMap&& m) {
    std::vector<HPolynomial::Term> terms;
    terms.reserve(m.size());
    for (auto& [e, c] : m)
        if (!c.is_zero()) terms.emplace_back(e, std::move(c));
    return from_sorted_terms(std::move(terms));
}

}  // namespace

HPolynomial::HPolynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace_back(HExponent{}, std::move(c));
}

HPolynomial HPolynomial::monomial(HExponent e, GaussianRational c) {
    HPolynomial p;
    if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
    return p;
}

HPolynomial HPolynomial::variable(Hbar v) {
    return monomial(v == Hbar::h1 ? HExponent{1, 0} : HExponent{0, 1});
}

bool HPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0);
}

bool HPolynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].first.total() == 0 && terms_[0].second.is_one();
}

GaussianRational HPolynomial::constant_value() const {
    for (const auto& [e, c] : terms_)
        if (e.total() == 0) return c;
    return {};
}

std::uint32_t HPolynomial::degree(Hbar v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Hbar::h1 ? e.h1 : e.h2);
    return d;
}

HPolynomial HPolynomial::operator-() const {
    HPolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

template <bool Subtract>
std::vector<HPolynomial::Term> merge(const std::vector<HPolynomial::Term>& a,
                                     const std::vector<HPolynomial::Term>& b) {
    std::vector<HPolynomial::Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && grlex_greater(ia->first, ib->first))) {
            out.push_back(*ia++);
        } else if (ia == a.end() || grlex_greater(ib->first, ia->first)) {
            out.emplace_back(ib->first, Subtract ? -ib->second : ib->second);
            ++ib;
        } else {
            GaussianRational c = Subtract ? ia->second - ib->second : ia->second + ib->second;
            if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

HPolynomial& HPolynomial::operator+=(const HPolynomial& o) {
    terms_ = merge<false>(terms_, o.terms_);
    return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& o) {
    terms_ = merge<true>(terms_, o.terms_);
    return *this;
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a * b.terms_[0].second;
    if (a.is_constant()) return b * a.terms_[0].second;
    TermMap acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[HExponent{ea.h1 + eb.h1, ea.h2 + eb.h2}] += ca * cb;
    return from_map(std::move(acc));
}

HPolynomial& HPolynomial::operator*=(const HPolynomial& o) { return *this = *this * o; }

HPolynomial& HPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.second *= c;
    return *this;
}

HPolynomial HPolynomial::pow(unsigned e) const {
    HPolynomial result(1);
    HPolynomial base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

HPolynomial HPolynomial::diff(Hbar v) const {
    TermMap acc;
    for (const auto& [e, c] : terms_) {
        std::uint32_t k = v == Hbar::h1 ? e.h1 : e.h2;
        if (k == 0) continue;
        HExponent d = e;
        (v == Hbar::h1 ? d.h1 : d.h2) -= 1;
        acc[d] += c * GaussianRational(static_cast<long>(k));
    }
    return from_map(std::move(acc));
}

HPolynomial HPolynomial::substitute(Hbar v, const GaussianRational& value) const {
    TermMap acc;
    for (const auto& [e, c] : terms_) {
        std::uint32_t k = v == Hbar::h1 ? e.h1 : e.h2;
        GaussianRational f = c;
        for (std::uint32_t j = 0; j < k; ++j) f *= value;
        if (f.is_zero()) continue;
        HExponent r = e;
        (v == Hbar::h1 ? r.h1 : r.h2) = 0;
        acc[r] += f;
    }
    return from_map(std::move(acc));
}

GaussianRational HPolynomial::evaluate(const GaussianRational& h1, const GaussianRational& h2) const {
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (std::uint32_t j = 0; j < e.h1; ++j) t *= h1;
        for (std::uint32_t j = 0; j < e.h2; ++j) t *= h2;
        sum += t;
    }
    return sum;
}

HPolynomial HPolynomial::divide_exact(const HPolynomial& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (d.is_constant()) return *this * d.terms_[0].second.inverse();
    const auto& [ld, lc] = d.leading_term();
    GaussianRational lc_inv = lc.inverse();
    TermMap quotient;
    HPolynomial rem = *this;
    while (!rem.is_zero()) {
        const auto& [lr, rc] = rem.leading_term();
        if (!ld.divides(lr)) throw std::logic_error("HPolynomial::divide_exact: inexact division");
        HExponent qe{lr.h1 - ld.h1, lr.h2 - ld.h2};
        GaussianRational qc = rc * lc_inv;
        quotient[qe] += qc;
        rem -= monomial(qe, qc) * d;
    }
    return from_map(std::move(quotient));
}

HPolynomial HPolynomial::monic() const {
    if (is_zero() || leading_term().second.is_one()) return *this;
    return *this * leading_term().second.inverse();
}

std::string HPolynomial::to_string(const HNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        auto append = [&](const std::string& name, std::uint32_t k) {
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (k > 1) mono += "^" + std::to_string(k);
        };
        append(names.h1, e.h1);
        append(names.h2, e.h2);
        std::string term;
        if (mono.empty()) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = mono;
        } else if (c == GaussianRational(-1)) {
            term = "-" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcd over Q(i)[h1, h2]
//
// Univariate pieces are dense coefficient vectors in h2 (index = degree); the
// bivariate view is a vector of those indexed by the power of h1. After the
// contents in Q(i)[h2] are split off, the gcd of the primitive parts is found
// by evaluating h2 at integers, taking univariate gcds in h1, and
// interpolating back; the candidate is accepted once it divides both inputs.

namespace {

using UPoly = std::vector<GaussianRational>;
using BPoly = std::vector<UPoly>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

/// Division with remainder over the field Q(i).
std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b) {
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {{}, std::move(a)};
    GaussianRational lc_inv = b.back().inverse();
    UPoly q(a.size() - b.size() + 1);
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        GaussianRational c = a.back() * lc_inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a.back() = GaussianRational();  // cancelled exactly
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

UPoly u_monic(UPoly p) {
    if (p.empty() || p.back().is_one()) return p;
    GaussianRational inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly u_gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = u_divmod(std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return u_monic(std::move(a));
}

UPoly u_exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = u_divmod(a, b);
    if (!r.empty()) throw std::logic_error("gcd: inexact univariate division");
    return q;
}

UPoly b_content(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = g.empty() ? u_monic(c) : u_gcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

BPoly b_primitive(BPoly p) {
    UPoly c = b_content(p);
    if (c.size() <= 1) {
        // Unit content: still normalise the leading coefficient scale.
        if (c.size() == 1 && !c[0].is_one())
            for (auto& coeff : p)
                for (auto& x : coeff) x /= c[0];
        return p;
    }
    for (auto& coeff : p)
        if (!coeff.empty()) coeff = u_exact_div(coeff, c);
    return p;
}

GaussianRational u_eval(const UPoly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Evaluates h2 = x, leaving a polynomial in h1.
UPoly b_eval_h2(const BPoly& p, const GaussianRational& x) {
    UPoly out(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) out[a] = u_eval(p[a], x);
    trim(out);
    return out;
}

std::size_t b_degree_h2(const BPoly& p) {
    std::size_t d = 0;
    for (const auto& row : p)
        if (!row.empty()) d = std::max(d, row.size() - 1);
    return d;
}

/// Newton interpolation through (xs[j], ys[j]).
UPoly u_interpolate(const std::vector<GaussianRational>& xs, std::vector<GaussianRational> ys) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    UPoly out{ys[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        out = u_mul(out, UPoly{-xs[i], GaussianRational(1)});
        if (out.empty()) out.resize(1);
        out[0] += ys[i];
    }
    trim(out);
    return out;
}

BPoly to_bpoly(const HPolynomial& p) {
    BPoly out(p.degree(Hbar::h1) + 1);
    for (const auto& [e, c] : p.terms()) {
        auto& row = out[e.h1];
        if (row.size() <= e.h2) row.resize(e.h2 + 1);
        row[e.h2] = c;
    }
    for (auto& row : out) trim(row);
    trim(out);
    return out;
}

HPolynomial from_bpoly(const BPoly& p) {
    HPolynomial out;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p[a].size(); ++b)
            if (!p[a][b].is_zero())
                out += HPolynomial::monomial(HExponent{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                                             p[a][b]);
    return out;
}

HExponent min_exponent(const HPolynomial& p) {
    HExponent m{UINT32_MAX, UINT32_MAX};
    for (const auto& [e, c] : p.terms()) {
        m.h1 = std::min(m.h1, e.h1);
        m.h2 = std::min(m.h2, e.h2);
    }
    return m;
}

bool divides(const HPolynomial& d, const HPolynomial& p) {
    try {
        (void)p.divide_exact(d);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

/// gcd of two polynomials that are primitive over Q(i)[h2] and of positive degree in h1.
BPoly primitive_gcd(const BPoly& pa, const BPoly& pb) {
    const UPoly gamma = u_gcd(pa.back(), pb.back());
    const std::size_t bound = std::min(b_degree_h2(pa), b_degree_h2(pb)) + gamma.size() - 1;
    const HPolynomial a = from_bpoly(pa), b = from_bpoly(pb);

    std::size_t best = SIZE_MAX;
    std::vector<GaussianRational> xs;
    std::vector<UPoly> images;
    for (long k = 1; k < 100000; ++k) {
        GaussianRational x(k);
        if (u_eval(pa.back(), x).is_zero() || u_eval(pb.back(), x).is_zero()) continue;
        UPoly gk = u_gcd(b_eval_h2(pa, x), b_eval_h2(pb, x));
        if (gk.size() == 1) return BPoly{UPoly{GaussianRational(1)}};
        if (gk.size() > best) continue;  // unlucky point
        if (gk.size() < best) {
            best = gk.size();
            xs.clear();
            images.clear();
        }
        GaussianRational scale = u_eval(gamma, x);
        for (auto& c : gk) c *= scale;
        xs.push_back(x);
        images.push_back(std::move(gk));
        if (xs.size() <= bound) continue;

        BPoly cand(best);
        for (std::size_t e = 0; e < best; ++e) {
            std::vector<GaussianRational> ys;
            for (const auto& img : images) ys.push_back(img[e]);
            cand[e] = u_interpolate(xs, std::move(ys));
        }
        trim(cand);
        cand = b_primitive(std::move(cand));
        HPolynomial c = from_bpoly(cand);
        if (divides(c, a) && divides(c, b)) return cand;
    }
    throw std::logic_error("gcd: interpolation did not converge");
}

}  // namespace

HPolynomial gcd(const HPolynomial& a, const HPolynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return HPolynomial(1);

    HExponent ma = min_exponent(a);
    HExponent mb = min_exponent(b);
    HExponent common{std::min(ma.h1, mb.h1), std::min(ma.h2, mb.h2)};
    HPolynomial mono = HPolynomial::monomial(common);
    if (a.is_monomial() || b.is_monomial()) return mono;

    HPolynomial ra = a.divide_exact(HPolynomial::monomial(ma));
    HPolynomial rb = b.divide_exact(HPolynomial::monomial(mb));
    if (ra.is_constant() || rb.is_constant()) return mono;

    BPoly pa = to_bpoly(ra);
    BPoly pb = to_bpoly(rb);
    UPoly content = u_gcd(b_content(pa), b_content(pb));
    pa = b_primitive(std::move(pa));
    pb = b_primitive(std::move(pb));

    BPoly g{UPoly{GaussianRational(1)}};
    if (pa.size() > 1 && pb.size() > 1) g = primitive_gcd(pa, pb);
    for (auto& row : g) row = u_mul(row, content);
    trim(g);
    return (from_bpoly(g) * mono).monic();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(HPolynomial p) : num_(std::move(p)), den_(1) {}

RationalFunction::RationalFunction(HPolynomial num, HPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

void RationalFunction::reduce() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = HPolynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        HPolynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    const GaussianRational& lc = den_.leading_term().second;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    // Henrici: with g = gcd(b, d), a/b + c/d = t/(b/g * d) where only gcd(t, g) can cancel.
    HPolynomial g = gcd(den_, o.den_);
    HPolynomial b_g = den_.divide_exact(g);
    HPolynomial d_g = o.den_.divide_exact(g);
    HPolynomial t = num_ * d_g + o.num_ * b_g;
    if (t.is_zero()) return *this = RationalFunction();
    HPolynomial h = gcd(t, g);
    num_ = t.divide_exact(h);
    den_ = b_g * o.den_.divide_exact(h);
    const GaussianRational& lc = den_.leading_term().second;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    // Cross-cancel; both inputs are reduced so the product is reduced.
    HPolynomial g1 = gcd(num_, o.den_);
    HPolynomial g2 = gcd(o.num_, den_);
    HPolynomial n = num_.divide_exact(g1) * o.num_.divide_exact(g2);
    HPolynomial d = den_.divide_exact(g2) * o.den_.divide_exact(g1);
    num_ = std::move(n);
    den_ = std::move(d);
    const GaussianRational& lc = den_.leading_term().second;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return {den_, num_};
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(unsigned e) const {
    RationalFunction result(1);
    RationalFunction base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

RationalFunction RationalFunction::diff(Hbar v) const {
    if (den_.is_one()) return {num_.diff(v)};
    return {num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_};
}

RationalFunction RationalFunction::substitute(Hbar v, const GaussianRational& value) const {
    HPolynomial d = den_.substitute(v, value);
    if (d.is_zero())
        throw PoleAtEvaluation("pole: denominator " + den_.to_string() + " vanishes at " +
                               (v == Hbar::h1 ? "h1=" : "h2=") + value.to_string());
    return {num_.substitute(v, value), std::move(d)};
}

GaussianRational RationalFunction::evaluate(const GaussianRational& h1, const GaussianRational& h2) const {
    GaussianRational d = den_.evaluate(h1, h2);
    if (d.is_zero())
        throw PoleAtEvaluation("pole: denominator " + den_.to_string() + " vanishes at h1=" + h1.to_string() +
                               ", h2=" + h2.to_string());
    return num_.evaluate(h1, h2) / d;
}

namespace {

bool single_factor(const HPolynomial& p) {
    if (!p.is_monomial()) return false;
    const auto& [e, c] = p.leading_term();
    if (e.total() == 0) return c.is_real() && sgn(c.re()) >= 0 && mpz_cmp_ui(c.re().get_den_mpz_t(), 1) == 0;
    return c.is_one() && (e.h1 == 0 || e.h2 == 0);
}

}  // namespace

std::string RationalFunction::to_string(const HNames& names) const {
    std::string n = num_.to_string(names);
    if (den_.is_one()) return n;
    // (-i*h1-i*h2)/(h1*h2) reads better as (h1+h2)/(i*h1*h2)
    bool imaginary = num_.terms().size() > 1 &&
                     std::all_of(num_.terms().begin(), num_.terms().end(),
                                 [](const HPolynomial::Term& t) { return sgn(t.second.re()) == 0; });
    if (imaginary) n = (num_ * GaussianRational::i()).to_string(names);
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string(names);
    if (imaginary)
        d = "(i*" + (single_factor(den_) || den_.is_monomial() ? d : "(" + d + ")") + ")";
    else if (!single_factor(den_))
        d = "(" + d + ")";
    return n + "/" + d;
}

HJet h2_jet(const RationalFunction& a) {
    const GaussianRational zero;
    HPolynomial d0 = a.den().substitute(Hbar::h2, zero);
    if (d0.is_zero())
        throw PoleAtClassicalLimit("pole at h2=0: denominator " + a.den().to_string() + " vanishes");
    HPolynomial n0 = a.num().substitute(Hbar::h2, zero);
    HPolynomial n1 = a.num().diff(Hbar::h2).substitute(Hbar::h2, zero);
    HPolynomial d1 = a.den().diff(Hbar::h2).substitute(Hbar::h2, zero);
    RationalFunction value(n0, d0);
    RationalFunction derivative(n1 * d0 - n0 * d1, d0 * d0);
    return {std::move(value), std::move(derivative)};
}

}  // namespace pmech
