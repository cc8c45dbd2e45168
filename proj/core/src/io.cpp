#include "pmech/io.hpp"

#include <charconv>

namespace pmech {

HNames jet_names() { return {"h", "h2"}; }

nlohmann::json terms_json(const Symbol& s, const HNames& names) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (std::size_t slot = 0; slot < m.exponents().size(); ++slot)
            if (m[slot] > 0) mono[VarId::from_slot(slot, s.n()).name()] = m[slot];
        terms.push_back({{"coeff_num", c.num().to_string(names)},
                         {"coeff_den", c.den().to_string(names)},
                         {"monomial", std::move(mono)}});
    }
    return terms;
}

nlohmann::json result_json(const BracketResult& r) {
    if (r.is_jet()) {
        const HNames names = jet_names();
        return {{"kind", "jet"},
                {"terms", terms_json(r.jet().value, names)},
                {"jet_derivative", terms_json(r.jet().derivative, names)}};
    }
    return {{"kind", "symbol"}, {"terms", terms_json(r.symbol())}};
}

nlohmann::json bracket_json(Sector sector, const BracketResult& r) {
    return {{"sector", to_string(sector)}, {"result", result_json(r)}};
}

nlohmann::json evolution_json(const EvolutionSeries& series) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : series.coeffs) coeffs.push_back(result_json(BracketResult{c}));
    return {{"sector", to_string(series.sector)},
            {"hamiltonian", series.hamiltonian.to_string()},
            {"observable", series.observable.to_string()},
            {"order", series.coeffs.empty() ? 0 : series.coeffs.size() - 1},
            {"coefficients", std::move(coeffs)}};
}

nlohmann::json evolution_json(const EvolutionSeries& series, const std::vector<JetObservable>& jets) {
    nlohmann::json out = evolution_json(series);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& j : jets) coeffs.push_back(result_json(BracketResult{j}));
    out["coefficients"] = std::move(coeffs);
    return out;
}

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& rows) {
    bool with_deriv = !rows.empty() && rows.front().derivative.has_value();
    out << "t,value_re,value_im" << (with_deriv ? ",deriv_re,deriv_im" : "") << "\n";
    for (const auto& row : rows) {
        ComplexValue v = to_double(row.value);
        out << shortest(row.t.get_d()) << "," << shortest(v.re) << "," << shortest(v.im);
        if (with_deriv) {
            ComplexValue d = to_double(row.derivative.value_or(GaussianRational()));
            out << "," << shortest(d.re) << "," << shortest(d.im);
        }
        out << "\n";
    }
}

std::string to_string(const JetObservable& j) {
    const HNames names = jet_names();
    return "(" + j.value.to_string(names) + ", " + j.derivative.to_string(names) + ")";
}

std::string to_string(const BracketResult& r) { return r.is_jet() ? to_string(r.jet()) : r.symbol().to_string(); }

}  // namespace pmech
