#pragma once

// JSON and CSV emission for symbols, brackets, evolution series and trajectories.

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "pmech/dynamics.hpp"

namespace pmech {

/// [{"coeff_num": "...", "coeff_den": "...", "monomial": {"q1": 1, ...}}, ...]
nlohmann::json terms_json(const Symbol& s, const HNames& names = {});

/// {"kind": "symbol"|"jet", "terms": [...], "jet_derivative": [...]?}
nlohmann::json result_json(const BracketResult& r);

/// {"sector": ..., "result": result_json(r)}
nlohmann::json bracket_json(Sector sector, const BracketResult& r);

/// {"sector", "hamiltonian", "observable", "order", "coefficients": [result_json...]}
nlohmann::json evolution_json(const EvolutionSeries& series);
nlohmann::json evolution_json(const EvolutionSeries& series, const std::vector<JetObservable>& jets);

/// "t,value_re,value_im" (plus ",deriv_re,deriv_im" when derivatives are present).
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& rows);

/// Names used for quantum-classical jets: h1 prints as "h".
HNames jet_names();

/// "(value, derivative)".
std::string to_string(const JetObservable& j);
std::string to_string(const BracketResult& r);

}  // namespace pmech
