#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "pmech/dynamics.hpp"
#include "pmech/errors.hpp"
#include "pmech/expr.hpp"
#include "pmech/heisenberg.hpp"
#include "pmech/io.hpp"
#include "pmech/mechanise.hpp"
#include "pmech/star.hpp"
#include "pmech/verify.hpp"

namespace pmech::cli {

namespace {

enum class Output { text, json, csv };

struct Globals {
    unsigned n = 1;
    std::string output = "text";
};

Output output_of(const Globals& g) {
    if (g.output == "json") return Output::json;
    if (g.output == "csv") return Output::csv;
    return Output::text;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::optional<Rational> optional_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

RationalVector rational_list(const std::string& text) {
    RationalVector out;
    if (text.empty()) return out;
    for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
    return out;
}

HGroupElement parse_h_element(const std::string& text) {
    auto parts = split(text, ';');
    if (parts.size() != 3) throw InputError("group element '" + text + "' must have the form s;x1,..;y1,..");
    return {parse_rational(parts[0]), rational_list(parts[1]), rational_list(parts[2])};
}

DGroupElement parse_d_element(const std::string& text) {
    auto bar = text.find('|');
    return {parse_h_element(text.substr(0, bar)), parse_h_element(text.substr(bar + 1))};
}

VarId parse_variable(const std::string& name, unsigned n) {
    Symbol s = parse_symbol(name, n);
    if (s.terms().size() == 1) {
        const auto& [m, c] = *s.terms().begin();
        if (c.is_one() && m.total_degree() == 1)
            for (std::size_t slot = 0; slot < 4 * static_cast<std::size_t>(n); ++slot)
                if (m[slot] == 1) return VarId::from_slot(slot, n);
    }
    throw InputError("'" + name + "' is not a phase-space variable");
}

PhasePoint parse_point(const std::string& text, unsigned n) {
    PhasePoint point;
    if (text.empty()) return point;
    for (const auto& part : split(text, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw InputError("point entry '" + part + "' must look like q1=1/2");
        point.values[parse_variable(part.substr(0, eq), n)] = parse_rational(part.substr(eq + 1));
    }
    return point;
}

void print_result(std::ostream& out, Output fmt, Sector sector, const BracketResult& r) {
    if (fmt == Output::json)
        out << bracket_json(sector, r).dump(2) << "\n";
    else
        out << to_string(r) << "\n";
}

// --- subcommands -----------------------------------------------------------

struct BracketArgs {
    std::string sector = "universal", lhs, rhs, h1, h2;
    bool mechanise = false;
    bool breakdown = false;
};

int cmd_bracket(const Globals& g, const BracketArgs& a, std::ostream& out) {
    Sector sector = parse_sector(a.sector);
    Symbol lhs = parse_symbol(a.lhs, g.n);
    Symbol rhs = parse_symbol(a.rhs, g.n);
    if (a.mechanise) {
        lhs = mechanise(lhs);
        rhs = mechanise(rhs);
    }
    if (a.breakdown) {
        if (sector != Sector::qc) throw InputError("--breakdown applies to the qc sector only");
        QcBreakdown b = qc_breakdown(lhs, rhs);
        if (output_of(g) == Output::json) {
            nlohmann::json j = bracket_json(sector, BracketResult{b.bracket});
            j["aleksandrov"] = terms_json(b.aleksandrov, jet_names());
            j["third_term"] = terms_json(b.third_term, jet_names());
            out << j.dump(2) << "\n";
        } else {
            out << "bracket     " << to_string(b.bracket) << "\n";
            out << "aleksandrov " << b.aleksandrov.to_string(jet_names()) << "\n";
            out << "third term  " << b.third_term.to_string(jet_names()) << "\n";
        }
        return ok;
    }
    print_result(out, output_of(g), sector,
                 sector_bracket(sector, lhs, rhs, optional_rational(a.h1), optional_rational(a.h2)));
    return ok;
}

int cmd_mechanise(const Globals& g, const std::string& expr, std::ostream& out) {
    Symbol m = mechanise(parse_symbol(expr, g.n));
    print_result(out, output_of(g), Sector::universal, BracketResult{m});
    return ok;
}

struct ProjectArgs {
    std::string sector = "universal", expr, h1, h2;
};

BracketResult project(Sector sector, const MechanisedObservable& m, const std::optional<Rational>& h1,
                      const std::optional<Rational>& h2) {
    switch (sector) {
        case Sector::cc: return {project_cc(m).symbol()};
        case Sector::qq: return {project_qq(m, h1, h2)};
        case Sector::qc: return {project_qc(m)};
        case Sector::universal: break;
    }
    return {m.symbol()};
}

int cmd_project(const Globals& g, const ProjectArgs& a, std::ostream& out) {
    Sector sector = parse_sector(a.sector);
    auto m = mechanise_universal(ClassicalPolynomial(parse_symbol(a.expr, g.n)));
    print_result(out, output_of(g), sector, project(sector, m, optional_rational(a.h1), optional_rational(a.h2)));
    return ok;
}

struct EvolveArgs {
    std::string sector = "universal", hamiltonian, observable, bracket_order = "H-first", at, h1, h2, times;
    unsigned order = 8;
    bool mechanise = false;
};

int cmd_evolve(const Globals& g, const EvolveArgs& a, std::ostream& out) {
    Sector sector = parse_sector(a.sector);
    EvolveOptions opts;
    if (a.bracket_order == "H-first")
        opts.bracket_order = BracketOrder::hamiltonian_first;
    else if (a.bracket_order == "f-first")
        opts.bracket_order = BracketOrder::observable_first;
    else
        throw InputError("--bracket-order must be H-first or f-first");
    opts.h1 = optional_rational(a.h1);
    opts.h2 = optional_rational(a.h2);

    Symbol H = parse_symbol(a.hamiltonian, g.n);
    Symbol f = parse_symbol(a.observable, g.n);
    if (a.mechanise) {
        H = mechanise(H);
        f = mechanise(f);
    }

    EvolutionSeries series = evolve_taylor(sector, H, f, a.order, opts);
    std::vector<JetObservable> jets;
    if (sector == Sector::qc) jets = evolve_qc_jet(H, f, a.order, opts.bracket_order);

    Output fmt = output_of(g);
    if (fmt == Output::csv) {
        if (a.times.empty()) throw InputError("csv output needs --times");
        PhasePoint point = parse_point(a.at, g.n);
        RationalVector times = rational_list(a.times);
        GaussianRational h1(opts.h1.value_or(1)), h2(opts.h2.value_or(1));
        if (sector == Sector::qc)
            write_trajectory_csv(out, trajectory_numeric(jets, point, h1, times));
        else
            write_trajectory_csv(out, trajectory_numeric(series, point, h1, h2, times));
        return ok;
    }
    if (fmt == Output::json) {
        out << (sector == Sector::qc ? evolution_json(series, jets) : evolution_json(series)).dump(2) << "\n";
        return ok;
    }
    for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
        out << "f" << k << " = ";
        if (sector == Sector::qc)
            out << to_string(jets[k]) << "\n";
        else
            out << series.coeffs[k].to_string() << "\n";
    }
    return ok;
}

int cmd_table(const Globals& g, unsigned n, std::ostream& out) {
    if (n == 0) n = g.n;
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::array<std::string, 6>> text;
    text.push_back({"observable", "p-mechanical", "qq", "qc value", "qc jet", "cc"});
    for (int sector = 1; sector <= 2; ++sector) {
        for (Kind kind : {Kind::q, Kind::p}) {
            for (int i = 1; i <= static_cast<int>(n); ++i) {
                VarId v{sector, kind, i};
                auto m = mechanise_universal(ClassicalPolynomial(Symbol::variable(n, v)));
                JetObservable qc = project_qc(m);
                Symbol cc = project_cc(m).symbol();
                std::string label = std::string(kind == Kind::q ? "Q" : "P") + std::to_string(sector) +
                                    (n > 1 ? "_" + std::to_string(i) : "");
                text.push_back({label, m.symbol().to_string(), project_qq(m).to_string(),
                                qc.value.to_string(jet_names()), qc.derivative.to_string(jet_names()), cc.to_string()});
                rows.push_back({{"observable", label},
                                {"qq", terms_json(project_qq(m))},
                                {"qc_value", terms_json(qc.value, jet_names())},
                                {"qc_jet", terms_json(qc.derivative, jet_names())},
                                {"cc", terms_json(cc)}});
            }
        }
    }
    if (output_of(g) == Output::json) {
        out << rows.dump(2) << "\n";
        return ok;
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : text)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : text) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            out << (c + 1 < row.size() ? "  " : "\n");
        }
    }
    return ok;
}

struct GroupArgs {
    std::string op, lhs, rhs, point;
};

int cmd_group(const Globals& g, const GroupArgs& a, std::ostream& out) {
    const bool json = output_of(g) == Output::json;
    if (a.op == "mul") {
        if (a.lhs.empty() || a.rhs.empty()) throw InputError("mul needs --lhs and --rhs");
        bool dn = a.lhs.find('|') != std::string::npos;
        if (dn != (a.rhs.find('|') != std::string::npos))
            throw InputError("cannot multiply an H^n element by a D^n element");
        std::string r = dn ? dn_multiply(parse_d_element(a.lhs), parse_d_element(a.rhs)).to_string()
                           : hn_multiply(parse_h_element(a.lhs), parse_h_element(a.rhs)).to_string();
        if (json)
            out << nlohmann::json{{"op", "mul"}, {"result", r}}.dump(2) << "\n";
        else
            out << r << "\n";
        return ok;
    }
    if (a.op == "coadjoint") {
        if (a.lhs.empty() || a.point.empty()) throw InputError("coadjoint needs --lhs (element) and --point h;q;p");
        auto parts = split(a.point, ';');
        if (parts.size() != 3) throw InputError("point '" + a.point + "' must have the form h;q1,..;p1,..");
        CoadjointPoint f{parse_rational(parts[0]), rational_list(parts[1]), rational_list(parts[2])};
        std::string r = coadjoint(parse_h_element(a.lhs), f).to_string();
        if (json)
            out << nlohmann::json{{"op", "coadjoint"}, {"result", r}}.dump(2) << "\n";
        else
            out << r << "\n";
        return ok;
    }
    if (a.op == "phase") {
        if (a.lhs.empty() || a.point.empty()) throw InputError("phase needs --lhs (element) and --point q;p");
        auto parts = split(a.point, ';');
        if (parts.size() != 2) throw InputError("point '" + a.point + "' must have the form q1,..;p1,..");
        Rational theta = classical_rep_phase(rational_list(parts[0]), rational_list(parts[1]), parse_h_element(a.lhs));
        auto value = phase_value(theta);
        if (json) {
            out << nlohmann::json{{"op", "phase"},
                                  {"theta", to_string(theta)},
                                  {"theta_mod1", to_string(phase_mod1(theta))},
                                  {"value_re", value.real()},
                                  {"value_im", value.imag()}}
                       .dump(2)
                << "\n";
        } else {
            out << "theta " << to_string(theta) << " (mod 1: " << to_string(phase_mod1(theta)) << ")\n";
            out << "value " << value.real() << (value.imag() < 0 ? " - " : " + ") << std::abs(value.imag()) << "i\n";
        }
        return ok;
    }
    throw InputError("unknown group op '" + a.op + "' (expected mul, coadjoint or phase)");
}

int cmd_verify(const Globals& g, const std::string& suite, std::uint64_t seed, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    bool all_passed = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& name : names) {
        SuiteReport r = run_suite(name, seed);
        all_passed = all_passed && r.passed();
        if (output_of(g) == Output::json) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            report.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}});
            continue;
        }
        for (const auto& c : r.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
            if (!c.passed && !c.detail.empty()) out << " [" << c.detail << "]";
            out << "\n";
        }
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << r.seconds;
        out << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed in "
            << secs.str() << " s\n";
    }
    if (output_of(g) == Output::json) out << report.dump(2) << "\n";
    return all_passed ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact p-mechanical brackets, projections and dynamics", "pm"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--n", g.n, "degrees of freedom per sector")->check(CLI::PositiveNumber);
    app.add_option("--output", g.output, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

    BracketArgs ba;
    auto* bracket = app.add_subcommand("bracket", "bracket of two observables in a sector");
    bracket->add_option("--sector", ba.sector, "universal, qq, cc or qc");
    bracket->add_option("--lhs", ba.lhs)->required();
    bracket->add_option("--rhs", ba.rhs)->required();
    bracket->add_flag("--mechanise", ba.mechanise, "mechanise both sides first");
    bracket->add_flag("--breakdown", ba.breakdown, "qc only: split into Aleksandrov and third term");
    bracket->add_option("--h1", ba.h1, "numeric h1 for the qq sector");
    bracket->add_option("--h2", ba.h2, "numeric h2 for the qq sector");

    std::string mech_expr;
    auto* mech = app.add_subcommand("mechanise", "mechanise a classical polynomial");
    mech->add_option("expr", mech_expr)->required();

    ProjectArgs pa;
    auto* proj = app.add_subcommand("project", "sector projection of a mechanised polynomial");
    proj->add_option("--sector", pa.sector);
    proj->add_option("expr", pa.expr)->required();
    proj->add_option("--h1", pa.h1);
    proj->add_option("--h2", pa.h2);

    EvolveArgs ea;
    auto* evolve = app.add_subcommand("evolve", "Taylor-series time evolution");
    evolve->add_option("--sector", ea.sector);
    evolve->add_option("--hamiltonian", ea.hamiltonian)->required();
    evolve->add_option("--observable", ea.observable)->required();
    evolve->add_option("--order", ea.order);
    evolve->add_option("--bracket-order", ea.bracket_order, "H-first or f-first");
    evolve->add_flag("--mechanise", ea.mechanise);
    evolve->add_option("--at", ea.at, "phase point, e.g. q1=1,q2=0");
    evolve->add_option("--h1", ea.h1);
    evolve->add_option("--h2", ea.h2);
    evolve->add_option("--times", ea.times, "comma separated rationals");

    unsigned table_n = 0;
    auto* table = app.add_subcommand("table", "representation table of the generators");
    table->add_option("--n", table_n);

    GroupArgs ga;
    auto* group = app.add_subcommand("group", "Heisenberg and double group operations");
    group->add_option("--op", ga.op)->required()->check(CLI::IsMember({"mul", "coadjoint", "phase"}));
    group->add_option("--lhs", ga.lhs, "element s;x1,..;y1,.. (D^n: g1|g2)");
    group->add_option("--rhs", ga.rhs);
    group->add_option("--point", ga.point);

    std::string suite;
    std::uint64_t seed = default_seed;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--seed", seed);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::Success&) {
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "pm: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (bracket->parsed()) return cmd_bracket(g, ba, out);
        if (mech->parsed()) return cmd_mechanise(g, mech_expr, out);
        if (proj->parsed()) return cmd_project(g, pa, out);
        if (evolve->parsed()) return cmd_evolve(g, ea, out);
        if (table->parsed()) return cmd_table(g, table_n, out);
        if (group->parsed()) return cmd_group(g, ga, out);
        if (verify->parsed()) return cmd_verify(g, suite, seed, out);
    } catch (const InputError& e) {
        err << "pm: " << e.what() << "\n";
        return input_error;
    } catch (const MathError& e) {
        err << "pm: " << e.what() << "\n";
        return math_error;
    }
    return input_error;
}

}  // namespace pmech::cli
