// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "pmech/expr.hpp"
#include "pmech/verify.hpp"

using namespace pmech;

namespace {

struct Outcome {
    bool passed;
    std::string note;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.passed) ++failures;
    std::ostringstream line;
    line << (o.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    if (!o.note.empty()) line << " (" << o.note << ")";
    line.precision(3);
    line << std::fixed << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
}

/// Checks of a suite whose names satisfy `keep`; fails if none match.
Outcome from_suite(const SuiteReport& r, const std::function<bool(const std::string&)>& keep) {
    std::size_t n = 0, bad = 0;
    std::string first;
    for (const auto& c : r.checks) {
        if (!keep(c.name)) continue;
        ++n;
        if (!c.passed) {
            ++bad;
            if (first.empty()) first = c.name + ": " + c.detail;
        }
    }
    if (n == 0) return {false, "no matching checks"};
    return {bad == 0, bad == 0 ? std::to_string(n) + " checks" : first};
}

bool contains(const std::string& s, const char* part) { return s.find(part) != std::string::npos; }

int pm(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
    args.insert(args.begin(), "pm");
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    if (out) *out = o.str();
    if (err) *err = e.str();
    return code;
}

nlohmann::json golden(const std::string& name) {
    std::ifstream in(std::string(PMECH_GOLDEN_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    return nlohmann::json::parse(in);
}

}  // namespace

int main() {
    const std::string H = "q1*p2-q2*p1";

    report(1, "canonical relations in universal, cc and qc sectors, n <= 2", [] {
        SuiteReport r = run_suite("canonical");
        Outcome o = from_suite(r, [](const std::string&) { return true; });
        if (o.passed && r.seconds >= 1.0) return Outcome{false, "took " + std::to_string(r.seconds) + " s"};
        return o;
    });

    report(2, "bilinearity, antisymmetry, Leibniz and Jacobi on 100 random triples", [] {
        SuiteReport r = run_suite("lemma1");
        Outcome o = from_suite(r, [](const std::string&) { return true; });
        if (o.passed && r.seconds >= 30.0) return Outcome{false, "took " + std::to_string(r.seconds) + " s"};
        return o;
    });

    report(3, "Moyal bracket at h = 0 equals Poisson, total degree <= 5", [] {
        return from_suite(run_suite("poisson-limit"), [](const std::string&) { return true; });
    });

    report(4, "star product against the Weyl word algebra, total degree <= 6", [] {
        return from_suite(run_suite("star-oracle"), [](const std::string&) { return true; });
    });

    const SuiteReport rotation = run_suite("rotation");
    report(5, "classical rotation to order 8 and trajectory at t = 1", [&] {
        return from_suite(rotation, [](const std::string& n) { return n.starts_with("cc ") || n.starts_with("q1(1)"); });
    });

    report(6, "two-Planck-constant rotation of momenta", [&] {
        return from_suite(rotation, [](const std::string& n) {
            return n.starts_with("universal") || n.starts_with("p1(t)") || n.starts_with("at h1 = h2") ||
                   n.starts_with("qq ");
        });
    });

    const SuiteReport qc = run_suite("qc-example");
    report(7, "quantum-classical bracket values on the rotation example", [&] {
        return from_suite(qc, [](const std::string& n) {
            if (contains(n, "PoleAtClassicalLimit")) return false;
            return n.starts_with("qc(") || n.starts_with("Aleksandrov") || n.starts_with("analytic term") ||
                   n.starts_with("qc evolution");
        });
    });

    report(8, "pole at the classical limit for un-mechanised q1, p1", [&] {
        Outcome o = from_suite(qc, [](const std::string& n) { return contains(n, "PoleAtClassicalLimit") || n.starts_with("UB(q1, p1)"); });
        if (!o.passed) return o;
        std::string err;
        int code = pm({"bracket", "--sector", "qc", "--lhs", "q1", "--rhs", "p1"}, nullptr, &err);
        if (code != 3) return Outcome{false, "CLI exit code " + std::to_string(code)};
        if (!contains(err, "pole at h2=0: pair is not quantum-classically admissible"))
            return Outcome{false, "CLI message: " + err};
        return Outcome{true, "CLI exit 3"};
    });

    report(9, "formal Jacobi identity of jets on 50 mechanised triples", [&] {
        return from_suite(qc, [](const std::string& n) { return contains(n, "Jacobi"); });
    });

    report(10, "round trip, golden files and exit codes", [&] {
        std::mt19937_64 rng(default_seed);
        for (int t = 0; t < 200; ++t) {
            RandomSymbolSpec spec{1 + static_cast<unsigned>(t % 2), 4, 4, true};
            Symbol s = random_symbol(rng, spec);
            std::string text = s.to_string();
            if (!(parse_symbol(text, spec.n) == s) || parse_symbol(text, spec.n).to_string() != text)
                return Outcome{false, "round trip failed on " + text};
        }

        std::vector<std::pair<std::vector<std::string>, std::string>> goldens;
        for (std::string f : {"q1", "q2", "p1", "p2"})
            goldens.push_back({{"--output", "json", "evolve", "--sector", "cc", "--hamiltonian", H, "--observable", f,
                                "--order", "8"},
                               "cc_rotation_" + f + ".json"});
        for (std::string f : {"p1", "p2"})
            goldens.push_back({{"--output", "json", "evolve", "--sector", "universal", "--mechanise", "--hamiltonian", H,
                                "--observable", f, "--order", "8"},
                               "universal_rotation_" + f + ".json"});
        for (std::string f : {"q1", "q2", "p1", "p2"})
            goldens.push_back({{"--output", "json", "bracket", "--sector", "qc", "--mechanise", "--lhs", H, "--rhs", f},
                               "qc_rotation_" + f + ".json"});
        goldens.push_back(
            {{"--output", "json", "bracket", "--sector", "qc", "--mechanise", "--lhs", H, "--rhs", "q1", "--breakdown"},
             "qc_breakdown_q1.json"});
        for (const auto& [args, file] : goldens) {
            std::string out;
            if (pm(args, &out) != 0) return Outcome{false, "non-zero exit for " + file};
            if (nlohmann::json::parse(out) != golden(file)) return Outcome{false, "golden mismatch " + file};
        }

        struct Case {
            std::vector<std::string> args;
            int code;
        };
        std::vector<Case> cases{
            {{"bracket", "--lhs", "q1", "--rhs", "p1"}, 0},
            {{"bracket", "--lhs", "q1^-1", "--rhs", "p1"}, 2},
            {{"bracket", "--sector", "qc", "--lhs", "q1", "--rhs", "p1"}, 3},
            {{"mechanise", "q1*p2"}, 0},
            {{"mechanise", "q1 *"}, 2},
            {{"project", "--sector", "qc", "p1"}, 0},
            {{"project", "--sector", "qq", "--h1", "1", "--h2", "-1", "p1"}, 3},
            {{"evolve", "--hamiltonian", H, "--observable", "q1"}, 0},
            {{"evolve", "--hamiltonian", H}, 2},
            {{"evolve", "--sector", "qc", "--hamiltonian", "q1*p1", "--observable", "p1"}, 3},
            {{"table"}, 0},
            {{"table", "--n", "zero"}, 2},
            {{"group", "--op", "mul", "--lhs", "0;1;0", "--rhs", "0;0;1"}, 0},
            {{"group", "--op", "mul", "--lhs", "0;1;0", "--rhs", "0;1,1;0,0"}, 3},
            {{"group", "--op", "mul", "--lhs", "0;1"}, 2},
            {{"verify", "--suite", "canonical"}, 0},
            {{"verify", "--suite", "unknown"}, 2},
        };
        for (const auto& c : cases) {
            int code = pm(c.args);
            if (code != c.code) {
                std::string joined;
                for (const auto& a : c.args) joined += " " + a;
                return Outcome{false, "pm" + joined + " exited " + std::to_string(code)};
            }
        }
        return Outcome{true, "200 symbols, " + std::to_string(goldens.size()) + " golden files, " +
                                 std::to_string(cases.size()) + " exit codes"};
    });

    return failures == 0 ? 0 : 1;
}
