#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run pm(std::vector<std::string> args) {
    args.insert(args.begin(), "pm");
    std::ostringstream out, err;
    int code = pmech::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json golden(const std::string& name) {
    std::ifstream in(std::string(PMECH_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), name);
    return nlohmann::json::parse(in);
}

const std::string H = "q1*p2-q2*p1";

}  // namespace

TEST_CASE("documented invocations") {
    Run a = pm({"bracket", "--sector", "qc", "--mechanise", "--lhs", H, "--rhs", "q1"});
    CHECK(a.code == 0);
    CHECK(a.out == "(q2, 0)\n");

    Run b = pm({"verify", "--suite", "canonical"});
    CHECK(b.code == 0);

    Run c = pm({"bracket", "--sector", "qc", "--lhs", "q1", "--rhs", "p1"});
    CHECK(c.code == 3);
    CHECK(c.err.find("pole at h2=0: pair is not quantum-classically admissible") != std::string::npos);
}

TEST_CASE("golden: classical rotation") {
    for (std::string f : {"q1", "q2", "p1", "p2"}) {
        Run r = pm({"--output", "json", "evolve", "--sector", "cc", "--hamiltonian", H, "--observable", f, "--order", "8"});
        REQUIRE(r.code == 0);
        CHECK_MESSAGE(nlohmann::json::parse(r.out) == golden("cc_rotation_" + f + ".json"), f);
    }
}

TEST_CASE("golden: universal rotation") {
    for (std::string f : {"p1", "p2"}) {
        Run r = pm({"--output", "json", "evolve", "--sector", "universal", "--mechanise", "--hamiltonian", H,
                    "--observable", f, "--order", "8"});
        REQUIRE(r.code == 0);
        CHECK_MESSAGE(nlohmann::json::parse(r.out) == golden("universal_rotation_" + f + ".json"), f);
    }
}

TEST_CASE("golden: quantum-classical example") {
    for (std::string f : {"q1", "q2", "p1", "p2"}) {
        Run r = pm({"--output", "json", "bracket", "--sector", "qc", "--mechanise", "--lhs", H, "--rhs", f});
        REQUIRE(r.code == 0);
        CHECK_MESSAGE(nlohmann::json::parse(r.out) == golden("qc_rotation_" + f + ".json"), f);
    }
    Run b = pm({"--output", "json", "bracket", "--sector", "qc", "--mechanise", "--lhs", H, "--rhs", "q1", "--breakdown"});
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out) == golden("qc_breakdown_q1.json"));
    Run s = pm({"--output", "json", "evolve", "--sector", "qc", "--mechanise", "--hamiltonian", H, "--observable", "p1",
                "--order", "4"});
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out) == golden("qc_rotation_series_p1.json"));
}

TEST_CASE("json schema") {
    Run r = pm({"--output", "json", "bracket", "--sector", "universal", "--lhs", "q1", "--rhs", "p1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["sector"] == "universal");
    CHECK(j["result"]["kind"] == "symbol");
    CHECK(!j["result"].contains("jet_derivative"));
    for (const auto& t : j["result"]["terms"]) {
        CHECK(t["coeff_num"].is_string());
        CHECK(t["coeff_den"].is_string());
        CHECK(t["monomial"].is_object());
    }
    // 1 + h1/h2 = (h1+h2)/h2
    CHECK(j["result"]["terms"][0]["coeff_num"] == "h1+h2");
    CHECK(j["result"]["terms"][0]["coeff_den"] == "h2");
}

TEST_CASE("csv trajectories") {
    Run r = pm({"--output", "csv", "evolve", "--sector", "cc", "--hamiltonian", H, "--observable", "q1", "--order", "8",
                "--at", "q1=1", "--times", "0,1"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row0, row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(header == "t,value_re,value_im");
    CHECK(row0 == "0,1,0");
    double v = std::stod(row1.substr(2));
    CHECK(std::abs(v - std::cos(1.0)) < 3e-5);

    Run q = pm({"--output", "csv", "evolve", "--sector", "qc", "--mechanise", "--hamiltonian", H, "--observable", "p1",
                "--order", "3", "--at", "p1=1", "--times", "0"});
    REQUIRE(q.code == 0);
    CHECK(q.out.starts_with("t,value_re,value_im,deriv_re,deriv_im\n0,0,0,1,0\n"));
}

TEST_CASE("exit codes: bracket") {
    CHECK(pm({"bracket", "--lhs", "q1", "--rhs", "p1"}).code == 0);
    CHECK(pm({"bracket", "--lhs", "q1^-1", "--rhs", "p1"}).code == 2);
    CHECK(pm({"bracket", "--lhs", "q1"}).code == 2);
    CHECK(pm({"bracket", "--sector", "xx", "--lhs", "q1", "--rhs", "p1"}).code == 2);
    CHECK(pm({"bracket", "--lhs", "q1_2", "--rhs", "p1"}).code == 2);
    CHECK(pm({"bracket", "--sector", "cc", "--mechanise", "--lhs", "q1", "--rhs", "p1"}).code == 3);
    CHECK(pm({"bracket", "--sector", "qq", "--lhs", "q1", "--rhs", "p1", "--h1", "1", "--h2", "0"}).code == 3);
    CHECK(pm({"bracket", "--sector", "cc", "--lhs", "q1", "--rhs", "p1", "--breakdown"}).code == 2);
}

TEST_CASE("exit codes: mechanise and project") {
    Run m = pm({"mechanise", "p1"});
    CHECK(m.code == 0);
    CHECK(m.out == "(h2/(h1+h2))*p1\n");
    CHECK(pm({"mechanise", "p1 +"}).code == 2);
    CHECK(pm({"mechanise", "h1*p1"}).code == 3);

    Run p = pm({"project", "--sector", "qq", "--h1", "1", "--h2", "1", "p1"});
    CHECK(p.code == 0);
    CHECK(p.out == "(1/2)*p1\n");
    CHECK(pm({"project", "--sector", "qc", "p2"}).out == "(p2, -(1/h)*p2)\n");
    CHECK(pm({"project", "--sector", "cc", "p2"}).out == "p2\n");
    CHECK(pm({"project", "--sector", "qq", "--h1", "1", "--h2", "-1", "p1"}).code == 3);
    CHECK(pm({"project"}).code == 2);
}

TEST_CASE("exit codes: evolve") {
    CHECK(pm({"evolve", "--hamiltonian", H, "--observable", "q1", "--order", "2"}).code == 0);
    CHECK(pm({"evolve", "--sector", "cc", "--mechanise", "--hamiltonian", H, "--observable", "q1"}).code == 3);
    CHECK(pm({"evolve", "--sector", "qc", "--hamiltonian", "q1*p1", "--observable", "p1"}).code == 3);
    CHECK(pm({"evolve", "--hamiltonian", H, "--observable", "q1", "--bracket-order", "sideways"}).code == 2);
    CHECK(pm({"--output", "csv", "evolve", "--hamiltonian", H, "--observable", "q1"}).code == 2);
    CHECK(pm({"--output", "csv", "evolve", "--hamiltonian", H, "--observable", "q1", "--times", "0", "--at", "x=1"})
              .code == 2);
    Run f = pm({"evolve", "--sector", "cc", "--hamiltonian", H, "--observable", "q1", "--order", "1",
                "--bracket-order", "f-first"});
    CHECK(f.out == "f0 = q1\nf1 = -q2\n");
}

TEST_CASE("exit codes: table") {
    Run t = pm({"table"});
    CHECK(t.code == 0);
    CHECK(t.out.find("P2") != std::string::npos);
    CHECK(t.out.find("-(1/h)*p2") != std::string::npos);
    Run j = pm({"--output", "json", "table", "--n", "2"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out).size() == 8);
    CHECK(pm({"table", "--n", "x"}).code == 2);
}

TEST_CASE("exit codes: group") {
    Run m = pm({"group", "--op", "mul", "--lhs", "0;1;0", "--rhs", "0;0;1"});
    CHECK(m.code == 0);
    CHECK(m.out == "1/2;1;1\n");
    CHECK(pm({"group", "--op", "mul", "--lhs", "0;1;0|0;0;0", "--rhs", "0;0;1|0;0;0"}).out == "1/2;1;1|0;0;0\n");
    CHECK(pm({"group", "--op", "coadjoint", "--lhs", "0;1;0", "--point", "1;0;0"}).out == "1;0;-1\n");
    Run ph = pm({"--output", "json", "group", "--op", "phase", "--lhs", "5;1/2;3", "--point", "1;0"});
    CHECK(ph.code == 0);
    CHECK(nlohmann::json::parse(ph.out)["theta"] == "1/2");
    CHECK(pm({"group", "--op", "mul", "--lhs", "0;1;0", "--rhs", "0;1,2;0,0"}).code == 3);
    CHECK(pm({"group", "--op", "mul", "--lhs", "0;1", "--rhs", "0;0;1"}).code == 2);
    CHECK(pm({"group", "--op", "rotate"}).code == 2);
}

TEST_CASE("exit codes: verify") {
    CHECK(pm({"verify", "--suite", "qc-example"}).code == 0);
    CHECK(pm({"verify", "--suite", "nonsense"}).code == 2);
    Run j = pm({"--output", "json", "verify", "--suite", "rotation"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)[0]["passed"] == true);
}

TEST_CASE("usage") {
    CHECK(pm({}).code == 2);
    CHECK(pm({"frobnicate"}).code == 2);
    CHECK(pm({"--help"}).code == 0);
    CHECK(pm({"--n", "2", "bracket", "--lhs", "q1_2", "--rhs", "p1_2", "--mechanise"}).out == "1\n");
}
