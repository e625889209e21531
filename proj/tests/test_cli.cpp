#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "jk/cli.hpp"
#include "jk/constructors.hpp"

using namespace jk;

namespace {

struct RunResult {
    int code;
    json output;
    std::string stdout_text;
    std::string stderr_text;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    RunResult r{code, json(), out.str(), err.str()};
    if (!r.stdout_text.empty() && (r.stdout_text[0] == '{' || r.stdout_text[0] == '['))
        r.output = json::parse(r.stdout_text);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/jk_cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

std::string heisenberg_json() {
    return R"({"dim": 3, "basis": ["e", "f", "h"],
               "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]})";
}

}  // namespace

TEST_CASE("cli pencil command") {
    SECTION("Heisenberg pencil file") {
        const auto path = write_temp("heis_pencil.json",
                                     R"({"A": [[0,1,0],[-1,0,0],[0,0,0]],
                                         "B": [[0,2,0],[-2,0,0],[0,0,0]]})");
        const auto r = run_cli({"pencil", path});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["rank"] == 2);
        REQUIRE(r.output["type"]["kronecker"] == json::array({1}));
        REQUIRE(r.output["type"]["jordan"][0]["sizes"] == json::array({2}));
        REQUIRE(r.output["type"]["jordan"][0]["eigen"] == json::array({"-1/2", "1"}));
    }
    SECTION("zero 2x2 pencil") {
        const auto path = write_temp("zero_pencil.json", R"({"A": [[0,0],[0,0]], "B": [[0,0],[0,0]]})");
        const auto r = run_cli({"pencil", path});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["type"]["kronecker"] == json::array({1, 1}));
        REQUIRE(r.output["type"]["jordan"].empty());
    }
    SECTION("non-skew input exits 2") {
        const auto path = write_temp("nonskew.json", R"({"A": [[0,1],[1,0]], "B": [[0,0],[0,0]]})");
        const auto r = run_cli({"pencil", path});
        REQUIRE(r.code == 2);
    }
    SECTION("rational entries as strings") {
        const auto path = write_temp("frac_pencil.json",
                                     R"({"A": [[0, "1/2"], ["-1/2", 0]], "B": [[0, 1], [-1, 0]]})");
        const auto r = run_cli({"pencil", path});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["type"]["jordan"][0]["eigen"] == json::array({"-1/2", "1"}));
    }
    SECTION("parse failure exits 1") {
        const auto path = write_temp("broken.json", "{not json");
        REQUIRE(run_cli({"pencil", path}).code == 1);
        REQUIRE(run_cli({"pencil", "/nonexistent/file.json"}).code == 1);
    }
}

TEST_CASE("cli lie command") {
    SECTION("kronecker m=2 structure constants") {
        const auto path = write_temp("kron2.json", lie_to_json(kronecker_algebra(2).algebra).dump());
        const auto r = run_cli({"lie", path});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["algebraic"]["kronecker"] == json::array({5}));
        REQUIRE(r.output["algebraic"]["jordan"].empty());
        REQUIRE(r.output["stability"]["stable"] == true);
    }
    SECTION("vorushilov k=2 l=1") {
        const auto path = write_temp("vor.json", lie_to_json(vorushilov_algebra(2, 1).algebra).dump());
        const auto r = run_cli({"lie", path});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["algebraic"]["kronecker"] == json::array({3}));
        REQUIRE(r.output["algebraic"]["jordan"] == json::array({json::array({2}), json::array({2})}));
    }
    SECTION("corrupted constants exit 3 naming the triple") {
        const auto path = write_temp("badlie.json",
                                     R"({"dim": 3, "basis": ["e", "f", "h"],
                                         "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}},
                                                      {"i": 0, "j": 2, "coeffs": {"0": "-1"}}]})");
        const auto r = run_cli({"lie", path});
        REQUIRE(r.code == 3);
        REQUIRE(r.stderr_text.find("Jacobi") != std::string::npos);
        REQUIRE(r.output.contains("jacobi_violation"));
    }
    SECTION("reports are byte-identical for a fixed input and seed") {
        const auto path = write_temp("heis.json", heisenberg_json());
        const auto r1 = run_cli({"lie", path, "--seed", "4"});
        const auto r2 = run_cli({"lie", path, "--seed", "4"});
        REQUIRE(r1.code == 0);
        REQUIRE(r1.stdout_text == r2.stdout_text);
    }
    SECTION("persistent sampling disagreement exits 4") {
        LieAlgebra h(3);
        h.add_term(0, 1, 2, Rational(1));
        const LieAlgebra g = direct_sum(direct_sum(h, h), h);
        const auto path = write_temp("three_heis.json", lie_to_json(g).dump());
        const auto r = run_cli({"lie", path, "--seed", "1", "--trials", "6", "--height", "1"});
        REQUIRE(r.code == 4);
        REQUIRE(r.output["stability"]["stable"] == false);
    }
}

TEST_CASE("cli construct command") {
    SECTION("kronecker --m 2 --verify") {
        const auto r = run_cli({"construct", "kronecker", "--m", "2", "--verify"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["expected"]["kronecker"] == json::array({5}));
        REQUIRE(r.output["verify"]["match"] == true);
    }
    SECTION("jordan --tuple 2,1 --verify") {
        const auto r = run_cli({"construct", "jordan", "--tuple", "2,1", "--verify"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["dim"] == 8);
        REQUIRE(r.output["expected"]["jordan"] == json::array({json::array({6, 2})}));
        REQUIRE(r.output["verify"]["match"] == true);
    }
    SECTION("mixed --m 1 --tuples 2,2 --verify") {
        const auto r = run_cli({"construct", "mixed", "--m", "1", "--tuples", "2,2", "--verify"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["verify"]["match"] == true);
    }
    SECTION("kron3 with explicit pairs") {
        const auto r = run_cli({"construct", "kron3", "--tuples", "2,2;4", "--pairs", "1,0;0,1", "--verify"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["verify"]["match"] == true);
    }
    SECTION("unknown family exits 1") {
        REQUIRE(run_cli({"construct", "nonsense"}).code == 1);
    }
    SECTION("emitted algebra round-trips through the lie command") {
        const auto r = run_cli({"construct", "central", "--tuples", "2,2", "--centers", "1"});
        REQUIRE(r.code == 0);
        const auto path = write_temp("central.json", r.output["algebra"].dump());
        const auto r2 = run_cli({"lie", path});
        REQUIRE(r2.code == 0);
        REQUIRE(r2.output["algebraic"] == r.output["expected"]);
    }
}

TEST_CASE("cli check-type command") {
    SECTION("obstructed multiset") {
        const auto r = run_cli({"check-type", R"({"jordan":[[2,2],[2,2]],"kronecker":[1]})"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["status"] == "impossible");
        REQUIRE(r.output["reason"] == "Thm ObstOneKron");
        REQUIRE(r.output["plan"].empty());
    }
    SECTION("realizable multiset with verification") {
        const auto r = run_cli({"check-type", R"({"jordan":[[2,2],[4,2]],"kronecker":[3]})", "--verify"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["status"] == "realizable");
        REQUIRE(!r.output["plan"].empty());
        REQUIRE(r.output["plan"][0]["family"] == "kron3");
        REQUIRE(r.output["verify"]["match"] == true);
    }
    SECTION("general mixed plan routes tuples by capacity") {
        const auto r = run_cli({"check-type", R"({"jordan":[[4],[2,2]],"kronecker":[5]})"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["status"] == "realizable");
        bool saw_mixed = false, saw_jordan = false;
        for (const auto& step : r.output["plan"]) {
            if (step["family"] == "mixed") {
                saw_mixed = true;
                REQUIRE(step["m"] == 2);
                REQUIRE(step["tuples"] == json::array({json::array({2, 2})}));
            }
            if (step["family"] == "jordan") {
                saw_jordan = true;
                REQUIRE(step["tuple"] == json::array({4}));
            }
        }
        REQUIRE(saw_mixed);
        REQUIRE(saw_jordan);
    }
    SECTION("unknown verdict") {
        const auto r = run_cli({"check-type", R"({"jordan":[[2,2],[2,2],[2,2],[2,2]],"kronecker":[5]})"});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["status"] == "unknown");
    }
    SECTION("type from a file") {
        const auto path = write_temp("type.json", R"({"jordan":[[4]],"kronecker":[]})");
        const auto r = run_cli({"check-type", path});
        REQUIRE(r.code == 0);
        REQUIRE(r.output["status"] == "realizable");
    }
    SECTION("malformed multiset exits 1") {
        REQUIRE(run_cli({"check-type", R"({"jordan":[[3]],"kronecker":[]})"}).code == 1);
    }
}

TEST_CASE("cli semiinvariant-line command") {
    const auto path = write_temp("heis2.json", heisenberg_json());
    const auto r = run_cli({"semiinvariant-line", path, "--x", "0,0,1", "--a", "0,0,2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.output["q"] == json::array({"-1/2", "1"}));
    REQUIRE(r.output["degree"] == 1);
    REQUIRE(r.output["factors"].size() == 1);
}

TEST_CASE("cli usage errors") {
    REQUIRE(run_cli({}).code == 1);
    REQUIRE(run_cli({"pencil"}).code == 1);           // missing file
    REQUIRE(run_cli({"unknown-command"}).code == 1);
}
