#include <doctest.h>

#include "homindex/experiment.hpp"

using namespace homindex;
using nlohmann::json;

TEST_CASE("config schema validation") {
    json good = {{"name", "demo"}, {"kind", "verify-symbolic"}, {"seed", 7}};
    ExperimentConfig cfg = parse_experiment_config(good);
    CHECK(cfg.name == "demo");
    CHECK(cfg.seed == 7);

    CHECK_THROWS_AS(parse_experiment_config(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(parse_experiment_config(json{{"kind", "verify-symbolic"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_experiment_config(json{{"name", "x"}, {"kind", "nope"}}),
                    std::invalid_argument);
    json bad_tol = {{"name", "x"}, {"kind", "index-shift"},
                    {"tolerances", {{"tol", 0.0}}}};
    CHECK_THROWS_AS(parse_experiment_config(bad_tol), std::invalid_argument);
    json neg_tol = {{"name", "x"}, {"kind", "index-shift"},
                    {"tolerances", {{"tol", -1.0}}}};
    CHECK_THROWS_AS(parse_experiment_config(neg_tol), std::invalid_argument);
}

TEST_CASE("symbolic experiment passes and is deterministic") {
    ExperimentConfig cfg;
    cfg.name = "sym";
    cfg.kind = "verify-symbolic";
    cfg.seed = 11;
    cfg.parameters["n_max"] = 3;
    RunReport a = run_experiment(cfg);
    RunReport b = run_experiment(cfg);
    CHECK(a.overall_pass);
    CHECK(render_csv(a) == render_csv(b));
}

TEST_CASE("index-shift experiment hits the telescoped value") {
    ExperimentConfig cfg;
    cfg.name = "shift";
    cfg.kind = "index-shift";
    cfg.seed = 1;
    cfg.parameters["rule"] = "inverse-poly";
    cfg.parameters["degree"] = 2;
    cfg.parameters["expected"] = -1.0;
    cfg.tolerances["tol"] = 1e-8;
    RunReport rep = run_experiment(cfg);
    CHECK(rep.overall_pass);
    bool found = false;
    for (const auto& r : rep.records)
        if (r.check_id == "index-certified") {
            found = true;
            CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-7));
        }
    CHECK(found);
}

TEST_CASE("transgression experiment") {
    ExperimentConfig cfg;
    cfg.name = "trans";
    cfg.kind = "transgression";
    cfg.seed = 5;
    cfg.parameters["dim"] = 3;
    cfg.parameters["degree"] = 1;
    cfg.parameters["count"] = 3;
    RunReport rep = run_experiment(cfg);
    CHECK(rep.overall_pass);
    CHECK(render_csv(rep) == render_csv(run_experiment(cfg)));
}

TEST_CASE("resolvent and derivative experiments") {
    ExperimentConfig cfg;
    cfg.name = "res";
    cfg.kind = "resolvent";
    cfg.seed = 2;
    cfg.parameters["dim"] = 4;
    cfg.parameters["count"] = 5;
    CHECK(run_experiment(cfg).overall_pass);

    ExperimentConfig dcfg;
    dcfg.name = "der";
    dcfg.kind = "derivative";
    dcfg.seed = 3;
    dcfg.parameters["dim"] = 4;
    dcfg.parameters["count"] = 3;
    CHECK(run_experiment(dcfg).overall_pass);
}

TEST_CASE("homotopy experiment with and without a jump expectation") {
    ExperimentConfig cfg;
    cfg.name = "hom";
    cfg.kind = "homotopy";
    cfg.seed = 4;
    cfg.parameters["dim"] = 3;
    cfg.parameters["degree"] = 2;
    cfg.parameters["grid_points"] = 17;
    cfg.tolerances["flag_threshold"] = 1e6;
    RunReport rep = run_experiment(cfg);
    CHECK(rep.overall_pass);
}

TEST_CASE("dirac-schatten experiment at desk scale") {
    ExperimentConfig cfg;
    cfg.name = "dirac";
    cfg.kind = "dirac-schatten";
    cfg.seed = 6;
    cfg.parameters["clifford_n_max"] = 3;
    cfg.parameters["lattices"] = json::array({
        {{"half_dim", 1}, {"points", 6}, {"half_width", 2.0},
         {"potential", {{"name", "zero"}}}, {"degree", 1}},
    });
    cfg.parameters["decay_probes"] = json::array({
        {{"space_dim", 1}, {"points", 32}, {"half_width", 4.0},
         {"symbol", "inverse-square"}, {"s", 0.0}, {"r", 0.25}, {"p", 2.0},
         {"eps", 0.1}, {"expect", "stabilize"}, {"window", 0.1}},
        {{"space_dim", 1}, {"points", 32}, {"half_width", 4.0},
         {"symbol", "one"}, {"s", 0.0}, {"r", 0.5}, {"p", 1.0},
         {"eps", 0.1}, {"expect", "diverge"}, {"threshold", 1.5}},
    });
    RunReport rep = run_experiment(cfg);
    CHECK(rep.overall_pass);
}

TEST_CASE("scaling experiment") {
    ExperimentConfig cfg;
    cfg.name = "scale";
    cfg.kind = "scaling";
    cfg.seed = 8;
    cfg.parameters["lattice"] = {{"half_dim", 1}, {"points", 6}, {"half_width", 2.0}};
    cfg.parameters["potential"] = {{"name", "gaussian"}, {"amplitude", 0.5}, {"scale", 1.0}};
    cfg.parameters["lambdas"] = {0.25, 1.0, 4.0};
    RunReport rep = run_experiment(cfg);
    CHECK(rep.overall_pass);
}

TEST_CASE("registry catalog") {
    json cat = registry_catalog();
    bool has_inverse_poly = false;
    for (const auto& r : cat["shift_rules"])
        has_inverse_poly = has_inverse_poly || r["name"] == "inverse-poly";
    CHECK(has_inverse_poly);
    bool has_gaussian = false;
    for (const auto& r : cat["potentials"])
        has_gaussian = has_gaussian || r["name"] == "gaussian";
    CHECK(has_gaussian);
    CHECK(cat["experiment_kinds"].size() == 8);
}

TEST_CASE("csv format is stable") {
    ExperimentConfig cfg;
    cfg.name = "fmt";
    cfg.kind = "index-shift";
    cfg.seed = 1;
    cfg.parameters["rule"] = "one";
    cfg.parameters["degree"] = 1;
    RunReport rep = run_experiment(cfg);
    const std::string csv = render_csv(rep);
    CHECK(csv.rfind("check_id,paper_anchor,value,bound,tolerance,pass\n", 0) == 0);
    CHECK(csv.find("index-certified") != std::string::npos);
}
