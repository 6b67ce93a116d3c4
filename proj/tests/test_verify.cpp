#include <doctest.h>

#include "chainisom/closed_forms.hpp"
#include "chainisom/render.hpp"
#include "chainisom/verify.hpp"

using namespace chainisom;

TEST_CASE("n ranges") {
  auto r = parse_n_range("0..9");
  CHECK(r.lo == 0);
  CHECK(r.hi == 9);
  r = parse_n_range("4");
  CHECK(r.lo == 4);
  CHECK(r.hi == 4);
  CHECK_THROWS_AS(parse_n_range("5..3"), Error);
  CHECK_THROWS_AS(parse_n_range("a..3"), Error);
  CHECK_THROWS_AS(parse_n_range("-1..3"), Error);
}

TEST_CASE("every check passes on a small range") {
  for (auto name : check_names()) {
    NRange const range = name == "recurrence" || name == "sum-identity" ? NRange{0, 30}
                         : name == "phi-bijection"                      ? NRange{3, 7}
                                                                        : NRange{0, 4};
    auto const report = run_check(name, range);
    CHECK_MESSAGE(report.pass, name);
    CHECK_FALSE(report.instances.empty());
    CHECK(report.first_failure() == nullptr);
  }
}

TEST_CASE("unknown checks and caps") {
  CHECK_FALSE(is_check_name("nilpotent"));
  CHECK_THROWS_AS(run_check("nilpotent", {0, 3}), Error);
  try {
    run_check("oracle-equivalence", {0, 9});
    FAIL("expected LimitExceeded");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::limit_exceeded);
  }
}

TEST_CASE("eunitary report carries a replayable DP witness") {
  auto const report = run_check("eunitary", {3, 4});
  CHECK(report.pass);
  bool saw_dp_witness = false;
  for (auto const& inst : report.instances) {
    if (inst.params["family"] == "dp") {
      REQUIRE(inst.witness.has_value());
      CHECK((*inst.witness)["kind"] == "not_0_E_unitary");
      CHECK((*inst.witness)["elements"].size() == 2);
      saw_dp_witness = true;
    }
  }
  CHECK(saw_dp_witness);
}

TEST_CASE("report JSON shape") {
  auto const j = report_to_json(run_check("categorical", {3, 3}));
  CHECK(j["check"] == "categorical");
  CHECK(j["pass"] == true);
  REQUIRE(j["instances"].is_array());
  auto const& odp = j["instances"][0];
  CHECK(odp["params"]["family"] == "odp");
  CHECK(odp["pass"] == true);
  CHECK(odp["witness"]["kind"] == "not_categorical");
  CHECK(odp["witness"]["elements"].size() == 3);
  CHECK(odp["witness"]["elements"][0].contains("map"));
}

TEST_CASE("CSV table") {
  auto const csv = render_count_table(formula_count_table(Statistic::height, Family::odp, 3),
                                      TableFormat::csv);
  CHECK(csv
        == "n,k0,k1,k2,k3,sum\n"
           "0,1,,,,1\n"
           "1,1,1,,,2\n"
           "2,1,4,1,,6\n"
           "3,1,9,5,1,16\n");
}

TEST_CASE("text and JSON tables") {
  auto const table = formula_count_table(Statistic::fix, Family::dp, 7);
  auto const text  = render_count_table(table, TableFormat::text);
  CHECK(text.find("460") != std::string::npos);
  CHECK(text.find("686") != std::string::npos);
  auto const j = nlohmann::json::parse(render_count_table(table, TableFormat::json));
  CHECK(j["rows"][7]["counts"] == std::vector<Count>{460, 106, 21, 35, 35, 21, 7, 1});
  CHECK(j["rows"][7]["sum"] == 686);
}

TEST_CASE("structure summary") {
  auto const dp3 = render_structure("DP_3", build_table(enumerate_fast(3, Family::dp)));
  CHECK(dp3.find("0-E-unitary: false, witness") != std::string::npos);
  auto const q = render_structure("Q(4,2)", build_rees_quotient(4, 2).table);
  CHECK(q.find("Q(4,2): 0-E-unitary: true, categorical: true") != std::string::npos);
}
