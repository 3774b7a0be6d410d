#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "ulrc/constructions.hpp"
#include "ulrc/serialization.hpp"

using namespace ulrc;
using nlohmann::json;

TEST_SUITE_BEGIN("serialization");

TEST_CASE("field spec round trip") {
  auto f = FieldSpec::make(2, 2, 4);
  const json j = field_to_json(*f);
  CHECK(j.at("p") == 2);
  CHECK(j.at("w") == 2);
  CHECK(j.at("m") == 4);
  CHECK(j.at("base_modulus") == json::array({1, 1, 1}));
  auto back = field_from_json(j);
  CHECK(back->matches(*f));

  json tampered = j;
  tampered["ext_modulus"][0] = 99;
  CHECK_THROWS_AS(field_from_json(tampered), PreconditionError);
}

TEST_CASE("bare code round trip") {
  SplitMix64 rng(1);
  const auto planted = testsup::random_planted_code(rng, 4, 10);
  const json j = code_to_json(planted.code);
  const auto back = code_from_json(j);
  CHECK(back.columns() == planted.code.columns());
  CHECK(back.field()->matches(*planted.code.field()));
  CHECK(back.systematic_positions() == planted.code.systematic_positions());

  json broken = j;
  broken["n"] = 99;
  CHECK_THROWS_AS(code_from_json(broken), PreconditionError);
}

TEST_CASE("pyramid code file round trip") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 2, 16);
  const json j = code_file_to_json(pc);
  CHECK(j.at("construction").at("kind") == "pyramid");
  const auto file = code_file_from_json(j);
  const auto* back = std::get_if<PyramidCode>(&file);
  REQUIRE(back != nullptr);
  CHECK(back->code.columns() == pc.code.columns());
  CHECK(back->requested_profile == pc.requested_profile);
  CHECK(back->designed_profile == pc.designed_profile);
  CHECK(back->d_design == pc.d_design);
  REQUIRE(back->groups.size() == pc.groups.size());
  for (std::size_t g = 0; g < pc.groups.size(); ++g) {
    CHECK(back->groups[g].members == pc.groups[g].members);
    CHECK(back->groups[g].parity_coordinate == pc.groups[g].parity_coordinate);
  }
}

TEST_CASE("gabidulin code file round trip") {
  const auto lrc = gabidulin_lrc(3, AllSymbolLocalityProfile{{0, 6}}, 4, 4);
  const json j = code_file_to_json(lrc);
  CHECK(j.at("construction").at("kind") == "gabidulin");
  const auto file = code_file_from_json(j);
  const auto* back = std::get_if<GabidulinLRC>(&file);
  REQUIRE(back != nullptr);
  CHECK(back->code.columns() == lrc.code.columns());
  CHECK(back->intended_profile == lrc.intended_profile);
  CHECK(back->effective_points == lrc.effective_points);
  CHECK(back->groups == lrc.groups);
  CHECK(back->group_of == lrc.group_of);
  CHECK(back->design_distance == lrc.design_distance);

  json broken = j;
  broken["construction"]["groups"][0][0] = 5;  // coordinate now appears twice
  CHECK_THROWS_AS(code_file_from_json(broken), PreconditionError);
}

TEST_CASE("file save and load") {
  namespace fs = std::filesystem;
  const auto path = (fs::temp_directory_path() / "ulrc_test_code.json").string();
  const auto lrc = gabidulin_lrc(3, AllSymbolLocalityProfile{{0, 6}}, 4, 4);
  save_code_file(path, lrc);
  const auto file = load_code_file(path);
  CHECK(code_of(file).columns() == lrc.code.columns());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_code_file(path), PreconditionError);
}

TEST_CASE("unknown construction kind rejected") {
  const auto lrc = gabidulin_lrc(3, AllSymbolLocalityProfile{{0, 6}}, 4, 4);
  json j = code_file_to_json(lrc);
  j["construction"]["kind"] = "mystery";
  CHECK_THROWS_AS(code_file_from_json(j), PreconditionError);
}

TEST_CASE("report serializers expose the audit trail") {
  const auto report = unequal_all_symbol_bound(15, 11, AllSymbolLocalityProfile{{0, 6, 4, 5}});
  const json j = bound_report_to_json(report);
  CHECK(j.at("kind") == "all-symbol");
  CHECK(j.at("bound") == 2);
  CHECK(j.at("k_prime") == json::array({0, 4, 3, 4}));
  CHECK(j.at("r_prime") == 3);
  CHECK(j.at("r") == 4);

  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4}}, 3, 16);
  const auto w = witness_set(pc.code);
  const json wj = witness_to_json(w);
  CHECK(wj.at("rank") == pc.code.dimension() - 1);
  CHECK(wj.at("size") == w.coordinates.size());
  CHECK(wj.at("log").is_array());
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("serialization");

TEST_CASE("a hand-written code file loads and analyzes") {
  // (3, 1) repetition code over GF(2), written out as a raw document.
  const auto j = json::parse(R"({
    "field": {"p": 2, "w": 1, "m": 1, "base_modulus": [0, 1], "ext_modulus": [0, 1]},
    "n": 3, "k": 1,
    "columns": [[1], [1], [1]]
  })");
  const auto file = code_file_from_json(j);
  const auto& code = code_of(file);
  CHECK(code.length() == 3);
  CHECK(code.dimension() == 1);
  CHECK(min_distance(code) == 3);
  CHECK(all_symbol_profile(code).counts == std::vector<int>{3});
}

TEST_SUITE_END();
