#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "generators.hpp"
#include "jsplit/bimodule.hpp"
#include "jsplit/errors.hpp"
#include "jsplit/josp.hpp"
#include "jsplit/json_io.hpp"
#include "jsplit/splitting.hpp"

using jsplit::Parity;
using jsplit::Superalgebra;

TEST_CASE("algebra documents follow the interchange layout") {
  const Superalgebra a = jsplit::build_josp_table(1, 1);
  const auto j = nlohmann::json::parse(jsplit::to_json(a));
  CHECK(j["name"] == "Josp(1|2)");
  CHECK(j["dim"] == 4);
  CHECK(j["parity"] == nlohmann::json::array({0, 0, 1, 1}));
  CHECK(j["basis"] == nlohmann::json::array({"h11", "v11", "u11", "k11"}));
  CHECK(j["unit"] == nlohmann::json::array({"1", "1", "0", "0"}));
  const auto& constants = j["constants"];
  CHECK(constants.size() == a.nonzero_count());
  for (std::size_t e = 1; e < constants.size(); ++e) {
    const auto key = [&](std::size_t q) {
      return std::array<std::size_t, 3>{constants[q][0], constants[q][1], constants[q][2]};
    };
    CHECK(key(e - 1) < key(e));
  }
  bool saw_half = false;
  for (const auto& c : constants) saw_half = saw_half || c[3] == "1/2" || c[3] == "-1/2";
  CHECK(saw_half);
}

TEST_CASE("algebra round trips") {
  gen::Rng rng(41);
  std::vector<Superalgebra> algebras = {jsplit::build_josp_table(2, 1), jsplit::build_counterexample().algebra,
                                        rng.superalgebra(4, 40, false)};
  for (const auto& a : algebras) {
    const std::string text = jsplit::to_json(a);
    const Superalgebra back = jsplit::algebra_from_json(text);
    CHECK(back == a);
    CHECK(jsplit::to_json(back) == text);
  }
  Superalgebra no_unit("n", {"x"}, {Parity::kOdd});
  CHECK(nlohmann::json::parse(jsplit::to_json(no_unit))["unit"].is_null());
  CHECK(jsplit::algebra_from_json(jsplit::to_json(no_unit)) == no_unit);
}

TEST_CASE("bimodule and extension round trips") {
  for (const auto& mod : {jsplit::skew_bimodule(1, 1), jsplit::opposite(jsplit::regular_bimodule(jsplit::build_josp_table(2, 1)))}) {
    const std::string text = jsplit::to_json(mod);
    const auto back = jsplit::bimodule_from_json(text);
    CHECK(back == mod);
    CHECK(nlohmann::json::parse(text).contains("algebra"));
  }
  for (const auto& ext : {jsplit::build_counterexample(), jsplit::build_skew11_extension(1, 0, 2)}) {
    const auto back = jsplit::extension_from_json(jsplit::to_json(ext));
    CHECK(back.algebra == ext.algebra);
    CHECK(back.ideal == ext.ideal);
    CHECK(back.model == ext.model);
    CHECK(back.section == ext.section);
  }
  auto bare = nlohmann::json::parse(jsplit::to_json(jsplit::build_counterexample()));
  bare.erase("model");
  bare.erase("section");
  const auto plain = jsplit::extension_from_json(bare.dump());
  CHECK(plain.model.dim() == 0);
  CHECK(plain.section.empty());
  bare["model"] = nlohmann::json::parse(jsplit::to_json(jsplit::build_josp_table(1, 1)));
  CHECK_THROWS_AS(jsplit::extension_from_json(bare.dump()), jsplit::UsageError);
}

TEST_CASE("malformed documents are usage errors") {
  const auto base = nlohmann::json::parse(jsplit::to_json(jsplit::build_josp_table(1, 1)));
  CHECK_THROWS_AS(jsplit::algebra_from_json("{"), jsplit::UsageError);
  CHECK_THROWS_AS(jsplit::algebra_from_json("[]"), jsplit::UsageError);
  auto missing = base;
  missing.erase("constants");
  CHECK_THROWS_AS(jsplit::algebra_from_json(missing.dump()), jsplit::UsageError);
  auto wrong_dim = base;
  wrong_dim["dim"] = 5;
  CHECK_THROWS_AS(jsplit::algebra_from_json(wrong_dim.dump()), jsplit::UsageError);
  auto bad_index = base;
  bad_index["constants"].push_back({9, 0, 0, "1"});
  CHECK_THROWS_AS(jsplit::algebra_from_json(bad_index.dump()), jsplit::UsageError);
  auto bad_rational = base;
  bad_rational["constants"][0][3] = "1/0";
  CHECK_THROWS_AS(jsplit::algebra_from_json(bad_rational.dump()), jsplit::UsageError);
  auto ungraded = base;
  ungraded["constants"].push_back({0, 0, 2, "1"});
  CHECK_THROWS_AS(jsplit::algebra_from_json(ungraded.dump()), jsplit::UsageError);
  auto bad_parity = base;
  bad_parity["parity"][0] = 2;
  CHECK_THROWS_AS(jsplit::algebra_from_json(bad_parity.dump()), jsplit::UsageError);
}

TEST_CASE("compact layout") {
  const std::string text = jsplit::format_json(R"({"a":[1,2,3],"b":[[0,1,"1/2"],[1,0,"-1"]],"c":{"d":null}})");
  CHECK(text ==
        "{\n"
        "  \"a\": [1, 2, 3],\n"
        "  \"b\": [\n"
        "    [0, 1, \"1/2\"],\n"
        "    [1, 0, \"-1\"]\n"
        "  ],\n"
        "  \"c\": {\n"
        "    \"d\": null\n"
        "  }\n"
        "}\n");
  CHECK(nlohmann::json::parse(text) == nlohmann::json::parse(R"({"a":[1,2,3],"b":[[0,1,"1/2"],[1,0,"-1"]],"c":{"d":null}})"));
  CHECK(jsplit::format_json("[]") == "[]\n");
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "jsplit_json_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "a.json";
  jsplit::write_text_file(path, "abc");
  CHECK(jsplit::read_text_file(path) == "abc");
  CHECK_THROWS_AS(jsplit::read_text_file(dir / "missing.json"), jsplit::UsageError);
  CHECK_THROWS_AS(jsplit::write_text_file(dir / "no" / "such" / "dir.json", "x"), jsplit::UsageError);
  std::filesystem::remove_all(dir);
}
