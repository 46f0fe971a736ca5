#include <bellbound/io.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace bellbound;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("bellbound_io_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(InequalityJson, RoundTrip) {
  for (const auto& ineq : {chsh(), triangle(), clique_web_inequality({7, 2, 2})}) {
    const json j = ineq;
    EXPECT_EQ(j.get<PairwiseInequality>(), ineq);
    EXPECT_EQ(json::parse(j.dump()).get<PairwiseInequality>(), ineq);
  }
}

TEST(InequalityJson, Layout) {
  const json j = chsh();
  EXPECT_EQ(j["mode"], "bipartite");
  EXPECT_EQ(j["n_left"], 2);
  EXPECT_EQ(j["n_right"], 2);
  EXPECT_EQ(j["rhs"], 1.0);
  ASSERT_EQ(j["coefficients"].size(), 4U);
  EXPECT_EQ(j["coefficients"][3], (json{{"i", 1}, {"j", 1}, {"value", -0.5}}));
}

TEST(InequalityJson, RejectsMalformedInput) {
  auto parse = [](const char* text) { return json::parse(text).get<PairwiseInequality>(); };
  EXPECT_THROW(parse(R"({"mode":"complete","n_left":3,"coefficients":[{"i":1,"j":0,"value":1}],"rhs":1})"),
               ParameterError);
  EXPECT_THROW(parse(R"({"mode":"complete","n_left":3,"coefficients":[{"i":0,"j":1,"value":1},{"i":0,"j":1,"value":2}],"rhs":1})"),
               ParameterError);
  EXPECT_THROW(parse(R"({"mode":"tripartite","n_left":3,"coefficients":[],"rhs":1})"), ParameterError);
  EXPECT_THROW(parse(R"({"mode":"complete","n_left":3,"n_right":2,"coefficients":[],"rhs":1})"), ParameterError);
  EXPECT_THROW(parse(R"({"mode":"bipartite","n_left":2,"n_right":2,"coefficients":[{"i":2,"j":0,"value":1}],"rhs":1})"),
               DimensionError);
  EXPECT_THROW(parse(R"({"mode":"complete","n_left":3,"coefficients":[]})"), json::exception);
}

TEST(EdgeSetJson, RoundTripAndDuplicates) {
  const auto w = web_edges({8, 3, 2});
  const json j = w;
  EXPECT_EQ(j["n"], 8);
  const auto back = j.get<EdgeSet>();
  EXPECT_EQ(back.size(), w.size());
  for (const auto& [a, b] : w) EXPECT_TRUE(back.contains(a, b));
  EXPECT_THROW(json::parse(R"({"n":3,"edges":[[0,1],[1,0]]})").get<EdgeSet>(), ParameterError);
}

TEST(VectorJson, RoundTripAndValidation) {
  const auto b = bouquet(5, 2, 0.7);
  const json j = b;
  const auto back = j.get<UnitVectorConfig>();
  ASSERT_EQ(back.size(), b.size());
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(back[k], b[k]);
  EXPECT_THROW(json::parse(R"({"dim":2,"vectors":[[1,1]]})").get<UnitVectorConfig>(), ParameterError);
  EXPECT_THROW(json::parse(R"({"dim":3,"vectors":[[1,0]]})").get<UnitVectorConfig>(), DimensionError);
}

TEST(Rounding, TwelveSignificantDigits) {
  json j = {{"a", 1.0 / 3.0}, {"b", {2.0 / 3.0, 7}}, {"c", "text"}};
  round_floats(j);
  EXPECT_EQ(j["a"].get<double>(), 0.333333333333);
  EXPECT_EQ(j["b"][0].get<double>(), 0.666666666667);
  EXPECT_EQ(j["b"][1], 7);
  EXPECT_EQ(j["c"], "text");
}

TEST(Loading, BuiltInNames) {
  EXPECT_EQ(load_inequality("chsh"), chsh());
  EXPECT_EQ(load_inequality("triangle"), triangle());
  EXPECT_EQ(load_inequality("cliqueweb:12,3,4"), clique_web_inequality({12, 3, 4}));
  EXPECT_THROW(load_inequality("cliqueweb:12,3"), ParameterError);
  EXPECT_THROW(load_inequality("cliqueweb:12,3,4x"), ParameterError);
  EXPECT_THROW(load_inequality("cliqueweb:12,3,3"), ParameterError);
}

TEST(Loading, Files) {
  const auto ineq_path = write_temp("ineq.json", json(triangle()).dump());
  EXPECT_EQ(load_inequality(ineq_path), triangle());
  const auto bad = write_temp("bad.json", "{not json");
  EXPECT_THROW(load_inequality(bad), ParameterError);
  EXPECT_THROW(load_inequality("/nonexistent/x.json"), ParameterError);
  const auto missing_field = write_temp("missing.json", R"({"mode":"complete"})");
  EXPECT_THROW(load_inequality(missing_field), ParameterError);

  const auto p1 = write_temp("p1.json", "[0.5, -0.5]");
  const auto p2 = write_temp("p2.json", R"({"point":[0.25]})");
  EXPECT_EQ(load_point(p1), (std::vector<double>{0.5, -0.5}));
  EXPECT_EQ(load_point(p2), (std::vector<double>{0.25}));
  const auto p3 = write_temp("p3.json", R"({"pt":[0.25]})");
  EXPECT_THROW(load_point(p3), ParameterError);
}

TEST(ResultJson, ReportsSerialize) {
  const json cb = classical_bound(chsh());
  EXPECT_EQ(cb["max_value"], 1.0);
  EXPECT_EQ(cb["exact_twice_max"], 2);
  const json cert = membership(PolytopeSpec::bell(3), std::vector<double>{1.0, 1.0, 1.0});
  EXPECT_TRUE(cert["inside"].get<bool>());
  EXPECT_TRUE(cert["separating"].is_null());
  const json real = realize(bouquet(3, 1, 0.2));
  EXPECT_EQ(real["d"], 4);
  EXPECT_EQ(real["a_ops"].size(), 4U);
  EXPECT_EQ(real["a_ops"][0][0][0].size(), 2U);  // [re, im]
  const json scan = scan_theta(BouquetFamily::odd(2), 20);
  EXPECT_EQ(scan["grid"].size(), 20U);
}
