#include "genrigid/experiments.hpp"
#include "genrigid/suite.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace genrigid;
using experiments::run_scenario;

namespace {

const std::filesystem::path kData = GENRIGID_DATA_DIR;

std::set<std::string> image_keys(const MatrixRep<Exact>& rep) {
  std::set<std::string> keys;
  for (const auto& m : rep.images) keys.insert(detail::matrix_key(m));
  return keys;
}

json scenario(const std::string& file) { return read_json_file(kData / "scenarios" / file); }

experiments::Report run(const std::string& file) {
  return run_scenario(scenario(file), kData / "scenarios");
}

}  // namespace

TEST(Parse, Scalars) {
  EXPECT_EQ(parse_scalar<Exact>(json("3/4")), Exact(make_rational(3, 4)));
  EXPECT_EQ(parse_scalar<Exact>(json("-2-1/3i")), Exact(Rational(-2), make_rational(-1, 3)));
  EXPECT_EQ(parse_scalar<Exact>(json(5)), Exact(5));
  EXPECT_EQ(parse_scalar<Exact>(json(0.25)), Exact(make_rational(1, 4)));
  EXPECT_EQ(parse_scalar<Exact>(json::array({1, -2})), Exact(Rational(1), Rational(-2)));
  EXPECT_EQ(parse_scalar<Complex>(json::array({0.5, 1.5})), Complex(0.5, 1.5));
  EXPECT_THROW(parse_scalar<Exact>(json::object()), InputError);
  EXPECT_THROW(parse_scalar<Exact>(json("1/0")), std::exception);
}

TEST(Parse, MatricesRoundTrip) {
  json j = json::parse(R"({"mode": "exact-gaussian", "rows": [["1", "1/2i"], [0, "-3"]]})");
  auto m = parse_matrix<Exact>(j);
  EXPECT_EQ(m(0, 1), Exact(Rational(0), make_rational(1, 2)));
  EXPECT_EQ(parse_matrix<Exact>(matrix_to_json(m)), m);
  EXPECT_THROW(parse_matrix<Exact>(json::parse("[[1, 2], [3]]")), InputError);
  EXPECT_THROW(parse_matrix<Exact>(json::parse("[]")), InputError);
}

TEST(Parse, Subspaces) {
  auto ws = parse_subspaces(json::parse(R"({"subspaces": [[[1, 0, 0]], {"basis": [[0, 1, 0], [0, 0, 1]]}]})"), 3);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[1].dim(), 2u);
  EXPECT_EQ(parse_subspaces(json::parse("[[1, 1, 0]]"), 3).size(), 1u);
  EXPECT_THROW(parse_subspaces(json::parse("[[1, 1]]"), 3), InputError);
  EXPECT_THROW(parse_subspaces(json::parse("[[1, 1, 0], [2, 2, 0]]"), 3), InputError);
  EXPECT_THROW(parse_subspaces(json::parse("[]"), 3), InputError);
  EXPECT_THROW(parse_subspaces(json::parse(R"({"mode": "float", "basis": [[1, 0, 0]]})"), 3), InputError);
}

TEST(Parse, Algebras) {
  EXPECT_EQ(parse_algebra<Exact>(read_json_file(kData / "algebras/m2-plus-m1.json")).dim(), 5u);
  EXPECT_EQ(parse_algebra<Exact>(read_json_file(kData / "algebras/m3.json")).dim(), 9u);
  EXPECT_EQ(parse_algebra<Exact>(read_json_file(kData / "algebras/square-zero-3.json")).dim(), 4u);
  EXPECT_EQ(parse_algebra<Exact>(read_json_file(kData / "algebras/dual-numbers.json")).dim(), 2u);
  EXPECT_THROW(parse_algebra<Exact>(json::parse(R"({"builtin": "weird"})")), InputError);
  EXPECT_THROW(parse_algebra<Exact>(json::parse("[1]")), InputError);
}

TEST(Parse, GroupFilesMatchBuiltins) {
  for (const auto& named : suite::all()) {
    auto g = load_group_file(kData / "groups" / (named.name + ".json"));
    EXPECT_EQ(g.name, named.name);
    EXPECT_EQ(g.rep.group->order(), named.rep.group->order()) << named.name;
    EXPECT_EQ(image_keys(g.rep), image_keys(named.rep)) << named.name;
  }
  auto table = load_group_file(kData / "groups/s3-table-regular.json");
  EXPECT_EQ(table.rep.group->order(), 6u);
  EXPECT_EQ(table.rep.dim(), 6u);
}

TEST(Parse, GroupFileErrors) {
  EXPECT_THROW(parse_group(json::parse(R"({"mode": "float", "matrix_generators": [[[1]]]})")), InputError);
  EXPECT_THROW(parse_group(json::parse(R"({"multiplication_table": [[0, 1], [1, 0]]})")), InputError);
  EXPECT_THROW(parse_group(json::parse(R"({"multiplication_table": [[0, 1], [1, 0]], "representation": [[[1]], [[2]]]})")),
               InputError);
  EXPECT_THROW(parse_group(json::parse(R"({"nothing": 1})")), InputError);
  EXPECT_THROW(read_json_file(kData / "missing.json"), InputError);
}

TEST(Parse, ProviderSpecs) {
  auto h = make_provider("finite:s3-perm.json", kData / "groups");
  EXPECT_EQ(h.provider->dim(), 3u);
  EXPECT_TRUE(h.rep.has_value());
  auto s = make_provider("sl2:3");
  EXPECT_EQ(s.provider->dim(), 4u);
  EXPECT_FALSE(s.rep.has_value());
  EXPECT_THROW(make_provider("sl2:x"), InputError);
  EXPECT_THROW(make_provider("lie:su2"), InputError);
}

TEST(Scenarios, ShippedResults) {
  EXPECT_EQ(run("a4-hopf-kernel.json").summary.at("all_agree"), true);
  auto axb = run("axb-demo.json");
  EXPECT_EQ(axb.summary.at("good_set"), json::array({"[1:0]"}));
  EXPECT_EQ(axb.summary.at("open_at_probe_point"), false);
  EXPECT_EQ(run("m21-gen-density.json").summary.at("good_count"), 200);
  EXPECT_EQ(run("m3-gen-density.json").summary.at("good_count"), 200);
  EXPECT_EQ(run("square-zero-gen-density.json").summary.at("good_count"), 0);
  auto psl2 = run("psl2-demo.json");
  EXPECT_EQ(psl2.summary.at("dichotomy"), true);
  EXPECT_EQ(psl2.summary.at("lie_cross_check"), true);
  EXPECT_EQ(run("s3-isotropy-scan.json").summary.at("good_count"), 500);
  auto cmp = run("s3-oracle-compare.json");
  EXPECT_EQ(cmp.summary.at("agree"), cmp.summary.at("comparisons"));
  EXPECT_EQ(run("s3-probe.json").summary.at("passed"), true);
  auto tc = run("s3-tannaka-check.json");
  EXPECT_FALSE(tc.unstable);
  EXPECT_EQ(tc.summary.at("per_target").size(), 2u);
  EXPECT_TRUE(run("sl2-tannaka-unstable.json").unstable);
}

TEST(Scenarios, Validation) {
  auto base = scenario("s3-probe.json");
  auto without_seed = base;
  without_seed.erase("seed");
  EXPECT_THROW(run_scenario(without_seed, kData / "scenarios"), InputError);
  auto unknown_key = base;
  unknown_key["epsilon"] = 0.1;
  EXPECT_THROW(run_scenario(unknown_key, kData / "scenarios"), InputError);
  auto unknown_kind = base;
  unknown_kind["kind"] = "voodoo";
  EXPECT_THROW(run_scenario(unknown_kind, kData / "scenarios"), InputError);
  auto bad_type = base;
  bad_type["probes"] = "many";
  EXPECT_THROW(run_scenario(bad_type, kData / "scenarios"), InputError);
  auto bad_name = base;
  bad_name["name"] = "../escape";
  EXPECT_THROW(run_scenario(bad_name, kData / "scenarios"), InputError);
  EXPECT_THROW(run_scenario(json::array(), kData / "scenarios"), InputError);
}

TEST(Scenarios, DeterministicOutput) {
  for (const auto& f : {"s3-isotropy-scan.json", "axb-demo.json", "m21-gen-density.json", "a4-hopf-kernel.json"}) {
    auto a = run(f), b = run(f);
    EXPECT_EQ(a.samples.to_csv(), b.samples.to_csv()) << f;
    EXPECT_EQ(a.summary, b.summary) << f;
  }
}

TEST(Reports, CsvQuotingAndFiles) {
  experiments::Table t{{"a", "b"}, {{"x,y", "say \"hi\""}, {"1", "2"}}};
  EXPECT_EQ(t.to_csv(), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,2\n");
  auto r = run("s3-probe.json");
  auto dir = std::filesystem::temp_directory_path() / "genrigid-test-reports";
  std::filesystem::remove_all(dir);
  experiments::write_report(r, dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "s3-probe.csv"));
  auto doc = read_json_file(dir / "s3-probe.json");
  EXPECT_EQ(doc.at("kind"), "openness-probe");
  EXPECT_EQ(doc.at("seed"), 20);
  EXPECT_EQ(doc.at("tool_version"), experiments::kVersion);
  std::filesystem::remove_all(dir);
}
