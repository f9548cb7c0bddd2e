#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "ccsym/errors.hpp"
#include "ccsym/io.hpp"

using namespace ccsym;

TEST_CASE("rounding to fifteen digits") {
  CHECK(round15(0.1 + 0.2) == 0.3);
  CHECK_FALSE(std::signbit(round15(-0.0)));
  CHECK(round15(1e-300) == 1e-300);
  CHECK(format_number(1.0 / 3, 6) == "0.333333");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("configuration parsing") {
  const auto cfg = parse_configuration(Json::parse(R"({"masses":[1,2],"positions":[[0,0],[1,0.5]]})"));
  CHECK(cfg.size() == 2);
  CHECK(cfg.masses() == std::vector<double>{1, 2});
  CHECK(cfg.z()[3] == 0.5);

  CHECK_THROWS_AS(parse_configuration(Json::parse(R"({"masses":[1]})")), InputError);
  CHECK_THROWS_AS(parse_configuration(Json::parse(R"([1,2])")), InputError);
  CHECK_THROWS_AS(parse_configuration(Json::parse(R"({"masses":["x"],"positions":[[0,0]]})")),
                  InputError);
  CHECK_THROWS_AS(parse_configuration(Json::parse(R"({"masses":[1],"positions":[[0]]})")),
                  InputError);
  CHECK_THROWS_AS(parse_configuration(Json::parse(R"({"masses":[1,1],"positions":[[0,0]]})")),
                  InputError);
  CHECK_THROWS_AS(parse_configuration(Json::parse(R"({"masses":[1,1],"positions":[[0,0],[0,0]]})")),
                  CollisionError);
}

TEST_CASE("configuration files") {
  CHECK_THROWS_AS(load_configuration("/nonexistent/config.json"), IoError);
  const auto dir = std::filesystem::temp_directory_path();
  const auto bad = (dir / "ccsym_bad_config.json").string();
  write_file(bad, "{not json");
  CHECK_THROWS_AS(load_configuration(bad), InputError);
  const auto good = (dir / "ccsym_good_config.json").string();
  write_file(good, R"({"masses":[1,1],"positions":[[-1,0],[1,0]]})");
  CHECK(load_configuration(good).size() == 2);
  std::filesystem::remove(bad);
  std::filesystem::remove(good);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/out.txt", "x"), IoError);
}

TEST_CASE("character table JSON") {
  const Json j = to_json(character_table(dihedral_group(3, DihedralLabels::Triangle)));
  CHECK(j["classes"].size() == 3);
  CHECK(j["sizes"] == Json({1, 2, 3}));
  CHECK(j["degrees"] == Json({1, 1, 2}));
  REQUIRE(j["values"].size() == 9);
  CHECK(j["values"][8] == Json({0.0, 0.0}));
  CHECK(j["values"][6] == Json({2.0, 0.0}));
}

TEST_CASE("spectral and stability JSON") {
  const auto p = square_problem();
  const Json s = to_json(symmetry_eigenvalues(hessian_scaled_potential(p.config), p.rep, p.table));
  CHECK(s["method"] == "projector");
  CHECK(s["eigenvalues"][0].contains("multiplicity"));
  CHECK(s["eigenvalues"][0].contains("irrep"));

  const Json st = to_json(classify({{0, 1}, {0, -1}}));
  CHECK(st["verdict"] == "spectrally-stable-candidate");
  CHECK(st["eigenvalues"].size() == 2);
  CHECK(st["elliptic_dimension"] == 2);
}

TEST_CASE("representation JSON") {
  const auto p = square_problem();
  const Json r = to_json(p.rep);
  REQUIRE(r.size() == 8);
  CHECK(r[0]["element"] == "e");
  CHECK(r[0]["permutation"] == Json({1, 2, 3, 4}));
  CHECK(r[0]["block"] == Json({{1.0, 0.0}, {0.0, 1.0}}));
}

TEST_CASE("scan CSV") {
  std::ostringstream out;
  write_scan_csv(out, triangle_scan(0.5, 1.5, 3, 1), degenerate_mass_scan(0.1, 2.0, 100));
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "m,lambda3,lambda4,lambda5,f1,f2,f3");
  CHECK(lines[1].rfind("0.5,", 0) == 0);
  CHECK(lines[4].rfind("# degenerate_mass=", 0) == 0);
}
