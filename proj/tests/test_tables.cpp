#include <stdexcept>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "spack/tables.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const spack::TableRow& row(const spack::TableArtifact& t, int n) {
  for (const auto& r : t.rows) {
    if (r.n == n) return r;
  }
  FAIL("missing row");
  return t.rows.front();
}

}  // namespace

TEST_CASE("table 1 against the golden file") {
  const auto t = spack::compute_table(1);
  CHECK(t.rows.size() == 20u);
  CHECK(t.to_csv() == slurp(std::string(SPACK_GOLDEN_DIR) + "/table1.csv"));
  const auto& r = row(t, 12);
  CHECK(r.path == 4);
  CHECK(r.cycles == std::vector<int>{4, 4, 5, 4});
}

TEST_CASE("table 2 against the golden file") {
  const auto t = spack::compute_table(2);
  CHECK(t.rows.size() == 16u);
  CHECK(t.to_csv() == slurp(std::string(SPACK_GOLDEN_DIR) + "/table2.csv"));
  CHECK(row(t, 11).cycles == std::vector<int>{4, 5, 6});
  CHECK(row(t, 11).path == 4);
  CHECK(row(t, 3).path == 2);
  CHECK(row(t, 3).cycles == std::vector<int>{3, 3, 3});
}

TEST_CASE("rows are internally consistent") {
  for (int id : {1, 2}) {
    const auto t = spack::compute_table(id);
    for (const auto& r : t.rows) {
      // Every column shares the path value.
      for (int p : r.path_by_column) CHECK(p == r.path);
      for (std::size_t i = 0; i < r.cycles.size(); ++i) {
        const auto g = spack::GraphSpec::cycle(r.n);
        CHECK(spack::validate(g, t.layout.representatives[i], r.witnesses[i]).ok());
        CHECK(r.witnesses[i].max_color() == r.cycles[i]);
        CHECK(r.cycles[i] >= r.path);
      }
    }
  }
}

TEST_CASE("csv is deterministic, json carries metadata") {
  const auto a = spack::compute_table(2);
  const auto b = spack::compute_table(2);
  CHECK(a.to_csv() == b.to_csv());
  const auto j = a.to_json();
  CHECK(j["table"] == 2);
  CHECK(j["tool_version"] == spack::kToolVersion);
  CHECK(j["columns"].size() == 3u);
  CHECK(j["columns"][1]["representative"] == "1,3,4,5");
  CHECK(j["rows"].size() == 16u);
  CHECK(j["rows"][0]["witnesses"].size() == 3u);
  CHECK(j.contains("runtime_seconds"));
  CHECK(j.contains("tail_assumption"));
}

TEST_CASE("layouts") {
  CHECK(spack::table_layout(1).families.size() == 4u);
  CHECK(spack::table_layout(2).orders.back() == 27);
  CHECK_THROWS_AS(spack::table_layout(3), std::invalid_argument);
}
