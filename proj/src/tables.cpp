#include "spack/tables.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "spack/solver.hpp"

namespace spack {

TableLayout table_layout(int id) {
  const auto fam = [](const char* t) { return SequenceFamily::parse(t); };
  TableLayout layout;
  layout.id = id;
  if (id == 1) {
    layout.orders = {3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41};
    layout.families = {fam("1,2,4,4"), fam("1,2,4,5"), fam("1,2,4,6"), fam("1,2,5,5")};
  } else if (id == 2) {
    layout.orders = {3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 15, 17, 19, 22, 23, 27};
    layout.families = {fam("1,3,4,4"), fam("1,3,4,5"), fam("1,3,5,5")};
  } else {
    throw std::invalid_argument("unknown table " + std::to_string(id) + " (expected 1 or 2)");
  }
  for (const auto& f : layout.families) layout.representatives.push_back(enumerate_family(f).front());
  return layout;
}

TableArtifact compute_table(int id) {
  const auto start = std::chrono::steady_clock::now();
  TableArtifact table;
  table.layout = table_layout(id);
  for (int n : table.layout.orders) {
    TableRow row{n, 0, {}, {}, {}};
    for (const auto& seq : table.layout.representatives) {
      row.path_by_column.push_back(chromatic(GraphSpec::path(n), seq).chromatic);
      auto cyc = chromatic(GraphSpec::cycle(n), seq);
      row.cycles.push_back(cyc.chromatic);
      row.witnesses.push_back(std::move(cyc.witness));
    }
    row.path = row.path_by_column.front();
    table.rows.push_back(std::move(row));
  }
  table.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return table;
}

std::string TableArtifact::to_csv() const {
  std::ostringstream os;
  os << "n,P";
  for (std::size_t i = 0; i < layout.families.size(); ++i) os << ",S" << i + 1;
  os << '\n';
  for (const auto& row : rows) {
    os << row.n << ',' << row.path;
    for (int c : row.cycles) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

nlohmann::json TableArtifact::to_json() const {
  nlohmann::json j;
  j["table"] = layout.id;
  j["tool_version"] = kToolVersion;
  j["runtime_seconds"] = runtime_seconds;
  j["tail_assumption"] = "each family is represented by its constant-tail canonical sequence";
  j["columns"] = nlohmann::json::array();
  for (std::size_t i = 0; i < layout.families.size(); ++i) {
    j["columns"].push_back({{"label", "S" + std::to_string(i + 1)},
                            {"family", layout.families[i].to_string()},
                            {"representative", layout.representatives[i].to_string()}});
  }
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r{{"n", row.n}, {"path", row.path}, {"path_by_column", row.path_by_column},
                     {"cycles", row.cycles}};
    r["witnesses"] = nlohmann::json::array();
    for (const auto& w : row.witnesses) r["witnesses"].push_back(w.to_string());
    j["rows"].push_back(std::move(r));
  }
  return j;
}

}  // namespace spack
