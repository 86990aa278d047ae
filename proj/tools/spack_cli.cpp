// spack: S-packing chromatic numbers of paths and cycles.
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "spack/coloring.hpp"
#include "spack/criticality.hpp"
#include "spack/formulas.hpp"
#include "spack/patterns.hpp"
#include "spack/solver.hpp"
#include "spack/tables.hpp"
#include "spack/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDiscrepancy = 1;
constexpr int kUsage = 2;

struct GraphArgs {
  int path = 0;
  int cycle = 0;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--path", path, "order of the path P_n")->check(CLI::PositiveNumber);
    auto* c = cmd->add_option("--cycle", cycle, "order of the cycle C_n")->check(CLI::Range(3, 1 << 20));
    p->excludes(c);
    c->excludes(p);
  }
  spack::GraphSpec graph() const {
    if (path > 0) return spack::GraphSpec::path(path);
    if (cycle > 0) return spack::GraphSpec::cycle(cycle);
    throw CLI::ValidationError("graph", "one of --path or --cycle is required");
  }
};

int write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return kUsage;
  }
  file << text;
  return file ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-packing colorings of paths and cycles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(spack::kToolVersion));

  std::string seq_text, family_text, pattern_text, format = "csv", out, theorem, coloring_text;
  int table_id = 0;
  int n_max = 0;
  bool witness = false;
  int result = kOk;

  auto* chromatic = app.add_subcommand("chromatic", "chi_S of P_n or C_n");
  GraphArgs chromatic_graph;
  chromatic->add_option("--seq", seq_text, "packing sequence, e.g. 1,2,4,4")->required();
  chromatic_graph.attach(chromatic);
  chromatic->add_flag("--witness", witness, "also print an optimal coloring");

  auto* table = app.add_subcommand("table", "recompute one of the small-cycle tables");
  auto* table_pos = table->add_option("id", table_id, "table id (1 or 2)");
  auto* table_opt = table->add_option("--table", table_id, "table id (1 or 2)");
  table_pos->excludes(table_opt);
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run one verification sweep");
  verify->add_option("--theorem", theorem, "sweep id")
      ->required()
      ->check(CLI::IsMember(spack::verification_ids()));
  verify->add_option("--n-max", n_max, "largest order checked (default 64 paths / 48 cycles)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "write the JSON report here");

  auto* certify = app.add_subcommand("certify", "prove a periodic pattern valid for every repetition count");
  certify->add_option("--pattern", pattern_text, "pattern, e.g. (1213124)^2(12131214)*")->required();
  auto* cert_seq = certify->add_option("--seq", seq_text, "packing sequence");
  auto* cert_fam = certify->add_option("--family", family_text, "family, every representative checked");
  cert_seq->excludes(cert_fam);

  auto* decide = app.add_subcommand("decide", "criticality verdict for P_n or C_n");
  GraphArgs decide_graph;
  decide->add_option("--seq", seq_text, "packing sequence")->required();
  decide_graph.attach(decide);

  auto* crossval = app.add_subcommand("crossval", "compare solver verdicts with a family's characterization");
  crossval->add_option("--family", family_text, "family, e.g. 1,2,[4-7],7")->required();
  crossval->add_option("--n-max", n_max, "largest cycle order")->check(CLI::Range(3, 4096));

  auto* formula = app.add_subcommand("formula", "closed-form value or bound for chi_S(P_n)");
  GraphArgs formula_graph;
  formula->add_option("--seq", seq_text, "packing sequence")->required();
  formula->add_option("--path", formula_graph.path, "order of the path")->required()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("validate", "check a coloring");
  GraphArgs check_graph;
  check->add_option("--seq", seq_text, "packing sequence")->required();
  check->add_option("--coloring", coloring_text, "digits or comma list")->required();
  check_graph.attach(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*chromatic) {
      const auto seq = spack::PackingSequence::parse(seq_text);
      const auto r = spack::chromatic(chromatic_graph.graph(), seq);
      std::cout << r.chromatic << '\n';
      if (witness) std::cout << r.witness.to_string() << '\n';
    } else if (*table) {
      if (table_id == 0) throw CLI::ValidationError("table", "a table id is required");
      const auto artifact = spack::compute_table(table_id);
      const auto text = format == "json" ? artifact.to_json().dump(2) + "\n" : artifact.to_csv();
      result = write_output(text, out);
    } else if (*verify) {
      const auto report = spack::run_verification(theorem, n_max);
      std::cout << (report.passed() ? "VERIFIED" : "DISCREPANCY") << ' ' << report.id << ": " << report.title
                << " (" << report.checks << " checks, " << report.failures.size() << " failures)\n";
      for (const auto& f : report.failures) std::cout << "  " << f << '\n';
      if (!out.empty()) {
        const int w = write_output(report.to_json().dump(2) + "\n", out);
        if (w != kOk) return w;
      }
      result = report.passed() ? kOk : kDiscrepancy;
    } else if (*certify) {
      const auto pattern = spack::PatternSpec::parse(pattern_text);
      std::vector<spack::PackingSequence> seqs;
      if (!family_text.empty()) {
        seqs = spack::enumerate_family(spack::SequenceFamily::parse(family_text));
      } else if (!seq_text.empty()) {
        seqs.push_back(spack::PackingSequence::parse(seq_text));
      } else {
        throw CLI::ValidationError("certify", "one of --seq or --family is required");
      }
      for (const auto& seq : seqs) {
        const auto cert = spack::certify_family(pattern, seq);
        std::cout << "S=(" << seq.to_string() << ") ";
        if (cert.proved) {
          std::cout << "PROVED " << cert.coverage << '\n';
          continue;
        }
        result = kDiscrepancy;
        std::cout << "REJECTED";
        if (cert.failing_exponents) {
          const auto c = spack::instantiate(pattern, *cert.failing_exponents);
          std::cout << " on C" << c.size() << " " << c.to_string();
        }
        if (cert.witness) {
          const auto& v = *cert.witness;
          std::cout << ": vertices " << v.u << " and " << v.v << " share color " << v.color << " at distance "
                    << v.distance;
        }
        std::cout << '\n';
      }
    } else if (*decide) {
      const auto seq = spack::PackingSequence::parse(seq_text);
      const auto g = decide_graph.graph();
      const auto v = g.is_cycle() ? spack::decide_cycle(seq, g.order()) : spack::decide_path(seq, g.order());
      std::cout << g.to_string() << " chi=" << v.chromatic << " critical=" << (v.is_critical ? "yes" : "no")
                << " vertex-critical=" << (v.is_vertex_critical ? "yes" : "no") << '\n';
    } else if (*crossval) {
      const auto report = spack::cross_validate(spack::SequenceFamily::parse(family_text), n_max > 0 ? n_max : 48);
      std::cout << report.to_json().dump(2) << '\n';
      result = report.clean() ? kOk : kDiscrepancy;
    } else if (*formula) {
      const auto seq = spack::PackingSequence::parse(seq_text);
      const auto f = spack::path_chromatic_formula(seq, formula_graph.path);
      switch (f.kind) {
        case spack::BoundKind::Exact:
          std::cout << "exact " << f.value;
          break;
        case spack::BoundKind::AtLeast:
          std::cout << "at-least " << f.value;
          break;
        case spack::BoundKind::Inapplicable:
          std::cout << "inapplicable";
          break;
      }
      std::cout << " (" << spack::to_string(f.source) << ")\n";
    } else if (*check) {
      const auto seq = spack::PackingSequence::parse(seq_text);
      const auto report = spack::validate(check_graph.graph(), seq, spack::Coloring::parse(coloring_text));
      if (report.ok()) {
        std::cout << "ok\n";
      } else {
        const auto& v = *report.violation;
        std::cout << "violation " << v.u << ' ' << v.v << " color " << v.color << " distance " << v.distance
                  << '\n';
        result = kDiscrepancy;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDiscrepancy;
  }
  return result;
}
