// afmtool: AFM solutions, oracle eigenstates and reproduction tables.
//
// Exit codes: 0 success, 1 `table --strict` with rows outside tolerance,
// 2 no bound state, 64 usage, 70 numerical failure, 73 output not writable.

#include "afm/cli/commands.hpp"
#include "afm/cli/tables.hpp"
#include "afm/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit : int {
  kOk = 0,
  kOutOfTolerance = 1,
  kNoBoundState = 2,
  kUsage = 64,
  kSoftware = 70,
  kCantCreate = 73,
};

struct Options {
  std::string format = "json";
  bool format_set = false;
  std::string out;
};

afm::cli::Format format_of(const std::string& name) {
  const auto f = afm::cli::parse_format(name);
  if (!f) {
    throw afm::DomainError(fmt::format("unknown format '{}' (expected csv or json)", name));
  }
  return *f;
}

int emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return kOk;
  }
  std::ofstream file(opt.out, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "afmtool: cannot write " << opt.out << '\n';
    return kCantCreate;
  }
  return kOk;
}

std::string record_text(const nlohmann::ordered_json& j, afm::cli::Format f) {
  if (f == afm::cli::Format::Json) {
    return j.dump(2) + "\n";
  }
  std::ostringstream head;
  std::ostringstream row;
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    head << (first ? "" : ",") << key;
    row << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
    first = false;
  }
  return head.str() + "\n" + row.str() + "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auxiliary field method: AFM solutions, numeric eigenstates and reproduction tables"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Options opt;
  bool help_units = false;
  app.add_flag("--help-units", help_units, "Print the reduced units and JSON key meanings");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out, "Write output to this path instead of stdout");

  std::string family;
  std::string aux;
  int n = 0;
  int l = 0;
  std::optional<double> k;

  auto* solve = app.add_subcommand("solve", "Closed-form AFM solution and trial-state observables");
  solve->add_option("family", family, "linear | log | exp")->required();
  solve->add_option("aux", aux, "coulomb | quadratic")->required();
  solve->add_option("n", n, "Radial quantum number")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("l", l, "Orbital angular momentum")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--k", k, "Depth of the exponential well");

  std::string table_id;
  std::string table_format;
  bool strict = false;
  auto* table = app.add_subcommand("table", "Reproduction table with reference values");
  table->add_option("id", table_id, "Table id")->required();
  table->add_option("format", table_format, "csv | json (same as --format)")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--strict", strict, "Exit with status 1 if any row misses its tolerance");

  std::optional<double> r_max;
  int samples = 2000;
  auto* wave = app.add_subcommand("wavefunction", "Sampled normalized wavefunction psi(r)");
  wave->add_option("family", family, "linear | log | exp")->required();
  wave->add_option("aux", aux, "exact | coulomb | quadratic")->required();
  wave->add_option("n", n, "Radial quantum number")->required()->check(CLI::NonNegativeNumber);
  wave->add_option("l", l, "Orbital angular momentum")->required()->check(CLI::NonNegativeNumber);
  wave->add_option("--k", k, "Depth of the exponential well");
  wave->add_option("--r-max", r_max, "Outer radius (default: where the density becomes negligible)");
  wave->add_option("--samples", samples, "Number of sample points")->check(CLI::Range(2, 10000000));

  int grid_points = afm::SolverConfig{}.grid_points;
  auto* oracle = app.add_subcommand("oracle", "Numeric eigenstate of the radial equation");
  oracle->add_option("family", family, "linear | log | exp")->required();
  oracle->add_option("n", n, "Radial quantum number")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("l", l, "Orbital angular momentum")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--k", k, "Depth of the exponential well");
  oracle->add_option("--r-max", r_max, "Outer radius of the grid (default: automatic)");
  oracle->add_option("--grid-points", grid_points, "Grid intervals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  opt.format_set = app.get_option("--format")->count() > 0;

  if (help_units) {
    return emit(opt, afm::cli::units_text());
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (solve->parsed()) {
      return emit(opt, record_text(afm::cli::solve_record(family, aux, {n, l}, k), format_of(opt.format)));
    }
    if (table->parsed()) {
      const auto id = afm::cli::parse_table_id(table_id);
      if (!id) {
        std::cerr << "afmtool: unknown table '" << table_id << "'; expected one of:";
        for (const auto t : afm::cli::all_tables()) {
          std::cerr << ' ' << afm::cli::to_string(t);
        }
        std::cerr << '\n';
        return kUsage;
      }
      std::string name = opt.format_set ? opt.format : "csv";
      if (!table_format.empty()) {
        if (opt.format_set && table_format != opt.format) {
          std::cerr << "afmtool: conflicting formats '" << table_format << "' and --format " << opt.format << '\n';
          return kUsage;
        }
        name = table_format;
      }
      const afm::cli::Table t = afm::cli::build_table(*id);
      std::ostringstream os;
      afm::cli::write_table(os, t, format_of(name));
      const int rc = emit(opt, os.str());
      if (rc != kOk) {
        return rc;
      }
      if (const auto bad = t.failures(); bad > 0) {
        std::cerr << "afmtool: " << bad << " row(s) of " << table_id << " outside tolerance\n";
        return strict ? kOutOfTolerance : kOk;
      }
      return kOk;
    }
    if (wave->parsed()) {
      const auto pts = afm::cli::wavefunction_samples(family, aux, {n, l}, k, r_max, samples);
      const afm::cli::Format f = opt.format_set ? format_of(opt.format) : afm::cli::Format::Csv;
      std::string text;
      if (f == afm::cli::Format::Csv) {
        text = "r,psi\n";
        for (const auto& [r, psi] : pts) {
          text += fmt::format("{:.10g},{:.10g}\n", r, psi);
        }
      } else {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& [r, psi] : pts) {
          rows.push_back({{"r", r}, {"psi", psi}});
        }
        text = rows.dump(2) + "\n";
      }
      return emit(opt, text);
    }
    if (oracle->parsed()) {
      afm::SolverConfig cfg;
      cfg.grid_points = grid_points;
      if (r_max) {
        cfg.r_max = *r_max;
      }
      afm::validate(cfg);
      return emit(opt, record_text(afm::cli::oracle_record(family, {n, l}, k, cfg), format_of(opt.format)));
    }
  } catch (const afm::NoBoundState& e) {
    nlohmann::ordered_json j;
    j["status"] = "no-bound-state";
    j["reason"] = afm::to_string(e.reason());
    j["message"] = e.what();
    std::cout << j.dump() << '\n';
    return kNoBoundState;
  } catch (const afm::DomainError& e) {
    std::cerr << "afmtool: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "afmtool: numerical failure: " << e.what() << '\n';
    return kSoftware;
  }
  return kUsage;
}
