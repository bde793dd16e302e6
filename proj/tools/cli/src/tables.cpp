#include "afm/cli/tables.hpp"

#include "afm/auxfield.hpp"
#include "afm/cli/golden.hpp"
#include "afm/errors.hpp"
#include "afm/exact.hpp"
#include "afm/observables.hpp"
#include "afm/oracle.hpp"
#include "afm/overlaps.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>

namespace afm::cli {

namespace {

constexpr std::array kTableNames{
    std::pair{TableId::OverlapHy, "overlap-hy"},   std::pair{TableId::ObsHy, "obs-hy"},
    std::pair{TableId::RatiosHy, "ratios-hy"},     std::pair{TableId::OverlapHo, "overlap-ho"},
    std::pair{TableId::ObsHo, "obs-ho"},           std::pair{TableId::RatiosHo, "ratios-ho"},
    std::pair{TableId::Eckart, "eckart"},          std::pair{TableId::LogResults, "log-results"},
    std::pair{TableId::ExpResults, "exp-results"}, std::pair{TableId::FigWavefunctions, "fig-wavefunctions"},
};

const std::vector<std::string> kCheckColumns{"computed", "reference", "diff", "tol", "status", "note"};

// Linear family in the reduced units 2m = a = 1.
const PotentialModel kLinear = LinearPotential{};

constexpr int kLargeN = 200;

struct Check {
  std::vector<Cell> keys;
  std::optional<double> reference;
  double tol = 0.0;
  std::function<std::optional<double>(std::string&)> compute;
};

std::vector<Cell> evaluate(Check c) {
  std::optional<double> computed;
  std::string note;
  bool failed = false;
  try {
    computed = c.compute(note);
  } catch (const NoBoundState& e) {
    computed.reset();
    note = to_string(e.reason());
  } catch (const std::exception& e) {
    failed = true;
    note = e.what();
  }

  std::string status;
  Cell diff;
  if (failed) {
    status = "failed";
  } else if (computed && c.reference) {
    const double d = std::abs(*computed - *c.reference);
    diff = d;
    status = d <= c.tol ? "ok" : "out-of-tolerance";
  } else if (!computed && !c.reference) {
    status = "ok";
  } else {
    status = "mismatch";
  }

  std::vector<Cell> row = std::move(c.keys);
  row.emplace_back(computed ? Cell{*computed} : Cell{});
  row.emplace_back(c.reference ? Cell{*c.reference} : Cell{});
  row.push_back(diff);
  row.emplace_back(c.tol);
  row.emplace_back(status);
  row.emplace_back(note);
  return row;
}

Table checked_table(TableId id, std::vector<std::string> keys, std::vector<Check> checks) {
  Table t{id, std::move(keys), {}};
  t.columns.insert(t.columns.end(), kCheckColumns.begin(), kCheckColumns.end());
  t.rows.reserve(checks.size());
  for (auto& c : checks) {
    t.rows.push_back(evaluate(std::move(c)));
  }
  return t;
}

std::optional<double> reference_of(const nlohmann::json& entry) {
  if (entry.is_null()) {
    return std::nullopt;
  }
  return printed_value(entry);
}

template <class K, class V>
class Memo {
public:
  explicit Memo(std::function<V(const K&)> make) : make_(std::move(make)) {}

  const V& operator()(const K& key) {
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, make_(key)).first;
    }
    return it->second;
  }

private:
  std::function<V(const K&)> make_;
  std::map<K, V> cache_;
};

using StateKey = std::pair<int, int>; // (n, l)

RadialFunction linear_exact_function(StateKey key) {
  const QuantumNumbers q{key.first, key.second};
  RadialFunction f = solve_radial(kLinear, q);
  if (q.l == 0) {
    const exact::LinearSState s(0.5, 1.0, q.n);
    f = tabulate([&s](double r) { return s.radial(r); }, f.grid, s.energy(), q);
  }
  return f;
}

double squared_overlap(const RadialFunction& exact_state, const AfmSolution& sol) {
  const RadialFunction trial =
      tabulate([&sol](double r) { return afm_radial(sol, r); }, exact_state.grid, sol.energy, sol.q);
  const double o = numeric_overlap(exact_state, trial);
  return o * o;
}

AuxiliaryKind kind_of(std::string_view aux) {
  return aux == "coulomb" ? AuxiliaryKind::Coulomb : AuxiliaryKind::Quadratic;
}

// ---------------------------------------------------------------------------

Table overlap_table(TableId id, AuxiliaryKind kind) {
  const auto& rows = golden().at(to_string(id));
  std::vector<Check> checks;
  for (const auto& e : rows) {
    const int n = e.at("n").get<int>();
    const int np = e.at("n_prime").get<int>();
    const int l = e.at("l").get<int>();
    const auto printed = e.at("value").get<std::string>();
    checks.push_back({{Cell{static_cast<long long>(n)}, Cell{static_cast<long long>(np)},
                       Cell{static_cast<long long>(l)}},
                      printed_value(e.at("value")), last_digit_unit(printed), [=](std::string&) {
                        const double f = afm_pair_overlap(kind, n, np, l);
                        return std::optional<double>(f * f);
                      }});
  }
  return checked_table(id, {"n", "n_prime", "l"}, std::move(checks));
}

std::optional<double> observable_ratio(std::string_view quantity, const ObservableSet& afm, const ObservableSet& ex,
                                       double afm_energy) {
  const auto ratio = [](double a, double b) { return std::optional<double>(a / b); };
  if (quantity == "psi0_sq") return ratio(afm.psi0_sq.value(), ex.psi0_sq.value());
  if (quantity == "r") return ratio(afm.r(1), ex.r(1));
  if (quantity == "r2") return ratio(afm.r(2), ex.r(2));
  if (quantity == "r3") return ratio(afm.r(3), ex.r(3));
  if (quantity == "r4") return ratio(afm.r(4), ex.r(4));
  if (quantity == "p2") return ratio(afm.p2, ex.p2);
  if (quantity == "p4") return ratio(afm.p4, ex.p4);
  if (quantity == "mean_h") return ratio(afm.mean_h.value(), ex.mean_h.value());
  if (quantity == "energy") return ratio(afm_energy, ex.mean_h.value());
  throw DomainError(fmt::format("unknown observable '{}'", quantity));
}

double asymptotic_value(const nlohmann::json& a, int n) {
  if (a.at("form") == "linear") {
    return printed_value(a.at("slope")) * n + printed_value(a.at("intercept"));
  }
  return printed_value(a.at("constant")) + printed_value(a.at("coefficient")) / std::pow(n, a.at("power").get<int>());
}

Table observables_table(TableId id, AuxiliaryKind kind) {
  const bool coulomb = kind == AuxiliaryKind::Coulomb;
  const double tol = coulomb ? 0.003 : 0.002;
  const double overlap_tol = 0.003;
  const double asymptotic_tol = 0.002;

  auto exact_state = std::make_shared<Memo<StateKey, RadialFunction>>(linear_exact_function);

  std::vector<Check> checks;
  for (const auto& row : golden().at(to_string(id))) {
    const auto quantity = row.at("quantity").get<std::string>();
    const auto& values = row.at("n");
    for (std::size_t n = 0; n < values.size(); ++n) {
      const int ni = static_cast<int>(n);
      Check c{{Cell{quantity}, Cell{static_cast<long long>(n)}}, printed_value(values[n]), tol, {}};
      if (quantity == "overlap") {
        c.tol = overlap_tol;
        c.compute = [=](std::string&) {
          const AfmSolution sol = afm_solve(kLinear, kind, {ni, 0});
          return std::optional<double>(squared_overlap((*exact_state)({ni, 0}), sol));
        };
      } else {
        c.compute = [=](std::string&) {
          const AfmSolution sol = afm_solve(kLinear, kind, {ni, 0});
          return observable_ratio(quantity, afm_observable_set(kLinear, sol, {ni, 0}),
                                  exact::linear_s_observables(0.5, 1.0, ni), sol.energy);
        };
      }
      checks.push_back(std::move(c));
    }
    if (row.contains("asymptotic")) {
      const auto& a = row.at("asymptotic");
      const double expected = asymptotic_value(a, kLargeN);
      const double t = a.at("form") == "linear" ? asymptotic_tol * std::abs(expected) : asymptotic_tol;
      checks.push_back({{Cell{quantity}, Cell{static_cast<long long>(kLargeN)}}, expected, t,
                        [=](std::string& note) {
                          note = "asymptotic form at n = 200";
                          const AfmSolution sol = afm_solve(kLinear, kind, {kLargeN, 0});
                          return observable_ratio(quantity, afm_observable_set(kLinear, sol, {kLargeN, 0}),
                                                  exact::linear_s_observables(0.5, 1.0, kLargeN), sol.energy);
                        }});
    }
  }

  if (!coulomb) {
    // Smallest n at which the overlap with the exact state drops below a level.
    auto overlaps = std::make_shared<Memo<int, double>>([exact_state, kind](const int& n) {
      return squared_overlap((*exact_state)({n, 0}), afm_solve(kLinear, kind, {n, 0}));
    });
    for (const auto& e : golden().at("overlap-thresholds")) {
      const auto below = e.at("below").get<std::string>();
      const double level = printed_value(e.at("below"));
      checks.push_back({{Cell{"first_n_overlap_below_" + below}, Cell{}},
                        static_cast<double>(e.at("first_n").get<int>()), 0.0, [=](std::string&) {
                          for (int n = 0; n <= 40; ++n) {
                            if ((*overlaps)(n) < level) {
                              return std::optional<double>(n);
                            }
                          }
                          throw NumericalFailure("overlap stays above the level up to n = 40");
                        }});
    }
  }
  return checked_table(id, {"quantity", "n"}, std::move(checks));
}

Table ratios_table(TableId id, AuxiliaryKind kind) {
  const bool coulomb = kind == AuxiliaryKind::Coulomb;
  auto exact_state = std::make_shared<Memo<StateKey, RadialFunction>>(linear_exact_function);
  std::vector<Check> checks;
  const auto& g = golden().at(to_string(id));
  for (const std::string quantity : {"energy", "r"}) {
    const double tol = (quantity == "r" && coulomb) ? 0.003 : 0.002;
    for (const auto& [lkey, values] : g.at(quantity).items()) {
      const int l = std::stoi(lkey);
      for (std::size_t n = 0; n < values.size(); ++n) {
        const int ni = static_cast<int>(n);
        checks.push_back({{Cell{quantity}, Cell{static_cast<long long>(l)}, Cell{static_cast<long long>(n)}},
                          printed_value(values[n]), tol, [=](std::string&) {
                            const QuantumNumbers q{ni, l};
                            const AfmSolution sol = afm_solve(kLinear, kind, q);
                            if (quantity == "energy") {
                              const double e = l == 0 ? exact::LinearSState(0.5, 1.0, ni).energy()
                                                      : (*exact_state)({ni, l}).energy;
                              return std::optional<double>(sol.energy / e);
                            }
                            const double r_exact = l == 0 ? exact::linear_s_observables(0.5, 1.0, ni).r(1)
                                                          : numeric_observables((*exact_state)({ni, l}), kLinear).r(1);
                            return std::optional<double>(afm_observable_set(kLinear, sol, q).r(1) / r_exact);
                          }});
      }
    }
  }
  return checked_table(id, {"quantity", "l", "n"}, std::move(checks));
}

Table eckart_table() {
  auto ground = std::make_shared<Memo<StateKey, RadialFunction>>(linear_exact_function);
  std::vector<Check> checks;
  for (const auto& e : golden().at("eckart")) {
    const auto trial = e.at("trial").get<std::string>();
    const AuxiliaryKind kind = kind_of(trial);
    for (const std::string quantity : {"overlap", "b_e", "b_e_prime"}) {
      checks.push_back({{Cell{trial}, Cell{quantity}}, printed_value(e.at(quantity)), 0.003, [=](std::string&) {
                          const AfmSolution sol = afm_solve(kLinear, kind, {0, 0});
                          if (quantity == "overlap") {
                            return std::optional<double>(squared_overlap((*ground)({0, 0}), sol));
                          }
                          EckartInput in;
                          in.h_trial = mean_hamiltonian(kLinear, sol, {0, 0});
                          if (quantity == "b_e") {
                            in.e0 = exact::LinearSState(0.5, 1.0, 0).energy();
                            in.e1 = exact::LinearSState(0.5, 1.0, 1).energy();
                            return eckart_bound(in).b_e;
                          }
                          in.e1_lower = afm_solve(kLinear, AuxiliaryKind::Coulomb, {1, 0}).energy;
                          in.e1_upper = afm_solve(kLinear, AuxiliaryKind::Quadratic, {1, 0}).energy;
                          in.e0_lower = afm_solve(kLinear, AuxiliaryKind::Coulomb, {0, 0}).energy;
                          return eckart_bound(in).b_e_prime;
                        }});
    }
  }
  return checked_table(TableId::Eckart, {"trial", "quantity"}, std::move(checks));
}

struct OracleState {
  RadialFunction f;
  ObservableSet obs;
};

constexpr std::array kResultQuantities{"r_energy", "r_r2", "r_p2", "overlap"};

std::optional<double> result_cell(const PotentialModel& v, const OracleState& ex, AuxiliaryKind kind,
                                  QuantumNumbers q, std::string_view quantity) {
  const AfmSolution sol = afm_solve(v, kind, q);
  if (quantity == "overlap") {
    return squared_overlap(ex.f, sol);
  }
  if (quantity == "r_energy") {
    return sol.energy / ex.f.energy;
  }
  const ObservableSet a = afm_observable_set(v, sol, q);
  return quantity == "r_r2" ? a.r(2) / ex.obs.r(2) : a.p2 / ex.obs.p2;
}

Table log_table() {
  const PotentialModel v = LogarithmicPotential{};
  auto oracle = std::make_shared<Memo<StateKey, OracleState>>([v](const StateKey& k) {
    RadialFunction f = solve_radial(v, {k.first, k.second});
    ObservableSet obs = numeric_observables(f, v);
    return OracleState{std::move(f), std::move(obs)};
  });
  std::vector<Check> checks;
  for (const auto& e : golden().at("log-results")) {
    const int l = e.at("l").get<int>();
    const int n = e.at("n").get<int>();
    for (const std::string aux : {"quadratic", "coulomb"}) {
      for (std::size_t i = 0; i < kResultQuantities.size(); ++i) {
        const std::string quantity = kResultQuantities[i];
        checks.push_back({{Cell{static_cast<long long>(l)}, Cell{static_cast<long long>(n)}, Cell{aux},
                           Cell{quantity}},
                          reference_of(e.at(aux)[i]), 0.003, [=](std::string&) {
                            return result_cell(v, (*oracle)({n, l}), kind_of(aux), {n, l}, quantity);
                          }});
      }
    }
  }
  return checked_table(TableId::LogResults, {"l", "n", "basis", "quantity"}, std::move(checks));
}

Table exp_table() {
  using ExpKey = std::tuple<double, int, int>; // (k, n, l)
  auto oracle = std::make_shared<Memo<ExpKey, OracleState>>([](const ExpKey& key) {
    const PotentialModel v = ExponentialPotential{std::get<0>(key)};
    RadialFunction f = solve_radial(v, {std::get<1>(key), std::get<2>(key)});
    ObservableSet obs = numeric_observables(f, v);
    return OracleState{std::move(f), std::move(obs)};
  });
  std::vector<Check> checks;
  for (const auto& e : golden().at("exp-results")) {
    const double k = e.at("k").get<double>();
    const int l = e.at("l").get<int>();
    const int n = e.at("n").get<int>();
    const PotentialModel v = ExponentialPotential{k};
    const std::vector<Cell> keys{Cell{k}, Cell{static_cast<long long>(l)}, Cell{static_cast<long long>(n)}};

    const double energy = printed_value(e.at("energy"));
    auto energy_keys = keys;
    energy_keys.insert(energy_keys.end(), {Cell{"exact"}, Cell{"energy"}});
    checks.push_back({std::move(energy_keys), energy, std::abs(energy) < 0.1 ? 0.001 : 0.002,
                      [=](std::string&) { return std::optional<double>((*oracle)({k, n, l}).f.energy); }});

    for (const std::string aux : {"quadratic", "coulomb"}) {
      for (std::size_t i = 0; i < kResultQuantities.size(); ++i) {
        const std::string quantity = kResultQuantities[i];
        const auto& printed = e.at(aux);
        const std::optional<double> reference = printed.is_null() ? std::nullopt : reference_of(printed[i]);
        double tol = reference ? 0.01 * std::abs(*reference) : 0.0;
        if (reference && *reference > 50.0) {
          tol = 0.5;
        }
        auto cell_keys = keys;
        cell_keys.insert(cell_keys.end(), {Cell{aux}, Cell{quantity}});
        checks.push_back({std::move(cell_keys), reference, tol, [=](std::string&) {
                            return result_cell(v, (*oracle)({k, n, l}), kind_of(aux), {n, l}, quantity);
                          }});
      }
    }
  }
  return checked_table(TableId::ExpResults, {"k", "l", "n", "basis", "quantity"}, std::move(checks));
}

Table figure_table() {
  Table t{TableId::FigWavefunctions, {"basis", "n", "r", "psi"}, {}};
  constexpr double r_max = 10.0;
  constexpr int intervals = 200;
  const double inv_sqrt_4pi = 0.5 / std::sqrt(std::numbers::pi);
  for (const std::string basis : {"exact", "coulomb", "quadratic"}) {
    for (int n = 0; n <= 1; ++n) {
      std::function<double(double)> psi;
      if (basis == "exact") {
        psi = [s = exact::LinearSState(0.5, 1.0, n)](double r) { return s.psi(r); };
      } else {
        psi = [sol = afm_solve(kLinear, kind_of(basis), {n, 0}), inv_sqrt_4pi](double r) {
          return afm_radial(sol, r) * inv_sqrt_4pi;
        };
      }
      for (int i = 0; i <= intervals; ++i) {
        const double r = r_max * i / intervals;
        t.rows.push_back({Cell{basis}, Cell{static_cast<long long>(n)}, Cell{r}, Cell{psi(r)}});
      }
    }
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "-";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return format_real(v);
        }
      },
      c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) {
            return format_real(v);
          }
          return std::stod(format_real(v));
        } else {
          return v;
        }
      },
      c);
}

} // namespace

std::string to_string(TableId id) {
  for (const auto& [k, name] : kTableNames) {
    if (k == id) {
      return name;
    }
  }
  return "unknown";
}

std::optional<TableId> parse_table_id(std::string_view name) {
  for (const auto& [k, n] : kTableNames) {
    if (name == n) {
      return k;
    }
  }
  return std::nullopt;
}

const std::vector<TableId>& all_tables() {
  static const std::vector<TableId> ids = [] {
    std::vector<TableId> v;
    for (const auto& entry : kTableNames) {
      v.push_back(entry.first);
    }
    return v;
  }();
  return ids;
}

bool Table::checked() const { return std::find(columns.begin(), columns.end(), "status") != columns.end(); }

std::size_t Table::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw DomainError(fmt::format("table {} has no column '{}'", to_string(id), name));
  }
  return static_cast<std::size_t>(it - columns.begin());
}

std::size_t Table::failures() const {
  if (!checked()) {
    return 0;
  }
  const std::size_t s = column("status");
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const auto& row) {
    return std::get<std::string>(row[s]) != "ok";
  }));
}

Table build_table(TableId id) {
  switch (id) {
  case TableId::OverlapHy: return overlap_table(id, AuxiliaryKind::Coulomb);
  case TableId::OverlapHo: return overlap_table(id, AuxiliaryKind::Quadratic);
  case TableId::ObsHy: return observables_table(id, AuxiliaryKind::Coulomb);
  case TableId::ObsHo: return observables_table(id, AuxiliaryKind::Quadratic);
  case TableId::RatiosHy: return ratios_table(id, AuxiliaryKind::Coulomb);
  case TableId::RatiosHo: return ratios_table(id, AuxiliaryKind::Quadratic);
  case TableId::Eckart: return eckart_table();
  case TableId::LogResults: return log_table();
  case TableId::ExpResults: return exp_table();
  case TableId::FigWavefunctions: return figure_table();
  }
  throw DomainError("unknown table id");
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_real(double x) {
  if (x == 0.0) {
    return "0";
  }
  return fmt::format("{:.4g}", x);
}

void write_table(std::ostream& out, const Table& t, Format f) {
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "," : "") << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_field(cell_text(row[i]));
      }
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["table"] = to_string(t.id);
  doc["golden_version"] = golden_version();
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      r[t.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

} // namespace afm::cli
