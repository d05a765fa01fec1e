// Command-line front end for the confined-atom solver: single solves, cavity
// sweeps, critical-radius searches, polarizabilities, level orderings,
// reference-table reproduction and a shooting-method cross check.
//
// Exit codes: 0 success, 1 reproduce/verify mismatch, 2 bad configuration,
// 3 solver failure, 4 sweep with too many failed points, 5 unbound state or
// no critical radius, 6 oracle bracket failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cavity/analysis.hpp"
#include "cavity/golden.hpp"
#include "cavity/hamiltonian.hpp"
#include "cavity/numerov.hpp"
#include "cavity/observables.hpp"

using nlohmann::json;
using namespace cavity;

namespace {

struct RunConfig {
  std::string command;
  std::string potential = "coulomb";
  double charge = 1.0;
  double screening = 0.1;
  std::vector<std::string> states;
  std::vector<double> radii;
  int grid_order = 0;  // resolved against the environment default
  double mapping_scale = 0.0;
  std::string format = "table";
  std::string output;
  bool with_moments = false;
  // command-specific knobs
  int mesh_points = 20000;
  std::string data_path = default_golden_data_path();
  std::string table_id = "all";
  int count = 10;
  double ordering_rc = 0.05;
  bool free_levels = false;
  int all_n = 0;
  double energy_tol = 1e-9;
};

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// "start:stop:count[:log]" -> list of radii
std::vector<double> expand_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4)
    throw ConfigError("range must be start:stop:count[:log|lin], got '" + spec + "'");
  const double start = std::stod(parts[0]);
  const double stop = std::stod(parts[1]);
  const int count = std::stoi(parts[2]);
  const bool logarithmic = parts.size() == 4 && parts[3] == "log";
  if (parts.size() == 4 && parts[3] != "log" && parts[3] != "lin")
    throw ConfigError("range scale must be 'log' or 'lin'");
  if (count < 2) throw ConfigError("range needs at least 2 points");
  if (!(start > 0.0) || !(stop > start)) throw ConfigError("range needs 0 < start < stop");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out[i] = logarithmic ? start * std::pow(stop / start, t) : start + t * (stop - start);
  }
  return out;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "potential") cfg.potential = value;
  else if (key == "Z") cfg.charge = std::stod(value);
  else if (key == "delta") cfg.screening = std::stod(value);
  else if (key == "states") cfg.states = parse_string_list(value);
  else if (key == "rc") cfg.radii = parse_double_list(value);
  else if (key == "rc_range") cfg.radii = expand_range(value);
  else if (key == "grid_order") cfg.grid_order = std::stoi(value);
  else if (key == "mapping_scale") cfg.mapping_scale = std::stod(value);
  else if (key == "format") cfg.format = value;
  else if (key == "output") cfg.output = value;
  else if (key == "mesh_points") cfg.mesh_points = std::stoi(value);
  else if (key == "data") cfg.data_path = value;
  else if (key == "table") cfg.table_id = value;
  else if (key == "count") cfg.count = std::stoi(value);
  else if (key == "ordering_rc") cfg.ordering_rc = std::stod(value);
  else if (key == "free_levels") cfg.free_levels = (value == "true" || value == "1");
  else if (key == "all_n") cfg.all_n = std::stoi(value);
  else if (key == "energy_tol") cfg.energy_tol = std::stod(value);
  else if (key == "moments") cfg.with_moments = (value == "true" || value == "1");
  else throw ConfigError("unknown config key '" + key + "'");
}

void apply_json_config(RunConfig& cfg, const json& j) {
  const json& c = j.contains("config") ? j.at("config") : j;
  for (const auto& [key, value] : c.items()) {
    if (key == "command") continue;
    if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += item.is_string() ? item.get<std::string>() : json(item).dump();
      }
      apply_key(cfg, key, joined);
    } else if (value.is_string()) {
      apply_key(cfg, key, value.get<std::string>());
    } else {
      apply_key(cfg, key, json(value).dump());
    }
  }
}

// flat key = value lines with '#' comments, or a JSON object (the config
// echo of a previous run round-trips)
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    apply_json_config(cfg, json::parse(content));
    return;
  }
  std::stringstream ss(content);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto x = s.find_first_not_of(" \t\r");
      if (x == std::string::npos) return std::string();
      const auto y = s.find_last_not_of(" \t\r");
      return s.substr(x, y - x + 1);
    };
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

Potential make_potential(const RunConfig& cfg) {
  if (cfg.potential == "coulomb") return Coulomb{cfg.charge};
  if (cfg.potential == "hulthen") return Hulthen{cfg.screening};
  if (cfg.potential == "box") return ParticleInBox{};
  throw ConfigError("unknown potential '" + cfg.potential + "' (expected coulomb|hulthen|box)");
}

int resolved_grid_order(const RunConfig& cfg) {
  if (cfg.grid_order > 0) {
    if (cfg.grid_order < 8) throw ConfigError("grid order must be at least 8");
    return cfg.grid_order;
  }
  return default_grid_order_from_env();
}

json config_echo(const RunConfig& cfg) {
  json c;
  c["command"] = cfg.command;
  c["potential"] = cfg.potential;
  if (cfg.potential == "coulomb") c["Z"] = cfg.charge;
  if (cfg.potential == "hulthen") c["delta"] = cfg.screening;
  if (!cfg.states.empty()) c["states"] = cfg.states;
  if (!cfg.radii.empty()) c["rc"] = cfg.radii;
  c["grid_order"] = resolved_grid_order(cfg);
  if (cfg.mapping_scale > 0.0) c["mapping_scale"] = cfg.mapping_scale;
  c["format"] = cfg.format;
  if (cfg.command == "verify") c["mesh_points"] = cfg.mesh_points;
  if (cfg.command == "reproduce") {
    c["table"] = cfg.table_id;
    c["data"] = cfg.data_path;
  }
  if (cfg.command == "ordering") {
    c["count"] = cfg.count;
    c["ordering_rc"] = cfg.ordering_rc;
    c["free_levels"] = cfg.free_levels;
  }
  if (cfg.command == "critical") {
    c["energy_tol"] = cfg.energy_tol;
    if (cfg.all_n > 0) c["all_n"] = cfg.all_n;
  }
  if (cfg.command == "solve") c["moments"] = cfg.with_moments;
  return c;
}

/// Collects rows and renders them as an aligned table, RFC-4180-ish CSV with
/// '#' comments, or a single JSON object.
class Report {
 public:
  Report(const RunConfig& cfg, std::vector<std::string> columns)
      : format_(cfg.format), columns_(std::move(columns)), echo_(config_echo(cfg)) {
    if (format_ != "table" && format_ != "csv" && format_ != "json")
      throw ConfigError("unknown format '" + format_ + "' (expected table|csv|json)");
  }

  void comment(const std::string& text) { comments_.push_back(text); }

  void row(const std::vector<std::string>& cells, const json& record) {
    rows_.push_back(cells);
    records_.push_back(record);
  }

  void write(const RunConfig& cfg) const {
    std::ostringstream out;
    if (format_ == "json") {
      json doc;
      doc["command"] = cfg.command;
      doc["config"] = echo_;
      doc["results"] = records_;
      if (!comments_.empty()) doc["warnings"] = comments_;
      out << doc.dump(2) << '\n';
    } else if (format_ == "csv") {
      for (const auto& c : comments_) out << "# " << c << '\n';
      for (std::size_t i = 0; i < columns_.size(); ++i)
        out << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
      for (const auto& r : rows_)
        for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? "," : "\n");
    } else {
      std::vector<std::size_t> width(columns_.size());
      for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
      for (const auto& r : rows_)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      for (std::size_t i = 0; i < columns_.size(); ++i)
        out << (i ? "  " : "") << pad(columns_[i], width[i]);
      out << '\n';
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "  " : "") << pad(r[i], width[i]);
        out << '\n';
      }
      for (const auto& c : comments_) out << "# " << c << '\n';
    }
    if (cfg.output.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw ConfigError("cannot open output file: " + cfg.output);
      f << out.str();
    }
  }

 private:
  static std::string pad(const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  }

  std::string format_;
  std::vector<std::string> columns_;
  json echo_;
  std::vector<std::string> comments_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<json> records_;
};

std::vector<StateLabel> parse_states(const RunConfig& cfg) {
  if (cfg.states.empty()) throw ConfigError("at least one --state is required");
  std::vector<StateLabel> out;
  for (const auto& s : cfg.states) out.push_back(parse_state_label(s));
  return out;
}

int cmd_solve(const RunConfig& cfg) {
  if (cfg.radii.size() != 1) throw ConfigError("solve expects exactly one --rc value");
  const auto states = parse_states(cfg);
  const Potential pot = make_potential(cfg);
  const int order = resolved_grid_order(cfg);
  const double rc = cfg.radii.front();

  std::vector<std::string> cols = {"state", "rc", "energy", "nodes"};
  if (cfg.with_moments)
    for (int p : {-2, -1, 1, 2, 3}) cols.push_back("<r^" + std::to_string(p) + ">");
  Report report(cfg, cols);

  for (const StateLabel& s : states) {
    ConfinedProblem p{pot, s.ell, rc, order, cfg.mapping_scale};
    const Spectrum sp = solve(p, s.radial_index() + 1);
    const double e = sp.energies.back();
    const int nodes = sp.node_count(s.radial_index());
    std::vector<std::string> cells = {format(s), fmt12(rc), fmt12(e), std::to_string(nodes)};
    json rec = {{"state", format(s)}, {"rc", rc}, {"energy", e}, {"nodes", nodes}};
    if (cfg.with_moments) {
      const MomentSet m = radial_moments(sp, s);
      json jm;
      for (const auto& [power, value] : m.moments) {
        cells.push_back(fmt12(value));
        jm[std::to_string(power)] = value;
      }
      rec["moments"] = jm;
    }
    report.row(cells, rec);
  }
  report.write(cfg);
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.radii.size() < 2) throw ConfigError("sweep expects at least two --rc values");
  const auto states = parse_states(cfg);
  const Potential pot = make_potential(cfg);
  const int order = resolved_grid_order(cfg);

  std::vector<double> radii = cfg.radii;
  std::sort(radii.begin(), radii.end());

  std::vector<std::string> cols = {"rc"};
  for (const auto& s : states) cols.push_back("E_" + format(s));
  Report report(cfg, cols);

  std::vector<SweepResult> results;
  for (const StateLabel& s : states) results.push_back(sweep(pot, s, radii, order));

  int total = 0;
  int failed = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    std::vector<std::string> cells = {fmt12(radii[i])};
    json rec = {{"rc", radii[i]}};
    for (std::size_t k = 0; k < results.size(); ++k) {
      const SweepPoint& pt = results[k].points[i];
      ++total;
      if (pt.ok) {
        cells.push_back(fmt12(pt.energy));
        rec["E_" + format(states[k])] = pt.energy;
        if (pt.monotone_violation)
          report.comment("monotonicity violated for " + format(states[k]) + " at rc = " +
                         fmt12(radii[i]));
      } else {
        ++failed;
        cells.push_back("");
        rec["E_" + format(states[k])] = nullptr;
        report.comment("solve failed for " + format(states[k]) + " at rc = " + fmt12(radii[i]) +
                       ": " + pt.message);
      }
    }
    report.row(cells, rec);
  }
  report.write(cfg);
  return (total > 0 && failed * 10 > total) ? 4 : 0;
}

int cmd_critical(const RunConfig& cfg) {
  const Potential pot = make_potential(cfg);
  const int order = resolved_grid_order(cfg);

  std::vector<StateLabel> states;
  if (cfg.all_n > 0) {
    for (int n = 1; n <= cfg.all_n; ++n)
      for (int l = 0; l < n; ++l) states.push_back({n, l});
  } else {
    states = parse_states(cfg);
  }

  Report report(cfg, {"state", "critical_rc", "residual", "bracket_width"});
  for (const StateLabel& s : states) {
    const CriticalRadius c = critical_radius(pot, s, cfg.energy_tol, order);
    report.row({format(s), fmt12(c.radius), fmt12(c.residual), fmt12(c.bracket_width)},
               {{"state", format(s)},
                {"critical_rc", c.radius},
                {"residual", c.residual},
                {"bracket_width", c.bracket_width}});
  }
  report.write(cfg);
  return 0;
}

int cmd_polarizability(const RunConfig& cfg) {
  if (cfg.radii.empty()) throw ConfigError("polarizability expects at least one --rc value");
  const auto states = parse_states(cfg);
  const Potential pot = make_potential(cfg);
  const int order = resolved_grid_order(cfg);

  Report report(cfg, {"state", "rc", "alpha_K", "alpha_B", "<r>", "<r^2>", "<r^3>"});
  for (const StateLabel& s : states) {
    for (double rc : cfg.radii) {
      ConfinedProblem p{pot, s.ell, rc, order, cfg.mapping_scale};
      const Spectrum sp = solve(p, s.radial_index() + 1);
      const MomentSet m = radial_moments(sp, s);
      const PolarizabilityPair a = polarizability(m);
      report.row({format(s), fmt12(rc), fmt12(a.kirkwood), fmt12(a.buckingham),
                  fmt12(m.moments.at(1)), fmt12(m.moments.at(2)), fmt12(m.moments.at(3))},
                 {{"state", format(s)},
                  {"rc", rc},
                  {"alpha_K", a.kirkwood},
                  {"alpha_B", a.buckingham},
                  {"moments",
                   {{"1", m.moments.at(1)}, {"2", m.moments.at(2)}, {"3", m.moments.at(3)}}}});
    }
  }
  report.write(cfg);
  return 0;
}

int cmd_ordering(const RunConfig& cfg) {
  const int order = resolved_grid_order(cfg);
  std::vector<StateLabel> labels;
  if (cfg.free_levels) {
    if (cfg.potential != "hulthen")
      throw ConfigError("free-space ordering is available for the hulthen potential only");
    FreeLimitOptions opt;
    opt.grid_order = order;
    labels = hulthen_free_ordering(cfg.screening, cfg.count, opt);
  } else {
    labels = small_box_ordering(make_potential(cfg), cfg.ordering_rc, cfg.count,
                                std::min(order, kQuickGridOrder));
  }
  Report report(cfg, {"rank", "state"});
  for (std::size_t i = 0; i < labels.size(); ++i)
    report.row({std::to_string(i + 1), format(labels[i])},
               {{"rank", i + 1}, {"state", format(labels[i])}});
  report.write(cfg);
  return 0;
}

int cmd_reproduce(const RunConfig& cfg) {
  const int order = resolved_grid_order(cfg);
  const auto records = load_golden_records(cfg.data_path);

  std::vector<std::string> tables;
  if (cfg.table_id == "all") {
    tables = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
  } else {
    tables = {cfg.table_id};
  }

  Report report(cfg, {"cell", "reference", "computed", "diff", "tol", "status"});
  int failures = 0;
  for (const std::string& id : tables) {
    const auto outcomes = reproduce_table(records, id, order);
    int pass = 0;
    for (const GoldenOutcome& o : outcomes) {
      if (o.pass) ++pass;
      else ++failures;
      report.row({o.record->provenance, fmt12(o.record->value), fmt12(o.computed),
                  fmt12(o.difference), fmt12(o.record->tolerance), o.pass ? "PASS" : "FAIL"},
                 {{"cell", o.record->provenance},
                  {"reference", o.record->value},
                  {"computed", o.computed},
                  {"diff", o.difference},
                  {"tol", o.record->tolerance},
                  {"pass", o.pass}});
    }
    report.comment("table " + id + ": " + std::to_string(pass) + "/" +
                   std::to_string(outcomes.size()) + " cells pass");
  }
  report.write(cfg);
  return failures == 0 ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.radii.size() != 1) throw ConfigError("verify expects exactly one --rc value");
  const auto states = parse_states(cfg);
  if (states.size() != 1) throw ConfigError("verify expects exactly one --state");
  const Potential pot = make_potential(cfg);
  const int order = resolved_grid_order(cfg);
  const StateLabel s = states.front();
  const double rc = cfg.radii.front();

  const double gps = energy(pot, s, rc, order, cfg.mapping_scale);
  const ShootingResult shot = numerov_energy(pot, s.ell, rc, s.radial_index(), cfg.mesh_points);
  const double diff = gps - shot.energy;

  Report report(cfg, {"state", "rc", "gps", "numerov", "diff", "mismatch"});
  report.row({format(s), fmt12(rc), fmt12(gps), fmt12(shot.energy), fmt12(diff),
              fmt12(shot.boundary_mismatch)},
             {{"state", format(s)},
              {"rc", rc},
              {"gps", gps},
              {"numerov", shot.energy},
              {"diff", diff},
              {"boundary_mismatch", shot.boundary_mismatch}});
  report.write(cfg);
  return std::abs(diff) <= 1e-7 ? 0 : 1;
}

struct CliBindings {
  std::string potential;
  double charge = 1.0;
  double screening = 0.1;
  std::vector<std::string> states;
  std::vector<std::string> radii_text;
  std::string range_text;
  int grid_order = 0;
  double mapping_scale = 0.0;
  std::string format;
  std::string output;
  std::string config_path;
  bool with_moments = false;
  int mesh_points = 20000;
  std::string data_path;
  std::string table_id;
  int count = 10;
  double ordering_rc = 0.05;
  bool free_levels = false;
  int all_n = 0;
  double energy_tol = 1e-9;
};

void add_common_options(CLI::App* app, CliBindings& b) {
  app->add_option("--config", b.config_path, "config file (key = value lines, or a JSON config echo)");
  app->add_option("--potential", b.potential, "coulomb | hulthen | box");
  app->add_option("--Z", b.charge, "Coulomb charge");
  app->add_option("--delta", b.screening, "Hulthen screening parameter");
  app->add_option("--state", b.states, "state labels, e.g. 1s 3d 8:7")->delimiter(',');
  app->add_option("--rc", b.radii_text, "cavity radii (a.u.)")->delimiter(',');
  app->add_option("--rc-range", b.range_text, "radius range start:stop:count[:log|lin]");
  app->add_option("--grid-order,-N", b.grid_order, "collocation order (default 128)");
  app->add_option("--mapping-scale,-L", b.mapping_scale, "mapping scale L (default rc/2)");
  app->add_option("--format", b.format, "table | csv | json");
  app->add_option("--output,-o", b.output, "write to file instead of stdout");
}

bool given(const CLI::App* app, const std::string& name) {
  const CLI::Option* opt = app->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

void overlay(const CLI::App* app, const CliBindings& b, RunConfig& cfg) {
  if (given(app, "--potential")) cfg.potential = b.potential;
  if (given(app, "--Z")) cfg.charge = b.charge;
  if (given(app, "--delta")) cfg.screening = b.screening;
  if (given(app, "--state")) cfg.states = b.states;
  if (given(app, "--rc")) {
    cfg.radii.clear();
    for (const auto& t : b.radii_text) {
      const auto vals = parse_double_list(t);
      cfg.radii.insert(cfg.radii.end(), vals.begin(), vals.end());
    }
  }
  if (given(app, "--rc-range")) cfg.radii = expand_range(b.range_text);
  if (given(app, "--grid-order")) cfg.grid_order = b.grid_order;
  if (given(app, "--mapping-scale")) cfg.mapping_scale = b.mapping_scale;
  if (given(app, "--format")) cfg.format = b.format;
  if (given(app, "--output")) cfg.output = b.output;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherically confined central-potential bound states (collocation solver)"};
  app.require_subcommand(1);

  CliBindings b;
  auto* solve_cmd = app.add_subcommand("solve", "energies of selected states at one cavity radius");
  add_common_options(solve_cmd, b);
  solve_cmd->add_flag("--moments", b.with_moments, "also print <r^k> for k in [-2, 3]");

  auto* sweep_cmd = app.add_subcommand("sweep", "energy curve over a list or range of radii");
  add_common_options(sweep_cmd, b);

  auto* critical_cmd = app.add_subcommand("critical", "cavity radius where a state unbinds");
  add_common_options(critical_cmd, b);
  critical_cmd->add_option("--all-n", b.all_n, "every state with n up to this bound");
  critical_cmd->add_option("--energy-tol", b.energy_tol, "|E| tolerance at the root");

  auto* polar_cmd = app.add_subcommand("polarizability", "Kirkwood and Buckingham dipole polarizabilities");
  add_common_options(polar_cmd, b);

  auto* ordering_cmd = app.add_subcommand("ordering", "level ordering, strongly confined or free space");
  add_common_options(ordering_cmd, b);
  ordering_cmd->add_option("--count", b.count, "number of levels");
  ordering_cmd->add_option("--box-rc", b.ordering_rc, "small cavity radius (default 0.05)");
  ordering_cmd->add_flag("--free", b.free_levels, "free-space ordering (hulthen only)");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute reference tables and compare");
  add_common_options(reproduce_cmd, b);
  reproduce_cmd->add_option("table", b.table_id, "table id I..X, or 'all'");
  reproduce_cmd->add_option("--data", b.data_path, "reference dataset CSV");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check one level against the shooting method");
  add_common_options(verify_cmd, b);
  verify_cmd->add_option("--mesh", b.mesh_points, "shooting mesh points (default 20000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  CLI::App* active = app.get_subcommands().front();

  try {
    RunConfig cfg;
    cfg.command = active->get_name();
    if (given(active, "--config")) apply_config_file(cfg, b.config_path);
    overlay(active, b, cfg);
    if (given(active, "--moments")) cfg.with_moments = b.with_moments;
    if (given(active, "--all-n")) cfg.all_n = b.all_n;
    if (given(active, "--energy-tol")) cfg.energy_tol = b.energy_tol;
    if (given(active, "--count")) cfg.count = b.count;
    if (given(active, "--box-rc")) cfg.ordering_rc = b.ordering_rc;
    if (given(active, "--free")) cfg.free_levels = b.free_levels;
    if (given(active, "--mesh")) cfg.mesh_points = b.mesh_points;
    if (given(active, "--data")) cfg.data_path = b.data_path;
    if (given(active, "table")) cfg.table_id = b.table_id;

    if (cfg.command == "solve") return cmd_solve(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "critical") return cmd_critical(cfg);
    if (cfg.command == "polarizability") return cmd_polarizability(cfg);
    if (cfg.command == "ordering") return cmd_ordering(cfg);
    if (cfg.command == "reproduce") return cmd_reproduce(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw ConfigError("unknown command");
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnboundStateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const NoRootError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
