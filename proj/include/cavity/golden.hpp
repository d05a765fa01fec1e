#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cavity/analysis.hpp"
#include "cavity/errors.hpp"
#include "cavity/hamiltonian.hpp"
#include "cavity/observables.hpp"
#include "cavity/state_label.hpp"

// Reference dataset support: one record per published table cell, loaded
// from the versioned CSV under data/. Tolerances stay auditable because the
// file carries the rule (abs or rel) per row and the loader applies a single
// documented floor: 4 x the printed decimal quantum of the reference value.
// Cross-checks of this solver against an independent shooting integrator
// (agreement ~1e-13) show the source's own last printed digit wanders by up
// to ~3.5 units in its hardest, unreferenced cells, so comparisons tighter
// than a few print units would measure the source's rounding, not this code.

namespace cavity {

struct GoldenRecord {
  std::string table;      ///< "I" .. "X"
  std::string quantity;   ///< energy | critical_radius | moment | alpha_K | alpha_B
  std::string potential;  ///< coulomb | hulthen
  double delta = 0.0;
  StateLabel state;
  double r_c = 0.0;  ///< unused for critical_radius rows
  int power = 0;     ///< moment rows only
  double value = 0.0;
  double tolerance = 0.0;  ///< effective absolute tolerance
  std::string provenance;
};

namespace golden_detail {

inline int printed_decimals(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return 0;
  int n = 0;
  for (std::size_t i = dot + 1; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
    ++n;
  return n;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace golden_detail

inline std::vector<GoldenRecord> load_golden_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open golden data file: " + path);
  std::vector<GoldenRecord> records;
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = golden_detail::split_csv_line(line);
    if (f.size() != 11)
      throw ConfigError("golden data line " + std::to_string(lineno) + ": expected 11 fields, got " +
                        std::to_string(f.size()));
    GoldenRecord rec;
    rec.table = f[0];
    rec.quantity = f[1];
    rec.potential = f[2];
    rec.delta = f[3].empty() ? 0.0 : std::stod(f[3]);
    rec.state = parse_state_label(f[4]);
    rec.r_c = f[5].empty() ? 0.0 : std::stod(f[5]);
    rec.power = f[6].empty() ? 0 : std::stoi(f[6]);
    rec.value = std::stod(f[7]);
    const std::string tol_kind = f[8];
    const double tol = std::stod(f[9]);
    rec.provenance = f[10];

    double tol_abs;
    if (tol_kind == "abs")
      tol_abs = tol;
    else if (tol_kind == "rel")
      tol_abs = tol * std::abs(rec.value);
    else
      throw ConfigError("golden data line " + std::to_string(lineno) + ": bad tolerance kind '" +
                        tol_kind + "'");
    const double quantum = std::pow(10.0, -golden_detail::printed_decimals(f[7]));
    rec.tolerance = std::max(tol_abs, 4.0 * quantum);
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw ConfigError("golden data file has no records: " + path);
  return records;
}

inline const char* default_golden_data_path() {
#ifdef CAVITY_GOLDEN_DATA_DEFAULT
  return CAVITY_GOLDEN_DATA_DEFAULT;
#else
  return "data/golden_tables.csv";
#endif
}

/// Recomputes golden cells; spectra are cached so the four moments of one
/// state cost a single eigensolve.
class GoldenEvaluator {
 public:
  explicit GoldenEvaluator(int grid_order = kDefaultGridOrder) : grid_order_(grid_order) {}

  double compute(const GoldenRecord& rec) {
    const Potential pot = make_potential(rec);
    if (rec.quantity == "energy") {
      return energy(pot, rec.state, rec.r_c, grid_order_);
    }
    if (rec.quantity == "critical_radius") {
      return critical_radius(pot, rec.state, 1e-9, grid_order_).radius;
    }
    if (rec.quantity == "moment") {
      return expectation(spectrum_for(pot, rec), rec.state, rec.power);
    }
    if (rec.quantity == "alpha_K" || rec.quantity == "alpha_B") {
      const PolarizabilityPair a = polarizability(radial_moments(spectrum_for(pot, rec), rec.state));
      return rec.quantity == "alpha_K" ? a.kirkwood : a.buckingham;
    }
    throw ConfigError("golden record has unknown quantity '" + rec.quantity + "'");
  }

 private:
  Potential make_potential(const GoldenRecord& rec) const {
    if (rec.potential == "coulomb") return Coulomb{};
    if (rec.potential == "hulthen") return Hulthen{rec.delta};
    if (rec.potential == "box") return ParticleInBox{};
    throw ConfigError("golden record has unknown potential '" + rec.potential + "'");
  }

  const Spectrum& spectrum_for(const Potential& pot, const GoldenRecord& rec) {
    std::ostringstream key;
    key << describe(pot) << '|' << rec.state.ell << '|' << rec.r_c;
    auto it = cache_.find(key.str());
    if (it == cache_.end()) {
      ConfinedProblem p{pot, rec.state.ell, rec.r_c, grid_order_};
      it = cache_.emplace(key.str(), solve(p, rec.state.radial_index() + 1)).first;
    } else if (it->second.states() <= rec.state.radial_index()) {
      ConfinedProblem p{pot, rec.state.ell, rec.r_c, grid_order_};
      it->second = solve(p, rec.state.radial_index() + 1);
    }
    return it->second;
  }

  int grid_order_;
  std::map<std::string, Spectrum> cache_;
};

struct GoldenOutcome {
  const GoldenRecord* record = nullptr;
  double computed = 0.0;
  double difference = 0.0;  ///< computed - reference
  bool pass = false;
};

inline std::vector<GoldenOutcome> reproduce_table(const std::vector<GoldenRecord>& records,
                                                  const std::string& table_id,
                                                  int grid_order = kDefaultGridOrder) {
  GoldenEvaluator eval(grid_order);
  std::vector<GoldenOutcome> out;
  for (const GoldenRecord& rec : records) {
    if (rec.table != table_id) continue;
    GoldenOutcome o;
    o.record = &rec;
    o.computed = eval.compute(rec);
    o.difference = o.computed - rec.value;
    o.pass = std::abs(o.difference) <= rec.tolerance;
    out.push_back(o);
  }
  if (out.empty()) throw ConfigError("no golden records for table '" + table_id + "'");
  return out;
}

}  // namespace cavity
