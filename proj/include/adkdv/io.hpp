#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "adkdv/dkdv.hpp"
#include "adkdv/lusztig.hpp"
#include "adkdv/network.hpp"
#include "adkdv/tau.hpp"

namespace adkdv {

using json = nlohmann::json;

// Words: {"n": 3, "letters": [1,2,1,0]}.
json word_to_json(const AffineWord& w);
AffineWord word_from_json(const json& j);

// Weighted words carry rationals as "p/q" strings in exact mode and plain
// numbers in float mode.
json weighted_word_to_json(const WeightedWord<Rat>& w);
json weighted_word_to_json(const WeightedWord<double>& w);
WeightedWord<Rat> weighted_word_rat_from_json(const json& j);
WeightedWord<double> weighted_word_float_from_json(const json& j);

Rat rat_from_json(const json& v);
json rat_to_json(const Rat& r);

// Soliton specs: {"alpha": [...], "components": [{"A":..,"b":..,"c":..},...]}.
json spec_to_json(const SolitonSpec<double>& s);
json spec_to_json(const SolitonSpec<Rat>& s);
SolitonSpec<double> spec_float_from_json(const json& j);
SolitonSpec<Rat> spec_rat_from_json(const json& j);

// Crossing list plus face labels, for debugging and plot-data emission.
json diagram_to_json(const WiringDiagram& d);

std::string format_double(double x);  // shortest round-trip-exact decimal

// Minimal CSV emitter; one writer owns one output file.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& cells);
  const std::string& path() const { return path_; }

  static std::string cell(double x) { return format_double(x); }
  static std::string cell(const Rat& r) { return rat_str(r); }
  static std::string cell(long long v) { return std::to_string(v); }
  static std::string cell(int v) { return std::to_string(v); }

 private:
  std::string path_;
  std::ofstream out_;
};

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace adkdv
