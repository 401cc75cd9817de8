#include "adkdv/io.hpp"

#include <cstdio>

namespace adkdv {

json word_to_json(const AffineWord& w) {
  return json{{"n", w.rank()}, {"letters", w.letters()}};
}

AffineWord word_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("letters"))
    throw InvalidInputError("word json needs fields 'n' and 'letters'");
  return AffineWord(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
}

Rat rat_from_json(const json& v) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_number_float()) {
    Rat r(v.get<double>());  // exact binary value of the double
    r.canonicalize();
    return r;
  }
  throw InvalidInputError("expected a rational (string or number)");
}

json rat_to_json(const Rat& r) { return rat_str(r); }

json weighted_word_to_json(const WeightedWord<Rat>& w) {
  json out = word_to_json(w.letters);
  json ws = json::array();
  for (const Rat& x : w.weights) ws.push_back(rat_str(x));
  out["weights"] = std::move(ws);
  return out;
}

json weighted_word_to_json(const WeightedWord<double>& w) {
  json out = word_to_json(w.letters);
  out["weights"] = w.weights;
  return out;
}

WeightedWord<Rat> weighted_word_rat_from_json(const json& j) {
  AffineWord letters = word_from_json(j);
  std::vector<Rat> ws;
  for (const auto& v : j.at("weights")) ws.push_back(rat_from_json(v));
  return WeightedWord<Rat>(std::move(letters), std::move(ws));
}

WeightedWord<double> weighted_word_float_from_json(const json& j) {
  AffineWord letters = word_from_json(j);
  std::vector<double> ws;
  for (const auto& v : j.at("weights")) {
    if (v.is_string())
      ws.push_back(to_double(rat_parse(v.get<std::string>())));
    else
      ws.push_back(v.get<double>());
  }
  return WeightedWord<double>(std::move(letters), std::move(ws));
}

namespace {

template <class T, class Conv>
json spec_to_json_impl(const SolitonSpec<T>& s, Conv conv) {
  json alpha = json::array();
  for (const T& a : s.alpha()) alpha.push_back(conv(a));
  json comps = json::array();
  for (const auto& c : s.components())
    comps.push_back(json{{"A", conv(c.A)}, {"b", conv(c.b)}, {"c", conv(c.c)}});
  return json{{"alpha", std::move(alpha)}, {"components", std::move(comps)}};
}

}  // namespace

json spec_to_json(const SolitonSpec<double>& s) {
  return spec_to_json_impl(s, [](double x) { return json(x); });
}

json spec_to_json(const SolitonSpec<Rat>& s) {
  return spec_to_json_impl(s, [](const Rat& x) { return json(rat_str(x)); });
}

SolitonSpec<double> spec_float_from_json(const json& j) {
  WireWeights<double> alpha;
  for (const auto& v : j.at("alpha"))
    alpha.push_back(v.is_string() ? to_double(rat_parse(v.get<std::string>()))
                                  : v.get<double>());
  std::vector<SolitonComponent<double>> comps;
  for (const auto& c : j.at("components"))
    comps.push_back({c.at("A").get<double>(), c.at("b").get<double>(), c.at("c").get<double>()});
  return SolitonSpec<double>(std::move(alpha), std::move(comps));
}

SolitonSpec<Rat> spec_rat_from_json(const json& j) {
  WireWeights<Rat> alpha;
  for (const auto& v : j.at("alpha")) alpha.push_back(rat_from_json(v));
  std::vector<SolitonComponent<Rat>> comps;
  for (const auto& c : j.at("components"))
    comps.push_back({rat_from_json(c.at("A")), rat_from_json(c.at("b")),
                     rat_from_json(c.at("c"))});
  return SolitonSpec<Rat>(std::move(alpha), std::move(comps));
}

json diagram_to_json(const WiringDiagram& d) {
  json crossings = json::array();
  for (const Crossing& c : d.crossings)
    crossings.push_back(json{{"pos", c.pos},
                             {"level", c.level},
                             {"lower_wire", c.lower_wire},
                             {"upper_wire", c.upper_wire},
                             {"lower_class", c.lower_class},
                             {"upper_class", c.upper_class},
                             {"below", c.below.s}});
  json faces = json::array();
  for (const auto& [key, label] : face_labels(d))
    faces.push_back(json{{"x", key.first}, {"level", key.second}, {"label", label.s}});
  return json{{"word", word_to_json(d.word)},
              {"cut", d.cut},
              {"crossings", std::move(crossings)},
              {"faces", std::move(faces)}};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), out_(path) {
  if (!out_) throw Error("cannot open " + path + " for writing");
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace adkdv
