#include "degseq/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "degseq/errors.hpp"

namespace degseq {

namespace {

constexpr const char* kWeightsSchema = "degseq.weights.v1";
constexpr const char* kTailsSchema = "degseq.tails.v1";

[[noreturn]] void fail_parse(const std::string& detail) {
  throw Error(Errc::parse, "parse: " + detail);
}

std::string strip_comments(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::ordered_json verdict_fields(const EmpiricalTail& tail, const BoundVerdict* verdict) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (verdict == nullptr) return out;
  if (verdict->points.size() != tail.grid.size())
    throw Error(Errc::precondition, "report: verdict points do not match the grid");
  std::vector<double> bound;
  std::vector<bool> holds;
  for (const BoundPoint& pt : verdict->points) {
    bound.push_back(pt.bound);
    holds.push_back(pt.holds);
  }
  out["bound"] = bound;
  out["holds"] = holds;
  out["pass"] = verdict->pass;
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      fail_parse("not an integer: '" + token + "'");
    }
    if (used != token.size()) fail_parse("not an integer: '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) fail_parse("no integers found");
  return out;
}

DegreeSequence read_degree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return DegreeSequence(parse_int_list(strip_comments(buffer.str())));
}

WeightSequence parse_weights_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail_parse(e.what());
  }
  if (!doc.is_object()) fail_parse("weights document must be a JSON object");
  if (doc.contains("schema") && doc["schema"] != kWeightsSchema)
    fail_parse("unknown schema; expected " + std::string(kWeightsSchema));
  if (!doc.contains("weights") || !doc["weights"].is_object())
    fail_parse("missing \"weights\" object");

  int max_key = -1;
  std::vector<std::pair<int, double>> entries;
  for (const auto& [key, value] : doc["weights"].items()) {
    std::size_t used = 0;
    int degree = 0;
    try {
      degree = std::stoi(key, &used);
    } catch (const std::exception&) {
      fail_parse("weight key is not a degree: '" + key + "'");
    }
    if (used != key.size() || degree < 0)
      fail_parse("weight key is not a degree: '" + key + "'");
    if (!value.is_number()) fail_parse("weight for degree " + key + " is not a number");
    const double w = value.get<double>();
    if (!std::isfinite(w) || w < 0) fail_parse("weight for degree " + key + " is negative");
    entries.emplace_back(degree, w);
    max_key = std::max(max_key, degree);
  }
  if (entries.empty()) fail_parse("\"weights\" is empty");

  const bool has_horizon = doc.contains("horizon");
  const bool has_tail = doc.contains("tail_mass");
  if (has_horizon != has_tail)
    fail_parse("horizon and tail_mass are required together");
  std::optional<double> tail_mass;
  int support = max_key;
  if (has_horizon) {
    if (!doc["horizon"].is_number_integer() || doc["horizon"].get<int>() < max_key)
      fail_parse("horizon must be an integer covering every weight key");
    support = doc["horizon"].get<int>();
    if (!doc["tail_mass"].is_number()) fail_parse("tail_mass is not a number");
    tail_mass = doc["tail_mass"].get<double>();
    if (!std::isfinite(*tail_mass) || *tail_mass < 0) fail_parse("tail_mass is negative");
  }
  std::optional<double> radius;
  if (doc.contains("radius")) {
    if (!doc["radius"].is_number()) fail_parse("radius is not a number");
    radius = doc["radius"].get<double>();
    if (!std::isfinite(*radius) || *radius <= 0) fail_parse("radius is not positive");
  }

  std::vector<double> w(static_cast<std::size_t>(support) + 1, 0.0);
  for (const auto& [degree, weight] : entries) w[degree] = weight;
  return WeightSequence(std::move(w), radius, tail_mass);
}

WeightSequence read_weights_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_weights_json(buffer.str());
}

std::string weights_to_json(const WeightSequence& w) {
  nlohmann::ordered_json doc;
  doc["schema"] = kWeightsSchema;
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (int k = 0; k <= w.max_degree(); ++k)
    if (k == 0 || w.w()[k] > 0) weights[std::to_string(k)] = w.w()[k];
  doc["weights"] = weights;
  if (w.tail_mass()) {
    doc["horizon"] = w.max_degree();
    doc["tail_mass"] = *w.tail_mass();
  }
  if (w.declared_radius()) doc["radius"] = *w.declared_radius();
  return doc.dump(2) + "\n";
}

std::string tail_report_csv(const EmpiricalTail& tail, const BoundVerdict* verdict,
                            const std::string& timestamp) {
  if (verdict != nullptr && verdict->points.size() != tail.grid.size())
    throw Error(Errc::precondition, "report: verdict points do not match the grid");
  std::string out;
  out += "# schema: " + std::string(kTailsSchema) + "\n";
  out += "# seed: " + std::to_string(tail.seed) + "\n";
  out += "# n: " + std::to_string(tail.n) + "\n";
  out += "# samples: " + std::to_string(tail.samples) + "\n";
  out += "# generated: " + timestamp + "\n";
  out += "x,estimate,upper_ci,bound,holds\n";
  for (std::size_t i = 0; i < tail.grid.size(); ++i) {
    out += format_double(tail.grid[i]) + "," + format_double(tail.survival[i]) + "," +
           format_double(tail.upper[i]) + ",";
    if (verdict != nullptr) {
      out += format_double(verdict->points[i].bound) + ",";
      out += verdict->points[i].holds ? "1" : "0";
    } else {
      out += ",";
    }
    out += "\n";
  }
  return out;
}

std::string tail_report_json(const EmpiricalTail& tail, const BoundVerdict* verdict,
                             const std::string& timestamp) {
  nlohmann::ordered_json doc;
  doc["schema"] = kTailsSchema;
  doc["seed"] = tail.seed;
  doc["n"] = tail.n;
  doc["samples"] = tail.samples;
  doc["generated"] = timestamp;
  doc["grid"] = tail.grid;
  doc["estimate"] = tail.survival;
  doc["upper_ci"] = tail.upper;
  const nlohmann::ordered_json extra = verdict_fields(tail, verdict);
  for (const auto& [key, value] : extra.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

}  // namespace degseq
