#include "shufflesym/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "shufflesym/errors.hpp"

namespace shufflesym::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_field(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a rational string such as \"1/2\"");
}

std::vector<Rational> rational_list(const json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) throw ParseError(std::string(key) + " must be an array");
  for (const auto& v : j.at(key)) out.push_back(rational_field(v));
  return out;
}

// Splits "a,b" at the last comma; false if there is none.
bool split_row(const std::string& line, std::string& left, std::string& right) {
  const auto pos = line.rfind(',');
  if (pos == std::string::npos) return false;
  left = line.substr(0, pos);
  right = line.substr(pos + 1);
  return true;
}

template <class Row>
void for_each_row(std::istream& in, const char* header, Row row) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ParseError(std::string("expected CSV header '") + header + "'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string left, right;
    if (!split_row(line, left, right)) throw ParseError("malformed CSV row: " + line);
    try {
      row(left, right);
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError("malformed CSV row '" + line + "': " + e.what());
    }
  }
}

}  // namespace

std::string params_to_json(const ShuffleParams& p) {
  json j;
  j["alpha"] = json::array();
  j["beta"] = json::array();
  for (const auto& a : p.alpha()) j["alpha"].push_back(to_string(a));
  for (const auto& b : p.beta()) j["beta"].push_back(to_string(b));
  j["gamma"] = to_string(p.gamma());
  return j.dump();
}

ShuffleParams params_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("params must be a JSON object");
  const Rational gamma = j.contains("gamma") ? rational_field(j.at("gamma")) : Rational(0);
  return ShuffleParams(rational_list(j, "alpha"), rational_list(j, "beta"), gamma);
}

ShuffleParams load_params(const std::string& inline_or_path) {
  const auto first = inline_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos && inline_or_path[first] == '{') return params_from_json(inline_or_path);
  std::ifstream file(inline_or_path);
  if (!file) throw ParseError("cannot open params file " + inline_or_path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return params_from_json(buffer.str());
}

void write_distribution_csv(std::ostream& out, const ExactDistribution& d) {
  out << "permutation,probability\n";
  for (const auto& [pi, w] : d.entries()) out << pi.to_string() << ',' << to_string(w) << '\n';
}

ExactDistribution read_distribution_csv(std::istream& in) {
  std::vector<std::pair<Permutation, Rational>> rows;
  for_each_row(in, "permutation,probability", [&](const std::string& l, const std::string& r) {
    rows.emplace_back(Permutation::parse(l), parse_rational(r));
  });
  if (rows.empty()) throw ParseError("distribution CSV has no rows");
  ExactDistribution d(rows.front().first.size());
  try {
    for (const auto& [pi, w] : rows) d.add(pi, w);
  } catch (const SizeMismatch& e) {
    throw ParseError(e.what());
  }
  return d;
}

void write_cycle_csv(std::ostream& out, const CycleTypeDistribution& d) {
  out << "partition,probability\n";
  for (const auto& [lambda, w] : d.entries()) out << lambda.to_string() << ',' << to_string(w) << '\n';
}

CycleTypeDistribution read_cycle_csv(std::istream& in) {
  std::vector<std::pair<Partition, Rational>> rows;
  for_each_row(in, "partition,probability", [&](const std::string& l, const std::string& r) {
    rows.emplace_back(Partition::parse(l), parse_rational(r));
  });
  if (rows.empty()) throw ParseError("cycle CSV has no rows");
  CycleTypeDistribution d(rows.front().first.size());
  try {
    for (const auto& [lambda, w] : rows) d.add(lambda, w);
  } catch (const SizeMismatch& e) {
    throw ParseError(e.what());
  }
  return d;
}

std::string tableau_to_json(const Tableau& t) { return json(t.rows).dump(); }

Tableau tableau_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    return Tableau{j.get<std::vector<std::vector<int>>>()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("tableau must be an array of integer rows: ") + e.what());
  }
}

std::string points_to_json(const PointConfig& c) {
  json j;
  j["continuum"] = json::array();
  j["lines"] = json::array();
  for (const auto& p : c.continuum) j["continuum"].push_back({p.x, p.y});
  for (const auto& p : c.lines) j["lines"].push_back({p.x, p.level});
  // doubles round-trip exactly through nlohmann's shortest representation
  return j.dump();
}

PointConfig points_from_json(std::string_view text) {
  const json j = parse_json(text);
  PointConfig c;
  try {
    for (const auto& p : j.value("continuum", json::array())) {
      c.continuum.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    for (const auto& p : j.value("lines", json::array())) {
      c.lines.push_back({p.at(0).get<double>(), p.at(1).get<int>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed point configuration: ") + e.what());
  }
  return c;
}

void write_shape_counts_csv(std::ostream& out, const std::map<Partition, long long>& counts) {
  long long total = 0;
  for (const auto& [lambda, c] : counts) total += c;
  out << "shape,count,frequency\n";
  for (const auto& [lambda, c] : counts) {
    out << lambda.to_string() << ',' << c << ',' << std::setprecision(10)
        << (total ? static_cast<double>(c) / static_cast<double>(total) : 0.0) << '\n';
  }
}

std::map<Partition, long long> read_shape_counts_csv(std::istream& in) {
  std::map<Partition, long long> counts;
  for_each_row(in, "shape,count,frequency", [&](const std::string& l, const std::string&) {
    std::string shape, count;
    if (!split_row(l, shape, count)) throw ParseError("malformed shape row: " + l);
    try {
      counts[Partition::parse(shape)] = std::stoll(count);
    } catch (const std::out_of_range&) {
      throw ParseError("count out of range: " + count);
    }
  });
  return counts;
}

}  // namespace shufflesym::io
