#include "odds/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace odds {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return doc;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OddsSequence sequence_from_json_text(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object()) throw std::invalid_argument("sequence document must be a JSON object");

  if (doc.contains("p")) {
    const json& arr = doc["p"];
    if (!arr.is_array() || arr.empty())
      throw std::invalid_argument("\"p\" must be a non-empty array of rationals");
    std::vector<Rational> probs;
    probs.reserve(arr.size());
    for (const json& v : arr) {
      if (!v.is_string()) throw std::invalid_argument("probabilities must be rational strings");
      probs.push_back(rat_parse(v.get<std::string>()));
    }
    return OddsSequence(std::move(probs), 1);
  }
  if (doc.contains("iid")) {
    const json& spec = doc["iid"];
    if (!spec.is_object() || !spec.contains("q") || !spec.contains("n"))
      throw std::invalid_argument("\"iid\" needs fields q and n");
    if (!spec["q"].is_string() || !spec["n"].is_number_integer())
      throw std::invalid_argument("\"iid\" needs a rational string q and integer n");
    Rational q = rat_parse(spec["q"].get<std::string>());
    int n = spec["n"].get<int>();
    if (n < 1) throw std::invalid_argument("sequence length must be positive");
    if (sgn(q) <= 0 || q >= 1) throw std::invalid_argument("q must lie strictly between 0 and 1");
    return OddsSequence(std::vector<Rational>(static_cast<size_t>(n), 1 - q), 1);
  }
  if (doc.contains("secretary")) {
    const json& spec = doc["secretary"];
    if (!spec.is_object() || !spec.contains("n") || !spec["n"].is_number_integer())
      throw std::invalid_argument("\"secretary\" needs an integer n");
    int n = spec["n"].get<int>();
    if (n < 2) throw std::invalid_argument("record sequence needs n >= 2");
    std::vector<Rational> probs;
    probs.reserve(static_cast<size_t>(n) - 1);
    for (int i = 2; i <= n; ++i) probs.emplace_back(1, i);
    return OddsSequence(std::move(probs), 2);
  }
  throw std::invalid_argument("sequence document needs one of: p, iid, secretary");
}

OddsSequence sequence_from_json_file(const std::string& path) {
  return sequence_from_json_text(read_file(path));
}

std::vector<std::pair<int, Rational>> schedule_from_json_text(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_array() || doc.empty())
    throw std::invalid_argument("schedule must be a non-empty JSON array");
  std::vector<std::pair<int, Rational>> out;
  for (const json& row : doc) {
    if (!row.is_object() || !row.contains("L") || !row.contains("r") ||
        !row["L"].is_number_integer() || !row["r"].is_string())
      throw std::invalid_argument("schedule rows need integer L and rational string r");
    out.emplace_back(row["L"].get<int>(), rat_parse(row["r"].get<std::string>()));
  }
  return out;
}

std::vector<std::pair<int, Rational>> schedule_from_json_file(const std::string& path) {
  return schedule_from_json_text(read_file(path));
}

std::string pattern_set_to_json(const PatternSet& set) {
  nlohmann::ordered_json doc;
  doc["k"] = set.k;
  doc["kind"] = pattern_kind_name(set.kind);
  nlohmann::ordered_json vectors = nlohmann::ordered_json::array();
  for (const PatternVector& v : set.vectors) vectors.push_back(v);
  doc["vectors"] = std::move(vectors);
  return doc.dump();
}

ThresholdVector thresholds_from_csv(const std::string& text) {
  ThresholdVector t;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) throw std::invalid_argument("empty threshold entry");
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size()) throw std::invalid_argument("threshold entries must be integers");
    t.values.push_back(v);
  }
  // getline drops a trailing empty field, catch it by counting separators
  size_t commas = static_cast<size_t>(std::count(text.begin(), text.end(), ','));
  if (t.values.empty() || t.values.size() != commas + 1)
    throw std::invalid_argument("malformed threshold list: '" + text + "'");
  return t;
}

}  // namespace odds
