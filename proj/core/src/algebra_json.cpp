#include "liecoh/algebra_json.hpp"

#include <charconv>

#include <json.hpp>

#include "liecoh/errors.hpp"

namespace liecoh {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_object()) {
      Scalar re = v.contains("re") ? scalar_from_json(v.at("re"), where) : Scalar(0);
      Scalar im = v.contains("im") ? scalar_from_json(v.at("im"), where) : Scalar(0);
      if (!re.is_real() || !im.is_real()) throw ParseError("re/im parts must be rational");
      for (const auto& [key, _] : v.items())
        if (key != "re" && key != "im") throw ParseError("unexpected key '" + key + "'");
      return Scalar(re.re(), im.re());
    }
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const DivisionByZero&) {
    throw ParseError(where + ": zero denominator");
  }
  throw ParseError(where + ": coefficient must be a string or {re, im} object");
}

nlohmann::ordered_json scalar_to_json(const Scalar& s) {
  auto rat = [](const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
  };
  if (s.is_real()) return rat(s.re());
  nlohmann::ordered_json o;
  o["re"] = rat(s.re());
  o["im"] = rat(s.im());
  return o;
}

int index_from_key(const std::string& key, const std::string& where) {
  int value = -1;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc{} || ptr != key.data() + key.size())
    throw ParseError(where + ": coefficient key '" + key + "' is not a decimal index");
  return value;
}

}  // namespace

LieAlgebra algebra_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer())
    throw ParseError("missing integer field 'dim'");
  const int dim = doc.at("dim").get<int>();
  if (dim < 0) throw ParseError("'dim' must be nonnegative");

  std::vector<BracketSpec> brackets;
  if (doc.contains("brackets")) {
    const json& list = doc.at("brackets");
    if (!list.is_array()) throw ParseError("'brackets' must be an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
      const json& b = list[n];
      const std::string where = "brackets[" + std::to_string(n) + "]";
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs") ||
          !b.at("i").is_number_integer() || !b.at("j").is_number_integer() ||
          !b.at("coeffs").is_object())
        throw ParseError(where + ": expected {\"i\": int, \"j\": int, \"coeffs\": {...}}");
      BracketSpec spec{b.at("i").get<int>(), b.at("j").get<int>(), zero_vector(dim)};
      for (const auto& [key, value] : b.at("coeffs").items()) {
        const int k = index_from_key(key, where);
        if (k < 0 || k >= dim)
          throw IndexOutOfRange(where + ": coefficient index " + key + " outside [0, " +
                                std::to_string(dim) + ")");
        spec.coeffs[static_cast<std::size_t>(k)] = scalar_from_json(value, where + ".coeffs." + key);
      }
      brackets.push_back(std::move(spec));
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array()) throw ParseError("'labels' must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("'labels' must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return LieAlgebra::from_structure_constants(dim, brackets, std::move(labels));
}

std::string algebra_to_json(const LieAlgebra& g, int indent) {
  // ordered_json keeps keys in insertion order ("10" would sort before "2").
  nlohmann::ordered_json doc;
  doc["dim"] = g.dim();
  doc["brackets"] = nlohmann::ordered_json::array();
  for (const auto& b : g.nonzero_brackets()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (int k = 0; k < g.dim(); ++k) {
      const Scalar& c = b.coeffs[static_cast<std::size_t>(k)];
      if (!c.is_zero()) coeffs[std::to_string(k)] = scalar_to_json(c);
    }
    nlohmann::ordered_json entry;
    entry["i"] = b.i;
    entry["j"] = b.j;
    entry["coeffs"] = std::move(coeffs);
    doc["brackets"].push_back(std::move(entry));
  }
  if (!g.labels().empty()) doc["labels"] = g.labels();
  return doc.dump(indent);
}

}  // namespace liecoh
