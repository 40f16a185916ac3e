#include "qiso/freeprod/serialize.hpp"

#include <string>

namespace qiso::freeprod {

nlohmann::json to_json(const GroupAlgebraElement& a) {
  auto out = nlohmann::json::array();
  for (const auto& [w, c] : a.terms())
    out.push_back({{"word", to_string(w)}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

GroupAlgebraElement element_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("group algebra element must be a JSON array");
  GroupAlgebraElement out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("word") || !term["word"].is_string())
      throw ParseError("group algebra term needs a string 'word'");
    const auto part = [&](const char* key) {
      if (!term.contains(key)) return 0.0;
      if (!term[key].is_number()) throw ParseError(std::string("coefficient part '") + key + "' must be a number");
      return term[key].get<double>();
    };
    const double re = part("re");
    const double im = part("im");
    out.add_term(parse_word(term["word"].get<std::string>()), Complex(re, im));
  }
  return out;
}

}  // namespace qiso::freeprod
