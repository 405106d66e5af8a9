#include "heaporth/json_io.hpp"

#include "heaporth/error.hpp"

namespace heaporth {

nlohmann::json to_json(const MultiPoly& p) {
  auto terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto powers = nlohmann::json::object();
    for (const auto& [v, e] : it->first.factors()) powers[v.name()] = e;
    terms.push_back({{"coeff", it->second.to_fraction_string()}, {"powers", powers}});
  }
  return {{"terms", terms}};
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(ErrorKind::kParse, "polynomial JSON needs a \"terms\" array");
  MultiPoly p;
  for (const auto& term : j["terms"]) {
    if (!term.contains("coeff") || !term["coeff"].is_string())
      throw Error(ErrorKind::kParse, "term without string \"coeff\"");
    std::vector<Monomial::Factor> factors;
    if (term.contains("powers")) {
      for (const auto& [name, e] : term["powers"].items()) {
        if (!e.is_number_unsigned()) throw Error(ErrorKind::kParse, "bad exponent for " + name);
        factors.emplace_back(Var::parse(name), e.get<std::uint32_t>());
      }
    }
    p += MultiPoly(Monomial(std::move(factors)), BigRational::parse(term["coeff"].get<std::string>()));
  }
  return p;
}

nlohmann::json to_compact_json(const MultiPoly& p) {
  if (auto k = p.constant_value()) {
    if (k->is_integer()) {
      // Arbitrary-size integers survive as numbers only when they fit.
      const auto& num = k->raw().get_num();
      if (num.fits_slong_p()) return num.get_si();
    }
    return k->to_string();
  }
  return to_json(p);
}

nlohmann::json to_json(const UniPoly& p) { return to_json(p.to_multi()); }

nlohmann::json to_json(const TruncatedSeries& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_compact_json(c));
  return arr;
}

}  // namespace heaporth
