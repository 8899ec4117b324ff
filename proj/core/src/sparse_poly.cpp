#include "polyherm/sparse_poly.hpp"

#include <json.hpp>

namespace polyherm {

using nlohmann::json;

Poly4 aux_poly(Aux a) {
  const CoeffQi2 i = CoeffQi2::i();
  switch (a) {
    case Aux::xi: return var(Var::z) + i * var(Var::w);
    case Aux::xibar: return var(Var::zbar) - i * var(Var::wbar);
    case Aux::xistar: return var(Var::zbar) + i * var(Var::wbar);
    case Aux::xitilde: return var(Var::z) - i * var(Var::w);
  }
  throw std::invalid_argument("unknown auxiliary variable");
}

const char* aux_name(Aux a) {
  switch (a) {
    case Aux::xi: return "xi";
    case Aux::xibar: return "xibar";
    case Aux::xistar: return "xistar";
    case Aux::xitilde: return "xitilde";
  }
  return "?";
}

namespace {

constexpr std::array<const char*, 4> kNames4{"z", "zbar", "w", "wbar"};
constexpr std::array<const char*, 2> kNames2{"u", "ubar"};

template <int N>
std::string dump(const SparsePoly<N>& p, const std::array<const char*, N>& names) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["vars"] = ojson::array();
  for (const char* n : names) doc["vars"].push_back(n);
  ojson terms = ojson::array();
  for (const auto& t : p.terms()) {
    const auto e = SparsePoly<N>::unpack(t.key);
    ojson exp = ojson::array();
    for (unsigned x : e) exp.push_back(x);
    ojson c;
    c["a"] = t.coeff.a().str();
    c["b"] = t.coeff.b().str();
    c["c"] = t.coeff.c().str();
    c["d"] = t.coeff.d().str();
    ojson term;
    term["exp"] = std::move(exp);
    term["coeff"] = std::move(c);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

template <int N>
SparsePoly<N> load(std::string_view text, const std::array<const char*, N>& names) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
  }
  auto fail = [](const std::string& why) { throw std::invalid_argument("polynomial JSON: " + why); };
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("terms")) fail("expected object with vars and terms");
  const json& vars = doc["vars"];
  if (!vars.is_array() || vars.size() != N) fail("wrong variable count");
  for (int v = 0; v < N; ++v)
    if (!vars[v].is_string() || vars[v].get<std::string>() != names[v]) fail("unexpected variable names");
  std::vector<typename SparsePoly<N>::Term> raw;
  typename SparsePoly<N>::Key prev = 0;
  bool first = true;
  for (const json& t : doc["terms"]) {
    if (!t.contains("exp") || !t.contains("coeff")) fail("term needs exp and coeff");
    const json& e = t["exp"];
    if (!e.is_array() || e.size() != N) fail("exponent arity mismatch");
    typename SparsePoly<N>::Exponents ex{};
    for (int v = 0; v < N; ++v) {
      if (!e[v].is_number_unsigned()) fail("exponent must be a nonnegative integer");
      ex[v] = e[v].get<unsigned>();
    }
    const json& c = t["coeff"];
    auto part = [&](const char* k) {
      if (!c.contains(k) || !c[k].is_string()) fail(std::string("coefficient part ") + k + " missing");
      return Rational::parse(c[k].get<std::string>());
    };
    CoeffQi2 coeff(part("a"), part("b"), part("c"), part("d"));
    if (coeff.is_zero()) fail("zero coefficient stored");
    const auto key = SparsePoly<N>::pack(ex);
    if (!first && key <= prev) fail("terms not strictly sorted");
    first = false;
    prev = key;
    raw.push_back({key, std::move(coeff)});
  }
  return SparsePoly<N>::from_terms(std::move(raw));
}

}  // namespace

std::string to_json(const Poly4& p) { return dump<4>(p, kNames4); }
std::string to_json(const Poly2& p) { return dump<2>(p, kNames2); }
Poly4 poly4_from_json(std::string_view text) { return load<4>(text, kNames4); }
Poly2 poly2_from_json(std::string_view text) { return load<2>(text, kNames2); }
std::string pretty(const Poly4& p) { return p.pretty(kNames4); }
std::string pretty(const Poly2& p) { return p.pretty(kNames2); }

}  // namespace polyherm
