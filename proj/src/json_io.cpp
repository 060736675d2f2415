#include "fmckit/json_io.hpp"

#include <limits>

namespace fmckit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::optional<BigInt> optional_order(const Json& j) {
  if (!j.contains("order")) return std::nullopt;
  return big_from_json(j.at("order"));
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a point is [p, q]");
  try {
    return ProjPoint(big_from_json(j[0]), big_from_json(j[1]));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("bad point: ") + e.what());
  }
}

Attachment attachment_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("an attachment is [component, [p, q]]");
  return {int_from_json(j[0], "component id"), point_from_json(j[1])};
}

Json attachment_to_json(const Attachment& a) { return Json::array({a.component, to_json(a.point)}); }

template <class Tree>
void tree_body_to_json(const Tree& t, Json& out) {
  out["n"] = t.n();
  Json comps = Json::array();
  for (int c = 0; c < t.components; ++c) comps.push_back(c);
  out["components"] = comps;
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back({{"a", attachment_to_json(e.a)}, {"b", attachment_to_json(e.b)}});
  out["edges"] = edges;
  Json marks = Json::object();
  for (const auto& [label, a] : t.markings) marks[std::to_string(label)] = attachment_to_json(a);
  out["markings"] = marks;
}

BaseSpace base_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "P1") return ProjLine{};
    bad("unknown base \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object() || j.size() != 1) bad("base must be \"P1\" or a one-key object");
  const auto& [key, body] = *j.items().begin();
  if (key == "curve") {
    CurveBase c;
    c.genus = int_from_json(field(body, "genus"), "genus");
    if (body.contains("id")) c.id = string_from_json(body.at("id"), "id");
    c.aut_order = optional_order(body);
    return c;
  }
  if (key == "product") {
    if (!body.is_array() || body.empty()) bad("product needs a non-empty list of curves");
    ProductOfCurves p;
    for (const auto& f : body)
      p.factors.push_back({int_from_json(field(f, "genus"), "genus"), string_from_json(field(f, "class"), "class"),
                           optional_order(f)});
    return p;
  }
  if (key == "nef_canonical" || key == "general_type") {
    std::string name = body.contains("name") ? string_from_json(body.at("name"), "name") : "X";
    int dim = body.contains("dim") ? int_from_json(body.at("dim"), "dim") : 2;
    if (key == "nef_canonical") return NefCanonical{name, dim};
    return GeneralType{name, dim};
  }
  bad("unknown base kind \"" + key + "\"");
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      bad("not an integer: \"" + s + "\"");
    return BigInt(s);
  }
  bad("expected an integer");
}

Json rational_to_json(const Rational& r) {
  if (r.den() == 1) return big_to_json(r.num());
  return r.str();
}

Json subset_to_json(const IndexSubset& s) { return s.members(); }

IndexSubset subset_from_json(int n, const Json& j) {
  if (!j.is_array()) bad("a label set is a list of integers");
  std::vector<int> m;
  for (const auto& x : j) m.push_back(int_from_json(x, "label"));
  try {
    return IndexSubset(n, m);
  } catch (const std::exception& e) {
    bad(e.what());
  }
}

Json to_json(const BlowupSchedule& s) {
  Json rounds = Json::array();
  if (s.style == ScheduleStyle::Symmetric) {
    for (const auto& round : s.rounds) {
      Json r = Json::array();
      for (const auto& c : round) r.push_back(c.subset.str());
      rounds.push_back(r);
    }
  } else {
    for (const auto& round : s.stage_rounds) {
      Json r = Json::array();
      for (const auto& c : round) r.push_back(c.label());
      rounds.push_back(r);
    }
  }
  return {{"n", s.n}, {"style", style_name(s.style)}, {"centers", s.center_count()}, {"rounds", rounds}};
}

Json to_json(const SquareFreeClass& c) {
  Json terms = Json::array();
  for (const auto& [s, coef] : c.terms()) terms.push_back({{"subset", subset_to_json(s)}, {"coef", big_to_json(coef)}});
  return {{"n", c.n()}, {"terms", terms}};
}

Json to_json(const RationalCone& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators()) {
    Json row = Json::array();
    for (const auto& x : g) row.push_back(big_to_json(x));
    gens.push_back(row);
  }
  return {{"lattice", lattice_name(c.lattice())}, {"generators", gens}};
}

Json to_json(const NumericalClass& c) {
  Json coords = Json::array();
  for (const auto& x : c.coords) coords.push_back(big_to_json(x));
  return {{"lattice", lattice_name(c.lattice)}, {"coords", coords}};
}

Json to_json(const ProjPoint& p) { return Json::array({big_to_json(p.p()), big_to_json(p.q())}); }

Json to_json(const MobiusMap& m) {
  return Json::array({Json::array({big_to_json(m.a()), big_to_json(m.b())}),
                      Json::array({big_to_json(m.c()), big_to_json(m.d())})});
}

Json to_json(const StableMapTree& t) {
  Json out;
  tree_body_to_json(t, out);
  out["framed"] = t.framed;
  out["frame"] = to_json(t.frame);
  return out;
}

Json to_json(const StableCurveTree& t) {
  Json out;
  tree_body_to_json(t, out);
  return out;
}

MobiusMap mobius_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2)
    bad("a Mobius map is [[a, b], [c, d]]");
  try {
    return MobiusMap(big_from_json(j[0][0]), big_from_json(j[0][1]), big_from_json(j[1][0]), big_from_json(j[1][1]));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("bad Mobius map: ") + e.what());
  }
}

StableMapTree map_tree_from_json(const Json& j) {
  if (!j.is_object()) bad("tree must be a JSON object");
  StableMapTree t;
  const Json& comps = field(j, "components");
  if (comps.is_number_integer()) {
    t.components = int_from_json(comps, "components");
  } else if (comps.is_array()) {
    std::vector<int> ids;
    for (const auto& c : comps) ids.push_back(int_from_json(c, "component id"));
    std::sort(ids.begin(), ids.end());
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (ids[k] != static_cast<int>(k)) bad("component ids must be 0..k-1");
    t.components = static_cast<int>(ids.size());
  } else {
    bad("components must be a count or a list of ids");
  }
  if (t.components < 1) bad("a tree needs at least one component");
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) bad("edges must be a list");
    for (const auto& e : j.at("edges")) t.edges.push_back({attachment_from_json(field(e, "a")),
                                                           attachment_from_json(field(e, "b"))});
  }
  const Json& marks = field(j, "markings");
  if (!marks.is_object()) bad("markings must be an object keyed by label");
  for (const auto& [key, value] : marks.items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 9)
      bad("marking label \"" + key + "\" is not a positive integer");
    int label = std::stoi(key);
    if (label < 1) bad("marking labels start at 1");
    t.markings[label] = attachment_from_json(value);
  }
  if (j.contains("n") && int_from_json(j.at("n"), "n") != t.n()) bad("n does not match the number of markings");
  t.framed = j.contains("framed") ? int_from_json(j.at("framed"), "framed") : 0;
  t.frame = j.contains("frame") ? mobius_from_json(j.at("frame")) : MobiusMap::identity();
  return t;
}

Json to_json(const PencilDescriptor& p) {
  return std::visit(overloaded{[](const Ev& e) { return Json{{"ev", e.i}}; },
                               [](const ForgetToM04& f) { return Json{{"m04", subset_to_json(f.J)}}; }},
                    p);
}

Json to_json(const ForgetfulDescriptor& f) {
  return {{"n", f.n}, {"forget", subset_to_json(f.forgotten)}, {"target", f.target()}};
}

PencilDescriptor pencil_from_json(int n, const Json& j) {
  if (j.is_object() && j.size() == 1 && j.contains("ev")) return Ev{int_from_json(j.at("ev"), "ev")};
  if (j.is_object() && j.size() == 1 && j.contains("m04")) return ForgetToM04{subset_from_json(n, j.at("m04"))};
  bad("a pencil is {\"ev\": i} or {\"m04\": [four labels]}");
}

Json to_json(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  switch (g.kind()) {
    case K::Sym:
      return {{"op", "sym"}, {"n", g.param()}};
    case K::PGL:
      return {{"op", "pgl"}, {"k", g.param()}};
    case K::AutCurve: {
      Json out{{"op", "aut_curve"}, {"class", g.name()}, {"connected", g.connected()}};
      if (g.order()) out["order"] = big_to_json(*g.order());
      return out;
    }
    case K::AutVariety:
      return {{"op", "aut_variety"}, {"symbol", g.name()}};
    case K::Trivial:
      return {{"op", "trivial"}};
    case K::Direct: {
      Json fs = Json::array();
      for (const auto& c : g.children()) fs.push_back(to_json(c));
      return {{"op", "direct"}, {"factors", fs}};
    }
    case K::Semidirect:
      return {{"op", "semidirect"}, {"normal", to_json(g.normal())}, {"acting", to_json(g.acting())}};
    case K::Power:
      return {{"op", "power"}, {"base", to_json(g.children().front())}, {"exponent", g.param()}};
  }
  return {};
}

Json to_json(const GroupOrder& o) {
  return std::visit(overloaded{[](const BigInt& v) { return big_to_json(v); },
                               [](const Infinite&) { return Json("infinite"); },
                               [](const UnknownOrder& u) { return Json{{"unknown", u.missing}}; }},
                    o);
}

SpaceDescriptor space_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) bad("space must be a one-key object: fm, bare, kontsevich or mgn");
  const auto& [key, body] = *j.items().begin();
  if (key == "fm") return FMSpace{base_from_json(field(body, "base")), int_from_json(field(body, "n"), "n")};
  if (key == "bare") return BareSpace{base_from_json(field(body, "base"))};
  if (key == "kontsevich")
    return Kontsevich{int_from_json(field(body, "N"), "N"), int_from_json(field(body, "d"), "d"),
                      int_from_json(field(body, "n"), "n")};
  if (key == "mgn") return ModuliCurves{int_from_json(field(body, "g"), "g"), int_from_json(field(body, "n"), "n")};
  bad("unknown space kind \"" + key + "\"");
}

}  // namespace fmckit
