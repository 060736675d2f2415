#include "fmckit/cli.hpp"
#include "fmckit/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace fmckit::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Outcome {
  Json doc;
  int code = kExitOk;
};

struct Flags {
  bool help = false;
  bool pretty = false;
  std::string in_file;

  int n = -1, r = -1;
  int base_rho = -1, base_dim = -1;
  std::string style = "symmetric";

  std::vector<long long> a;
  int power = -1;
  bool classify = false;

  std::string model = "P13", op, cone = "mori", class_name, lattice;
  std::vector<long long> vector, m;
  long long d = 0;
  int bound = 5;

  int label = 0, N = -1, degree = -1;
  std::vector<int> labels, perm, points;
  std::vector<long long> mu, nu1, nu2;

  std::string triple;
  std::vector<int> forget;
  std::vector<int> I, J;

  std::string space;
  bool connected = false, order = false, tree = false, explain = false;
  bool list = false;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::vector<BigInt> big_list(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

MobiusMap mobius_from_list(const std::vector<long long>& v, const char* flag) {
  need(v.size() == 4, std::string(flag) + " takes four integers a,b,c,d");
  try {
    return MobiusMap(v[0], v[1], v[2], v[3]);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json read_document(const Flags& f, std::istream& in) {
  std::string text;
  if (!f.in_file.empty()) {
    std::ifstream file(f.in_file);
    need(static_cast<bool>(file), "cannot open " + f.in_file);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("input is not JSON: ") + e.what());
  }
}

Json parse_inline(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(flag) + " is not JSON: " + e.what());
  }
}

Outcome cmd_picard(const Flags& f, std::ostream& err) {
  need(f.base_rho >= 0 && f.base_dim >= 0 && f.n >= 0, "picard needs --base-rho, --base-dim and --n");
  err << "note: assuming rho(X^n) = n * rho(X)\n";
  return {{{"picard", big_to_json(picard_number(f.base_rho, f.base_dim, f.n))}}};
}

Outcome cmd_schedule(const Flags& f) {
  need(f.n >= 0, "schedule needs --n");
  auto s = f.style == "symmetric" ? symmetric_schedule(f.n) : recursive_schedule(f.n);
  return {to_json(s)};
}

Outcome cmd_chow(const Flags& f) {
  need(!f.a.empty(), "chow needs --a");
  const int n = static_cast<int>(f.a.size());
  if (f.classify) {
    return std::visit(overloaded{[](const FactorsThrough& t) {
                                   return Outcome{{{"verdict", "factors_through"}, {"j", t.j}, {"degree", t.degree}}};
                                 },
                                 [](const NotAPencil& p) {
                                   return Outcome{{{"verdict", "not_a_pencil"}, {"reason", p.reason}},
                                                  kExitObstruction};
                                 }},
                      pencil_classify_product(f.a));
  }
  const int k = f.power < 0 ? n : f.power;
  need(k >= 0, "--power must be non-negative");
  auto p = sf_pow(SquareFreeClass::linear(f.a), k);
  Json out{{"n", n}, {"power", k}, {"class", to_json(p)}};
  if (k == n) out["integral"] = big_to_json(sf_integrate(p));
  return {out};
}

NumericalClass class_arg(const Flags& f, const Preset& p, Lattice fallback) {
  if (!f.class_name.empty()) {
    auto it = p.classes.find(f.class_name);
    need(it != p.classes.end(), "unknown class \"" + f.class_name + "\" for " + model_name(p.model));
    return it->second;
  }
  need(!f.vector.empty(), "this operation needs --class or --vector");
  need(f.vector.size() == p.lattices.rank(), "--vector has the wrong length");
  Lattice l = fallback;
  if (!f.lattice.empty()) l = f.lattice == "divisor" ? Lattice::Divisor : Lattice::Curve;
  return {l, big_list(f.vector)};
}

Outcome cmd_cones(const Flags& f) {
  Model model;
  try {
    model = parse_model(f.model);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const Preset p = preset(model);
  const std::string op = f.op.empty() ? "cone" : f.op;
  auto cone_named = [&]() -> const RationalCone& {
    auto it = p.cones.find(f.cone);
    need(it != p.cones.end(), "unknown cone \"" + f.cone + "\" for " + model_name(model));
    return it->second;
  };

  if (op == "cone") return {to_json(cone_named())};
  if (op == "dual") return {to_json(dual_cone(cone_named(), p.lattices))};
  if (op == "rays") return {to_json(extremal_rays(cone_named()))};
  if (op == "classes") {
    Json classes = Json::object();
    for (const auto& [name, c] : p.classes) classes[name] = to_json(c);
    Json cones = Json::array();
    for (const auto& [name, c] : p.cones) cones.push_back(name);
    return {{{"model", model_name(model)},
             {"divisor_basis", p.lattices.divisor_basis()},
             {"curve_basis", p.lattices.curve_basis()},
             {"classes", classes},
             {"cones", cones}}};
  }
  if (op == "contains") {
    const RationalCone& c = cone_named();
    NumericalClass v = class_arg(f, p, c.lattice());
    need(v.lattice == c.lattice(), "class and cone live in different lattices");
    return std::visit(overloaded{[&](const ContainsYes& y) {
                                   Json coef = Json::array();
                                   for (const auto& x : y.coefficients) coef.push_back(rational_to_json(x));
                                   return Outcome{{{"contains", true},
                                                   {"certificate", {{"coefficients", coef},
                                                                    {"generators", to_json(c)["generators"]}}}}};
                                 },
                                 [](const ContainsNo& no) {
                                   return Outcome{{{"contains", false}, {"separator", to_json(no.separator)}}};
                                 }},
                      contains(c, v, p.lattices));
  }
  if (op == "fano") {
    auto rep = fano_test(p.lattices, p.classes.at("-K"), p.cones.at("mori"));
    Json table = Json::array();
    for (const auto& row : rep.table) {
      Json ray = Json::array();
      for (const auto& x : row.ray) ray.push_back(big_to_json(x));
      table.push_back({{"ray", ray}, {"pairing", big_to_json(row.pairing)}});
    }
    return {{{"fano", rep.fano}, {"table", table}}, rep.fano ? kExitOk : kExitObstruction};
  }
  if (op == "decompose") {
    need(model == Model::P13, "decompose is only defined for P13");
    MoriResult res;
    try {
      res = mori_decompose_p13(f.d, big_list(f.m));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return std::visit(overloaded{[](const MoriDecomposition& dec) {
                                   Json rul = Json::array();
                                   for (const auto& x : dec.on_rulings) rul.push_back(big_to_json(x));
                                   return Outcome{{{"on_line", big_to_json(dec.on_line)}, {"on_rulings", rul}}};
                                 },
                                 [](const MoriRejected& rej) {
                                   return Outcome{{{"rejected", rej.index}}, kExitObstruction};
                                 }},
                      res);
  }
  if (op == "isotropic") {
    need(model == Model::DP6, "isotropic is only defined for surfaces (DP6)");
    need(f.bound >= 0 && f.bound <= 20, "--bound must be in 0..20");
    Json out = Json::array();
    for (const auto& c : isotropic_nef_classes(p, f.bound)) out.push_back(to_json(c));
    return {{{"classes", out}}};
  }
  throw InputError("unknown cones --op \"" + op + "\"");
}

StableCurveTree as_curve(const StableMapTree& t) { return {t.components, t.edges, t.markings}; }

Outcome cmd_stablemap(const Flags& f, std::istream& in) {
  const std::string op = f.op.empty() ? "canonicalize" : f.op;
  if (op == "dimension") {
    need(f.N >= 0 && f.degree >= 0 && f.n >= 0, "dimension needs --N, --d and --n");
    return {{{"dimension", big_to_json(moduli_dimension(f.N, f.degree, f.n))}}};
  }
  if (op == "boundary") {
    need(f.n >= 0, "boundary needs --n");
    Json divs = Json::array();
    auto all = boundary_divisors(f.n);
    if (f.list)
      for (const auto& s : all) divs.push_back(subset_to_json(s));
    Json out{{"n", f.n}, {"count", all.size()}};
    if (f.list) out["divisors"] = divs;
    return {out};
  }

  StableMapTree t = map_tree_from_json(read_document(f, in));
  const bool curve_op = op == "cross-ratio";
  auto problems = curve_op ? validate(as_curve(t)) : validate(t);
  if (op == "validate") return {{{"valid", problems.empty()}, {"problems", problems}}, problems.empty() ? 0 : kExitInvalid};
  if (!problems.empty()) return {{{"error", "invalid tree"}, {"problems", problems}}, kExitInvalid};

  if (op == "canonicalize") return {to_json(canonicalize(t))};
  if (op == "evaluate") {
    need(t.markings.count(f.label) == 1, "--label must name a marking");
    return {{{"label", f.label}, {"value", to_json(evaluate(t, f.label))}}};
  }
  if (op == "forget") {
    need(!f.labels.empty(), "forget needs --labels");
    return {to_json(forget(t, std::set<int>(f.labels.begin(), f.labels.end())))};
  }
  if (op == "forget-map") return {to_json(forget_map(t))};
  if (op == "act-sym") {
    try {
      return {to_json(act_sym(t, Permutation(f.perm)))};
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (op == "act-target") return {to_json(act_target(t, mobius_from_list(f.mu, "--mu")))};
  if (op == "act-pair")
    return {to_json(act_pair(t, mobius_from_list(f.nu1, "--nu1"), mobius_from_list(f.nu2, "--nu2")))};
  if (op == "cross-ratio") {
    need(f.points.size() == 4, "cross-ratio needs --points i,j,k,l");
    return {{{"cross_ratio",
              to_json(cross_ratio(as_curve(t), f.points[0], f.points[1], f.points[2], f.points[3]))}}};
  }
  throw InputError("unknown stablemap --op \"" + op + "\"");
}

Outcome cmd_pencils(const Flags& f) {
  need(f.n >= 1, "pencils needs --n");
  const std::string op = f.op.empty() ? "list" : f.op;
  if (op == "list") {
    Json out = Json::array();
    for (const auto& p : modular_pencils(f.n)) out.push_back(to_json(p));
    return {{{"n", f.n}, {"count", out.size()}, {"pencils", out}}};
  }
  if (op == "profile") {
    Json t = parse_inline(f.triple, "--triple");
    need(t.is_array() && t.size() == 3, "--triple is a JSON list of three pencils");
    std::vector<PencilDescriptor> triple;
    for (const auto& x : t) triple.push_back(pencil_from_json(f.n, x));
    auto rep = diagonal_preimage_profile(f.n, triple);
    Json comps = Json::array();
    for (const auto& s : rep.components)
      comps.push_back({{"name", s.name}, {"description", s.description}, {"codimension", s.codimension}});
    Json out{{"admissible", rep.admissible}, {"components", comps}};
    if (rep.witness) out["witness"] = rep.witness->name;
    return {out, rep.admissible ? kExitOk : kExitObstruction};
  }
  if (op == "classify") {
    PicSignature sig;
    sig.a = big_list(f.a);
    need(static_cast<int>(sig.a.size()) == f.n, "--a needs n coefficients");
    if (!f.forget.empty()) sig.forget_class = IndexSubset(f.n, f.forget);
    return std::visit(
        overloaded{[](const EvClass& e) {
                     return Outcome{{{"class", "ev"}, {"i", e.i}, {"multiplicity", big_to_json(e.multiplicity)}}};
                   },
                   [](const ForgetToM04& m) { return Outcome{{{"class", "m04"}, {"m04", subset_to_json(m.J)}}}; },
                   [](const NonModular& nm) {
                     return Outcome{{{"class", "non_modular"}, {"reason", nm.reason}}, kExitObstruction};
                   }},
        classify_pencil(sig));
  }
  throw InputError("unknown pencils --op \"" + op + "\"");
}

Outcome cmd_factor(const Flags& f, std::ostream& err) {
  need(f.n >= 1 && f.r >= 1 && !f.I.empty() && !f.J.empty(), "factor needs --n, --r, --I and --J");
  auto res = factor_forgetful(f.n, f.r, IndexSubset(f.n, f.I), IndexSubset(f.n, f.J));
  if (auto* ob = std::get_if<Obstructed>(&res)) {
    err << "obstructed: " << ob->reason << "\n";
    return {{{"verdict", "obstructed"}}, kExitObstruction};
  }
  const auto& d = std::get<ForgetfulDescriptor>(res);
  return {{{"verdict", "factors"}, {"forgotten", subset_to_json(d.forgotten)}, {"target", d.target()}}};
}

Outcome cmd_aut(const Flags& f, std::ostream& err) {
  need(!f.space.empty(), "aut needs --space");
  SpaceDescriptor s = space_from_json(parse_inline(f.space, "--space"));
  AutResult res = f.connected ? aut_connected(s) : aut_structure(s);
  const char* key = f.connected ? "connected" : "structure";
  auto describe = [&](const GroupExpr& g, Json& out) {
    out[key] = g.str();
    if (f.tree) out["tree"] = to_json(g);
    if (f.order) out["order"] = to_json(group_order(g));
    if (f.explain) out["rule"] = res.rule;
  };
  return std::visit(overloaded{[&](const GroupExpr& g) {
                                 Json out = Json::object();
                                 describe(g, out);
                                 return Outcome{out};
                               },
                               [&](const Conjectural& c) {
                                 Json out = Json::object();
                                 describe(c.expr, out);
                                 out["status"] = "conjectural";
                                 err << "warning: conjectural statement, not a theorem\n";
                                 return Outcome{out};
                               },
                               [&](const Unsupported& u) {
                                 return Outcome{{{"unsupported", u.citation}}, kExitObstruction};
                               }},
                    res.value);
}

Outcome cmd_bruteforce(const Flags& f) {
  need(f.n >= 1 && f.r >= 1, "bruteforce-diag needs --n and --r");
  auto rep = diagonal_stabilizer(f.n, f.r);
  Json out{{"n", rep.n}, {"r", rep.r}, {"order", rep.tuples.size()}, {"verdict", verdict_name(rep.verdict)}};
  if (f.list) {
    Json tuples = Json::array();
    for (const auto& t : rep.tuples) {
      Json row = Json::array();
      for (const auto& p : t) row.push_back(p.images());
      tuples.push_back(row);
    }
    out["tuples"] = tuples;
  }
  return {out};
}

struct Sub {
  CLI::App* app;
  const char* module;
};

Json help_doc(const Sub& s) {
  Json flags = Json::object();
  for (const CLI::Option* o : s.app->get_options()) {
    std::string name = o->get_name(false, true);
    if (name.empty()) continue;
    flags[name] = o->get_description();
  }
  return {{"help", s.app->get_description()}, {"module", s.module}, {"flags", flags}};
}

void emit(std::ostream& out, const Json& doc, bool pretty) { out << (pretty ? doc.dump(2) : doc.dump()) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"fmckit"};
  app.set_help_flag();
  app.require_subcommand(1, 1);
  Flags f;
  std::map<std::string, Sub> subs;

  auto add = [&](const char* name, const char* module, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->set_help_flag();
    s->add_flag("--help", f.help, "print this document");
    s->add_flag("--pretty", f.pretty, "indent the JSON output");
    subs.emplace(name, Sub{s, module});
    return s;
  };

  auto* picard = add("picard", "blowup-lattice", "Picard number of X[n] from rho(X), dim X and n");
  picard->add_option("--base-rho", f.base_rho, "Picard number of X");
  picard->add_option("--base-dim", f.base_dim, "dimension of X");
  picard->add_option("--n", f.n, "number of points");

  auto* schedule = add("schedule", "blowup-lattice", "blow-up schedule of X[n]");
  schedule->add_option("--n", f.n, "number of points");
  schedule->add_option("--style", f.style, "symmetric or recursive")->check(CLI::IsMember({"symmetric", "recursive"}));

  auto* chow = add("chow", "chow-product", "powers of a_1 h_1 + ... + a_n h_n in the product ring");
  chow->add_option("--a", f.a, "coefficients a_1,...,a_n")->delimiter(',');
  chow->add_option("--power", f.power, "exponent (default n)");
  chow->add_flag("--classify", f.classify, "classify the class as a pencil");

  auto* cones = add("cones", "cone-engine", "preset cones, duals, membership certificates");
  cones->add_option("--model", f.model, "P13 or DP6");
  cones->add_option("--op", f.op, "cone | dual | rays | contains | fano | decompose | isotropic | classes");
  cones->add_option("--cone", f.cone, "preset cone name (default mori)");
  cones->add_option("--class", f.class_name, "preset class name");
  cones->add_option("--vector", f.vector, "class coordinates")->delimiter(',');
  cones->add_option("--lattice", f.lattice, "divisor or curve, for --vector")
      ->check(CLI::IsMember({"divisor", "curve"}));
  cones->add_option("--d", f.d, "degree, for decompose");
  cones->add_option("--m", f.m, "multiplicities m1,m2,m3, for decompose")->delimiter(',');
  cones->add_option("--bound", f.bound, "coefficient box, for isotropic");

  auto* stablemap = add("stablemap", "stable-maps", "operations on genus-0 stable map trees (JSON on stdin)");
  stablemap->add_option("--op", f.op,
                        "canonicalize | validate | evaluate | forget | forget-map | act-sym | act-target | "
                        "act-pair | cross-ratio | dimension | boundary");
  stablemap->add_option("--in", f.in_file, "read the tree from a file instead of stdin");
  stablemap->add_option("--label", f.label, "marking, for evaluate");
  stablemap->add_option("--labels", f.labels, "markings, for forget")->delimiter(',');
  stablemap->add_option("--perm", f.perm, "permutation images, for act-sym")->delimiter(',');
  stablemap->add_option("--mu", f.mu, "a,b,c,d, for act-target")->delimiter(',');
  stablemap->add_option("--nu1", f.nu1, "a,b,c,d, for act-pair")->delimiter(',');
  stablemap->add_option("--nu2", f.nu2, "a,b,c,d, for act-pair")->delimiter(',');
  stablemap->add_option("--points", f.points, "i,j,k,l, for cross-ratio")->delimiter(',');
  stablemap->add_option("--N", f.N, "target P^N, for dimension");
  stablemap->add_option("--d", f.degree, "degree, for dimension");
  stablemap->add_option("--n", f.n, "markings, for dimension and boundary");
  stablemap->add_flag("--list", f.list, "list the divisors, for boundary");

  auto* pencils = add("pencils", "fibrations", "modular pencils, signatures, diagonal preimages");
  pencils->add_option("--n", f.n, "number of points");
  pencils->add_option("--op", f.op, "list | profile | classify");
  pencils->add_option("--triple", f.triple, "JSON list of three pencils, for profile");
  pencils->add_option("--a", f.a, "coefficients of h_i, for classify")->delimiter(',');
  pencils->add_option("--forget", f.forget, "four surviving labels, for classify")->delimiter(',');

  auto* factor = add("factor", "fibrations", "factor a pair of forgetful maps through a common one");
  factor->add_option("--n", f.n, "number of points");
  factor->add_option("--r", f.r, "target P^1[r]");
  factor->add_option("--I", f.I, "first forgotten set")->delimiter(',');
  factor->add_option("--J", f.J, "second forgotten set")->delimiter(',');

  auto* aut = add("aut", "aut-groups", "automorphism group structure of a space");
  aut->add_option("--space", f.space, "JSON space descriptor");
  aut->add_flag("--connected", f.connected, "identity component only");
  aut->add_flag("--order", f.order, "add the group order");
  aut->add_flag("--tree", f.tree, "add the expression tree");
  aut->add_flag("--explain", f.explain, "add the rule that was applied");

  auto* brute = add("bruteforce-diag", "aut-groups", "tuples in S_n^r preserving the big diagonals");
  brute->add_option("--n", f.n, "number of points");
  brute->add_option("--r", f.r, "number of curve factors");
  brute->add_flag("--list", f.list, "list the tuples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    emit(out, {{"error", e.what()}}, false);
    return kExitInvalid;
  }

  std::string name = app.get_subcommands().front()->get_name();
  const Sub& sub = subs.at(name);
  if (f.help) {
    emit(out, help_doc(sub), f.pretty);
    return kExitOk;
  }

  Outcome o;
  try {
    if (name == "picard") o = cmd_picard(f, err);
    else if (name == "schedule") o = cmd_schedule(f);
    else if (name == "chow") o = cmd_chow(f);
    else if (name == "cones") o = cmd_cones(f);
    else if (name == "stablemap") o = cmd_stablemap(f, in);
    else if (name == "pencils") o = cmd_pencils(f);
    else if (name == "factor") o = cmd_factor(f, err);
    else if (name == "aut") o = cmd_aut(f, err);
    else o = cmd_bruteforce(f);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    o = {{{"error", e.what()}}, kExitInvalid};
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    o = {{{"error", e.what()}}, kExitInvalid};
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    o = {{{"error", e.what()}}, kExitInternal};
  }
  emit(out, o.doc, f.pretty);
  return o.code;
}

}  // namespace fmckit::cli
