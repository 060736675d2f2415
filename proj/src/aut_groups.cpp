#include "fmckit/aut_groups.hpp"
#include "fmckit/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fmckit {

GroupExpr GroupExpr::sym(int n) {
  if (n < 1) throw std::invalid_argument("S_n needs n >= 1");
  GroupExpr g;
  g.kind_ = Kind::Sym;
  g.param_ = n;
  return g;
}

GroupExpr GroupExpr::pgl(int k) {
  if (k < 1) throw std::invalid_argument("PGL_k needs k >= 1");
  GroupExpr g;
  g.kind_ = Kind::PGL;
  g.param_ = k;
  return g;
}

GroupExpr GroupExpr::aut_curve(std::string class_id, std::optional<BigInt> order, bool connected) {
  if (class_id.empty()) throw std::invalid_argument("curve class identifier must be non-empty");
  if (order && *order < 1) throw std::invalid_argument("automorphism group order must be positive");
  GroupExpr g;
  g.kind_ = Kind::AutCurve;
  g.name_ = std::move(class_id);
  g.order_ = std::move(order);
  g.connected_ = connected;
  return g;
}

GroupExpr GroupExpr::aut_variety(std::string symbol) {
  GroupExpr g;
  g.kind_ = Kind::AutVariety;
  g.name_ = std::move(symbol);
  return g;
}

GroupExpr GroupExpr::trivial() { return GroupExpr{}; }

GroupExpr GroupExpr::direct(std::vector<GroupExpr> factors) {
  if (factors.empty()) return trivial();
  if (factors.size() == 1) return std::move(factors.front());
  GroupExpr g;
  g.kind_ = Kind::Direct;
  g.children_ = std::move(factors);
  return g;
}

GroupExpr GroupExpr::semidirect(GroupExpr normal, GroupExpr acting) {
  GroupExpr g;
  g.kind_ = Kind::Semidirect;
  g.children_ = {std::move(normal), std::move(acting)};
  return g;
}

GroupExpr GroupExpr::power(GroupExpr base, int exponent) {
  if (exponent < 1) throw std::invalid_argument("power exponent must be >= 1");
  if (exponent == 1) return base;
  GroupExpr g;
  g.kind_ = Kind::Power;
  g.param_ = exponent;
  g.children_ = {std::move(base)};
  return g;
}

bool GroupExpr::is_atom() const {
  return kind_ != Kind::Direct && kind_ != Kind::Semidirect && kind_ != Kind::Power;
}

std::string GroupExpr::render(bool erase_ids) const {
  auto operand = [&](const GroupExpr& c) {
    std::string s = c.render(erase_ids);
    return c.kind_ == Kind::Direct || c.kind_ == Kind::Semidirect ? "(" + s + ")" : s;
  };
  switch (kind_) {
    case Kind::Sym:
      return "S" + std::to_string(param_);
    case Kind::PGL:
      return "PGL" + std::to_string(param_);
    case Kind::AutCurve:
      return std::string(connected_ ? "Aut0(" : "Aut(") + (erase_ids ? "*" : name_) + ")";
    case Kind::AutVariety:
      return name_;
    case Kind::Trivial:
      return "1";
    case Kind::Direct: {
      std::string s;
      for (const auto& c : children_) s += (s.empty() ? "" : " x ") + operand(c);
      return s;
    }
    case Kind::Semidirect:
      return operand(acting()) + " |x " + operand(normal());
    case Kind::Power: {
      const auto& b = children_.front();
      return (b.is_atom() ? b.render(erase_ids) : "(" + b.render(erase_ids) + ")") + "^" + std::to_string(param_);
    }
  }
  return {};
}

std::string GroupExpr::str() const { return render(false); }
std::string GroupExpr::shape() const { return render(true); }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* kGenusOne =
    "genus one is outside the classification: translations of an elliptic curve act without preserving the "
    "structure used for higher genus";

struct CurveClass {
  std::string id;
  int genus = 0;
  std::optional<BigInt> order;
  int multiplicity = 0;
};

// Groups identical curve classes, ordered by multiplicity (descending) then identifier.
std::vector<CurveClass> curve_classes(const ProductOfCurves& p) {
  if (p.factors.empty()) throw std::invalid_argument("product of curves needs at least one factor");
  std::map<std::string, CurveClass> by_id;
  for (const auto& f : p.factors) {
    if (f.genus < 0) throw std::invalid_argument("genus must be non-negative");
    if (f.class_id.empty()) throw std::invalid_argument("curve class identifier must be non-empty");
    auto [it, fresh] = by_id.try_emplace(f.class_id, CurveClass{f.class_id, f.genus, f.aut_order, 0});
    if (!fresh && (it->second.genus != f.genus || it->second.order != f.aut_order))
      throw std::invalid_argument("curve class " + f.class_id + " declared with conflicting data");
    ++it->second.multiplicity;
  }
  std::vector<CurveClass> out;
  for (auto& [id, c] : by_id) out.push_back(c);
  std::stable_sort(out.begin(), out.end(),
                   [](const CurveClass& a, const CurveClass& b) { return a.multiplicity > b.multiplicity; });
  return out;
}

std::optional<Unsupported> product_unsupported(const std::vector<CurveClass>& classes) {
  for (const auto& c : classes)
    if (c.genus == 1) return Unsupported{kGenusOne};
  for (const auto& c : classes)
    if (c.genus == 0) return Unsupported{"products with rational curve factors are not covered"};
  return std::nullopt;
}

GroupExpr product_aut(const std::vector<CurveClass>& classes) {
  std::vector<GroupExpr> parts;
  for (const auto& c : classes) {
    GroupExpr a = GroupExpr::aut_curve(c.id, c.order);
    if (c.multiplicity == 1)
      parts.push_back(a);
    else
      parts.push_back(GroupExpr::semidirect(GroupExpr::power(a, c.multiplicity), GroupExpr::sym(c.multiplicity)));
  }
  return GroupExpr::direct(std::move(parts));
}

int factor_count(const std::vector<CurveClass>& classes) {
  int r = 0;
  for (const auto& c : classes) r += c.multiplicity;
  return r;
}

void check_curve(const CurveBase& c) {
  if (c.genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (c.id.empty()) throw std::invalid_argument("curve identifier must be non-empty");
}

void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
}

// Collapses a one-factor product or a genus-zero curve to a simpler base.
BaseSpace simplify(const BaseSpace& b) {
  if (auto* p = std::get_if<ProductOfCurves>(&b); p && p->factors.size() == 1) {
    const auto& f = p->factors.front();
    return simplify(CurveBase{f.genus, f.class_id, f.aut_order});
  }
  if (auto* c = std::get_if<CurveBase>(&b)) {
    check_curve(*c);
    if (c->genus == 0) return ProjLine{};
  }
  return b;
}

AutResult bare_structure(const BaseSpace& base) {
  return std::visit(
      overloaded{
          [](const ProjLine&) -> AutResult { return {GroupExpr::pgl(2), "automorphisms of P1"}; },
          [](const CurveBase& c) -> AutResult {
            if (c.genus == 1) return {Unsupported{kGenusOne}, "genus one"};
            return {GroupExpr::aut_curve(c.id, c.aut_order), "curve"};
          },
          [](const ProductOfCurves& p) -> AutResult {
            auto classes = curve_classes(p);
            if (auto u = product_unsupported(classes)) return {*u, "product of curves"};
            return {product_aut(classes), "product of curves of genus >= 2"};
          },
          [](const NefCanonical& x) -> AutResult {
            check_dim(x.dim);
            return {GroupExpr::aut_variety("Aut(" + x.name + ")"), "variety"};
          },
          [](const GeneralType& x) -> AutResult {
            check_dim(x.dim);
            return {GroupExpr::aut_variety("Aut(" + x.name + ")"), "variety"};
          }},
      simplify(base));
}

AutResult fm_structure(const BaseSpace& raw, int n) {
  if (n < 1) throw std::invalid_argument("configuration space needs n >= 1");
  if (n == 1) {
    AutResult r = bare_structure(raw);
    r.rule = "X[1] = X: " + r.rule;
    return r;
  }
  const BaseSpace base = simplify(raw);
  auto pair_or_sym = [n](const GroupExpr& a, const std::string& rule) -> AutResult {
    if (n == 2) return {GroupExpr::semidirect(GroupExpr::direct({a, a}), GroupExpr::sym(2)), rule + ", n = 2"};
    return {GroupExpr::direct({GroupExpr::sym(n), a}), rule + ", n != 2"};
  };
  return std::visit(
      overloaded{
          [&](const ProjLine&) -> AutResult { return pair_or_sym(GroupExpr::pgl(2), "P1[n]"); },
          [&](const CurveBase& c) -> AutResult {
            if (c.genus == 1) return {Unsupported{kGenusOne}, "genus one"};
            return pair_or_sym(GroupExpr::aut_curve(c.id, c.aut_order), "C[n], genus >= 2");
          },
          [&](const ProductOfCurves& p) -> AutResult {
            auto classes = curve_classes(p);
            if (auto u = product_unsupported(classes)) return {*u, "product of curves"};
            GroupExpr ax = product_aut(classes);
            if (n == 2)
              return {GroupExpr::semidirect(ax, GroupExpr::power(GroupExpr::sym(2), factor_count(classes))),
                      "X[2], X a product of r >= 2 curves"};
            return {GroupExpr::direct({GroupExpr::sym(n), ax}), "X[n], X a product of curves, n != 2"};
          },
          [&](const NefCanonical& x) -> AutResult {
            check_dim(x.dim);
            return {GroupExpr::aut_variety("Aut_Delta(" + x.name + "^" + std::to_string(n) + ")"),
                    "X[n], K_X nef"};
          },
          [&](const GeneralType& x) -> AutResult {
            check_dim(x.dim);
            if (n == 2) return {Unsupported{"n = 2 for general type bases is open"}, "X[2], general type"};
            return {Conjectural{GroupExpr::direct({GroupExpr::sym(n), GroupExpr::aut_variety("Aut(" + x.name + ")")})},
                    "X[n], general type (expected)"};
          }},
      base);
}

void check_kontsevich(const Kontsevich& k) {
  if (k.N < 1 || k.d < 1 || k.n < 0) throw std::invalid_argument("Kontsevich space needs N >= 1, d >= 1, n >= 0");
}

void check_mgn(const ModuliCurves& m) {
  if (m.g < 0 || m.n < 0) throw std::invalid_argument("M_{g,n} needs g >= 0, n >= 0");
}

GroupExpr connected_of_curve(const CurveBase& c) { return GroupExpr::aut_curve(c.id, std::nullopt, true); }

AutResult base_connected(const BaseSpace& raw, int n) {
  const BaseSpace base = simplify(raw);
  auto maybe_pair = [n](const GroupExpr& a, const std::string& rule) -> AutResult {
    if (n == 2) return {GroupExpr::direct({a, a}), rule + ", n = 2"};
    return {a, rule};
  };
  return std::visit(
      overloaded{
          [&](const ProjLine&) -> AutResult { return maybe_pair(GroupExpr::pgl(2), "identity component, P1"); },
          [&](const CurveBase& c) -> AutResult {
            if (c.genus == 1) return {Unsupported{kGenusOne}, "genus one"};
            return maybe_pair(connected_of_curve(c), "identity component, curve");
          },
          [&](const ProductOfCurves& p) -> AutResult {
            auto classes = curve_classes(p);
            if (auto u = product_unsupported(classes)) return {*u, "product of curves"};
            std::vector<GroupExpr> parts;
            for (const auto& c : classes)
              parts.push_back(GroupExpr::power(GroupExpr::aut_curve(c.id, std::nullopt, true), c.multiplicity));
            return {GroupExpr::direct(std::move(parts)), "identity component, dim X >= 2"};
          },
          [&](const NefCanonical& x) -> AutResult {
            check_dim(x.dim);
            GroupExpr a = GroupExpr::aut_variety("Aut0(" + x.name + ")");
            if (x.dim == 1) return maybe_pair(a, "identity component, curve");
            return {a, "identity component, dim X >= 2"};
          },
          [&](const GeneralType& x) -> AutResult {
            check_dim(x.dim);
            GroupExpr a = GroupExpr::aut_variety("Aut0(" + x.name + ")");
            if (x.dim == 1) return maybe_pair(a, "identity component, curve");
            return {a, "identity component, dim X >= 2"};
          }},
      base);
}

}  // namespace

AutResult aut_structure(const SpaceDescriptor& s) {
  return std::visit(
      overloaded{[](const FMSpace& f) { return fm_structure(f.base, f.n); },
                 [](const BareSpace& b) { return bare_structure(b.base); },
                 [](const Kontsevich& k) -> AutResult {
                   check_kontsevich(k);
                   if (k.N == 1 && k.d == 1 && k.n >= 1) {
                     AutResult r = fm_structure(ProjLine{}, k.n);
                     r.rule = "M_{0,n}(P1,1) = P1[n]: " + r.rule;
                     return r;
                   }
                   if (k.N == 2 && k.d == 2 && k.n == 0) return {GroupExpr::pgl(3), "conics in P2"};
                   return {Unsupported{"only the identity component is known for this Kontsevich space"},
                           "Kontsevich space"};
                 },
                 [](const ModuliCurves& m) -> AutResult {
                   check_mgn(m);
                   if (m.g >= 3 && m.n >= 1) return {GroupExpr::sym(m.n), "M_{g,n}, g >= 3"};
                   return {Unsupported{"only g >= 3 with n >= 1 is handled"}, "M_{g,n}"};
                 }},
      s);
}

AutResult aut_connected(const SpaceDescriptor& s) {
  return std::visit(
      overloaded{[](const FMSpace& f) {
                   if (f.n < 1) throw std::invalid_argument("configuration space needs n >= 1");
                   return base_connected(f.base, f.n);
                 },
                 [](const BareSpace& b) { return base_connected(b.base, 1); },
                 [](const Kontsevich& k) -> AutResult {
                   check_kontsevich(k);
                   if (k.d == 1 && k.N == 1) {
                     if (k.n < 1) return {Unsupported{"M_{0,0}(P1,1) is a point"}, "Kontsevich space"};
                     return base_connected(ProjLine{}, k.n);
                   }
                   if (k.d == 1) {
                     GroupExpr target = GroupExpr::pgl(k.N + 1);
                     if (k.n == 0) return {target, "lines in P^N"};
                     if (k.n == 2)
                       return {GroupExpr::direct({GroupExpr::pgl(2), GroupExpr::pgl(2), target}),
                               "degree one, n = 2"};
                     return {GroupExpr::direct({GroupExpr::pgl(2), target}), "degree one, n != 2"};
                   }
                   if (k.N == 2 && k.d == 2 && k.n == 0) return {GroupExpr::pgl(3), "conics in P2"};
                   if (k.N == k.d && k.N >= 3 && k.n >= k.N + 2)
                     return {GroupExpr::pgl(k.N + 1), "degree N in P^N with at least N + 2 markings"};
                   return {Unsupported{"no statement covers this Kontsevich space"}, "Kontsevich space"};
                 },
                 [](const ModuliCurves& m) -> AutResult {
                   check_mgn(m);
                   if (m.g >= 3 && m.n >= 1) return {GroupExpr::trivial(), "M_{g,n}, g >= 3"};
                   return {Unsupported{"only g >= 3 with n >= 1 is handled"}, "M_{g,n}"};
                 }},
      s);
}

GroupExpr connected_part(const GroupExpr& g) {
  std::vector<GroupExpr> found;
  auto walk = [&](auto&& self, const GroupExpr& e) -> void {
    if (e.kind() == GroupExpr::Kind::PGL) {
      found.push_back(e);
      return;
    }
    if (e.kind() == GroupExpr::Kind::Power) {
      const std::size_t before = found.size();
      self(self, e.children().front());
      std::vector<GroupExpr> base(found.begin() + static_cast<long>(before), found.end());
      for (int k = 1; k < e.param(); ++k) found.insert(found.end(), base.begin(), base.end());
      return;
    }
    for (const auto& c : e.children()) self(self, c);
  };
  walk(walk, g);
  return GroupExpr::direct(std::move(found));
}

GroupOrder group_order(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  switch (g.kind()) {
    case K::Sym:
      return factorial(static_cast<unsigned>(g.param()));
    case K::PGL:
      if (g.param() == 1) return BigInt(1);
      return Infinite{};
    case K::Trivial:
      return BigInt(1);
    case K::AutCurve:
      if (g.order() && !g.connected()) return *g.order();
      return UnknownOrder{{g.str()}};
    case K::AutVariety:
      return UnknownOrder{{g.str()}};
    case K::Power: {
      GroupOrder b = group_order(g.children().front());
      if (auto* v = std::get_if<BigInt>(&b)) return BigInt(boost::multiprecision::pow(*v, static_cast<unsigned>(g.param())));
      return b;
    }
    case K::Direct:
    case K::Semidirect: {
      BigInt prod = 1;
      bool infinite = false;
      std::vector<std::string> missing;
      for (const auto& c : g.children()) {
        GroupOrder o = group_order(c);
        if (auto* v = std::get_if<BigInt>(&o))
          prod *= *v;
        else if (std::holds_alternative<Infinite>(o))
          infinite = true;
        else
          for (auto& m : std::get<UnknownOrder>(o).missing) missing.push_back(m);
      }
      if (infinite) return Infinite{};
      if (!missing.empty()) return UnknownOrder{missing};
      return prod;
    }
  }
  return UnknownOrder{};
}

const char* verdict_name(StabilizerVerdict v) {
  switch (v) {
    case StabilizerVerdict::DiagonalSym: return "DiagonalSym";
    case StabilizerVerdict::FullSym2Power: return "FullSym2Power";
    case StabilizerVerdict::Trivial: return "Trivial";
    case StabilizerVerdict::Other: return "Other";
  }
  return "Other";
}

StabilizerReport diagonal_stabilizer(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("diagonal_stabilizer needs n >= 1 and r >= 1");
  if (n > 10) throw std::invalid_argument("n too large for brute force");
  const auto perms = all_permutations(n);
  const long long m = static_cast<long long>(perms.size());
  long long total = 1;
  for (int k = 0; k < r; ++k) {
    if (total > kBruteForceBound / m) throw std::invalid_argument("brute force bound exceeded: (n!)^r > 10^7");
    total *= m;
  }

  // image of every diagonal mask under every permutation
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (__builtin_popcountll(s) >= 2) masks.push_back(s);
  std::vector<std::vector<std::uint64_t>> image(perms.size(), std::vector<std::uint64_t>(masks.size()));
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (std::size_t k = 0; k < masks.size(); ++k) {
      std::uint64_t img = 0;
      for (int i = 1; i <= n; ++i)
        if (masks[k] >> (i - 1) & 1) img |= std::uint64_t{1} << (perms[p](i) - 1);
      image[p][k] = img;
    }

  using Tuple = std::vector<std::size_t>;
  const long long rest = total / m;
  auto chunks = parallel_chunks<std::vector<Tuple>>(perms.size(), [&](std::size_t first) {
    std::vector<Tuple> keep;
    Tuple t(static_cast<std::size_t>(r), 0);
    t[0] = first;
    for (long long idx = 0; idx < rest; ++idx) {
      long long x = idx;
      for (int j = r - 1; j >= 1; --j) {
        t[static_cast<std::size_t>(j)] = static_cast<std::size_t>(x % m);
        x /= m;
      }
      bool ok = true;
      for (std::size_t k = 0; ok && k < masks.size(); ++k)
        for (int j = 1; ok && j < r; ++j) ok = image[t[static_cast<std::size_t>(j)]][k] == image[t[0]][k];
      if (ok) keep.push_back(t);
    }
    return keep;
  });

  StabilizerReport rep{n, r, {}, StabilizerVerdict::Other};
  for (const auto& chunk : chunks)
    for (const auto& t : chunk) {
      std::vector<Permutation> tuple;
      for (auto i : t) tuple.push_back(perms[i]);
      rep.tuples.push_back(std::move(tuple));
    }

  const BigInt count = rep.tuples.size();
  bool all_diagonal = std::all_of(rep.tuples.begin(), rep.tuples.end(), [](const std::vector<Permutation>& t) {
    return std::all_of(t.begin(), t.end(), [&](const Permutation& p) { return p == t.front(); });
  });
  if (n == 1 && count == 1)
    rep.verdict = StabilizerVerdict::Trivial;
  else if (n == 2 && count == pow2(static_cast<unsigned>(r)))
    rep.verdict = StabilizerVerdict::FullSym2Power;
  else if (n >= 3 && all_diagonal && count == factorial(static_cast<unsigned>(n)))
    rep.verdict = StabilizerVerdict::DiagonalSym;
  return rep;
}

}  // namespace fmckit
