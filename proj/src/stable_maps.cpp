#include "fmckit/stable_maps.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fmckit {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// ------------------------------------------------------------------ points

ProjPoint::ProjPoint(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw std::invalid_argument("(0:0) is not a point of P^1");
  if (q_ == 0) {
    p_ = 1;
    return;
  }
  BigInt g = gcd(abs(p_), abs(q_));
  p_ /= g;
  q_ /= g;
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::string ProjPoint::str() const { return "(" + p_.str() + ":" + q_.str() + ")"; }

MobiusMap::MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ == 0) throw std::invalid_argument("Mobius map with zero determinant");
  BigInt g = gcd(gcd(abs(a_), abs(b_)), gcd(abs(c_), abs(d_)));
  BigInt first = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (first < 0) g = -g;
  a_ /= g;
  b_ /= g;
  c_ /= g;
  d_ /= g;
}

namespace {
BigInt det2(const ProjPoint& u, const ProjPoint& v) { return u.p() * v.q() - v.p() * u.q(); }
}  // namespace

MobiusMap MobiusMap::normalizing(const ProjPoint& u1, const ProjPoint& u2, const ProjPoint& u3) {
  if (u1 == u2 || u1 == u3 || u2 == u3) throw std::invalid_argument("normalizing needs three distinct points");
  BigInt s = det2(u3, u1), t = det2(u3, u2);
  return {s * u2.q(), -s * u2.p(), t * u1.q(), -t * u1.p()};
}

ProjPoint MobiusMap::operator()(const ProjPoint& x) const {
  return {a_ * x.p() + b_ * x.q(), c_ * x.p() + d_ * x.q()};
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
          f.c_ * g.b_ + f.d_ * g.d_};
}

// ------------------------------------------------------------------- trees

namespace {

// Shared representation; framed < 0 means no map.
struct Work {
  int components = 1;
  std::vector<Edge> edges;
  std::map<int, Attachment> markings;
  int framed = -1;
  MobiusMap frame;
};

Work to_work(const StableMapTree& t) { return {t.components, t.edges, t.markings, t.framed, t.frame}; }
Work to_work(const StableCurveTree& t) { return {t.components, t.edges, t.markings, -1, {}}; }
StableMapTree to_map(const Work& w) { return {w.components, w.edges, w.markings, w.framed, w.frame}; }
StableCurveTree to_curve(const Work& w) { return {w.components, w.edges, w.markings}; }

const ProjPoint& end_on(const Edge& e, int c) { return e.a.component == c ? e.a.point : e.b.point; }
int other_end(const Edge& e, int c) { return e.a.component == c ? e.b.component : e.a.component; }

int special_count(const Work& w, int c) {
  int k = 0;
  for (const auto& e : w.edges) k += (e.a.component == c) + (e.b.component == c);
  for (const auto& [label, m] : w.markings) k += m.component == c;
  return k;
}

std::vector<std::string> check(const Work& w) {
  std::vector<std::string> out;
  if (w.components < 1) {
    out.push_back("tree needs at least one component");
    return out;
  }
  auto in_range = [&](int c) { return c >= 0 && c < w.components; };
  if (w.framed >= 0 && !in_range(w.framed)) out.push_back("framed component out of range");
  bool ends_ok = true;
  for (const auto& e : w.edges) {
    if (!in_range(e.a.component) || !in_range(e.b.component)) {
      out.push_back("edge endpoint out of range");
      ends_ok = false;
    } else if (e.a.component == e.b.component) {
      out.push_back("edge is a loop on component " + std::to_string(e.a.component));
      ends_ok = false;
    }
  }
  for (const auto& [label, m] : w.markings) {
    if (label < 1) out.push_back("marking label " + std::to_string(label) + " is not positive");
    if (!in_range(m.component)) {
      out.push_back("marking " + std::to_string(label) + " on missing component");
      ends_ok = false;
    }
  }
  if (!ends_ok) return out;
  // connected tree
  std::vector<int> uf(static_cast<std::size_t>(w.components));
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return uf[static_cast<std::size_t>(x)] == x ? x : uf[static_cast<std::size_t>(x)] = find(uf[static_cast<std::size_t>(x)]);
  };
  bool cycle = false;
  for (const auto& e : w.edges) {
    int a = find(e.a.component), b = find(e.b.component);
    if (a == b) cycle = true;
    uf[static_cast<std::size_t>(a)] = b;
  }
  if (cycle || static_cast<int>(w.edges.size()) != w.components - 1) out.push_back("component graph is not a tree");
  for (int c = 0; c < w.components; ++c) {
    std::vector<ProjPoint> pts;
    for (const auto& e : w.edges) {
      if (e.a.component == c) pts.push_back(e.a.point);
      if (e.b.component == c) pts.push_back(e.b.point);
    }
    for (const auto& [label, m] : w.markings)
      if (m.component == c) pts.push_back(m.point);
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      out.push_back("special points collide on component " + std::to_string(c));
    if (c != w.framed && pts.size() < 3)
      out.push_back("stability: component " + std::to_string(c) + " has " + std::to_string(pts.size()) +
                    " special points");
  }
  return out;
}

void require_valid(const Work& w) {
  auto v = check(w);
  if (!v.empty()) throw std::invalid_argument("invalid tree: " + v.front());
}

struct Layout {
  std::vector<int> parent, parent_edge, submin;
  std::vector<std::vector<int>> children;  // sorted by submin
};

Layout root_at(const Work& w, int root) {
  const auto n = static_cast<std::size_t>(w.components);
  Layout L{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, INT_MAX), std::vector<std::vector<int>>(n)};
  for (const auto& [label, m] : w.markings) {
    auto& s = L.submin[static_cast<std::size_t>(m.component)];
    s = std::min(s, label);
  }
  std::vector<int> order{root};
  std::vector<bool> seen(n, false);
  seen[static_cast<std::size_t>(root)] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    for (std::size_t e = 0; e < w.edges.size(); ++e) {
      const auto& edge = w.edges[e];
      if (edge.a.component != c && edge.b.component != c) continue;
      int o = other_end(edge, c);
      if (seen[static_cast<std::size_t>(o)]) continue;
      seen[static_cast<std::size_t>(o)] = true;
      L.parent[static_cast<std::size_t>(o)] = c;
      L.parent_edge[static_cast<std::size_t>(o)] = static_cast<int>(e);
      L.children[static_cast<std::size_t>(c)].push_back(o);
      order.push_back(o);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int p = L.parent[static_cast<std::size_t>(*it)];
    if (p >= 0) {
      auto& s = L.submin[static_cast<std::size_t>(p)];
      s = std::min(s, L.submin[static_cast<std::size_t>(*it)]);
    }
  }
  for (auto& ch : L.children)
    std::sort(ch.begin(), ch.end(), [&](int x, int y) {
      return L.submin[static_cast<std::size_t>(x)] < L.submin[static_cast<std::size_t>(y)];
    });
  return L;
}

void transform_component(Work& w, int c, const MobiusMap& f) {
  for (auto& e : w.edges) {
    if (e.a.component == c) e.a.point = f(e.a.point);
    if (e.b.component == c) e.b.point = f(e.b.point);
  }
  for (auto& [label, m] : w.markings)
    if (m.component == c) m.point = f(m.point);
}

Work canonical(Work w) {
  require_valid(w);
  int root;
  if (w.framed >= 0) {
    root = w.framed;
    transform_component(w, root, w.frame);
    w.frame = MobiusMap::identity();
  } else {
    if (w.markings.empty()) throw std::invalid_argument("cannot root an unmarked curve");
    root = w.markings.begin()->second.component;
  }
  Layout L = root_at(w, root);
  for (int c = 0; c < w.components; ++c) {
    if (c == w.framed) continue;
    std::vector<ProjPoint> ordered;
    const auto cs = static_cast<std::size_t>(c);
    if (L.parent_edge[cs] >= 0) ordered.push_back(end_on(w.edges[static_cast<std::size_t>(L.parent_edge[cs])], c));
    for (const auto& [label, m] : w.markings)
      if (m.component == c) ordered.push_back(m.point);
    for (int ch : L.children[cs])
      ordered.push_back(end_on(w.edges[static_cast<std::size_t>(L.parent_edge[static_cast<std::size_t>(ch)])], c));
    transform_component(w, c, MobiusMap::normalizing(ordered[0], ordered[1], ordered[2]));
  }
  // preorder renumbering
  std::vector<int> new_id(static_cast<std::size_t>(w.components), -1);
  int next = 0;
  std::function<void(int)> visit = [&](int c) {
    new_id[static_cast<std::size_t>(c)] = next++;
    for (int ch : L.children[static_cast<std::size_t>(c)]) visit(ch);
  };
  visit(root);
  Work out;
  out.components = w.components;
  out.framed = w.framed >= 0 ? 0 : -1;
  for (int c = 0; c < w.components; ++c) {
    const auto cs = static_cast<std::size_t>(c);
    if (L.parent[cs] < 0) continue;
    const Edge& e = w.edges[static_cast<std::size_t>(L.parent_edge[cs])];
    int p = L.parent[cs];
    out.edges.push_back({{new_id[static_cast<std::size_t>(p)], end_on(e, p)}, {new_id[cs], end_on(e, c)}});
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& x, const Edge& y) { return x.b.component < y.b.component; });
  for (const auto& [label, m] : w.markings)
    out.markings[label] = {new_id[static_cast<std::size_t>(m.component)], m.point};
  return out;
}

void remove_component(Work& w, int c) {
  auto shift = [c](int& x) {
    if (x > c) --x;
  };
  for (auto& e : w.edges) {
    shift(e.a.component);
    shift(e.b.component);
  }
  for (auto& [label, m] : w.markings) shift(m.component);
  if (w.framed >= 0) shift(w.framed);
  --w.components;
}

void stabilize(Work& w) {
  while (true) {
    int c = -1;
    for (int k = 0; k < w.components; ++k)
      if (k != w.framed && special_count(w, k) < 3) {
        c = k;
        break;
      }
    if (c < 0) return;
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < w.edges.size(); ++e)
      if (w.edges[e].a.component == c || w.edges[e].b.component == c) edges.push_back(e);
    std::vector<int> labels;
    for (const auto& [label, m] : w.markings)
      if (m.component == c) labels.push_back(label);
    if (edges.size() == 2 && labels.empty()) {
      const Edge e1 = w.edges[edges[0]], e2 = w.edges[edges[1]];
      int u = other_end(e1, c), v = other_end(e2, c);
      Edge fused{{u, end_on(e1, u)}, {v, end_on(e2, v)}};
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(edges[1]));
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(edges[0]));
      w.edges.push_back(fused);
    } else if (edges.size() == 1 && labels.size() == 1) {
      const Edge e = w.edges[edges[0]];
      int u = other_end(e, c);
      w.markings[labels[0]] = {u, end_on(e, u)};
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(edges[0]));
    } else if (edges.size() == 1 && labels.empty()) {
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(edges[0]));
    } else {
      throw std::invalid_argument("curve has too few markings to stabilize");
    }
    remove_component(w, c);
  }
}

}  // namespace

std::vector<std::string> validate(const StableMapTree& t) {
  if (t.framed < 0) return {"framed component out of range"};
  return check(to_work(t));
}

std::vector<std::string> validate(const StableCurveTree& t) { return check(to_work(t)); }

StableMapTree canonicalize(const StableMapTree& t) {
  if (t.framed < 0) throw std::invalid_argument("framed component out of range");
  return to_map(canonical(to_work(t)));
}

StableCurveTree canonicalize(const StableCurveTree& t) { return to_curve(canonical(to_work(t))); }

ProjPoint evaluate(const StableMapTree& t, int label) {
  auto it = t.markings.find(label);
  if (it == t.markings.end()) throw std::invalid_argument("unknown marking label " + std::to_string(label));
  Work w = to_work(t);
  require_valid(w);
  int c = it->second.component;
  if (c == t.framed) return t.frame(it->second.point);
  Layout L = root_at(w, t.framed);
  while (L.parent[static_cast<std::size_t>(c)] != t.framed) c = L.parent[static_cast<std::size_t>(c)];
  return t.frame(end_on(t.edges[static_cast<std::size_t>(L.parent_edge[static_cast<std::size_t>(c)])], t.framed));
}

StableMapTree forget(const StableMapTree& t, const std::set<int>& labels) {
  Work w = to_work(t);
  require_valid(w);
  for (int l : labels)
    if (!w.markings.count(l)) throw std::invalid_argument("unknown marking label " + std::to_string(l));
  if (!labels.empty() && labels.size() == w.markings.size())
    throw std::invalid_argument("cannot forget every marking");
  for (int l : labels) w.markings.erase(l);
  stabilize(w);
  return to_map(canonical(std::move(w)));
}

StableCurveTree forget_map(const StableMapTree& t) {
  if (t.n() < 3) throw std::invalid_argument("forgetting the map needs n >= 3");
  Work w = to_work(t);
  require_valid(w);
  w.framed = -1;
  w.frame = MobiusMap::identity();
  stabilize(w);
  return to_curve(canonical(std::move(w)));
}

StableMapTree act_sym(const StableMapTree& t, const Permutation& sigma) {
  if (sigma.degree() != t.n()) throw std::invalid_argument("permutation degree differs from n");
  for (int i = 1; i <= t.n(); ++i)
    if (!t.markings.count(i)) throw std::invalid_argument("act_sym needs labels 1..n");
  StableMapTree out = t;
  for (int i = 1; i <= t.n(); ++i) out.markings[i] = t.markings.at(sigma(i));
  return canonicalize(out);
}

StableMapTree act_target(const StableMapTree& t, const MobiusMap& mu) {
  StableMapTree out = t;
  out.frame = mu * t.frame;
  return canonicalize(out);
}

StableMapTree act_pair(const StableMapTree& t, const MobiusMap& nu1, const MobiusMap& nu2) {
  if (t.n() != 2 || !t.markings.count(1) || !t.markings.count(2))
    throw std::invalid_argument("act_pair needs exactly the markings 1 and 2");
  const StableMapTree c = canonicalize(t);
  auto smooth = [](const ProjPoint& y1, const ProjPoint& y2) {
    StableMapTree s;
    s.markings[1] = {0, y1};
    s.markings[2] = {0, y2};
    return s;
  };
  auto bubble = [](const ProjPoint& y) {
    StableMapTree s;
    s.components = 2;
    s.edges.push_back({{0, y}, {1, ProjPoint::infinity()}});
    s.markings[1] = {1, ProjPoint::zero()};
    s.markings[2] = {1, ProjPoint::one()};
    return canonicalize(s);
  };
  if (c.components == 1) {
    ProjPoint y1 = nu1(c.markings.at(1).point), y2 = nu2(c.markings.at(2).point);
    return y1 != y2 ? smooth(y1, y2) : bubble(y1);
  }
  const ProjPoint& x = c.edges.at(0).a.point;
  ProjPoint y1 = nu1(x), y2 = nu2(x);
  return y1 != y2 ? smooth(y1, y2) : bubble(y1);
}

ProjPoint cross_ratio(const StableCurveTree& t, int i, int j, int k, int l) {
  if (t.components != 1) throw std::invalid_argument("cross_ratio needs a smooth curve");
  auto pt = [&](int label) {
    auto it = t.markings.find(label);
    if (it == t.markings.end()) throw std::invalid_argument("unknown marking label " + std::to_string(label));
    return it->second.point;
  };
  return MobiusMap::normalizing(pt(k), pt(i), pt(j))(pt(l));
}

BigInt moduli_dimension(int N, int d, int n) {
  if (N < 1 || d < 0 || n < 0) throw std::invalid_argument("moduli_dimension needs N >= 1, d >= 0, n >= 0");
  return BigInt(N) + BigInt(d) * (N + 1) + n - 3;
}

std::vector<IndexSubset> boundary_divisors(int n) {
  if (n < 2) throw std::invalid_argument("boundary_divisors needs n >= 2");
  return subsets(n, 2, n);
}

}  // namespace fmckit
