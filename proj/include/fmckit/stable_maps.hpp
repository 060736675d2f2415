#pragma once

#include "fmckit/exact.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace fmckit {

// Point (p : q) of P^1, primitive with q > 0, or (1 : 0).
class ProjPoint {
public:
  ProjPoint() : p_(1), q_(0) {}
  ProjPoint(BigInt p, BigInt q);

  static ProjPoint infinity() { return {1, 0}; }
  static ProjPoint zero() { return {0, 1}; }
  static ProjPoint one() { return {1, 1}; }
  static ProjPoint from_rational(const Rational& r) { return {r.num(), r.den()}; }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.q_ != b.q_) return a.q_ < b.q_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  BigInt p_, q_;
};

// [[a, b], [c, d]] acting by (p : q) -> (a p + b q : c p + d q).  Stored primitive
// with the first nonzero entry positive.
class MobiusMap {
public:
  MobiusMap() : a_(1), b_(0), c_(0), d_(1) {}
  MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d);

  static MobiusMap identity() { return {}; }
  // The map sending u1, u2, u3 to (1:0), (0:1), (1:1).
  static MobiusMap normalizing(const ProjPoint& u1, const ProjPoint& u2, const ProjPoint& u3);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  ProjPoint operator()(const ProjPoint& x) const;
  MobiusMap inverse() const;
  bool is_identity() const { return *this == identity(); }

  // (f * g)(x) = f(g(x))
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

private:
  BigInt a_, b_, c_, d_;
};

struct Attachment {
  int component = 0;
  ProjPoint point;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct Edge {
  Attachment a, b;  // canonical form: a is the parent side
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Components are 0..components-1.  Labels are positive integers.
struct StableCurveTree {
  int components = 1;
  std::vector<Edge> edges;
  std::map<int, Attachment> markings;

  int n() const { return static_cast<int>(markings.size()); }
  friend bool operator==(const StableCurveTree&, const StableCurveTree&) = default;
};

struct StableMapTree {
  int components = 1;
  std::vector<Edge> edges;
  std::map<int, Attachment> markings;
  int framed = 0;
  MobiusMap frame;

  int n() const { return static_cast<int>(markings.size()); }
  friend bool operator==(const StableMapTree&, const StableMapTree&) = default;
};

std::vector<std::string> validate(const StableMapTree& t);
std::vector<std::string> validate(const StableCurveTree& t);

StableMapTree canonicalize(const StableMapTree& t);
StableCurveTree canonicalize(const StableCurveTree& t);

ProjPoint evaluate(const StableMapTree& t, int label);

StableMapTree forget(const StableMapTree& t, const std::set<int>& labels);
StableCurveTree forget_map(const StableMapTree& t);

// Label i of the result carries the old marking sigma(i).  Needs labels 1..n.
StableMapTree act_sym(const StableMapTree& t, const Permutation& sigma);
StableMapTree act_target(const StableMapTree& t, const MobiusMap& mu);
StableMapTree act_pair(const StableMapTree& t, const MobiusMap& nu1, const MobiusMap& nu2);

// Coordinate of x_l once x_i, x_j, x_k are moved to 0, 1, infinity.  Smooth curves only.
ProjPoint cross_ratio(const StableCurveTree& t, int i, int j, int k, int l);

BigInt moduli_dimension(int N, int d, int n);
std::vector<IndexSubset> boundary_divisors(int n);

}  // namespace fmckit
