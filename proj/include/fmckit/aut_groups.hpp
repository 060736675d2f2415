#pragma once

#include "fmckit/exact.hpp"
#include "fmckit/verdicts.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fmckit {

struct ProjLine {};
struct CurveBase {
  int genus = 2;
  std::string id = "C";
  std::optional<BigInt> aut_order;
};
struct CurveFactor {
  int genus = 2;
  std::string class_id;
  std::optional<BigInt> aut_order;
};
struct ProductOfCurves {
  std::vector<CurveFactor> factors;
};
struct NefCanonical {
  std::string name = "X";
  int dim = 2;
};
struct GeneralType {
  std::string name = "X";
  int dim = 2;
};
using BaseSpace = std::variant<ProjLine, CurveBase, ProductOfCurves, NefCanonical, GeneralType>;

struct FMSpace {
  BaseSpace base;
  int n = 1;
};
// The base variety itself, with no points blown up.
struct BareSpace {
  BaseSpace base;
};
struct Kontsevich {
  int N = 1, d = 1, n = 0;
};
struct ModuliCurves {
  int g = 0, n = 0;
};
using SpaceDescriptor = std::variant<FMSpace, BareSpace, Kontsevich, ModuliCurves>;

class GroupExpr {
public:
  enum class Kind { Sym, PGL, AutCurve, AutVariety, Trivial, Direct, Semidirect, Power };

  static GroupExpr sym(int n);
  static GroupExpr pgl(int k);
  static GroupExpr aut_curve(std::string class_id, std::optional<BigInt> order = {}, bool connected = false);
  static GroupExpr aut_variety(std::string symbol);
  static GroupExpr trivial();
  static GroupExpr direct(std::vector<GroupExpr> factors);
  static GroupExpr semidirect(GroupExpr normal, GroupExpr acting);
  static GroupExpr power(GroupExpr base, int exponent);

  Kind kind() const { return kind_; }
  int param() const { return param_; }
  const std::string& name() const { return name_; }
  const std::optional<BigInt>& order() const { return order_; }
  bool connected() const { return connected_; }
  const std::vector<GroupExpr>& children() const { return children_; }
  // Semidirect only.
  const GroupExpr& normal() const { return children_.at(0); }
  const GroupExpr& acting() const { return children_.at(1); }

  bool is_atom() const;
  // "S5 x PGL2", "S2 |x (PGL2 x PGL2)", "Aut(A)^2", "Aut0(C)", "1".
  std::string str() const;
  // str() with curve class identifiers erased.
  std::string shape() const;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

private:
  std::string render(bool erase_ids) const;

  Kind kind_ = Kind::Trivial;
  int param_ = 0;
  std::string name_;
  std::optional<BigInt> order_;
  bool connected_ = false;
  std::vector<GroupExpr> children_;
};

struct Conjectural {
  GroupExpr expr;
};

struct AutResult {
  std::variant<GroupExpr, Unsupported, Conjectural> value;
  std::string rule;  // which statement was applied
};

AutResult aut_structure(const SpaceDescriptor& s);
AutResult aut_connected(const SpaceDescriptor& s);

// PGL atoms of an expression, in order.
GroupExpr connected_part(const GroupExpr& g);

struct Infinite {
  friend bool operator==(const Infinite&, const Infinite&) = default;
};
struct UnknownOrder {
  std::vector<std::string> missing;  // atoms without a declared order
  friend bool operator==(const UnknownOrder&, const UnknownOrder&) = default;
};
using GroupOrder = std::variant<BigInt, Infinite, UnknownOrder>;

GroupOrder group_order(const GroupExpr& g);

enum class StabilizerVerdict { DiagonalSym, FullSym2Power, Trivial, Other };
const char* verdict_name(StabilizerVerdict v);

struct StabilizerReport {
  int n = 0, r = 0;
  std::vector<std::vector<Permutation>> tuples;
  StabilizerVerdict verdict = StabilizerVerdict::Other;
};

constexpr long long kBruteForceBound = 10000000;

StabilizerReport diagonal_stabilizer(int n, int r);

}  // namespace fmckit
