#pragma once

#include "fmckit/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fmckit {

using IntVector = std::vector<BigInt>;

enum class Lattice { Divisor, Curve };

inline Lattice opposite(Lattice l) { return l == Lattice::Divisor ? Lattice::Curve : Lattice::Divisor; }
const char* lattice_name(Lattice l);

struct NumericalClass {
  Lattice lattice = Lattice::Divisor;
  IntVector coords;

  friend bool operator==(const NumericalClass&, const NumericalClass&) = default;
};

// Divisor and curve lattices of equal rank with pairing(i, j) = D_i . C_j.
class PairedLattices {
public:
  PairedLattices(std::vector<std::string> divisor_basis, std::vector<std::string> curve_basis,
                 std::vector<IntVector> pairing);

  std::size_t rank() const { return divisor_basis_.size(); }
  const std::vector<std::string>& divisor_basis() const { return divisor_basis_; }
  const std::vector<std::string>& curve_basis() const { return curve_basis_; }
  const std::vector<IntVector>& pairing() const { return pairing_; }

  BigInt pair(const IntVector& divisor, const IntVector& curve) const;
  BigInt pair(const NumericalClass& a, const NumericalClass& b) const;

  // Row vector w with w . y = pairing(x, y) for y in the opposite lattice of x.
  RationalVector functional(const NumericalClass& x) const;
  // Inverse of functional(): the primitive class in `target` whose functional is a
  // positive multiple of w.
  NumericalClass class_from_functional(Lattice target, const RationalVector& w) const;

private:
  std::vector<std::string> divisor_basis_;
  std::vector<std::string> curve_basis_;
  std::vector<IntVector> pairing_;
};

// Generators are primitive, duplicate-free and sorted lexicographically.
class RationalCone {
public:
  RationalCone() = default;
  RationalCone(Lattice lattice, std::size_t ambient_rank, const std::vector<RationalVector>& gens);
  RationalCone(Lattice lattice, std::size_t ambient_rank, const std::vector<IntVector>& gens);

  Lattice lattice() const { return lattice_; }
  std::size_t ambient_rank() const { return rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

private:
  Lattice lattice_ = Lattice::Divisor;
  std::size_t rank_ = 0;
  std::vector<IntVector> generators_;
};

constexpr std::size_t kMaxConeRank = 6;

RationalCone dual_cone(const RationalCone& c, const PairedLattices& lattices);

struct ContainsYes {
  RationalVector coefficients;  // one per generator, nonnegative
};
struct ContainsNo {
  NumericalClass separator;  // opposite lattice; pairs >= 0 with c, < 0 with v
};
using ContainsResult = std::variant<ContainsYes, ContainsNo>;

ContainsResult contains(const RationalCone& c, const NumericalClass& v, const PairedLattices& lattices);
// Nonnegative combination of the generators, if one exists.
std::optional<RationalVector> cone_certificate(const std::vector<IntVector>& gens, const IntVector& v);

RationalCone extremal_rays(const RationalCone& c);
bool cones_equal(const RationalCone& a, const RationalCone& b);

enum class Model { P13, DP6 };

struct Preset {
  Model model;
  PairedLattices lattices;
  std::map<std::string, RationalCone> cones;
  std::map<std::string, NumericalClass> classes;
  std::vector<NumericalClass> pencils;
};

Preset preset(Model m);
Model parse_model(const std::string& name);
const char* model_name(Model m);

// Nef divisor classes x with x.x = 0 in the box [-bound, bound]^rank, primitive.
// Only meaningful for surfaces, where the two lattices coincide.
std::vector<NumericalClass> isotropic_nef_classes(const Preset& p, int bound);

struct MoriDecomposition {
  BigInt on_line;                // coefficient of L~ - R1 - R2 - R3
  std::vector<BigInt> on_rulings;  // coefficients of R1, R2, R3
};
struct MoriRejected {
  int index = 0;  // 1-based i with d - m_i < 0
};
using MoriResult = std::variant<MoriDecomposition, MoriRejected>;

MoriResult mori_decompose_p13(const BigInt& d, const std::vector<BigInt>& m);

struct FanoRow {
  IntVector ray;
  BigInt pairing;
};
struct FanoReport {
  bool fano = false;
  std::vector<FanoRow> table;
};

FanoReport fano_test(const PairedLattices& lattices, const NumericalClass& anticanonical,
                     const RationalCone& mori);

}  // namespace fmckit
