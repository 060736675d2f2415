#pragma once

#include "fmckit/exact.hpp"
#include "fmckit/verdicts.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fmckit {

struct Ev {
  int i = 0;
  friend bool operator==(const Ev&, const Ev&) = default;
};

// Keyed by the four surviving labels.
struct ForgetToM04 {
  IndexSubset J;
  IndexSubset forgotten() const { return J.complement(); }
  friend bool operator==(const ForgetToM04&, const ForgetToM04&) = default;
};

using PencilDescriptor = std::variant<Ev, ForgetToM04>;

struct ForgetfulDescriptor {
  int n = 0;
  IndexSubset forgotten;
  int target() const { return n - static_cast<int>(forgotten.size()); }
  friend bool operator==(const ForgetfulDescriptor&, const ForgetfulDescriptor&) = default;
};

void check_descriptor(const PencilDescriptor& p, int n);
void check_descriptor(const ForgetfulDescriptor& f);
std::string describe(const PencilDescriptor& p);
std::string describe(const ForgetfulDescriptor& f);

std::vector<PencilDescriptor> modular_pencils(int n);

struct PicSignature {
  std::optional<IndexSubset> forget_class;  // empty means the M-part is zero
  std::vector<BigInt> a;
  friend bool operator==(const PicSignature&, const PicSignature&) = default;
};

PicSignature pencil_signature(const PencilDescriptor& p, int n);
// Only forgetful maps onto P^1[1] are pencils.
PicSignature pencil_signature(const ForgetfulDescriptor& f);

struct EvClass {
  int i = 0;
  BigInt multiplicity;
};
struct NonModular {
  std::string reason;  // mixed-parts | multiple-evaluations | zero | negative-coefficient
};
using PencilClass = std::variant<EvClass, ForgetToM04, NonModular>;

PencilClass classify_pencil(const PicSignature& sig);

struct Stratum {
  std::string name;        // D{...} or L1 / L2 / L3
  std::string description;
  int codimension = 0;
};

struct ProfileReport {
  std::vector<Stratum> components;
  bool admissible = false;
  std::optional<Stratum> witness;
};

ProfileReport diagonal_preimage_profile(int n, const std::vector<PencilDescriptor>& triple);

struct FiberIntersection {
  int dimension = 0;
  bool criterion = false;  // dimension >= n - r
};

FiberIntersection fiber_intersection_dim(int n, int r, const IndexSubset& I, const IndexSubset& J);

struct Obstructed {
  std::string reason;
};
using ForgetfulFactorization = std::variant<ForgetfulDescriptor, Obstructed>;

ForgetfulFactorization factor_forgetful(int n, int r, const IndexSubset& I, const IndexSubset& J);

enum class FactorKind { Forget, RhoForget };

struct FactorEntry {
  FactorKind kind = FactorKind::Forget;
  IndexSubset forgotten;
  int target = 0;                   // P^1[target] for Forget, M_{0,4} (=1) for RhoForget
  std::optional<int> evaluation;    // set when a Forget factor is an evaluation map
};

struct ProductReport {
  int n = 0;
  std::vector<FactorEntry> factors;
  bool forgetful_only = false;
};

using ProductComponent = std::variant<PencilDescriptor, ForgetfulDescriptor>;
ProductReport factor_product(int n, const std::vector<ProductComponent>& components);

struct CurveProductDescriptor {
  int genus = 0;
  int n = 0;
  std::vector<int> chosen;
  bool through_blowup = false;  // the morphism from C[n] factors through C[n] -> C^n first
};
struct NotDominant {
  std::vector<int> repeated;
};
using CurveFactorization = std::variant<CurveProductDescriptor, Unsupported, NotDominant>;

CurveFactorization factor_curve_product(int genus, int n, int r, const std::vector<int>& chosen);

}  // namespace fmckit
