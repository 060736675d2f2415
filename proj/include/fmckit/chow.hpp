#pragma once

#include "fmckit/exact.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace fmckit {

// Element of Z[h_1..h_n]/(h_i^2).  A key S stands for the monomial prod_{i in S} h_i.
class SquareFreeClass {
public:
  explicit SquareFreeClass(int n = 0) : n_(n) {}

  static SquareFreeClass unit(int n);
  static SquareFreeClass generator(int n, int i);
  // a_1 h_1 + ... + a_n h_n
  static SquareFreeClass linear(const std::vector<long long>& a);

  int n() const { return n_; }
  const std::map<IndexSubset, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const IndexSubset& s) const;
  void add_term(const IndexSubset& s, const BigInt& c);
  bool is_zero() const { return terms_.empty(); }

  // Part of degree k.
  SquareFreeClass degree_part(int k) const;

  friend SquareFreeClass operator+(const SquareFreeClass& a, const SquareFreeClass& b);
  friend bool operator==(const SquareFreeClass&, const SquareFreeClass&) = default;

private:
  int n_;
  std::map<IndexSubset, BigInt> terms_;  // no zero entries
};

SquareFreeClass sf_mul(const SquareFreeClass& p, const SquareFreeClass& q);
SquareFreeClass sf_pow(const SquareFreeClass& p, int k);
// Coefficient of h_1...h_n.
BigInt sf_integrate(const SquareFreeClass& p);

bool is_nef_product(const std::vector<long long>& a);

struct FactorsThrough {
  int j = 0;  // 1-based
  long long degree = 0;
};
struct NotAPencil {
  std::string reason;  // not-nef | zero-class | square-nonzero
};
using PencilVerdict = std::variant<FactorsThrough, NotAPencil>;

PencilVerdict pencil_classify_product(const std::vector<long long>& a);

}  // namespace fmckit
