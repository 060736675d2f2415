#include "fmckit/chow.hpp"

#include <stdexcept>

namespace fmckit {

SquareFreeClass SquareFreeClass::unit(int n) {
  SquareFreeClass c(n);
  c.add_term(IndexSubset(n, std::vector<int>{}), 1);
  return c;
}

SquareFreeClass SquareFreeClass::generator(int n, int i) {
  SquareFreeClass c(n);
  c.add_term(IndexSubset(n, {i}), 1);
  return c;
}

SquareFreeClass SquareFreeClass::linear(const std::vector<long long>& a) {
  const int n = static_cast<int>(a.size());
  SquareFreeClass c(n);
  for (int i = 1; i <= n; ++i) c.add_term(IndexSubset(n, {i}), a[static_cast<std::size_t>(i - 1)]);
  return c;
}

BigInt SquareFreeClass::coefficient(const IndexSubset& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SquareFreeClass::add_term(const IndexSubset& s, const BigInt& c) {
  if (s.ambient() != n_) throw std::invalid_argument("monomial ambient does not match class");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SquareFreeClass SquareFreeClass::degree_part(int k) const {
  SquareFreeClass out(n_);
  for (const auto& [s, c] : terms_)
    if (static_cast<int>(s.size()) == k) out.terms_.emplace(s, c);
  return out;
}

SquareFreeClass operator+(const SquareFreeClass& a, const SquareFreeClass& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("sum of classes with different n");
  SquareFreeClass out = a;
  for (const auto& [s, c] : b.terms_) out.add_term(s, c);
  return out;
}

SquareFreeClass sf_mul(const SquareFreeClass& p, const SquareFreeClass& q) {
  if (p.n() != q.n()) throw std::invalid_argument("product of classes with different n");
  SquareFreeClass out(p.n());
  for (const auto& [s, a] : p.terms())
    for (const auto& [t, b] : q.terms())
      if (s.disjoint_from(t)) out.add_term(s.unite(t), a * b);
  return out;
}

SquareFreeClass sf_pow(const SquareFreeClass& p, int k) {
  SquareFreeClass out = SquareFreeClass::unit(p.n());
  for (int i = 0; i < k; ++i) out = sf_mul(out, p);
  return out;
}

BigInt sf_integrate(const SquareFreeClass& p) {
  return p.coefficient(IndexSubset::full(p.n()));
}

bool is_nef_product(const std::vector<long long>& a) {
  for (long long x : a)
    if (x < 0) return false;
  return true;
}

PencilVerdict pencil_classify_product(const std::vector<long long>& a) {
  if (!is_nef_product(a)) return NotAPencil{"not-nef"};
  int positive = 0, j = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) {
      ++positive;
      j = static_cast<int>(i) + 1;
    }
  if (positive == 0) return NotAPencil{"zero-class"};
  auto sq = sf_mul(SquareFreeClass::linear(a), SquareFreeClass::linear(a));
  if (!sq.degree_part(2).is_zero()) return NotAPencil{"square-nonzero"};
  return FactorsThrough{j, a[static_cast<std::size_t>(j - 1)]};
}

}  // namespace fmckit
