#include "fmckit/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fmckit {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt pow2(unsigned n) {
  BigInt out = 1;
  out <<= n;
  return out;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

// ------------------------------------------------------------- IndexSubset

IndexSubset::IndexSubset(int ambient, std::vector<int> members)
    : ambient_(ambient), members_(std::move(members)) {
  if (ambient_ < 0) throw std::invalid_argument("subset ambient must be nonnegative");
  std::sort(members_.begin(), members_.end());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] < 1 || members_[k] > ambient_)
      throw std::invalid_argument("subset member " + std::to_string(members_[k]) +
                                  " outside 1.." + std::to_string(ambient_));
    if (k > 0 && members_[k] == members_[k - 1])
      throw std::invalid_argument("duplicate subset member " + std::to_string(members_[k]));
  }
}

IndexSubset IndexSubset::full(int ambient) {
  std::vector<int> all(static_cast<std::size_t>(ambient));
  std::iota(all.begin(), all.end(), 1);
  return {ambient, std::move(all)};
}

IndexSubset IndexSubset::from_mask(int ambient, std::uint64_t mask) {
  std::vector<int> members;
  for (int i = 1; i <= ambient; ++i)
    if (mask & (std::uint64_t{1} << (i - 1))) members.push_back(i);
  return {ambient, std::move(members)};
}

bool IndexSubset::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::uint64_t IndexSubset::mask() const {
  if (ambient_ > 64) throw std::out_of_range("subset mask requires ambient <= 64");
  std::uint64_t m = 0;
  for (int i : members_) m |= std::uint64_t{1} << (i - 1);
  return m;
}

IndexSubset IndexSubset::unite(const IndexSubset& other) const {
  std::vector<int> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return {std::max(ambient_, other.ambient_), std::move(out)};
}

IndexSubset IndexSubset::intersect(const IndexSubset& other) const {
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return {std::max(ambient_, other.ambient_), std::move(out)};
}

IndexSubset IndexSubset::complement() const {
  std::vector<int> out;
  for (int i = 1; i <= ambient_; ++i)
    if (!contains(i)) out.push_back(i);
  return {ambient_, std::move(out)};
}

bool IndexSubset::disjoint_from(const IndexSubset& other) const {
  return intersect(other).empty();
}

bool IndexSubset::subset_of(const IndexSubset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string IndexSubset::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < members_.size(); ++k) os << (k ? "," : "") << members_[k];
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const IndexSubset& a, const IndexSubset& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return a.members_ <=> b.members_;
}

std::vector<IndexSubset> subsets(int n, int lo, int hi) {
  if (n < 0 || lo < 0 || lo > hi || hi > n)
    throw std::invalid_argument("subsets requires 0 <= lo <= hi <= n");
  std::vector<IndexSubset> out;
  for (int k = lo; k <= hi; ++k) {
    // Lexicographic k-combinations of 1..n.
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      out.emplace_back(n, comb);
      int pos = k - 1;
      while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
      if (pos < 0) break;
      ++comb[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < k; ++q)
        comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("images do not form a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  auto im = identity(degree).images_;
  std::swap(im.at(static_cast<std::size_t>(i - 1)), im.at(static_cast<std::size_t>(j - 1)));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> im(b.images_.size());
  for (std::size_t k = 0; k < im.size(); ++k) im[k] = a(b.images_[k]);
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// ---------------------------------------------------------- linear algebra

namespace {

std::size_t column_count(const RationalMatrix& m) {
  if (m.empty()) return 0;
  std::size_t cols = m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix rows");
  return cols;
}

}  // namespace

std::vector<std::size_t> rref(RationalMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = column_count(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c].is_zero()) continue;
      const Rational f = m[q][c];
      for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<BigInt> primitive_ray(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, x.den());
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    out.push_back(x.num() * (l / x.den()));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(out.back()));
  }
  if (g == 0) throw std::invalid_argument("primitive_ray of zero vector");
  for (auto& x : out) x /= g;
  return out;
}

std::vector<BigInt> primitive_line(const RationalVector& v) {
  auto out = primitive_ray(v);
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

RationalVector to_rational(std::span<const BigInt> v) {
  return RationalVector(v.begin(), v.end());
}

RationalVector to_rational(std::span<const long long> v) {
  return RationalVector(v.begin(), v.end());
}

std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix work = m;
  if (!work.empty() && column_count(work) != cols)
    throw std::invalid_argument("nullspace column count mismatch");
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
    basis.push_back(to_rational(primitive_line(v)));
  }
  return basis;
}

SolveResult solve_exact(const RationalMatrix& m, const RationalVector& b) {
  if (m.size() != b.size()) throw std::invalid_argument("dimension mismatch between M and b");
  const std::size_t cols = column_count(m);
  RationalMatrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return NoSolution{};
  RationalVector x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  if (pivots.size() == cols) return UniqueSolution{std::move(x)};
  return ParametricFamily{std::move(x), nullspace(m, cols)};
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  if (column_count(m) != n) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t q = c + 1; q < n; ++q) {
      if (m[q][c].is_zero()) continue;
      const Rational f = m[q][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[q][k] -= f * m[c][k];
    }
  }
  return det;
}

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != v.size()) throw std::invalid_argument("mat_vec dimension mismatch");
    out[r] = dot(m[r], v);
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

RationalMatrix transpose(const RationalMatrix& m) {
  const std::size_t cols = column_count(m);
  RationalMatrix out(cols, RationalVector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out[c][r] = m[r][c];
  return out;
}

}  // namespace fmckit
