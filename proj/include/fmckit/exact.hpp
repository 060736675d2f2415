#pragma once

// Exact arithmetic foundation: big integers, normalized rationals, index
// subsets, permutations and exact Gaussian elimination.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fmckit {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned n);

/// Normalized exact rational: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { Add, Sub, Mul, Div };

/// Single entry point for the four field operations; Div by zero throws
/// std::domain_error.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// A subset of {1..ambient}, members strictly increasing.
class IndexSubset {
public:
  IndexSubset() = default;
  IndexSubset(int ambient, std::vector<int> members);
  IndexSubset(int ambient, std::initializer_list<int> members)
      : IndexSubset(ambient, std::vector<int>(members)) {}

  static IndexSubset full(int ambient);
  static IndexSubset from_mask(int ambient, std::uint64_t mask);

  int ambient() const { return ambient_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;

  /// Requires ambient <= 64.
  std::uint64_t mask() const;

  IndexSubset unite(const IndexSubset& other) const;
  IndexSubset intersect(const IndexSubset& other) const;
  IndexSubset complement() const;
  bool disjoint_from(const IndexSubset& other) const;
  bool subset_of(const IndexSubset& other) const;

  /// "{1,2,3}"
  std::string str() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  /// Canonical order: ambient, then size, then lexicographic.
  friend std::strong_ordering operator<=>(const IndexSubset& a, const IndexSubset& b);

private:
  int ambient_ = 0;
  std::vector<int> members_;
};

/// All subsets S of {1..n} with lo <= |S| <= hi, size-major, lexicographic-minor.
std::vector<IndexSubset> subsets(int n, int lo, int hi);

/// Bijection of {1..degree}. Composition is (a * b)(i) = a(b(i)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Every permutation of {1..n} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

struct UniqueSolution {
  RationalVector x;
};
struct NoSolution {};
struct ParametricFamily {
  RationalVector particular;
  /// Each kernel vector is scaled to a primitive integer vector whose first
  /// nonzero entry is positive.
  std::vector<RationalVector> kernel;
};
using SolveResult = std::variant<UniqueSolution, NoSolution, ParametricFamily>;

/// Exact Gaussian elimination on a rectangular system M x = b.
/// Throws std::invalid_argument on ragged rows or |b| != rows(M).
SolveResult solve_exact(const RationalMatrix& m, const RationalVector& b);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
/// Basis of {x : M x = 0}, normalized as in ParametricFamily::kernel.
std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t cols);
Rational determinant(RationalMatrix m);

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
RationalMatrix transpose(const RationalMatrix& m);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple).
std::vector<BigInt> primitive_ray(const RationalVector& v);
/// Same as primitive_ray, then flips sign so the first nonzero entry is positive.
std::vector<BigInt> primitive_line(const RationalVector& v);

RationalVector to_rational(std::span<const BigInt> v);
RationalVector to_rational(std::span<const long long> v);

}  // namespace fmckit
