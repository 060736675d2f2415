#pragma once

#include "fmckit/exact.hpp"

#include <string>
#include <vector>

namespace fmckit {

struct DiagonalCenter {
  IndexSubset subset;  // |subset| >= 2

  // Dimension of the diagonal inside X^n, (n - |S| + 1) * dim X.
  int dimension(int dim_base) const {
    return (subset.ambient() - static_cast<int>(subset.size()) + 1) * dim_base;
  }
};

enum class CenterFamily { ExceptionalFull, ExceptionalStrict, DiagonalSection };

// One center of the recursive construction.  At stage m the blow-up of
// X[m-1] x X is taken along centers indexed by S in {1..m-1}; the diagonal
// they lie over is S u {m}.
struct StageCenter {
  int stage = 0;
  CenterFamily family = CenterFamily::ExceptionalStrict;
  IndexSubset subset;    // S, ambient m-1
  IndexSubset diagonal;  // S u {m}, ambient m

  std::string label() const;
};

enum class ScheduleStyle { Symmetric, Recursive };

struct BlowupSchedule {
  int n = 0;
  ScheduleStyle style = ScheduleStyle::Symmetric;
  // Symmetric: every round is one |S| level.  Recursive: stage-major, one
  // round per family level inside the stage.
  std::vector<std::vector<DiagonalCenter>> rounds;
  std::vector<std::vector<StageCenter>> stage_rounds;

  std::size_t center_count() const;
};

BlowupSchedule symmetric_schedule(int n);
BlowupSchedule recursive_schedule(int n);

// rho(X^n) is taken to be n * rho_base.
BigInt picard_number(int rho_base, int dim_base, int n);

struct Discrepancy {
  int size = 0;  // |S|
  long long coefficient = 0;
  BigInt count;  // number of subsets of that size
  bool divisorial = false;  // blow-up along a divisor, no exceptional divisor
};

std::vector<Discrepancy> canonical_discrepancies(int dim_base, int n);

const char* style_name(ScheduleStyle s);

}  // namespace fmckit
