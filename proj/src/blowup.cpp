#include "fmckit/blowup.hpp"

#include <stdexcept>

namespace fmckit {

std::string StageCenter::label() const {
  switch (family) {
    case CenterFamily::ExceptionalFull:
    case CenterFamily::ExceptionalStrict:
      return "E~" + subset.str();
    case CenterFamily::DiagonalSection:
      return "X~[" + std::to_string(stage - 1) + "]_" + std::to_string(subset.members().front());
  }
  return {};
}

std::size_t BlowupSchedule::center_count() const {
  std::size_t total = 0;
  for (const auto& r : rounds) total += r.size();
  for (const auto& r : stage_rounds) total += r.size();
  return total;
}

const char* style_name(ScheduleStyle s) {
  return s == ScheduleStyle::Symmetric ? "symmetric" : "recursive";
}

BlowupSchedule symmetric_schedule(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_schedule requires n >= 1");
  BlowupSchedule out;
  out.n = n;
  out.style = ScheduleStyle::Symmetric;
  for (int s = n; s >= 2; --s) {
    std::vector<DiagonalCenter> round;
    for (auto& S : subsets(n, s, s)) round.push_back({std::move(S)});
    out.rounds.push_back(std::move(round));
  }
  return out;
}

BlowupSchedule recursive_schedule(int n) {
  if (n < 1) throw std::invalid_argument("recursive_schedule requires n >= 1");
  BlowupSchedule out;
  out.n = n;
  out.style = ScheduleStyle::Recursive;
  for (int m = 2; m <= n; ++m) {
    // full set first, then strict transforms by decreasing size, then sections
    for (int s = m - 1; s >= 1; --s) {
      std::vector<StageCenter> round;
      for (auto& S : subsets(m - 1, s, s)) {
        StageCenter c;
        c.stage = m;
        if (s == m - 1)
          c.family = CenterFamily::ExceptionalFull;
        else if (s == 1)
          c.family = CenterFamily::DiagonalSection;
        else
          c.family = CenterFamily::ExceptionalStrict;
        std::vector<int> diag = S.members();
        diag.push_back(m);
        c.diagonal = IndexSubset(m, std::move(diag));
        c.subset = std::move(S);
        round.push_back(std::move(c));
      }
      out.stage_rounds.push_back(std::move(round));
    }
  }
  return out;
}

BigInt picard_number(int rho_base, int dim_base, int n) {
  if (rho_base < 1 || dim_base < 1 || n < 1)
    throw std::invalid_argument("picard_number requires positive inputs");
  BigInt base = BigInt(n) * rho_base;
  if (dim_base >= 2) return base + pow2(static_cast<unsigned>(n)) - n - 1;
  return base + pow2(static_cast<unsigned>(n)) - BigInt(n) * (n + 1) / 2 - 1;
}

std::vector<Discrepancy> canonical_discrepancies(int dim_base, int n) {
  if (dim_base < 1 || n < 2)
    throw std::invalid_argument("canonical_discrepancies requires dim >= 1 and n >= 2");
  std::vector<Discrepancy> out;
  for (int s = 2; s <= n; ++s) {
    Discrepancy d;
    d.size = s;
    d.coefficient = static_cast<long long>(s - 1) * dim_base - 1;
    d.count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(s));
    d.divisorial = (s - 1) * dim_base == 1;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace fmckit
