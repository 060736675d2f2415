#include "fmckit/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmckit {

const char* lattice_name(Lattice l) { return l == Lattice::Divisor ? "divisor" : "curve"; }

// ------------------------------------------------------------ PairedLattices

PairedLattices::PairedLattices(std::vector<std::string> divisor_basis,
                               std::vector<std::string> curve_basis,
                               std::vector<IntVector> pairing)
    : divisor_basis_(std::move(divisor_basis)),
      curve_basis_(std::move(curve_basis)),
      pairing_(std::move(pairing)) {
  const std::size_t r = divisor_basis_.size();
  if (curve_basis_.size() != r || pairing_.size() != r)
    throw std::invalid_argument("pairing must be square and match both bases");
  RationalMatrix m;
  for (const auto& row : pairing_) {
    if (row.size() != r) throw std::invalid_argument("pairing must be square and match both bases");
    m.push_back(to_rational(row));
  }
  if (r == 0 || determinant(m).is_zero()) throw std::invalid_argument("degenerate pairing");
}

BigInt PairedLattices::pair(const IntVector& divisor, const IntVector& curve) const {
  if (divisor.size() != rank() || curve.size() != rank())
    throw std::invalid_argument("class length does not match lattice rank");
  BigInt s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += divisor[i] * pairing_[i][j] * curve[j];
  return s;
}

BigInt PairedLattices::pair(const NumericalClass& a, const NumericalClass& b) const {
  if (a.lattice == b.lattice) throw std::invalid_argument("pairing needs one divisor and one curve class");
  return a.lattice == Lattice::Divisor ? pair(a.coords, b.coords) : pair(b.coords, a.coords);
}

RationalVector PairedLattices::functional(const NumericalClass& x) const {
  if (x.coords.size() != rank()) throw std::invalid_argument("class length does not match lattice rank");
  RationalVector w(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      if (x.lattice == Lattice::Divisor)
        w[j] += Rational(x.coords[i] * pairing_[i][j]);
      else
        w[i] += Rational(pairing_[i][j] * x.coords[j]);
    }
  return w;
}

NumericalClass PairedLattices::class_from_functional(Lattice target, const RationalVector& w) const {
  RationalMatrix m(rank(), RationalVector(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      m[i][j] = target == Lattice::Divisor ? Rational(pairing_[j][i]) : Rational(pairing_[i][j]);
  auto res = solve_exact(m, w);
  const auto& x = std::get<UniqueSolution>(res).x;
  return {target, primitive_ray(x)};
}

// -------------------------------------------------------------- RationalCone

namespace {

void normalize_generators(std::vector<IntVector>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// Lexicographic k-subsets of {0..m-1}; f returns true to stop.
template <class F>
bool for_each_combination(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// Generators of {x : a . x >= 0 for every row a}.
std::vector<IntVector> polyhedral_generators(const RationalMatrix& rows, std::size_t d) {
  if (d > kMaxConeRank) throw std::invalid_argument("cone rank above " + std::to_string(kMaxConeRank));
  std::vector<IntVector> out;
  const auto lineality = rows.empty() ? std::vector<RationalVector>{} : nullspace(rows, d);
  if (rows.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, 0);
      e[i] = 1;
      out.push_back(e);
      e[i] = -1;
      out.push_back(e);
    }
    return out;
  }
  for (const auto& l : lineality) {
    auto p = primitive_ray(l);
    out.push_back(p);
    for (auto& x : p) x = -x;
    out.push_back(p);
  }
  const std::size_t pointed = d - lineality.size();
  if (pointed == 0) return out;

  auto feasible = [&](const RationalVector& v) {
    for (const auto& a : rows)
      if (dot(a, v).sign() < 0) return false;
    return true;
  };
  for_each_combination(rows.size(), pointed - 1, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix sys = lineality;
    for (auto i : idx) sys.push_back(rows[i]);
    auto ker = nullspace(sys, d);
    if (ker.size() != 1) return false;
    RationalVector v = ker[0];
    if (!feasible(v)) {
      for (auto& x : v) x = -x;
      if (!feasible(v)) return false;
    }
    out.push_back(primitive_ray(v));
    return false;
  });
  return out;
}

RationalMatrix as_rows(const std::vector<IntVector>& gens) {
  RationalMatrix m;
  for (const auto& g : gens) m.push_back(to_rational(g));
  return m;
}

}  // namespace

RationalCone::RationalCone(Lattice lattice, std::size_t ambient_rank,
                           const std::vector<RationalVector>& gens)
    : lattice_(lattice), rank_(ambient_rank) {
  for (const auto& g : gens) {
    if (g.size() != rank_) throw std::invalid_argument("generator length does not match cone rank");
    if (is_zero_vector(g)) continue;
    generators_.push_back(primitive_ray(g));
  }
  normalize_generators(generators_);
}

RationalCone::RationalCone(Lattice lattice, std::size_t ambient_rank, const std::vector<IntVector>& gens)
    : lattice_(lattice), rank_(ambient_rank) {
  for (const auto& g : gens) {
    if (g.size() != rank_) throw std::invalid_argument("generator length does not match cone rank");
    auto r = to_rational(g);
    if (is_zero_vector(r)) continue;
    generators_.push_back(primitive_ray(r));
  }
  normalize_generators(generators_);
}

RationalCone dual_cone(const RationalCone& c, const PairedLattices& lattices) {
  if (c.ambient_rank() != lattices.rank()) throw std::invalid_argument("cone rank does not match lattices");
  RationalMatrix rows;
  for (const auto& g : c.generators()) rows.push_back(lattices.functional({c.lattice(), g}));
  return RationalCone(opposite(c.lattice()), c.ambient_rank(), polyhedral_generators(rows, c.ambient_rank()));
}

std::optional<RationalVector> cone_certificate(const std::vector<IntVector>& gens, const IntVector& v) {
  const std::size_t d = v.size();
  RationalVector target = to_rational(v);
  if (is_zero_vector(target)) return RationalVector(gens.size());
  std::optional<RationalVector> found;
  for (std::size_t k = 1; k <= std::min(d, gens.size()) && !found; ++k) {
    for_each_combination(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
      RationalMatrix m(d, RationalVector(k));
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < d; ++r) m[r][c] = Rational(gens[idx[c]][r]);
      if (rank(m) != k) return false;
      auto res = solve_exact(m, target);
      auto* u = std::get_if<UniqueSolution>(&res);
      if (!u) return false;
      for (const auto& x : u->x)
        if (x.sign() < 0) return false;
      RationalVector coeffs(gens.size());
      for (std::size_t c = 0; c < k; ++c) coeffs[idx[c]] = u->x[c];
      found = std::move(coeffs);
      return true;
    });
  }
  return found;
}

ContainsResult contains(const RationalCone& c, const NumericalClass& v, const PairedLattices& lattices) {
  if (v.lattice != c.lattice()) throw std::invalid_argument("class and cone live in different lattices");
  if (v.coords.size() != c.ambient_rank()) throw std::invalid_argument("class length does not match cone rank");
  if (auto cert = cone_certificate(c.generators(), v.coords)) return ContainsYes{std::move(*cert)};
  // Farkas: some generator of the standard dual cone is negative on v.
  const RationalVector target = to_rational(v.coords);
  for (const auto& w : polyhedral_generators(as_rows(c.generators()), c.ambient_rank())) {
    auto wr = to_rational(w);
    if (dot(wr, target).sign() < 0)
      return ContainsNo{lattices.class_from_functional(opposite(c.lattice()), wr)};
  }
  throw std::logic_error("cone membership undecided");
}

RationalCone extremal_rays(const RationalCone& c) {
  std::vector<IntVector> gens = c.generators();
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (cone_certificate(others, gens[i]))
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return RationalCone(c.lattice(), c.ambient_rank(), gens);
}

bool cones_equal(const RationalCone& a, const RationalCone& b) {
  if (a.lattice() != b.lattice() || a.ambient_rank() != b.ambient_rank()) return false;
  for (const auto& g : a.generators())
    if (!cone_certificate(b.generators(), g)) return false;
  for (const auto& g : b.generators())
    if (!cone_certificate(a.generators(), g)) return false;
  return true;
}

// ------------------------------------------------------------------- presets

namespace {

IntVector iv(std::initializer_list<long long> xs) { return IntVector(xs.begin(), xs.end()); }

std::vector<IntVector> diag_pairing() {
  return {iv({1, 0, 0, 0}), iv({0, -1, 0, 0}), iv({0, 0, -1, 0}), iv({0, 0, 0, -1})};
}

IntVector unit(std::size_t i) {
  IntVector e(4, 0);
  e[i] = 1;
  return e;
}

}  // namespace

Model parse_model(const std::string& name) {
  if (name == "P13") return Model::P13;
  if (name == "DP6") return Model::DP6;
  throw std::invalid_argument("unknown model '" + name + "' (expected P13 or DP6)");
}

const char* model_name(Model m) { return m == Model::P13 ? "P13" : "DP6"; }

Preset preset(Model m) {
  if (m == Model::P13) {
    Preset p{m, PairedLattices({"H~", "E1", "E2", "E3"}, {"L~", "R1", "R2", "R3"}, diag_pairing()), {}, {}, {}};
    p.classes["H~"] = {Lattice::Divisor, unit(0)};
    p.classes["L~"] = {Lattice::Curve, unit(0)};
    std::vector<IntVector> mori{iv({1, -1, -1, -1})};
    std::vector<IntVector> eff{iv({2, -1, -1, -1})};
    for (std::size_t i = 1; i <= 3; ++i) {
      const std::string k = std::to_string(i);
      IntVector sigma = unit(0);
      sigma[i] = 1;
      IntVector h_minus_e = unit(0);
      h_minus_e[i] = -1;
      p.classes["E" + k] = {Lattice::Divisor, unit(i)};
      p.classes["R" + k] = {Lattice::Curve, unit(i)};
      p.classes["sigma" + k] = {Lattice::Curve, sigma};
      mori.push_back(unit(i));
      mori.push_back(sigma);
      eff.push_back(h_minus_e);
      eff.push_back(unit(i));
    }
    p.classes["K"] = {Lattice::Divisor, iv({-4, 1, 1, 1})};
    p.classes["-K"] = {Lattice::Divisor, iv({4, -1, -1, -1})};
    p.cones.emplace("mori", RationalCone(Lattice::Curve, 4, mori));
    p.cones.emplace("effective", RationalCone(Lattice::Divisor, 4, eff));
    p.cones.emplace("mori_minimal", extremal_rays(p.cones.at("mori")));
    p.cones.emplace("nef", dual_cone(p.cones.at("mori"), p.lattices));
    return p;
  }
  Preset p{m, PairedLattices({"H", "E1", "E2", "E3"}, {"H", "E1", "E2", "E3"}, diag_pairing()), {}, {}, {}};
  std::vector<IntVector> mori;
  p.classes["H"] = {Lattice::Divisor, unit(0)};
  for (std::size_t i = 1; i <= 3; ++i) {
    p.classes["E" + std::to_string(i)] = {Lattice::Divisor, unit(i)};
    mori.push_back(unit(i));
    for (std::size_t j = i + 1; j <= 3; ++j) {
      IntVector line = unit(0);
      line[i] = -1;
      line[j] = -1;
      mori.push_back(line);
    }
  }
  p.classes["K"] = {Lattice::Divisor, iv({-3, 1, 1, 1})};
  p.classes["-K"] = {Lattice::Divisor, iv({3, -1, -1, -1})};
  p.cones.emplace("mori", RationalCone(Lattice::Curve, 4, mori));
  p.cones.emplace("nef", dual_cone(p.cones.at("mori"), p.lattices));
  p.pencils = isotropic_nef_classes(p, 5);
  return p;
}

std::vector<NumericalClass> isotropic_nef_classes(const Preset& p, int bound) {
  const auto& L = p.lattices;
  if (L.divisor_basis() != L.curve_basis())
    throw std::invalid_argument("isotropic classes need a self-paired surface lattice");
  const auto& mori = p.cones.at("mori").generators();
  const std::size_t r = L.rank();
  std::vector<NumericalClass> out;
  IntVector x(r, -bound);
  while (true) {
    BigInt g = 0;
    for (const auto& c : x) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g == 1 && L.pair(x, x) == 0) {
      bool nef = true;
      for (const auto& c : mori)
        if (L.pair(x, c) < 0) nef = false;
      if (nef) out.push_back({Lattice::Divisor, x});
    }
    std::size_t k = r;
    while (k > 0 && x[k - 1] == bound) x[--k] = -bound;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

MoriResult mori_decompose_p13(const BigInt& d, const std::vector<BigInt>& m) {
  if (m.size() != 3) throw std::invalid_argument("expected three multiplicities");
  if (d <= 0) throw std::invalid_argument("degree d must be positive");
  for (const auto& x : m)
    if (x < 0) throw std::invalid_argument("multiplicities must be nonnegative");
  for (std::size_t i = 0; i < 3; ++i)
    if (d - m[i] < 0) return MoriRejected{static_cast<int>(i) + 1};
  MoriDecomposition out{d, {}};
  for (const auto& x : m) out.on_rulings.push_back(d - x);
  return out;
}

FanoReport fano_test(const PairedLattices& lattices, const NumericalClass& anticanonical,
                     const RationalCone& mori) {
  if (anticanonical.lattice != Lattice::Divisor || mori.lattice() != Lattice::Curve)
    throw std::invalid_argument("fano_test needs a divisor class and a curve cone");
  FanoReport rep;
  rep.fano = true;
  const RationalCone rays = extremal_rays(mori);
  for (const auto& ray : rays.generators()) {
    BigInt v = lattices.pair(anticanonical.coords, ray);
    if (v <= 0) rep.fano = false;
    rep.table.push_back({ray, v});
  }
  return rep;
}

}  // namespace fmckit
