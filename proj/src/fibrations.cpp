#include "fmckit/fibrations.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmckit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void check_descriptor(const PencilDescriptor& p, int n) {
  std::visit(overloaded{[&](const Ev& e) {
                          if (e.i < 1 || e.i > n)
                            throw std::invalid_argument("evaluation index " + std::to_string(e.i) + " outside 1.." +
                                                        std::to_string(n));
                        },
                        [&](const ForgetToM04& f) {
                          if (n < 4) throw std::invalid_argument("forgetting to M_{0,4} needs n >= 4");
                          if (f.J.ambient() != n || f.J.size() != 4)
                            throw std::invalid_argument("M_{0,4} descriptor needs four surviving labels out of n");
                        }},
             p);
}

void check_descriptor(const ForgetfulDescriptor& f) {
  if (f.forgotten.ambient() != f.n) throw std::invalid_argument("forgotten labels must live in 1..n");
  if (f.target() < 1 || f.target() >= f.n) throw std::invalid_argument("forgetful map needs 1 <= r < n");
}

std::string describe(const PencilDescriptor& p) {
  return std::visit(overloaded{[](const Ev& e) { return "ev" + std::to_string(e.i); },
                               [](const ForgetToM04& f) { return "rho_pi" + f.forgotten().str(); }},
                    p);
}

std::string describe(const ForgetfulDescriptor& f) { return "pi" + f.forgotten.str(); }

std::vector<PencilDescriptor> modular_pencils(int n) {
  if (n < 1) throw std::invalid_argument("modular_pencils needs n >= 1");
  std::vector<PencilDescriptor> out;
  for (int i = 1; i <= n; ++i) out.push_back(Ev{i});
  if (n >= 4)
    for (auto& J : subsets(n, 4, 4)) out.push_back(ForgetToM04{std::move(J)});
  return out;
}

PicSignature pencil_signature(const PencilDescriptor& p, int n) {
  check_descriptor(p, n);
  PicSignature s;
  s.a.assign(static_cast<std::size_t>(n), 0);
  if (auto* e = std::get_if<Ev>(&p))
    s.a[static_cast<std::size_t>(e->i - 1)] = 1;
  else
    s.forget_class = std::get<ForgetToM04>(p).J;
  return s;
}

PicSignature pencil_signature(const ForgetfulDescriptor& f) {
  check_descriptor(f);
  if (f.target() != 1) throw std::invalid_argument("only forgetful maps to P^1[1] are pencils");
  return pencil_signature(Ev{f.forgotten.complement().members().front()}, f.n);
}

PencilClass classify_pencil(const PicSignature& sig) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < sig.a.size(); ++i)
    if (sig.a[i] != 0) support.push_back(i);
  if (sig.forget_class) {
    if (!support.empty()) return NonModular{"mixed-parts"};
    const auto& J = *sig.forget_class;
    if (J.size() != 4 || J.ambient() != static_cast<int>(sig.a.size()))
      throw std::invalid_argument("forget class must be keyed by four labels out of n");
    return ForgetToM04{J};
  }
  if (support.empty()) return NonModular{"zero"};
  if (support.size() > 1) return NonModular{"multiple-evaluations"};
  const BigInt& m = sig.a[support[0]];
  if (m < 0) return NonModular{"negative-coefficient"};
  return EvClass{static_cast<int>(support[0]) + 1, m};
}

ProfileReport diagonal_preimage_profile(int n, const std::vector<PencilDescriptor>& triple) {
  if (n < 4) throw std::invalid_argument("diagonal_preimage_profile needs n >= 4");
  if (triple.size() != 3) throw std::invalid_argument("expected three descriptors");
  for (const auto& p : triple) check_descriptor(p, n);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (triple[i] == triple[j]) throw std::invalid_argument("degenerate triple: repeated descriptor");

  std::vector<int> evs;
  for (const auto& p : triple)
    if (auto* e = std::get_if<Ev>(&p)) evs.push_back(e->i);
  ProfileReport rep;
  switch (evs.size()) {
    case 3: {
      IndexSubset abc(n, evs);
      IndexSubset rest = abc.complement();
      const int k = static_cast<int>(rest.size());
      std::vector<IndexSubset> strata;
      for (const auto& T : subsets(k, 0, k)) {
        std::vector<int> members = abc.members();
        for (int t : T.members()) members.push_back(rest.members()[static_cast<std::size_t>(t - 1)]);
        strata.emplace_back(n, members);
      }
      std::sort(strata.begin(), strata.end());
      for (const auto& S : strata)
        rep.components.push_back({"D" + S.str(), "boundary divisor over the diagonal " + S.str(), 1});
      rep.admissible = true;
      return rep;
    }
    case 2:
      rep.witness = Stratum{"L1",
                            "inside E" + IndexSubset::full(n).str() + ", all markings on the contracted component",
                            2};
      break;
    case 1:
      rep.witness = Stratum{"L2", "two-component maps, the evaluated marking on the degree-one component", 2};
      break;
    default:
      rep.witness = Stratum{"L3", "three-component maps", 2};
      break;
  }
  rep.components.push_back(*rep.witness);
  rep.admissible = false;
  return rep;
}

namespace {

void check_forgetful_pair(int n, int r, const IndexSubset& I, const IndexSubset& J) {
  if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
  const auto want = static_cast<std::size_t>(n - r + 1);
  if (I.ambient() != n || J.ambient() != n) throw std::invalid_argument("I and J must be subsets of 1..n");
  if (I.size() != want || J.size() != want)
    throw std::invalid_argument("|I| and |J| must equal n - r + 1 = " + std::to_string(want));
}

}  // namespace

FiberIntersection fiber_intersection_dim(int n, int r, const IndexSubset& I, const IndexSubset& J) {
  check_forgetful_pair(n, r, I, J);
  int dim = static_cast<int>(I.intersect(J).size());
  return {dim, dim >= n - r};
}

ForgetfulFactorization factor_forgetful(int n, int r, const IndexSubset& I, const IndexSubset& J) {
  if (r < 3) throw std::invalid_argument("factor_forgetful needs r >= 3");
  check_forgetful_pair(n, r, I, J);
  if (I == J) throw std::invalid_argument("degenerate input: I = J");
  IndexSubset common = I.intersect(J);
  if (static_cast<int>(common.size()) == n - r) return ForgetfulDescriptor{n, common};
  return Obstructed{"|I n J| = " + std::to_string(common.size()) + " < n - r = " + std::to_string(n - r)};
}

ProductReport factor_product(int n, const std::vector<ProductComponent>& components) {
  ProductReport rep;
  rep.n = n;
  bool all_large = !components.empty();
  for (const auto& c : components) {
    FactorEntry e;
    if (auto* p = std::get_if<PencilDescriptor>(&c)) {
      check_descriptor(*p, n);
      if (auto* ev = std::get_if<Ev>(p)) {
        e.kind = FactorKind::Forget;
        e.forgotten = IndexSubset(n, {ev->i}).complement();
        e.target = 1;
        e.evaluation = ev->i;
      } else {
        e.kind = FactorKind::RhoForget;
        e.forgotten = std::get<ForgetToM04>(*p).forgotten();
        e.target = 1;
      }
    } else {
      const auto& f = std::get<ForgetfulDescriptor>(c);
      if (f.n != n) throw std::invalid_argument("forgetful descriptor has a different n");
      check_descriptor(f);
      e.kind = FactorKind::Forget;
      e.forgotten = f.forgotten;
      e.target = f.target();
      if (e.target == 1) e.evaluation = f.forgotten.complement().members().front();
    }
    if (e.target < 3) all_large = false;
    rep.factors.push_back(std::move(e));
  }
  rep.forgetful_only = std::all_of(rep.factors.begin(), rep.factors.end(),
                                   [](const FactorEntry& e) { return e.kind == FactorKind::Forget; });
  if (all_large && !rep.forgetful_only) throw std::logic_error("large targets produced a M_{0,4} factor");
  return rep;
}

CurveFactorization factor_curve_product(int genus, int n, int r, const std::vector<int>& chosen) {
  if (genus < 0 || n < 1 || r < 1) throw std::invalid_argument("need genus >= 0, n >= 1, r >= 1");
  if (static_cast<int>(chosen.size()) != r) throw std::invalid_argument("expected r chosen indices");
  for (int i : chosen)
    if (i < 1 || i > n) throw std::invalid_argument("chosen index outside 1..n");
  if (genus == 1)
    return Unsupported{"genus one excluded: the group law of an elliptic curve gives dominant maps C^2 -> C "
                       "that are not products of projections"};
  std::vector<int> sorted = chosen, repeated;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (sorted[k] == sorted[k - 1] && (repeated.empty() || repeated.back() != sorted[k])) repeated.push_back(sorted[k]);
  if (!repeated.empty()) return NotDominant{repeated};
  return CurveProductDescriptor{genus, n, chosen, genus >= 2};
}

}  // namespace fmckit
