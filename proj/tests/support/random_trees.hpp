#pragma once

// Random stable maps for property tests.

#include "fmckit/stable_maps.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fmckit::testing {

inline ProjPoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> p(-6, 6), q(0, 4);
  while (true) {
    int a = p(rng), b = q(rng);
    if (a != 0 || b != 0) return {a, b};
  }
}

inline MobiusMap random_mobius(std::mt19937& rng, int bound = 3) {
  std::uniform_int_distribution<int> e(-bound, bound);
  while (true) {
    int a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    if (a * d - b * c != 0) return {a, b, c, d};
  }
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

class TreeBuilder {
public:
  explicit TreeBuilder(std::mt19937& rng) : rng_(rng) {}

  // Stable map with labels 1..n, framed component 0.  Bubble probability
  // controls how often markings are pushed into contracted subtrees.
  StableMapTree build(int n, double bubble = 0.35) {
    bubble_ = bubble;
    t_ = StableMapTree{};
    used_.assign(1, {});
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng_);
    place(0, labels, true);
    t_.frame = random_mobius(rng_);
    return t_;
  }

private:
  ProjPoint fresh(int c) {
    auto& used = used_[static_cast<std::size_t>(c)];
    while (true) {
      ProjPoint p = random_point(rng_);
      if (used.insert(p).second) return p;
    }
  }

  void place(int c, const std::vector<int>& labels, bool root) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<int> direct;
      std::vector<std::vector<int>> groups;
      std::size_t k = 0;
      while (k < labels.size()) {
        std::size_t left = labels.size() - k;
        if (left >= 2 && coin(rng_) < bubble_) {
          std::uniform_int_distribution<std::size_t> sz(2, left);
          std::size_t s = sz(rng_);
          groups.emplace_back(labels.begin() + static_cast<std::ptrdiff_t>(k),
                              labels.begin() + static_cast<std::ptrdiff_t>(k + s));
          k += s;
        } else {
          direct.push_back(labels[k++]);
        }
      }
      if (!root && direct.size() + groups.size() < 2) continue;
      commit(c, direct, groups);
      return;
    }
    commit(c, labels, {});
  }

  void commit(int c, const std::vector<int>& direct, const std::vector<std::vector<int>>& groups) {
    for (int l : direct) t_.markings[l] = {c, fresh(c)};
    for (const auto& g : groups) {
      int child = t_.components++;
      used_.emplace_back();
      ProjPoint up = fresh(c);
      ProjPoint down = fresh(child);
      if (coin_flip()) t_.edges.push_back({{c, up}, {child, down}});
      else t_.edges.push_back({{child, down}, {c, up}});
      place(child, g, false);
    }
  }

  bool coin_flip() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

  std::mt19937& rng_;
  double bubble_ = 0.35;
  StableMapTree t_;
  std::vector<std::set<ProjPoint>> used_;
};

// Random nonempty proper subset of the labels of t (or empty when n < 2).
inline std::set<int> random_label_subset(std::mt19937& rng, const StableMapTree& t, std::size_t max_size) {
  std::vector<int> labels;
  for (const auto& [l, m] : t.markings) labels.push_back(l);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::size_t cap = std::min(max_size, labels.size() - 1);
  std::uniform_int_distribution<std::size_t> sz(0, cap);
  std::size_t s = sz(rng);
  return {labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(s)};
}

}  // namespace fmckit::testing
