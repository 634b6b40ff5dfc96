#pragma once
// Finite groups, presented concretely as permutation groups and enumerated
// by breadth-first closure from the identity.  Element 0 is always the
// identity and the enumeration order is deterministic, so element ids are
// stable for a given generator list.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bd/error.hpp"

namespace bd {

using gid = std::uint32_t;

namespace detail {
// (p*q)(i) = p[q[i]] — apply q first, then p.
inline std::vector<gid> perm_compose(const std::vector<gid>& p,
                                     const std::vector<gid>& q) {
  std::vector<gid> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::string perm_cycle_label(const std::vector<gid>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}
}  // namespace detail

class FinGroup {
 public:
  // Generators are permutations of {0,..,degree-1} given by their images.
  // Throws ConfigError if the closure exceeds `cap` elements.
  static FinGroup from_permutations(const std::vector<std::vector<gid>>& gens,
                                    std::size_t cap = 100000) {
    if (gens.empty()) throw ConfigError("group: at least one generator required");
    const std::size_t deg = gens[0].size();
    if (deg == 0) throw ConfigError("group: generators must move at least one point");
    for (const auto& g : gens) {
      if (g.size() != deg)
        throw ConfigError("group: generators have inconsistent degrees");
      std::vector<bool> hit(deg, false);
      for (gid v : g) {
        if (v >= deg || hit[v]) throw ConfigError("group: generator is not a permutation");
        hit[v] = true;
      }
    }

    FinGroup G;
    G.degree_ = deg;
    std::vector<gid> e(deg);
    std::iota(e.begin(), e.end(), 0);
    std::map<std::vector<gid>, gid> index;
    index[e] = 0;
    G.perms_.push_back(e);
    for (std::size_t head = 0; head < G.perms_.size(); ++head) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<gid> y = detail::perm_compose(G.perms_[head], gens[k]);
        auto it = index.find(y);
        if (it == index.end()) {
          if (G.perms_.size() >= cap)
            throw ConfigError("group: order exceeds cap of " + std::to_string(cap));
          gid id = static_cast<gid>(G.perms_.size());
          index[y] = id;
          G.perms_.push_back(std::move(y));
          G.bfs_parent_.push_back(static_cast<gid>(head));
          G.bfs_gen_.push_back(static_cast<std::uint32_t>(k));
        }
      }
    }
    // bfs data is indexed by element id - 1 (identity has no parent)
    G.n_ = G.perms_.size();
    G.num_gens_ = gens.size();

    G.labels_.reserve(G.n_);
    for (const auto& p : G.perms_) G.labels_.push_back(detail::perm_cycle_label(p));

    if (G.n_ <= kTableThreshold) {
      G.mul_.resize(G.n_ * G.n_);
      for (std::size_t a = 0; a < G.n_; ++a)
        for (std::size_t b = 0; b < G.n_; ++b)
          G.mul_[a * G.n_ + b] =
              index.at(detail::perm_compose(G.perms_[a], G.perms_[b]));
    } else {
      G.index_ = std::move(index);
    }

    G.inv_.resize(G.n_);
    for (gid a = 0; a < G.n_; ++a) {
      std::vector<gid> pi(G.degree_);
      for (std::size_t i = 0; i < G.degree_; ++i) pi[G.perms_[a][i]] = static_cast<gid>(i);
      G.inv_[a] = G.lookup(pi);
    }
    return G;
  }

  static FinGroup symmetric(std::size_t m, std::size_t cap = 100000) {
    if (m < 1) throw ConfigError("symmetric group: n >= 1 required");
    if (m == 1) return from_permutations({{0}}, cap);
    std::vector<std::vector<gid>> gens;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::vector<gid> t(m);
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[i], t[i + 1]);
      gens.push_back(std::move(t));
    }
    return from_permutations(gens, cap);
  }

  static FinGroup cyclic(std::size_t m, std::size_t cap = 100000) {
    if (m < 1) throw ConfigError("cyclic group: n >= 1 required");
    if (m == 1) return from_permutations({{0}}, cap);
    std::vector<gid> rot(m);
    for (std::size_t i = 0; i < m; ++i) rot[i] = static_cast<gid>((i + 1) % m);
    return from_permutations({rot}, cap);
  }

  static FinGroup dihedral(std::size_t m, std::size_t cap = 100000) {
    if (m < 3) throw ConfigError("dihedral group: n >= 3 required");
    std::vector<gid> rot(m), flip(m);
    for (std::size_t i = 0; i < m; ++i) {
      rot[i] = static_cast<gid>((i + 1) % m);
      flip[i] = static_cast<gid>((m - i) % m);
    }
    return from_permutations({rot, flip}, cap);
  }

  std::size_t order() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_generators() const { return num_gens_; }

  gid op(gid a, gid b) const {
    if (!mul_.empty()) return mul_[a * n_ + b];
    return lookup(detail::perm_compose(perms_[a], perms_[b]));
  }
  gid inv(gid a) const { return inv_[a]; }
  gid conj(gid g, gid h) const { return op(op(g, h), inv(g)); }  // g h g^{-1}

  const std::string& label(gid a) const { return labels_[a]; }
  const std::vector<gid>& perm(gid a) const { return perms_[a]; }

  // Element id by label; ConfigError if unknown.
  gid by_label(const std::string& s) const {
    for (gid a = 0; a < n_; ++a)
      if (labels_[a] == s) return a;
    throw ConfigError("group: no element labelled '" + s + "'");
  }

  // Reconstruction data: element a>0 satisfies a = bfs_parent(a) * gen(bfs_gen(a)).
  gid bfs_parent(gid a) const { return bfs_parent_[a - 1]; }
  std::uint32_t bfs_gen(gid a) const { return bfs_gen_[a - 1]; }

  // Conjugacy classes, each sorted, ordered by smallest member; cached.
  const std::vector<std::vector<gid>>& conjugacy_classes() const {
    if (classes_.empty()) {
      std::vector<bool> seen(n_, false);
      for (gid g = 0; g < n_; ++g) {
        if (seen[g]) continue;
        std::vector<gid> cls;
        for (gid x = 0; x < n_; ++x) {
          gid c = conj(x, g);
          if (!seen[c]) {
            seen[c] = true;
            cls.push_back(c);
          }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
      }
      class_of_.resize(n_);
      for (std::size_t k = 0; k < classes_.size(); ++k)
        for (gid g : classes_[k]) class_of_[g] = static_cast<gid>(k);
    }
    return classes_;
  }

  gid class_of(gid g) const {
    conjugacy_classes();
    return class_of_[g];
  }

  bool is_central(gid g) const {
    for (gid x = 0; x < n_; ++x)
      if (op(x, g) != op(g, x)) return false;
    return true;
  }

 private:
  static constexpr std::size_t kTableThreshold = 2048;

  gid lookup(const std::vector<gid>& p) const {
    auto it = index_.find(p);
    if (it != index_.end()) return it->second;
    // dense-table groups drop the index; rebuild lookup by scan (small n)
    for (gid a = 0; a < n_; ++a)
      if (perms_[a] == p) return a;
    throw ComputeError("group: permutation not in group");
  }

  std::size_t n_ = 0, degree_ = 0, num_gens_ = 0;
  std::vector<std::vector<gid>> perms_;
  std::vector<gid> mul_, inv_;
  std::vector<std::string> labels_;
  std::vector<gid> bfs_parent_;
  std::vector<std::uint32_t> bfs_gen_;
  std::map<std::vector<gid>, gid> index_;
  mutable std::vector<std::vector<gid>> classes_;
  mutable std::vector<gid> class_of_;
};

}  // namespace bd
