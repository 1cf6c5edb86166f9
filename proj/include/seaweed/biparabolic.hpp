#ifndef SEAWEED_BIPARABOLIC_HPP
#define SEAWEED_BIPARABOLIC_HPP

#include <algorithm>
#include <vector>

#include "seaweed/cascade.hpp"
#include "seaweed/chevalley.hpp"

namespace seaweed {

/// Standard biparabolic q_{pi1,pi2} = h + (positive part over pi2)
/// + (negative part over pi1), as a set of ambient basis slots.
struct Biparabolic {
  std::vector<int> pi1; // sorted, 1-based
  std::vector<int> pi2;
  std::vector<std::size_t> basis_indices; // ascending ambient order
  std::size_t dim = 0;
};

inline std::vector<int> normalize_subset(const RootSystem& rs, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int i : S)
    if (i < 1 || i > rs.rank()) throw std::out_of_range("subset index out of range");
  return S;
}

inline Biparabolic build_biparabolic(const AlgebraData& A, std::vector<int> pi1,
                                     std::vector<int> pi2) {
  const RootSystem& rs = A.roots();
  Biparabolic q;
  q.pi1 = normalize_subset(rs, std::move(pi1));
  q.pi2 = normalize_subset(rs, std::move(pi2));
  for (const Root& r : rs.sub_positive_roots(q.pi2)) q.basis_indices.push_back(A.x_index(r));
  for (const Root& r : rs.sub_positive_roots(q.pi1)) q.basis_indices.push_back(A.y_index(r));
  for (int k = 1; k <= rs.rank(); ++k) q.basis_indices.push_back(A.h_index(k));
  std::sort(q.basis_indices.begin(), q.basis_indices.end());
  q.dim = q.basis_indices.size();
  return q;
}

/// ind q_{pi1,pi2} = (l - dim E12) + (k1 + k2 - dim E12).
inline int index_formula(const RootSystem& rs, const std::vector<int>& pi1,
                         const std::vector<int>& pi2) {
  auto d = span_dims(rs, pi1, pi2);
  int k1 = static_cast<int>(k_of(rs, pi1));
  int k2 = static_cast<int>(k_of(rs, pi2));
  return (rs.rank() - d.dimE12) + (k1 + k2 - d.dimE12);
}

/// Three-clause test: the cascade spans fill h*, the cascades overflow the
/// rank, and no subset appears in both cascades.
inline bool condition_star(const RootSystem& rs, const std::vector<int>& pi1,
                           const std::vector<int>& pi2) {
  int k1 = static_cast<int>(k_of(rs, pi1));
  int k2 = static_cast<int>(k_of(rs, pi2));
  if (k1 + k2 <= rs.rank()) return false;
  auto d = span_dims(rs, pi1, pi2);
  if (d.dimE12 != rs.rank()) return false; // equivalent to k1+k2 = l + dim(E1 cap E2)
  return cascade_sets_disjoint(rs, pi1, pi2);
}

struct PairReport {
  std::vector<int> pi1, pi2;
  int k1 = 0, k2 = 0;
  SpanDims dims;
  int index = 0;
  bool star = false;
  std::vector<int> orbit_pi1, orbit_pi2; // lexicographically least diagram-automorphism image
};

struct EnumOptions {
  bool connected_pi1_only = false;
  bool include_parabolic = false; // pairs with pi1 or pi2 equal to the full base
  int min_k1 = 0;
};

inline PairReport make_pair_report(const RootSystem& rs, const std::vector<int>& pi1,
                                   const std::vector<int>& pi2) {
  PairReport r;
  r.pi1 = pi1;
  r.pi2 = pi2;
  r.k1 = static_cast<int>(k_of(rs, pi1));
  r.k2 = static_cast<int>(k_of(rs, pi2));
  r.dims = span_dims(rs, pi1, pi2);
  r.index = (rs.rank() - r.dims.dimE12) + (r.k1 + r.k2 - r.dims.dimE12);
  r.star = (r.k1 + r.k2 > rs.rank()) && (r.dims.dimE12 == rs.rank()) &&
           cascade_sets_disjoint(rs, pi1, pi2);
  auto autos = diagram_automorphisms(rs.type());
  auto apply = [](const std::vector<int>& perm, const std::vector<int>& S) {
    std::vector<int> out;
    out.reserve(S.size());
    for (int i : S) out.push_back(perm[static_cast<std::size_t>(i - 1)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  r.orbit_pi1 = pi1;
  r.orbit_pi2 = pi2;
  for (const auto& perm : autos) {
    auto a = apply(perm, pi1);
    auto b = apply(perm, pi2);
    if (std::tie(a, b) < std::tie(r.orbit_pi1, r.orbit_pi2)) {
      r.orbit_pi1 = a;
      r.orbit_pi2 = b;
    }
  }
  return r;
}

/// All pairs {pi1, pi2} satisfying the star condition, normalized so
/// k_{pi1} >= k_{pi2}; on a tie both orientations are reported (the published
/// tables list such pairs on both sides). Parabolic pairs (either side the
/// full base) are excluded by default: those belong to the parabolic theory.
inline std::vector<PairReport> enumerate_star_pairs(const RootSystem& rs,
                                                    const EnumOptions& opt = {}) {
  int l = rs.rank();
  int full = (1 << l) - 1;
  std::vector<std::vector<int>> subset_of_mask(static_cast<std::size_t>(full) + 1);
  std::vector<int> kv(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::set<std::vector<int>>> fam(static_cast<std::size_t>(full) + 1);
  std::vector<std::vector<Root>> eps(static_cast<std::size_t>(full) + 1);
  std::vector<bool> connected(static_cast<std::size_t>(full) + 1, false);
  for (int m = 1; m <= full; ++m) {
    std::vector<int> S;
    for (int i = 0; i < l; ++i)
      if (m & (1 << i)) S.push_back(i + 1);
    subset_of_mask[static_cast<std::size_t>(m)] = S;
    Cascade c = kostant_cascade(rs, S);
    kv[static_cast<std::size_t>(m)] = static_cast<int>(c.size());
    fam[static_cast<std::size_t>(m)] = c.subset_family();
    eps[static_cast<std::size_t>(m)] = c.eps_roots();
    connected[static_cast<std::size_t>(m)] = rs.connected_components(S).size() == 1;
  }
  std::vector<PairReport> out;
  for (int m1 = 1; m1 <= full; ++m1) {
    for (int m2 = m1; m2 <= full; ++m2) {
      if (!opt.include_parabolic && (m1 == full || m2 == full)) continue;
      int k1 = kv[static_cast<std::size_t>(m1)], k2 = kv[static_cast<std::size_t>(m2)];
      if (k1 + k2 <= l) continue;
      bool disjoint = true;
      for (const auto& K : fam[static_cast<std::size_t>(m1)])
        if (fam[static_cast<std::size_t>(m2)].count(K)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      QMatrix M(0, static_cast<std::size_t>(l));
      detail::add_eps_rows(M, eps[static_cast<std::size_t>(m1)]);
      detail::add_eps_rows(M, eps[static_cast<std::size_t>(m2)]);
      if (static_cast<int>(rref(M)) != l) continue;
      auto emit = [&](int a, int b) {
        if (opt.connected_pi1_only && !connected[static_cast<std::size_t>(a)]) return;
        if (kv[static_cast<std::size_t>(a)] < opt.min_k1) return;
        out.push_back(make_pair_report(rs, subset_of_mask[static_cast<std::size_t>(a)],
                                       subset_of_mask[static_cast<std::size_t>(b)]));
      };
      if (k1 > k2) emit(m1, m2);
      else if (k2 > k1) emit(m2, m1);
      else {
        emit(m1, m2);
        if (m1 != m2) emit(m2, m1);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PairReport& a, const PairReport& b) {
    return std::tie(a.pi1, a.pi2) < std::tie(b.pi1, b.pi2);
  });
  return out;
}

} // namespace seaweed

#endif
