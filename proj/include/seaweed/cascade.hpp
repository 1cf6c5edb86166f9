#ifndef SEAWEED_CASCADE_HPP
#define SEAWEED_CASCADE_HPP

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "seaweed/linalg.hpp"
#include "seaweed/root_system.hpp"

namespace seaweed {

/// One cascade entry: the generating connected subset K and its highest root.
struct CascadeEntry {
  std::vector<int> K; // sorted 1-based simple-root indices
  Root eps;
};

struct Cascade {
  std::vector<int> source;
  std::vector<CascadeEntry> entries;

  std::size_t size() const { return entries.size(); }

  std::vector<Root> eps_roots() const {
    std::vector<Root> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.eps);
    return out;
  }

  std::set<std::vector<int>> subset_family() const {
    std::set<std::vector<int>> out;
    for (const auto& e : entries) out.insert(e.K);
    return out;
  }
};

namespace detail {
inline void cascade_rec(const RootSystem& rs, const std::vector<int>& S,
                        std::vector<CascadeEntry>& out) {
  if (S.empty()) return;
  for (const auto& comp : rs.connected_components(S)) {
    Root eps = rs.highest_root(comp);
    out.push_back({comp, eps});
    std::vector<int> orth;
    for (int i : comp)
      if (rs.pairing(rs.simple_root(i), eps) == 0) orth.push_back(i);
    cascade_rec(rs, orth, out);
  }
}
} // namespace detail

/// Recursive cascade of strongly orthogonal highest roots. Entries come in
/// document order of the recursion: each connected piece emits (K, eps_K)
/// and then its orthogonal descendants, pieces ordered by least element.
inline Cascade kostant_cascade(const RootSystem& rs, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  Cascade c;
  c.source = S;
  detail::cascade_rec(rs, S, c.entries);
  return c;
}

inline std::size_t k_of(const RootSystem& rs, const std::vector<int>& S) {
  return kostant_cascade(rs, S).size();
}

struct SpanDims {
  int dimE1 = 0;
  int dimE2 = 0;
  int dimE12 = 0;
  int dimIntersection = 0;
};

namespace detail {
inline void add_eps_rows(QMatrix& M, const std::vector<Root>& eps) {
  for (const Root& r : eps) {
    QVec v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i];
    M.add_row(std::move(v));
  }
}
} // namespace detail

/// Dimensions of span(E_pi1), span(E_pi2), their sum and intersection in h*.
inline SpanDims span_dims(const RootSystem& rs, const std::vector<int>& pi1,
                          const std::vector<int>& pi2) {
  auto e1 = kostant_cascade(rs, pi1).eps_roots();
  auto e2 = kostant_cascade(rs, pi2).eps_roots();
  std::size_t n = static_cast<std::size_t>(rs.rank());
  QMatrix M1(0, n), M2(0, n), M12(0, n);
  detail::add_eps_rows(M1, e1);
  detail::add_eps_rows(M2, e2);
  detail::add_eps_rows(M12, e1);
  detail::add_eps_rows(M12, e2);
  SpanDims d;
  d.dimE1 = static_cast<int>(rref(M1));
  d.dimE2 = static_cast<int>(rref(M2));
  d.dimE12 = static_cast<int>(rref(M12));
  d.dimIntersection = d.dimE1 + d.dimE2 - d.dimE12;
  return d;
}

/// True iff no subset K occurs in both cascades.
inline bool cascade_sets_disjoint(const RootSystem& rs, const std::vector<int>& pi1,
                                  const std::vector<int>& pi2) {
  auto f1 = kostant_cascade(rs, pi1).subset_family();
  auto f2 = kostant_cascade(rs, pi2).subset_family();
  for (const auto& k : f1)
    if (f2.count(k)) return false;
  return true;
}

/// Strong orthogonality: neither the sum nor the difference is a root.
inline bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  return !rs.is_root(add(a, b)) && !rs.is_root(sub(a, b));
}

} // namespace seaweed

#endif
