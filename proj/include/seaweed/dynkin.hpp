#ifndef SEAWEED_DYNKIN_HPP
#define SEAWEED_DYNKIN_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "seaweed/rational.hpp"

namespace seaweed {

/// Simple type label, Bourbaki numbering throughout.
struct DynkinType {
  char family = 'A'; // one of A B C D E F G
  int rank = 1;

  bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  static DynkinType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type: " + s);
    char fam = static_cast<char>(std::toupper(s[0]));
    int r = std::stoi(s.substr(1));
    DynkinType t{fam, r};
    t.validate();
    return t;
  }

  void validate() const {
    bool ok = false;
    switch (family) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 2; break;
      case 'D': ok = rank >= 4; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: ok = false;
    }
    if (!ok) throw std::invalid_argument("invalid (family, rank): " + name());
  }

  bool exceptional() const { return family == 'E' || family == 'F' || family == 'G'; }
};

/// Symmetric Weyl-invariant pairing on the simple roots, normalized so short
/// roots have squared length 2. Integer-valued on the root lattice for every
/// type, which keeps all the table arithmetic in Z.
inline std::vector<std::vector<long>> simple_root_form(const DynkinType& t) {
  t.validate();
  int l = t.rank;
  std::vector<std::vector<long>> B(l, std::vector<long>(l, 0));
  auto edge = [&](int i, int j, long v) { B[i][j] = B[j][i] = v; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i < l; ++i) B[i][i] = 2;
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1, -1);
      break;
    case 'B': // alpha_l short
      for (int i = 0; i < l; ++i) B[i][i] = (i == l - 1) ? 2 : 4;
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1, -2);
      break;
    case 'C': // alpha_l long
      for (int i = 0; i < l; ++i) B[i][i] = (i == l - 1) ? 4 : 2;
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1);
      edge(l - 2, l - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < l; ++i) B[i][i] = 2;
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1);
      edge(l - 3, l - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < l; ++i) B[i][i] = 2;
      // chain 1-3-4-5-...-l, branch 2-4
      edge(0, 2, -1);
      for (int i = 2; i + 1 < l; ++i) edge(i, i + 1, -1);
      edge(1, 3, -1);
      break;
    case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      B[0][0] = B[1][1] = 4;
      B[2][2] = B[3][3] = 2;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case 'G': // alpha_1 short, alpha_2 long
      B[0][0] = 2;
      B[1][1] = 6;
      edge(0, 1, -3);
      break;
  }
  return B;
}

/// cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_j, alpha_i)/(alpha_i, alpha_i).
inline std::vector<std::vector<long>> cartan_matrix(const DynkinType& t) {
  auto B = simple_root_form(t);
  int l = t.rank;
  std::vector<std::vector<long>> C(l, std::vector<long>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) C[i][j] = 2 * B[i][j] / B[i][i];
  return C;
}

/// Dynkin diagram adjacency (ignoring bond multiplicity), 0-based.
inline std::vector<std::vector<int>> diagram_adjacency(const DynkinType& t) {
  auto B = simple_root_form(t);
  int l = t.rank;
  std::vector<std::vector<int>> adj(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j && B[i][j] != 0) adj[i].push_back(j);
  return adj;
}

/// Partition of S (1-based indices) into diagram-connected pieces, each sorted,
/// pieces ordered by least element.
inline std::vector<std::vector<int>> diagram_components(const DynkinType& t,
                                                        std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int i : S)
    if (i < 1 || i > t.rank) throw std::out_of_range("subset index out of range");
  auto adj = diagram_adjacency(t);
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(t.rank) + 1, false);
  std::vector<bool> in_S(static_cast<std::size_t>(t.rank) + 1, false);
  for (int i : S) in_S[static_cast<std::size_t>(i)] = true;
  for (int start : S) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp, stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w0 : adj[static_cast<std::size_t>(v - 1)]) {
        int w = w0 + 1;
        if (in_S[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// All diagram automorphisms, as 1-based permutation vectors p with
/// p[i-1] = image of i. Brute-force backtracking on the symmetric form.
inline std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t) {
  auto B = simple_root_form(t);
  int l = t.rank;
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(l), -1);
  std::vector<bool> used(static_cast<std::size_t>(l), false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == l) {
      std::vector<int> p(static_cast<std::size_t>(l));
      for (int k = 0; k < l; ++k) p[static_cast<std::size_t>(k)] = perm[static_cast<std::size_t>(k)] + 1;
      out.push_back(std::move(p));
      return;
    }
    for (int img = 0; img < l; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      bool ok = B[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ==
                B[static_cast<std::size_t>(img)][static_cast<std::size_t>(img)];
      for (int j = 0; ok && j < i; ++j)
        ok = B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
             B[static_cast<std::size_t>(img)][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = img;
      used[static_cast<std::size_t>(img)] = true;
      self(self, i + 1);
      used[static_cast<std::size_t>(img)] = false;
      perm[static_cast<std::size_t>(i)] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace seaweed

#endif
