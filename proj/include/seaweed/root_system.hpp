#ifndef SEAWEED_ROOT_SYSTEM_HPP
#define SEAWEED_ROOT_SYSTEM_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "seaweed/dynkin.hpp"

namespace seaweed {

/// A root as its integer coordinates over the simple roots (Bourbaki order).
using Root = std::vector<int>;

inline int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

inline Root negate(const Root& r) {
  Root n(r);
  for (int& c : n) c = -c;
  return n;
}

inline Root add(const Root& a, const Root& b) {
  Root s(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

inline Root sub(const Root& a, const Root& b) {
  Root s(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
  return s;
}

inline bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

/// The full root system of a simple type: positive roots in canonical order
/// (height ascending, lexicographic tie-break), Cartan matrix, and the
/// invariant pairing. Immutable once built.
class RootSystem {
public:
  explicit RootSystem(DynkinType type) : type_(type) {
    type_.validate();
    form_ = simple_root_form(type_);
    cartan_ = seaweed::cartan_matrix(type_);
    build_positive_roots();
  }

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<long>>& symmetric_form() const { return form_; }

  /// (lambda, mu) under the normalized invariant form; integer on the lattice.
  long form(const Root& a, const Root& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (a[static_cast<std::size_t>(i)] != 0 && b[static_cast<std::size_t>(j)] != 0)
          s += static_cast<long>(a[static_cast<std::size_t>(i)]) *
               b[static_cast<std::size_t>(j)] *
               form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return s;
  }

  /// <lambda, alpha^vee> = 2(lambda, alpha)/(alpha, alpha). alpha must be a root.
  long pairing(const Root& lambda, const Root& alpha) const {
    if (!is_root(alpha)) throw std::invalid_argument("pairing: alpha is not a root");
    long num = 2 * form(lambda, alpha);
    long den = form(alpha, alpha);
    return num / den;
  }

  bool is_positive_root(const Root& r) const { return pos_index_.count(r) != 0; }

  bool is_root(const Root& r) const {
    return is_positive_root(r) || is_positive_root(negate(r));
  }

  /// Index of a positive root in canonical order; throws if absent.
  std::size_t positive_index(const Root& r) const {
    auto it = pos_index_.find(r);
    if (it == pos_index_.end()) throw std::invalid_argument("not a positive root");
    return it->second;
  }

  Root simple_root(int i) const { // 1-based
    if (i < 1 || i > rank()) throw std::out_of_range("simple root index");
    Root r(static_cast<std::size_t>(rank()), 0);
    r[static_cast<std::size_t>(i - 1)] = 1;
    return r;
  }

  /// Positive roots supported on the subset S of simple-root indices (1-based).
  std::vector<Root> sub_positive_roots(const std::vector<int>& S) const {
    std::vector<bool> allowed(static_cast<std::size_t>(rank()) + 1, false);
    for (int i : S) {
      if (i < 1 || i > rank()) throw std::out_of_range("subset index out of range");
      allowed[static_cast<std::size_t>(i)] = true;
    }
    std::vector<Root> out;
    for (const Root& r : positive_) {
      bool ok = true;
      for (int i = 0; ok && i < rank(); ++i)
        if (r[static_cast<std::size_t>(i)] != 0 && !allowed[static_cast<std::size_t>(i + 1)]) ok = false;
      if (ok) out.push_back(r);
    }
    return out;
  }

  /// Unique maximal root of Delta_S for S nonempty and connected.
  Root highest_root(const std::vector<int>& S) const {
    if (S.empty()) throw std::invalid_argument("highest_root: empty subset");
    auto comps = diagram_components(type_, S);
    if (comps.size() != 1) throw std::invalid_argument("highest_root: subset not connected");
    auto roots = sub_positive_roots(S);
    const Root* best = &roots.front();
    for (const Root& r : roots)
      if (height(r) > height(*best)) best = &r;
    // maximality is coordinatewise for connected S
    for (const Root& r : roots)
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] > (*best)[i]) throw std::logic_error("highest_root: no dominant root");
    return *best;
  }

  std::vector<std::vector<int>> connected_components(const std::vector<int>& S) const {
    return diagram_components(type_, S);
  }

private:
  void build_positive_roots() {
    int l = rank();
    std::set<Root> roots;
    std::vector<Root> frontier;
    for (int i = 1; i <= l; ++i) {
      Root r = simple_root(i);
      roots.insert(r);
      frontier.push_back(r);
    }
    // height induction: gamma + alpha_i is a root iff the alpha_i-string
    // through gamma has q = p - <gamma, alpha_i^vee> > 0
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& gamma : frontier) {
        for (int i = 1; i <= l; ++i) {
          Root alpha = simple_root(i);
          int p = 0;
          Root down = sub(gamma, alpha);
          while (!is_zero_root(down) && roots.count(down)) {
            ++p;
            down = sub(down, alpha);
          }
          long q = p - (2 * form(gamma, alpha)) / form(alpha, alpha);
          if (q > 0) {
            Root up = add(gamma, alpha);
            if (roots.insert(up).second) next.push_back(up);
          }
        }
      }
      frontier = std::move(next);
    }
    positive_.assign(roots.begin(), roots.end());
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
      int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) pos_index_[positive_[k]] = k;
  }

  DynkinType type_;
  std::vector<std::vector<long>> form_;
  std::vector<std::vector<long>> cartan_;
  std::vector<Root> positive_;
  std::map<Root, std::size_t> pos_index_;
};

/// Type label of a subset of simple roots, e.g. "B3", "A1^2xA2".
/// Components are classified by bond multiplicities and root lengths;
/// labels are cosmetic (comparisons always key on the subsets).
inline std::string subset_type_label(const RootSystem& rs, const std::vector<int>& S) {
  if (S.empty()) return "0";
  auto comps = rs.connected_components(S);
  const auto& B = rs.symmetric_form();
  auto len2 = [&](int i) { return B[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]; };
  auto bond = [&](int i, int j) {
    long x = B[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    long m = 4 * x * x / (len2(i) * len2(j));
    return m; // 0,1,2,3
  };
  std::vector<std::string> labels;
  for (const auto& comp : comps) {
    int n = static_cast<int>(comp.size());
    if (n == 1) {
      labels.push_back("A1");
      continue;
    }
    long maxbond = 0;
    int branch = 0;
    std::vector<int> degree(comp.size(), 0);
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < comp.size(); ++b)
        if (a != b && bond(comp[a], comp[b]) > 0) {
          ++degree[a];
          maxbond = std::max(maxbond, bond(comp[a], comp[b]));
        }
    for (int d : degree)
      if (d >= 3) ++branch;
    char fam;
    if (maxbond == 3) fam = 'G';
    else if (maxbond == 2) {
      // chain with one double bond: F4 if interior, else B/C by which end is short
      bool interior = true;
      long nshort = 0;
      for (std::size_t a = 0; a < comp.size(); ++a) {
        if (len2(comp[a]) == 2) ++nshort;
      }
      for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a + 1; b < comp.size(); ++b)
          if (bond(comp[a], comp[b]) == 2 && (degree[a] == 1 || degree[b] == 1)) interior = false;
      if (n == 4 && interior) fam = 'F';
      else if (n == 2) fam = 'B';
      else fam = (nshort == 1) ? 'B' : 'C';
    } else if (branch > 0) {
      // D if some arm has length 1 beyond a degree-3 node twice, else E
      std::size_t node = 0;
      for (std::size_t a = 0; a < comp.size(); ++a)
        if (degree[a] == 3) node = a;
      int leaves_adjacent = 0;
      for (std::size_t b = 0; b < comp.size(); ++b)
        if (b != node && bond(comp[node], comp[b]) > 0 && degree[b] == 1) ++leaves_adjacent;
      fam = (leaves_adjacent >= 2) ? 'D' : 'E';
      if (n == 4) fam = 'D';
    } else {
      fam = 'A';
    }
    labels.push_back(std::string(1, fam) + std::to_string(n));
  }
  // collapse repeats, larger components first
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    int ra = std::stoi(a.substr(1)), rb = std::stoi(b.substr(1));
    if (ra != rb) return ra > rb;
    return a < b;
  });
  std::string out;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    if (!out.empty()) out += "x";
    out += labels[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

} // namespace seaweed

#endif
