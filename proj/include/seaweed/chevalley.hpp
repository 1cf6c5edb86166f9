#ifndef SEAWEED_CHEVALLEY_HPP
#define SEAWEED_CHEVALLEY_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "seaweed/linalg.hpp"
#include "seaweed/root_system.hpp"

namespace seaweed {

/// Element of the algebra as exact coefficients over the fixed basis:
/// positions [0, N) are x_alpha for the positive roots in canonical order,
/// [N, 2N) are x_{-alpha}, and the last l slots are the Cartan generators
/// h_{alpha_1..alpha_l}.
struct Element {
  QVec coeffs;

  explicit Element(std::size_t dim) : coeffs(qvec_zero(dim)) {}
  explicit Element(QVec c) : coeffs(std::move(c)) {}

  std::size_t dim() const { return coeffs.size(); }
  bool is_zero() const {
    for (const Rat& c : coeffs)
      if (!seaweed::is_zero(c)) return false;
    return true;
  }
  Element& operator+=(const Element& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  Element& operator*=(const Rat& s) {
    for (Rat& c : coeffs) c *= s;
    return *this;
  }
};

/// Sparse bracket of two basis vectors.
struct BasisProduct {
  std::vector<std::pair<std::size_t, long>> terms;
};

/// The simple Lie algebra over Q in a Chevalley basis. Structure constant
/// signs are fixed by the extraspecial-pair convention over the canonical
/// positive-root order; everything downstream is convention-independent.
/// Immutable after construction.
class AlgebraData {
public:
  explicit AlgebraData(RootSystem rs) : rs_(std::move(rs)) {
    N_ = rs_.num_positive();
    l_ = static_cast<std::size_t>(rs_.rank());
    dim_ = 2 * N_ + l_;
    compute_structure_constants();
    build_coroots();
    build_bracket_table();
    compute_killing();
  }

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_positive() const { return N_; }
  std::size_t rank() const { return l_; }

  std::size_t x_index(const Root& alpha) const { return rs_.positive_index(alpha); }
  std::size_t y_index(const Root& alpha) const { return N_ + rs_.positive_index(alpha); }
  std::size_t h_index(int k) const { return 2 * N_ + static_cast<std::size_t>(k - 1); } // 1-based

  /// Signed root vector index: sign=+1 gives x_alpha, sign=-1 gives x_{-alpha}.
  std::size_t root_vector_index(const Root& alpha, int sign) const {
    return sign > 0 ? x_index(alpha) : y_index(alpha);
  }

  bool is_cartan_index(std::size_t i) const { return i >= 2 * N_; }

  /// Weight of a root-vector basis slot; Cartan slots have no weight.
  Root basis_weight(std::size_t i) const {
    if (i < N_) return rs_.positive_roots()[i];
    if (i < 2 * N_) return negate(rs_.positive_roots()[i - N_]);
    throw std::invalid_argument("Cartan basis vector has no weight");
  }

  std::string basis_label(std::size_t i) const {
    auto coords = [](const Root& r) {
      std::string s;
      for (int c : r) s += std::to_string(c);
      return s;
    };
    if (i < N_) return "x+" + coords(rs_.positive_roots()[i]);
    if (i < 2 * N_) return "x-" + coords(rs_.positive_roots()[i - N_]);
    return "h" + std::to_string(i - 2 * N_ + 1);
  }

  /// Structure constant N_{alpha,beta} for positive roots by index; 0 when
  /// the sum is not a root.
  long structure_constant(std::size_t i, std::size_t j) const {
    return Npp_[i * N_ + j];
  }

  const BasisProduct& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  Element element(std::size_t basis_index) const {
    Element e(dim_);
    e.coeffs[basis_index] = 1;
    return e;
  }

  Element bracket(const Element& u, const Element& v) const {
    if (u.dim() != dim_ || v.dim() != dim_)
      throw std::invalid_argument("bracket: dimension mismatch");
    std::vector<std::size_t> ui, vi;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!seaweed::is_zero(u.coeffs[i])) ui.push_back(i);
    for (std::size_t j = 0; j < dim_; ++j)
      if (!seaweed::is_zero(v.coeffs[j])) vi.push_back(j);
    Element out(dim_);
    for (std::size_t i : ui)
      for (std::size_t j : vi) {
        const BasisProduct& p = table_[i * dim_ + j];
        if (p.terms.empty()) continue;
        Rat c = u.coeffs[i] * v.coeffs[j];
        for (const auto& [k, n] : p.terms) out.coeffs[k] += c * n;
      }
    return out;
  }

  /// Killing form; block structure K(x_a, x_b)=0 unless b=-a makes this O(dim).
  Rat killing(const Element& u, const Element& v) const {
    if (u.dim() != dim_ || v.dim() != dim_)
      throw std::invalid_argument("killing: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < N_; ++i) {
      if (!seaweed::is_zero(u.coeffs[i]) && !seaweed::is_zero(v.coeffs[N_ + i]))
        s += u.coeffs[i] * v.coeffs[N_ + i] * kappa_[i];
      if (!seaweed::is_zero(u.coeffs[N_ + i]) && !seaweed::is_zero(v.coeffs[i]))
        s += u.coeffs[N_ + i] * v.coeffs[i] * kappa_[i];
    }
    for (std::size_t k = 0; k < l_; ++k) {
      if (seaweed::is_zero(u.coeffs[2 * N_ + k])) continue;
      for (std::size_t m = 0; m < l_; ++m)
        if (!seaweed::is_zero(v.coeffs[2 * N_ + m]))
          s += u.coeffs[2 * N_ + k] * v.coeffs[2 * N_ + m] * kappaH_[k][m];
    }
    return s;
  }

  long killing_root_pair(std::size_t pos_index) const { return kappa_[pos_index]; }
  long killing_cartan(std::size_t k, std::size_t m) const { return kappaH_[k][m]; }

  /// Basis (reduced echelon rows) of {u : K(u, w) = 0 for all w in W}.
  QMatrix killing_perp(const std::vector<Element>& W) const {
    QMatrix M(0, dim_);
    for (const Element& w : W) M.add_row(killing_row(w));
    return kernel_basis(std::move(M));
  }

  /// Row r with r[i] = K(b_i, w); perp conditions are r . u = 0.
  QVec killing_row(const Element& w) const {
    QVec row = qvec_zero(dim_);
    for (std::size_t i = 0; i < N_; ++i) {
      if (!seaweed::is_zero(w.coeffs[N_ + i])) row[i] = w.coeffs[N_ + i] * kappa_[i];
      if (!seaweed::is_zero(w.coeffs[i])) row[N_ + i] = w.coeffs[i] * kappa_[i];
    }
    for (std::size_t k = 0; k < l_; ++k) {
      Rat s = 0;
      for (std::size_t m = 0; m < l_; ++m)
        if (!seaweed::is_zero(w.coeffs[2 * N_ + m])) s += w.coeffs[2 * N_ + m] * kappaH_[k][m];
      row[2 * N_ + k] = s;
    }
    return row;
  }

  /// Coordinates of the coroot h_gamma over h_1..h_l (always integers).
  const std::vector<long>& coroot_coords(std::size_t pos_index) const {
    return coroots_[pos_index];
  }

private:
  // --- structure constants -------------------------------------------------

  long& Npp(std::size_t i, std::size_t j) { return Npp_[i * N_ + j]; }

  /// Longest k with beta - k*alpha a root (alpha, beta positive, by index).
  int string_down(std::size_t ai, std::size_t bi) const {
    Root alpha = rs_.positive_roots()[ai];
    Root beta = rs_.positive_roots()[bi];
    int p = 0;
    Root r = sub(beta, alpha);
    while (!is_zero_root(r) && rs_.is_root(r)) {
      ++p;
      r = sub(r, alpha);
    }
    return p;
  }

  /// N_{mu, -nu} for distinct positive roots, derived from the positive table
  /// via K([a,b],c) invariance (valid once all lower height sums are known).
  long n_mixed(std::size_t mu, std::size_t nu) const {
    const Root& m = rs_.positive_roots()[mu];
    const Root& n = rs_.positive_roots()[nu];
    Root d = sub(m, n);
    if (is_zero_root(d)) throw std::logic_error("n_mixed: equal roots");
    if (rs_.is_positive_root(d)) {
      std::size_t di = rs_.positive_index(d);
      // mu - nu = d: N_{mu,-nu} = -(d,d) N_{nu,d} / (mu,mu)
      long num = -rs_.form(d, d) * Npp_[nu * N_ + di];
      long den = rs_.form(m, m);
      if (num % den != 0) throw std::logic_error("structure constants: non-integral value");
      return num / den;
    }
    Root dneg = negate(d);
    if (rs_.is_positive_root(dneg)) {
      std::size_t di = rs_.positive_index(dneg);
      // nu - mu = d': N_{mu,-nu} = (d',d') N_{d',mu} / (nu,nu)
      long num = rs_.form(dneg, dneg) * Npp_[di * N_ + mu];
      long den = rs_.form(n, n);
      if (num % den != 0) throw std::logic_error("structure constants: non-integral value");
      return num / den;
    }
    return 0;
  }

  void compute_structure_constants() {
    Npp_.assign(N_ * N_, 0);
    // canonical order is height-ascending, so walking positive roots in index
    // order is the height induction the quadruple identity needs
    for (std::size_t g = 0; g < N_; ++g) {
      const Root& gamma = rs_.positive_roots()[g];
      if (height(gamma) < 2) continue;
      // special pairs (xi, eta), xi < eta, xi + eta = gamma
      std::vector<std::pair<std::size_t, std::size_t>> special;
      for (std::size_t xi = 0; xi < g; ++xi) {
        Root rest = sub(gamma, rs_.positive_roots()[xi]);
        if (!rs_.is_positive_root(rest)) continue;
        std::size_t eta = rs_.positive_index(rest);
        if (xi < eta) special.emplace_back(xi, eta);
      }
      if (special.empty()) throw std::logic_error("no decomposition of a non-simple root");
      // extraspecial pair: minimal first component; sign convention +(p+1)
      auto [a1, b1] = special.front();
      long Nab = string_down(a1, b1) + 1;
      Npp(a1, b1) = Nab;
      Npp(b1, a1) = -Nab;
      long gg = rs_.form(gamma, gamma);
      for (std::size_t s = 1; s < special.size(); ++s) {
        auto [xi, eta] = special[s];
        const Root& rxi = rs_.positive_roots()[xi];
        // N_{xi,eta} from the quadruple alpha1 + beta1 - xi - eta = 0
        Rat acc = 0;
        Root d1 = sub(rs_.positive_roots()[b1], rxi);
        if (!is_zero_root(d1) && rs_.is_root(d1)) {
          long t = n_mixed(b1, xi);       // N_{beta1, -xi}
          long u = n_mixed(a1, eta);      // N_{alpha1, -eta}
          if (t != 0 && u != 0) acc += Rat(t) * u / rs_.form(d1, d1);
        }
        Root d2 = sub(rs_.positive_roots()[a1], rxi);
        if (!is_zero_root(d2) && rs_.is_root(d2)) {
          long t = -n_mixed(xi, a1);      // N_{-xi, alpha1}
          long u = n_mixed(b1, eta);      // N_{beta1, -eta}
          if (t != 0 && u != 0) acc += Rat(t) * u / rs_.form(d2, d2);
        }
        Rat val = acc * gg / Nab;
        val.canonicalize();
        if (val.get_den() != 1) throw std::logic_error("structure constants: non-integral value");
        long nv = val.get_num().get_si();
        if (std::labs(nv) != string_down(xi, eta) + 1)
          throw std::logic_error("structure constants: magnitude differs from root string");
        Npp(xi, eta) = nv;
        Npp(eta, xi) = -nv;
      }
    }
  }

  void build_coroots() {
    coroots_.resize(N_);
    for (std::size_t i = 0; i < N_; ++i) {
      const Root& g = rs_.positive_roots()[i];
      long gg = rs_.form(g, g);
      std::vector<long> c(l_, 0);
      for (std::size_t k = 0; k < l_; ++k) {
        Root ak = rs_.simple_root(static_cast<int>(k) + 1);
        long num = static_cast<long>(g[k]) * rs_.form(ak, ak);
        if (num % gg != 0) throw std::logic_error("coroot coordinates: non-integral value");
        c[k] = num / gg;
      }
      coroots_[i] = std::move(c);
    }
  }

  void build_bracket_table() {
    table_.assign(dim_ * dim_, BasisProduct{});
    auto set_term = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
      if (c != 0) table_[i * dim_ + j].terms.emplace_back(k, c);
    };
    const auto& C = rs_.cartan_matrix();
    for (std::size_t i = 0; i < N_; ++i) {
      const Root& a = rs_.positive_roots()[i];
      for (std::size_t j = 0; j < N_; ++j) {
        const Root& b = rs_.positive_roots()[j];
        // [x_a, x_b]
        long n = Npp_[i * N_ + j];
        if (n != 0) set_term(i, j, rs_.positive_index(add(a, b)), n);
        // [y_a, y_b] = -N_{a,b} y_{a+b}
        if (n != 0) set_term(N_ + i, N_ + j, N_ + rs_.positive_index(add(a, b)), -n);
        // [x_a, y_b]
        if (i == j) {
          for (std::size_t k = 0; k < l_; ++k)
            set_term(i, N_ + j, 2 * N_ + k, coroots_[i][k]);
          for (std::size_t k = 0; k < l_; ++k)
            set_term(N_ + j, i, 2 * N_ + k, -coroots_[i][k]);
        } else {
          long m = n_mixed(i, j);
          if (m != 0) {
            Root d = sub(a, b);
            std::size_t target = rs_.is_positive_root(d)
                                     ? rs_.positive_index(d)
                                     : N_ + rs_.positive_index(negate(d));
            set_term(i, N_ + j, target, m);
            set_term(N_ + j, i, target, -m);
          }
        }
      }
    }
    // Cartan action: [h_k, x_g] = <g, alpha_k^vee> x_g
    for (std::size_t k = 0; k < l_; ++k) {
      for (std::size_t i = 0; i < N_; ++i) {
        const Root& g = rs_.positive_roots()[i];
        long v = 0;
        for (std::size_t t = 0; t < l_; ++t) v += C[k][t] * g[t];
        set_term(2 * N_ + k, i, i, v);
        set_term(i, 2 * N_ + k, i, -v);
        set_term(2 * N_ + k, N_ + i, N_ + i, -v);
        set_term(N_ + i, 2 * N_ + k, N_ + i, v);
      }
    }
  }

  /// kappa values by trace of adjoint products, exact.
  void compute_killing() {
    kappa_.assign(N_, 0);
    for (std::size_t i = 0; i < N_; ++i) {
      long tr = 0;
      for (std::size_t b = 0; b < dim_; ++b) {
        // coefficient of b in [x_i, [y_i, b]]
        for (const auto& [mid, c1] : table_[(N_ + i) * dim_ + b].terms)
          for (const auto& [out, c2] : table_[i * dim_ + mid].terms)
            if (out == b) tr += c1 * c2;
      }
      kappa_[i] = tr;
    }
    kappaH_.assign(l_, std::vector<long>(l_, 0));
    const auto& C = rs_.cartan_matrix();
    for (std::size_t k = 0; k < l_; ++k)
      for (std::size_t m = 0; m < l_; ++m) {
        long s = 0;
        for (const Root& g : rs_.positive_roots()) {
          long vk = 0, vm = 0;
          for (std::size_t t = 0; t < l_; ++t) {
            vk += C[k][t] * g[t];
            vm += C[m][t] * g[t];
          }
          s += 2 * vk * vm; // both signs of the root
        }
        kappaH_[k][m] = s;
      }
  }

  RootSystem rs_;
  std::size_t N_ = 0, l_ = 0, dim_ = 0;
  std::vector<long> Npp_;
  std::vector<std::vector<long>> coroots_;
  std::vector<BasisProduct> table_;
  std::vector<long> kappa_;
  std::vector<std::vector<long>> kappaH_;
};

inline AlgebraData build_algebra(const DynkinType& t) { return AlgebraData(RootSystem(t)); }

} // namespace seaweed

#endif
