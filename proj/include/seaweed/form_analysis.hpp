#ifndef SEAWEED_FORM_ANALYSIS_HPP
#define SEAWEED_FORM_ANALYSIS_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "seaweed/biparabolic.hpp"
#include "seaweed/rng.hpp"

namespace seaweed {

/// Signed root: the weight of a root-vector component.
struct SignedRoot {
  int sign; // +1 or -1
  Root root; // positive root coordinates

  Root weight() const { return sign > 0 ? root : negate(root); }
  bool operator<(const SignedRoot& o) const {
    return std::tie(sign, root) < std::tie(o.sign, o.root);
  }
  bool operator==(const SignedRoot& o) const { return sign == o.sign && root == o.root; }
};

using CoeffMap = std::map<std::vector<int>, Rat>; // cascade subset K -> scalar

/// Linear form f = K(v, .) on q, with v supported on the cascade roots:
/// v = sum a_K x_{-eps_K} (K in the pi2 cascade) + sum b_L x_{+eps_L}
/// (L in the pi1 cascade); v lies in the opposite biparabolic.
struct CascadeForm {
  Biparabolic q;
  CoeffMap coeffs_a; // keyed by K(pi2)
  CoeffMap coeffs_b; // keyed by K(pi1)
  Element v;
  std::vector<SignedRoot> support;

  explicit CascadeForm(std::size_t dim) : v(dim) {}
};

inline CascadeForm build_form(const AlgebraData& A, const Biparabolic& q,
                              const CoeffMap& coeffs_a, const CoeffMap& coeffs_b) {
  const RootSystem& rs = A.roots();
  Cascade c2 = kostant_cascade(rs, q.pi2);
  Cascade c1 = kostant_cascade(rs, q.pi1);
  auto check_keys = [](const Cascade& c, const CoeffMap& m, const char* which) {
    if (m.size() != c.size())
      throw std::invalid_argument(std::string("coefficient map for ") + which +
                                  " does not match the cascade");
    for (const auto& e : c.entries) {
      auto it = m.find(e.K);
      if (it == m.end())
        throw std::invalid_argument(std::string("coefficient map for ") + which +
                                    " does not match the cascade");
      if (is_zero(it->second))
        throw std::invalid_argument("cascade form coefficients must be nonzero");
    }
  };
  check_keys(c2, coeffs_a, "pi2");
  check_keys(c1, coeffs_b, "pi1");
  CascadeForm f(A.dim());
  f.q = q;
  f.coeffs_a = coeffs_a;
  f.coeffs_b = coeffs_b;
  for (const auto& e : c2.entries) {
    f.v.coeffs[A.y_index(e.eps)] += coeffs_a.at(e.K);
    f.support.push_back({-1, e.eps});
  }
  for (const auto& e : c1.entries) {
    f.v.coeffs[A.x_index(e.eps)] += coeffs_b.at(e.K);
    f.support.push_back({+1, e.eps});
  }
  std::sort(f.support.begin(), f.support.end());
  return f;
}

/// f(u) = K(v, u).
inline Rat evaluate_form(const AlgebraData& A, const CascadeForm& f, const Element& u) {
  return A.killing(f.v, u);
}

struct StabilizerReport {
  int dim = 0;
  std::vector<Element> basis;      // ambient coordinates, reduced echelon over q
  std::vector<QVec> basis_coords;  // coordinates over q.basis_indices
  int reductive_dim = 0;           // rank of the Killing Gram matrix on the basis
  bool regular = false;            // dim == index formula
};

namespace detail {
/// [b_i, e] for a basis slot against a general element, using the table.
inline Element bracket_basis_element(const AlgebraData& A, std::size_t i, const Element& e) {
  Element out(A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    if (is_zero(e.coeffs[j])) continue;
    for (const auto& [k, c] : A.bracket_basis(i, j).terms) out.coeffs[k] += e.coeffs[j] * c;
  }
  return out;
}
} // namespace detail

/// Coadjoint stabilizer of f in q: x lies in q(f) iff [x, v] is Killing-
/// orthogonal to q. Solved as the kernel of M[j][i] = K([b_i, v], b_j) over
/// the q basis; the basis comes back in reduced echelon form.
inline StabilizerReport stabilizer(const AlgebraData& A, const CascadeForm& f,
                                   const std::optional<int>& index_hint = std::nullopt) {
  const auto& idx = f.q.basis_indices;
  std::size_t n = idx.size();
  std::vector<QVec> rows_by_i;
  rows_by_i.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Element w = detail::bracket_basis_element(A, idx[i], f.v);
    rows_by_i.push_back(A.killing_row(w)); // entry [j'] = K(b_j', w)
  }
  QMatrix M(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) M[j][i] = rows_by_i[i][idx[j]];
  QMatrix K = kernel_basis(std::move(M));
  StabilizerReport rep;
  rep.dim = static_cast<int>(K.rows);
  for (std::size_t r = 0; r < K.rows; ++r) {
    Element e(A.dim());
    for (std::size_t i = 0; i < n; ++i) e.coeffs[idx[i]] = K[r][i];
    rep.basis.push_back(std::move(e));
    rep.basis_coords.push_back(K[r]);
  }
  QMatrix G(static_cast<std::size_t>(rep.dim), static_cast<std::size_t>(rep.dim));
  for (int a = 0; a < rep.dim; ++a)
    for (int b = 0; b < rep.dim; ++b)
      G[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          A.killing(rep.basis[static_cast<std::size_t>(a)], rep.basis[static_cast<std::size_t>(b)]);
  rep.reductive_dim = static_cast<int>(rref(G));
  if (index_hint) rep.regular = (rep.dim == *index_hint);
  return rep;
}

/// Independent route: dim q(f) = dim q - rank B_f with B_f[i][j] = f([b_i, b_j]).
inline int stabilizer_dim_oracle(const AlgebraData& A, const CascadeForm& f) {
  const auto& idx = f.q.basis_indices;
  std::size_t n = idx.size();
  QVec fv = A.killing_row(f.v); // f on basis slots
  QMatrix B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat s = 0;
      for (const auto& [k, c] : A.bracket_basis(idx[i], idx[j]).terms)
        if (!is_zero(fv[k])) s += fv[k] * c;
      B[i][j] = s;
      B[j][i] = -s;
    }
  return static_cast<int>(n - rref(B));
}

/// dim of a reductive factor of the stabilizer: dim S - dim(S cap S^perp).
inline int reductive_factor_dim(const AlgebraData& A, const StabilizerReport& stab) {
  (void)A;
  return stab.reductive_dim;
}

/// dim(S cap S^{perp K}) as printed by orthogonal-intersection workflows.
inline int stab_killing_radical_dim(const StabilizerReport& stab) {
  return stab.dim - stab.reductive_dim;
}

/// Stability test: f is stable iff [q, q(f)] meets q(f) trivially.
inline bool tauvel_yu_stable(const AlgebraData& A, const CascadeForm& f,
                             const StabilizerReport& stab) {
  RowSpace W(A.dim());
  for (const Element& s : stab.basis)
    for (std::size_t i : f.q.basis_indices) W.insert(detail::bracket_basis_element(A, i, s).coeffs);
  RowSpace S(A.dim());
  for (const Element& s : stab.basis) S.insert(s.coeffs);
  return intersection_dim(W, S) == 0;
}

struct Witness {
  QVec alpha_values; // alpha_i(h), i = 1..l
  Element h;

  explicit Witness(std::size_t l, std::size_t dim) : alpha_values(qvec_zero(l)), h(dim) {}
};

namespace detail {
inline Element cartan_element_from_values(const AlgebraData& A, const QVec& t) {
  // find c with alpha_i(sum c_k h_k) = t_i; alpha_i(h_k) = cartan[k][i]
  std::size_t l = A.rank();
  const auto& C = A.roots().cartan_matrix();
  QMatrix M(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) M[i][k] = C[k][i];
  auto c = solve(M, t);
  if (!c) throw std::logic_error("Cartan matrix must be invertible");
  Element h(A.dim());
  for (std::size_t k = 0; k < l; ++k) h.coeffs[A.h_index(static_cast<int>(k) + 1)] = (*c)[k];
  return h;
}

inline std::set<Root> root_weights_of(const AlgebraData& A, const Element& e) {
  std::set<Root> out;
  for (std::size_t i = 0; i < 2 * A.num_positive(); ++i)
    if (!is_zero(e.coeffs[i])) out.insert(A.basis_weight(i));
  return out;
}
} // namespace detail

/// Search for h in the Cartan with h.f = -f and [h, x] = -x on the whole
/// stabilizer, under the convention (xi.f)(y) = f([xi, y]). The linear system
/// asks gamma(h) = 1 on the support of f and delta(h) = -1 on every root
/// appearing in the stabilizer basis; free variables are set to 0. The
/// returned h is verified a posteriori against f and the basis.
inline std::optional<Witness> find_witness(const AlgebraData& A, const CascadeForm& f,
                                           const StabilizerReport& stab) {
  std::size_t l = A.rank();
  for (const Element& s : stab.basis)
    for (std::size_t k = 0; k < l; ++k)
      if (!is_zero(s.coeffs[A.h_index(static_cast<int>(k) + 1)])) return std::nullopt;
  QMatrix M(0, l);
  QVec rhs;
  auto add_eq = [&](const Root& weight, int value) {
    QVec row(l);
    for (std::size_t i = 0; i < l; ++i) row[i] = weight[i];
    M.add_row(std::move(row));
    rhs.push_back(value);
  };
  for (const SignedRoot& g : f.support) add_eq(g.weight(), 1);
  std::set<Root> stab_weights;
  for (const Element& s : stab.basis)
    for (const Root& w : detail::root_weights_of(A, s)) stab_weights.insert(w);
  for (const Root& w : stab_weights) add_eq(w, -1);
  auto t = solve(M, rhs);
  if (!t) return std::nullopt;
  Witness w(l, A.dim());
  w.alpha_values = *t;
  w.h = detail::cartan_element_from_values(A, *t);
  // verification: h.f = -f on every q basis vector, and ad(h) = -1 on q(f)
  for (std::size_t i : f.q.basis_indices) {
    Element hy = A.bracket(w.h, A.element(i));
    Rat lhs = A.killing(f.v, hy);
    Rat direct = -A.killing(f.v, A.element(i));
    if (lhs != direct) return std::nullopt;
  }
  for (const Element& s : stab.basis) {
    Element hs = A.bracket(w.h, s);
    Element minus = s;
    minus *= Rat(-1);
    for (std::size_t k = 0; k < A.dim(); ++k)
      if (hs.coeffs[k] != minus.coeffs[k]) return std::nullopt;
  }
  return w;
}

/// The spanning test A + q.f = q*: the cascade coordinate lines together with
/// the coadjoint orbit directions must fill the dual, and f must be regular.
inline bool genericity_check(const AlgebraData& A, const CascadeForm& f,
                             const StabilizerReport& stab, int index_value) {
  if (stab.dim != index_value) return false;
  Biparabolic opposite = build_biparabolic(A, f.q.pi2, f.q.pi1);
  std::vector<bool> allowed(A.dim(), false);
  for (std::size_t i : opposite.basis_indices) allowed[i] = true;
  RowSpace span(A.dim());
  for (const SignedRoot& g : f.support) {
    QVec unit = qvec_zero(A.dim());
    unit[A.root_vector_index(g.root, g.sign)] = 1;
    span.insert(std::move(unit));
  }
  for (std::size_t i : f.q.basis_indices) {
    Element w = detail::bracket_basis_element(A, i, f.v);
    QVec proj = qvec_zero(A.dim());
    for (std::size_t k = 0; k < A.dim(); ++k)
      if (allowed[k]) proj[k] = -w.coeffs[k]; // [v, b_i], projected to the dual model
    span.insert(std::move(proj));
  }
  return span.dim() == f.q.dim;
}

/// Toral lower bound: {h in the Cartan : eps(h) = 0 for all cascade roots of
/// both sides} is central in q and fixes every cascade form, so it must sit
/// inside the computed stabilizer. Returns true when the kernel has the
/// predicted dimension l - dim E12 and every kernel vector is in span(q(f)).
inline bool toral_lower_bound_check(const AlgebraData& A, const CascadeForm& f,
                                    const StabilizerReport& stab) {
  const RootSystem& rs = A.roots();
  auto e1 = kostant_cascade(rs, f.q.pi1).eps_roots();
  auto e2 = kostant_cascade(rs, f.q.pi2).eps_roots();
  std::size_t l = A.rank();
  QMatrix M(0, l);
  detail::add_eps_rows(M, e1);
  detail::add_eps_rows(M, e2);
  auto d = span_dims(rs, f.q.pi1, f.q.pi2);
  QMatrix K = kernel_basis(std::move(M));
  if (static_cast<int>(K.rows) != rs.rank() - d.dimE12) return false;
  RowSpace S(A.dim());
  for (const Element& s : stab.basis) S.insert(s.coeffs);
  for (std::size_t r = 0; r < K.rows; ++r) {
    Element h = detail::cartan_element_from_values(A, K[r]);
    if (!S.contains(h.coeffs)) return false;
  }
  return true;
}

// --- worked-example regression: symbolic stabilizer coefficients -----------

/// Expected 1-dimensional stabilizer shape for a worked case: the leading
/// cascade-root vector plus rational functions of the sampled coefficients on
/// specific negative roots. a/b coefficients are referenced by cascade subset.
struct LambdaFixture {
  std::string name;
  DynkinType type;
  std::vector<int> pi1, pi2;
  Root leading; // positive root whose coefficient is normalized to 1
  // expected coefficients: signed root -> value as a function of the maps
  std::function<std::vector<std::pair<SignedRoot, Rat>>(const CoeffMap& a, const CoeffMap& b)>
      expected;
};

struct SymbolicCheckResult {
  bool ok = true;
  std::string diff;
};

/// Check the stabilizer's coefficient formulas on random samples. Signs are
/// compared up to the global basis-sign convention: the per-root sign is
/// recorded on the first sample and must stay fixed afterwards.
inline SymbolicCheckResult stabilizer_symbolic_check(const AlgebraData& A,
                                                     const LambdaFixture& fix,
                                                     int samples, std::uint64_t seed) {
  SymbolicCheckResult res;
  std::ostringstream diff;
  Biparabolic q = build_biparabolic(A, fix.pi1, fix.pi2);
  int index_value = index_formula(A.roots(), fix.pi1, fix.pi2);
  Cascade c1 = kostant_cascade(A.roots(), fix.pi1);
  Cascade c2 = kostant_cascade(A.roots(), fix.pi2);
  std::map<SignedRoot, int> recorded_sign;
  for (int s = 0; s < samples; ++s) {
    std::uint64_t h = hash_combine(seed, 0x10adULL);
    h = hash_subset(h, fix.pi1);
    h = hash_subset(h, fix.pi2);
    h = hash_combine(h, static_cast<std::uint64_t>(s));
    Rng rng(h);
    CoeffMap a, b;
    for (const auto& e : c2.entries) a[e.K] = Rat(rng.uniform_nonzero(1, 100));
    for (const auto& e : c1.entries) b[e.K] = Rat(rng.uniform_nonzero(1, 100));
    CascadeForm f = build_form(A, q, a, b);
    StabilizerReport stab = stabilizer(A, f, index_value);
    if (stab.dim != 1) {
      res.ok = false;
      diff << "sample " << s << ": stabilizer dimension " << stab.dim << ", expected 1\n";
      continue;
    }
    const Element& x = stab.basis.front();
    Rat lead = x.coeffs[A.x_index(fix.leading)];
    if (is_zero(lead)) {
      res.ok = false;
      diff << "sample " << s << ": no component on the leading root\n";
      continue;
    }
    std::map<SignedRoot, Rat> computed;
    for (std::size_t i = 0; i < 2 * A.num_positive(); ++i) {
      if (is_zero(x.coeffs[i])) continue;
      Root w = A.basis_weight(i);
      SignedRoot sr = (i < A.num_positive()) ? SignedRoot{+1, w} : SignedRoot{-1, negate(w)};
      computed[sr] = x.coeffs[i] / lead;
    }
    auto expect = fix.expected(a, b);
    std::map<SignedRoot, Rat> expected(expect.begin(), expect.end());
    expected[{+1, fix.leading}] = 1;
    if (computed.size() != expected.size()) {
      res.ok = false;
      diff << "sample " << s << ": support size " << computed.size() << " vs expected "
           << expected.size() << "\n";
    }
    for (const auto& [sr, want] : expected) {
      auto it = computed.find(sr);
      if (it == computed.end()) {
        res.ok = false;
        diff << "sample " << s << ": missing coefficient on a support root\n";
        continue;
      }
      const Rat& got = it->second;
      int sign_now = 0;
      if (got == want) sign_now = 1;
      else if (got == -want) sign_now = -1;
      if (sign_now == 0) {
        res.ok = false;
        diff << "sample " << s << ": coefficient " << rat_str(got) << " vs expected +-"
             << rat_str(want) << "\n";
        continue;
      }
      auto rec = recorded_sign.find(sr);
      if (rec == recorded_sign.end()) recorded_sign[sr] = sign_now;
      else if (rec->second != sign_now) {
        res.ok = false;
        diff << "sample " << s << ": basis sign flipped between samples\n";
      }
    }
  }
  res.diff = diff.str();
  return res;
}

} // namespace seaweed

#endif
