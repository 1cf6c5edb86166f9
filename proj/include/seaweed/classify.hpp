#ifndef SEAWEED_CLASSIFY_HPP
#define SEAWEED_CLASSIFY_HPP

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "seaweed/form_analysis.hpp"

namespace seaweed {

enum class Verdict {
  QuasiReductiveEvidence,
  RankZeroNotStable,
  RankPositiveEliminated,
  UndeterminedBounds,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::QuasiReductiveEvidence: return "QUASI_REDUCTIVE_EVIDENCE";
    case Verdict::RankZeroNotStable: return "RANK_ZERO_NOT_STABLE";
    case Verdict::RankPositiveEliminated: return "RANK_POSITIVE_ELIMINATED";
    case Verdict::UndeterminedBounds: return "UNDETERMINED_BOUNDS";
  }
  return "?";
}

struct ClassifyConfig {
  std::uint64_t seed = 0;
  int samples = 5;
  int resample_budget = 5;       // attempts per sample slot before flagging
  int witness_fresh_samples = 3; // a-posteriori verification samples
  long coeff_lo = 1;
  long coeff_hi = 100;
  unsigned threads = 0; // 0 = hardware
};

struct SampleInfo {
  int sample = 0;
  int attempts = 1;
  std::vector<std::string> coeffs_a; // cascade order of pi2
  std::vector<std::string> coeffs_b; // cascade order of pi1
  int stab_dim = 0;
  int reductive_dim = 0;
  bool tauvel_yu = false;
  bool generic = false;
};

struct ClassificationRecord {
  PairReport pair;
  std::string label1, label2;
  int index = 0;
  std::vector<SampleInfo> samples;
  std::optional<QVec> witness; // alpha_i(h)
  int rank_lower = 0;
  int rank_upper = 0;
  Verdict verdict = Verdict::UndeterminedBounds;
  std::string diagnostic;
};

namespace detail {
inline CoeffMap sample_coeffs(const Cascade& c, Rng& rng, long lo, long hi) {
  CoeffMap m;
  for (const auto& e : c.entries) m[e.K] = Rat(rng.uniform_nonzero(lo, hi));
  return m;
}

struct DrawnForm {
  CascadeForm f;
  StabilizerReport stab;
  bool generic = false;
  int attempts = 0;
};

inline DrawnForm draw_generic_form(const AlgebraData& A, const Biparabolic& q,
                                   const Cascade& c1, const Cascade& c2, int index_value,
                                   const ClassifyConfig& cfg, std::uint64_t stream,
                                   int budget) {
  DrawnForm out{CascadeForm(A.dim()), {}, false, 0};
  for (int attempt = 0; attempt < budget; ++attempt) {
    Rng rng(hash_combine(stream, static_cast<std::uint64_t>(attempt)));
    CoeffMap a = sample_coeffs(c2, rng, cfg.coeff_lo, cfg.coeff_hi);
    CoeffMap b = sample_coeffs(c1, rng, cfg.coeff_lo, cfg.coeff_hi);
    out.f = build_form(A, q, a, b);
    out.stab = stabilizer(A, out.f, index_value);
    out.attempts = attempt + 1;
    int oracle = stabilizer_dim_oracle(A, out.f);
    if (oracle != out.stab.dim)
      throw std::logic_error("stabilizer dimension disagrees with the rank oracle");
    if (genericity_check(A, out.f, out.stab, index_value)) {
      out.generic = true;
      return out;
    }
  }
  return out;
}
} // namespace detail

/// Full analysis of one star pair: sampled stabilizers, reductive factors,
/// stability tests, and the witness search on the first regular sample.
inline ClassificationRecord classify_pair(const AlgebraData& A, const std::vector<int>& pi1_in,
                                          const std::vector<int>& pi2_in,
                                          const ClassifyConfig& cfg) {
  const RootSystem& rs = A.roots();
  auto pi1 = normalize_subset(rs, pi1_in);
  auto pi2 = normalize_subset(rs, pi2_in);
  if (!condition_star(rs, pi1, pi2))
    throw std::invalid_argument("pair rejected: the star condition does not hold");
  ClassificationRecord rec;
  rec.pair = make_pair_report(rs, pi1, pi2);
  rec.label1 = subset_type_label(rs, pi1);
  rec.label2 = subset_type_label(rs, pi2);
  rec.index = rec.pair.index;
  Biparabolic q = build_biparabolic(A, pi1, pi2);
  Cascade c1 = kostant_cascade(rs, pi1);
  Cascade c2 = kostant_cascade(rs, pi2);

  std::uint64_t base = hash_combine(cfg.seed, 0xc0ffULL);
  base = hash_subset(base, pi1);
  base = hash_subset(base, pi2);

  std::optional<detail::DrawnForm> first_generic;
  int max_reductive = 0;
  bool any_generic = false;
  for (int s = 0; s < cfg.samples; ++s) {
    auto drawn = detail::draw_generic_form(A, q, c1, c2, rec.index, cfg,
                                           hash_combine(base, static_cast<std::uint64_t>(s)),
                                           cfg.resample_budget);
    SampleInfo info;
    info.sample = s;
    info.attempts = drawn.attempts;
    for (const auto& e : c2.entries) info.coeffs_a.push_back(rat_str(drawn.f.coeffs_a.at(e.K)));
    for (const auto& e : c1.entries) info.coeffs_b.push_back(rat_str(drawn.f.coeffs_b.at(e.K)));
    info.stab_dim = drawn.stab.dim;
    info.reductive_dim = drawn.stab.reductive_dim;
    info.tauvel_yu = tauvel_yu_stable(A, drawn.f, drawn.stab);
    info.generic = drawn.generic;
    rec.samples.push_back(std::move(info));
    if (drawn.generic) {
      any_generic = true;
      max_reductive = std::max(max_reductive, drawn.stab.reductive_dim);
      if (!first_generic) first_generic = std::move(drawn);
    }
  }

  if (!any_generic) {
    rec.verdict = Verdict::UndeterminedBounds;
    rec.rank_lower = 0;
    rec.rank_upper = rec.index;
    rec.diagnostic = "no generic sample within the resample budget";
    return rec;
  }

  std::optional<Witness> witness = find_witness(A, first_generic->f, first_generic->stab);
  if (witness) {
    // soundness: the same h must act as -1 on fresh generic stabilizers
    for (int t = 0; t < cfg.witness_fresh_samples && witness; ++t) {
      auto fresh = detail::draw_generic_form(
          A, q, c1, c2, rec.index, cfg,
          hash_combine(base, 0xf7e5ULL + static_cast<std::uint64_t>(t)), cfg.resample_budget);
      if (!fresh.generic) {
        witness.reset();
        break;
      }
      for (std::size_t i : q.basis_indices) {
        Element hy = A.bracket(witness->h, A.element(i));
        if (A.killing(fresh.f.v, hy) != -A.killing(fresh.f.v, A.element(i))) witness.reset();
        if (!witness) break;
      }
      if (!witness) break;
      for (const Element& sv : fresh.stab.basis) {
        Element hs = A.bracket(witness->h, sv);
        for (std::size_t k = 0; k < A.dim() && witness; ++k)
          if (hs.coeffs[k] != -sv.coeffs[k]) witness.reset();
        if (!witness) break;
      }
    }
  }

  if (witness) {
    if (max_reductive != 0)
      throw std::logic_error("witness found together with a reductive sample");
    rec.witness = witness->alpha_values;
    rec.verdict = Verdict::RankZeroNotStable;
    rec.rank_lower = 0;
    rec.rank_upper = 0;
  } else if (max_reductive == rec.index) {
    rec.verdict = Verdict::QuasiReductiveEvidence;
    rec.rank_lower = rec.index;
    rec.rank_upper = rec.index;
  } else if (max_reductive >= 1) {
    rec.verdict = Verdict::RankPositiveEliminated;
    rec.rank_lower = max_reductive;
    rec.rank_upper = rec.index;
  } else {
    rec.verdict = Verdict::UndeterminedBounds;
    rec.rank_lower = 0;
    rec.rank_upper = rec.index;
  }
  return rec;
}

/// Classify every star pair of the type, in the deterministic enumeration
/// order. Pairs fan out to a small worker pool; the output order does not
/// depend on scheduling.
inline std::vector<ClassificationRecord> classify_type(const AlgebraData& A,
                                                       const ClassifyConfig& cfg,
                                                       const EnumOptions& opt = {}) {
  auto pairs = enumerate_star_pairs(A.roots(), opt);
  std::vector<ClassificationRecord> out(pairs.size());
  unsigned n_threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, pairs.size() ? static_cast<unsigned>(pairs.size()) : 1);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(n_threads);
  for (unsigned w = 0; w < n_threads; ++w) {
    workers.emplace_back([&, w]() {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= pairs.size()) break;
          out[i] = classify_pair(A, pairs[i].pi1, pairs[i].pi2, cfg);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace seaweed

#endif
