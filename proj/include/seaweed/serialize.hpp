#ifndef SEAWEED_SERIALIZE_HPP
#define SEAWEED_SERIALIZE_HPP

#include <json.hpp>

#include "seaweed/reference_tables.hpp"

namespace seaweed {

/// ordered_json everywhere: field order is part of the output contract
/// (identical argv + seed must give byte-identical files).
using Json = nlohmann::ordered_json;

inline Json to_json(const Root& r) {
  Json a = Json::array();
  for (int c : r) a.push_back(c);
  return a;
}

inline Json to_json_subset(const std::vector<int>& s) {
  Json a = Json::array();
  for (int c : s) a.push_back(c);
  return a;
}

inline Json to_json(const Cascade& c) {
  Json a = Json::array();
  for (const auto& e : c.entries) {
    Json o;
    o["K"] = to_json_subset(e.K);
    o["eps"] = to_json(e.eps);
    a.push_back(std::move(o));
  }
  return a;
}

/// Elements serialize sparsely as {basis label: rational string}.
inline Json to_json(const AlgebraData& A, const Element& e) {
  Json o = Json::object();
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!is_zero(e.coeffs[i])) o[A.basis_label(i)] = rat_str(e.coeffs[i]);
  return o;
}

inline Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

inline Json to_json(const PairReport& p) {
  Json o;
  o["pi1"] = to_json_subset(p.pi1);
  o["pi2"] = to_json_subset(p.pi2);
  o["k1"] = p.k1;
  o["k2"] = p.k2;
  o["dimE1"] = p.dims.dimE1;
  o["dimE2"] = p.dims.dimE2;
  o["dimE12"] = p.dims.dimE12;
  o["dimIntersection"] = p.dims.dimIntersection;
  o["index"] = p.index;
  o["star"] = p.star;
  o["orbit_rep"] = Json{{"pi1", to_json_subset(p.orbit_pi1)}, {"pi2", to_json_subset(p.orbit_pi2)}};
  return o;
}

inline Json to_json(const SampleInfo& s) {
  Json o;
  o["sample"] = s.sample;
  o["attempts"] = s.attempts;
  o["coeffs_a"] = s.coeffs_a;
  o["coeffs_b"] = s.coeffs_b;
  o["stab_dim"] = s.stab_dim;
  o["reductive_dim"] = s.reductive_dim;
  o["tauvel_yu"] = s.tauvel_yu;
  o["generic"] = s.generic;
  return o;
}

inline Json to_json(const ClassificationRecord& r) {
  Json o;
  o["pi1"] = to_json_subset(r.pair.pi1);
  o["pi2"] = to_json_subset(r.pair.pi2);
  o["type_labels"] = Json::array({r.label1, r.label2});
  o["index"] = r.index;
  o["star"] = r.pair.star;
  o["samples"] = Json::array();
  for (const auto& s : r.samples) o["samples"].push_back(to_json(s));
  if (r.witness) o["witness"] = to_json(*r.witness);
  else o["witness"] = nullptr;
  o["rank_lower"] = r.rank_lower;
  o["rank_upper"] = r.rank_upper;
  o["verdict"] = verdict_name(r.verdict);
  if (!r.diagnostic.empty()) o["diagnostic"] = r.diagnostic;
  o["orbit_rep"] =
      Json{{"pi1", to_json_subset(r.pair.orbit_pi1)}, {"pi2", to_json_subset(r.pair.orbit_pi2)}};
  return o;
}

inline Json classification_document(const DynkinType& t, std::uint64_t seed,
                                    const std::vector<ClassificationRecord>& records) {
  Json o;
  o["type"] = t.name();
  o["seed"] = seed;
  o["records"] = Json::array();
  for (const auto& r : records) o["records"].push_back(to_json(r));
  return o;
}

inline Json to_json(const VerifyReport& rep) {
  Json o;
  Json rows = Json::array();
  for (const auto& rr : rep.rows) {
    Json r;
    r["pi1"] = to_json_subset(rr.row.pi1);
    r["pi2"] = to_json_subset(rr.row.pi2);
    r["expected_index"] = rr.row.index;
    r["expected_rank"] = Json::array({rr.row.rank_lo, rr.row.rank_hi});
    r["found"] = rr.found;
    if (rr.found) {
      r["computed_index"] = rr.computed_index;
      r["computed_rank"] = Json::array({rr.computed_lo, rr.computed_hi});
      r["verdict"] = rr.verdict;
    }
    r["pass"] = rr.pass();
    rows.push_back(std::move(r));
  }
  o["rows"] = std::move(rows);
  o["all_pass"] = rep.all_pass;
  o["extra_records"] = rep.extra_records;
  return o;
}

} // namespace seaweed

#endif
