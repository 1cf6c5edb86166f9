// Command-line front end: root system queries, cascades, single-pair
// analysis, full classification runs, and verification against the bundled
// reference tables.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "seaweed/serialize.hpp"

using namespace seaweed;

namespace {

std::vector<int> parse_subset(const std::string& s, int rank) {
  std::vector<int> out;
  if (s == "all") {
    for (int i = 1; i <= rank; ++i) out.push_back(i);
    return out;
  }
  if (s.empty() || s == "none") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty())
      throw CLI::ValidationError("subset", "malformed subset: " + s);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out)
    if (v < 1 || v > rank) throw CLI::ValidationError("subset", "index out of range: " + tok);
  return out;
}

struct GlobalOpts {
  std::string type_name;
  std::uint64_t seed = 0;
  int samples = 5;
  std::string coeff_range = "1..100";
  std::string format = "table";
  std::string out_path;
};

ClassifyConfig make_config(const GlobalOpts& g) {
  ClassifyConfig cfg;
  cfg.seed = g.seed;
  cfg.samples = g.samples;
  auto dots = g.coeff_range.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--coeff-range", "expected LO..HI");
  cfg.coeff_lo = std::stol(g.coeff_range.substr(0, dots));
  cfg.coeff_hi = std::stol(g.coeff_range.substr(dots + 2));
  if (cfg.coeff_lo > cfg.coeff_hi || (cfg.coeff_lo == 0 && cfg.coeff_hi == 0))
    throw CLI::ValidationError("--coeff-range", "empty coefficient range");
  return cfg;
}

void emit(const GlobalOpts& g, const Json& doc, const std::string& table_text) {
  std::string payload = (g.format == "json") ? doc.dump(2) + "\n" : table_text;
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out_path);
    f << payload;
  } else {
    std::cout << payload;
  }
}

std::string subset_str(const std::vector<int>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out.empty() ? "-" : out;
}

std::string root_str(const Root& r) {
  std::string out;
  for (int c : r) out += std::to_string(c);
  return out;
}

std::string rank_str(int lo, int hi) {
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + "<=rang<=" + std::to_string(hi);
}

std::string record_table(const std::vector<ClassificationRecord>& records) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "type" << std::setw(18) << "pi1" << std::setw(18)
     << "pi2" << std::setw(5) << "ind" << std::setw(14) << "rang" << "verdict\n";
  for (const auto& r : records) {
    os << std::left << std::setw(16) << (r.label1 + "|" + r.label2) << std::setw(18)
       << subset_str(r.pair.pi1) << std::setw(18) << subset_str(r.pair.pi2) << std::setw(5)
       << r.index << std::setw(14) << rank_str(r.rank_lower, r.rank_upper)
       << verdict_name(r.verdict) << "\n";
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact classifier for standard biparabolic subalgebras of the simple Lie algebras"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "deterministic sampling seed")->capture_default_str();
  app.add_option("--samples", g.samples, "coefficient samples per pair")->capture_default_str();
  app.add_option("--coeff-range", g.coeff_range, "coefficient range LO..HI")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write output to a file instead of stdout");

  auto* roots_cmd = app.add_subcommand("roots", "positive roots of a type");
  roots_cmd->fallthrough();
  std::string roots_type;
  roots_cmd->add_option("--type", roots_type, "Dynkin type, e.g. F4")->required();

  auto* cascade_cmd = app.add_subcommand("cascade", "cascade of a simple-root subset");
  cascade_cmd->fallthrough();
  std::string casc_type, casc_subset = "all";
  cascade_cmd->add_option("--type", casc_type, "Dynkin type")->required();
  cascade_cmd->add_option("--subset", casc_subset, "comma-separated 1-based indices, or 'all'");

  auto* pair_cmd = app.add_subcommand("pair", "analyze one biparabolic pair");
  pair_cmd->fallthrough();
  std::string pair_type, pair_pi1, pair_pi2, pair_coeffs;
  pair_cmd->add_option("--type", pair_type, "Dynkin type")->required();
  pair_cmd->add_option("--pi1", pair_pi1, "subset for the negative side")->required();
  pair_cmd->add_option("--pi2", pair_pi2, "subset for the positive side")->required();
  pair_cmd->add_option("--coeffs", pair_coeffs,
                       "explicit coefficients a_1,..,a_k2,b_1,..,b_k1 in cascade order");

  auto* classify_cmd = app.add_subcommand("classify", "classify every star pair of a type");
  classify_cmd->fallthrough();
  std::string cls_type;
  bool connected_only = false;
  classify_cmd->add_option("--type", cls_type, "Dynkin type")->required();
  classify_cmd->add_flag("--connected-only", connected_only, "restrict to connected pi1");

  auto* verify_cmd =
      app.add_subcommand("verify-paper", "check a full run against the reference tables");
  verify_cmd->fallthrough();
  std::string ver_type;
  verify_cmd->add_option("--type", ver_type, "Dynkin type")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots_cmd->parsed()) {
      RootSystem rs(DynkinType::parse(roots_type));
      Json doc;
      doc["type"] = rs.type().name();
      doc["count"] = rs.num_positive();
      doc["positive_roots"] = Json::array();
      for (const Root& r : rs.positive_roots()) doc["positive_roots"].push_back(to_json(r));
      std::ostringstream os;
      os << rs.type().name() << ": " << rs.num_positive() << " positive roots\n";
      for (const Root& r : rs.positive_roots()) os << "  " << root_str(r) << "\n";
      emit(g, doc, os.str());
      return 0;
    }
    if (cascade_cmd->parsed()) {
      RootSystem rs(DynkinType::parse(casc_type));
      auto S = parse_subset(casc_subset, rs.rank());
      Cascade c = kostant_cascade(rs, S);
      Json doc = to_json(c);
      std::ostringstream os;
      for (const auto& e : c.entries)
        os << "K={" << subset_str(e.K) << "}  eps=" << root_str(e.eps) << "\n";
      emit(g, doc, os.str());
      return 0;
    }
    if (pair_cmd->parsed()) {
      AlgebraData A = build_algebra(DynkinType::parse(pair_type));
      const RootSystem& rs = A.roots();
      auto pi1 = parse_subset(pair_pi1, rs.rank());
      auto pi2 = parse_subset(pair_pi2, rs.rank());
      ClassifyConfig cfg = make_config(g);
      PairReport pr = make_pair_report(rs, pi1, pi2);
      Json doc;
      doc["type"] = rs.type().name();
      doc["seed"] = g.seed;
      doc["pair"] = to_json(pr);
      std::ostringstream os;
      os << "q_{" << subset_str(pi1) << " ; " << subset_str(pi2) << "} in " << rs.type().name()
         << ": k1=" << pr.k1 << " k2=" << pr.k2 << " ind=" << pr.index
         << " star=" << (pr.star ? "yes" : "no") << "\n";
      bool full1 = static_cast<int>(pi1.size()) == rs.rank();
      bool full2 = static_cast<int>(pi2.size()) == rs.rank();
      if (pi1.empty() && pi2.empty()) {
        doc["note"] = "q is the Cartan subalgebra: abelian, stable, quasi-reductive";
        os << "  q = h (abelian): stable, quasi-reductive\n";
      } else if (full1 && full2) {
        doc["note"] = "q is the whole algebra: reductive, stable, quasi-reductive";
        os << "  q = g (reductive): stable, quasi-reductive\n";
      } else if (!pair_coeffs.empty()) {
        // explicit coefficients: one diagnostic sample, no classification
        Cascade c1 = kostant_cascade(rs, pi1);
        Cascade c2 = kostant_cascade(rs, pi2);
        std::vector<Rat> vals;
        std::stringstream ss(pair_coeffs);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.emplace_back(tok);
        if (vals.size() != c1.size() + c2.size())
          throw std::invalid_argument("--coeffs: expected " +
                                      std::to_string(c1.size() + c2.size()) + " values");
        CoeffMap a, b;
        std::size_t at = 0;
        for (const auto& e : c2.entries) a[e.K] = vals[at++];
        for (const auto& e : c1.entries) b[e.K] = vals[at++];
        Biparabolic q = build_biparabolic(A, pi1, pi2);
        CascadeForm f = build_form(A, q, a, b);
        StabilizerReport stab = stabilizer(A, f, pr.index);
        doc["sample"] = Json{{"stab_dim", stab.dim},
                             {"oracle_dim", stabilizer_dim_oracle(A, f)},
                             {"reductive_dim", stab.reductive_dim},
                             {"tauvel_yu", tauvel_yu_stable(A, f, stab)}};
        Json basis = Json::array();
        for (const auto& s : stab.basis) basis.push_back(to_json(A, s));
        doc["stabilizer_basis"] = std::move(basis);
        os << "  dim q = " << q.dim << ", dim q(f) = " << stab.dim
           << ", reductive factor dim = " << stab.reductive_dim << "\n";
      } else if (pr.star) {
        ClassificationRecord rec = classify_pair(A, pi1, pi2, cfg);
        doc["record"] = to_json(rec);
        os << record_table({rec});
      } else {
        doc["note"] = "pair rejected for classification: the star condition does not hold";
        os << "  star condition does not hold; classification applies only to star pairs\n";
      }
      emit(g, doc, os.str());
      return 0;
    }
    if (classify_cmd->parsed()) {
      AlgebraData A = build_algebra(DynkinType::parse(cls_type));
      ClassifyConfig cfg = make_config(g);
      EnumOptions opt;
      opt.connected_pi1_only = connected_only;
      auto records = classify_type(A, cfg, opt);
      Json doc = classification_document(A.roots().type(), g.seed, records);
      emit(g, doc, record_table(records));
      return 0;
    }
    if (verify_cmd->parsed()) {
      AlgebraData A = build_algebra(DynkinType::parse(ver_type));
      ClassifyConfig cfg = make_config(g);
      VerifyReport rep = verify_reference_tables(A, cfg);
      Json doc = to_json(rep);
      std::ostringstream os;
      for (const auto& rr : rep.rows) {
        os << (rr.pass() ? "PASS" : "FAIL") << "  {" << subset_str(rr.row.pi1) << "} {"
           << subset_str(rr.row.pi2) << "}  ind " << rr.row.index << " (computed ";
        if (rr.found)
          os << rr.computed_index << "), rang " << rank_str(rr.row.rank_lo, rr.row.rank_hi)
             << " (computed " << rank_str(rr.computed_lo, rr.computed_hi) << ", "
             << rr.verdict << ")";
        else
          os << "no matching pair)";
        os << "\n";
      }
      os << (rep.all_pass ? "ALL ROWS PASS" : "FAILURES PRESENT") << "\n";
      emit(g, doc, os.str());
      return rep.all_pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
