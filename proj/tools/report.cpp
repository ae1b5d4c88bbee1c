#include "report.hpp"

#include <random>
#include <sstream>

#include "hanoihedral/branching.hpp"
#include "hanoihedral/dihedral.hpp"
#include "hanoihedral/errors.hpp"
#include "hanoihedral/ext_element.hpp"
#include "hanoihedral/fincon.hpp"
#include "hanoihedral/kernel_pipeline.hpp"
#include "hanoihedral/selfsim.hpp"

namespace hh::cli {

namespace {

std::string big(const BigInt& v) { return v.str(); }
std::string rat(const BigRat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

GenWord random_word(int d, std::size_t max_len, std::mt19937_64& rng) {
  GenWord w(rng() % (max_len + 1));
  for (auto& g : w) g = static_cast<int>(rng() % d);
  return w;
}

// seeded spot-check of the evaluation and parity homomorphism laws
bool random_law_check(int d, unsigned long long seed, int cases) {
  auto spec = GroupSpec::hanoihedral(d);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k) {
    GenWord w1 = random_word(d, 8, rng);
    GenWord w2 = random_word(d, 8, rng);
    if (!(evaluate(spec, word_concat(w1, w2), 2) ==
          evaluate(spec, w1, 2) * evaluate(spec, w2, 2)))
      return false;
    if (!(exp_vector(d, word_concat(w1, w2)) ==
          (exp_vector(d, w1) ^ exp_vector(d, w2))))
      return false;
  }
  return true;
}

int depth_policy(int d, int max_domain) {
  // deepest chain within the degree cap
  int n = 0;
  std::size_t domain = 0, level = 1;
  while (true) {
    level *= static_cast<std::size_t>(d);
    if (domain + level > static_cast<std::size_t>(max_domain)) break;
    domain += level;
    ++n;
  }
  return n;
}

Json indices_section(Pipeline& pipe, int max_depth) {
  Json arr = Json::array();
  for (const auto& r : pipe.full_report(max_depth)) {
    Json row;
    row["n"] = r.n;
    row["order"] = big(r.order_G_mod_St_n);
    row["closed_form"] = big(r.closed_form);
    row["rank_st_mod_triv"] = r.rank_st_mod_triv;
    row["rank_st_mod_triv_expected"] = r.rank_st_mod_triv_expected;
    row["pass"] = r.pass;
    arr.push_back(std::move(row));
  }
  return arr;
}

Json kernel_section(Pipeline& pipe, int d) {
  Json out;
  bool surjective = pipe.surjectivity_check();
  int rank_a = pipe.rank_st2_mod_triv2();
  int rank_b = pipe.rank_st2_cap_K();
  int rank_branch = pipe.rank_st1_mod_branch();
  auto descriptor = pipe.rigid_kernel_report();
  auto criterion = pipe.criterion_check();

  out["surjective"] = surjective;
  out["rank_st2_mod_triv2"] = rank_a;
  out["rank_st2_mod_triv2_expected"] = (d - 2) * (d - 1);
  out["rank_st2_cap_kernel"] = rank_b;
  out["rank_st2_cap_kernel_expected"] = (d - 1) * (d - 3);
  out["rank_st1_mod_branch"] = rank_branch;
  out["rank_st1_mod_branch_expected"] = (d - 1) * (d - 1);
  out["index_rst1"] = big(pipe.computed_index_rst1());
  out["index_rst1_closed_form"] = big(closed_form_index_rst(d, 1));
  out["descriptor"] = descriptor.describe(d);
  out["rank_a"] = descriptor.rank_a;
  out["rank_b"] = descriptor.rank_b;
  out["criterion_lhs"] = big(criterion.lhs);
  out["criterion_rhs"] = big(criterion.rhs);
  out["criterion_nontrivial_kernel"] = criterion.nontrivial_kernel;
  out["pass"] = surjective && rank_a == (d - 2) * (d - 1) && rank_b == (d - 1) * (d - 3) &&
                rank_branch == (d - 1) * (d - 1) &&
                pipe.computed_index_rst1() == closed_form_index_rst(d, 1) &&
                criterion.lhs == ipow(2, static_cast<unsigned>(2 * d - 1)) &&
                criterion.rhs == 2 && criterion.nontrivial_kernel;
  return out;
}

Json nucleus_section(int d) {
  auto spec = GroupSpec::hanoihedral(d);
  auto nuc = nucleus(spec);
  Json out;
  out["size"] = nuc.size();
  out["expected_size"] = d + 1;
  Json elems = Json::array();
  for (const auto& w : nuc) elems.push_back(w.empty() ? "1" : spec.word_str(w));
  out["elements"] = std::move(elems);
  out["pass"] = (static_cast<int>(nuc.size()) == d + 1);
  return out;
}

Json cycle_space_section(int d) {
  auto spec = GroupSpec::hanoihedral(d);
  auto basis = cycle_space_basis(d);
  auto conditions = vertex_conditions(d);
  gf2::Mat2 span(d * d);
  for (const auto& w : st1_schreier_generator_words(d))
    span.add_row(edge_vector(spec, w));
  bool matches = span_equal(span, basis);
  Json out;
  out["rank"] = basis.rank();
  out["rank_expected"] = (d - 1) * (d - 1);
  out["vertex_conditions_rank"] = conditions.rank();
  out["vertex_conditions_rank_expected"] = 2 * d - 1;
  out["schreier_span_matches"] = matches;
  out["pass"] = basis.rank() == (d - 1) * (d - 1) &&
                conditions.rank() == 2 * d - 1 && matches;
  return out;
}

Json closure_section(Pipeline& pipe, int d, int max_depth) {
  Json out;
  out["allowed_patterns"] = big(BigInt(allowed_child_tuple_count(d) * (2 * d)));
  out["level1_index"] = big(closure_level1_index(d));
  Json counts = Json::array();
  bool pass = closure_level1_index(d) == 2;
  for (int n = 1; n <= max_depth; ++n) {
    Json row;
    row["n"] = n;
    BigInt count = count_closure_truncations(d, n);
    bool matches = (count == pipe.computed_index_st(n));
    row["count"] = big(count);
    row["matches_chain"] = matches;
    counts.push_back(std::move(row));
    pass = pass && matches;
  }
  out["counts"] = std::move(counts);
  out["pass"] = pass;
  return out;
}

Json hausdorff_section(int d) {
  Json out;
  Json terms = Json::array();
  for (const auto& t : hausdorff_terms(d, 8)) {
    Json row;
    row["n"] = t.n;
    row["p"] = rat(t.p);
    row["q"] = rat(t.q);
    row["value"] = t.value(d);
    terms.push_back(std::move(row));
  }
  out["terms"] = std::move(terms);
  auto limit = hausdorff_limit(d);
  Json lim;
  lim["p"] = rat(limit.p);
  lim["q"] = rat(limit.q);
  lim["value"] = limit.value(d);
  out["limit"] = std::move(lim);
  out["pass"] = true;
  return out;
}

}  // namespace

Json build_report(int d, const RunOptions& options) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("report: d must be odd and at least 3");
  int max_depth = options.max_depth;
  int policy_depth = depth_policy(d, options.max_domain);
  if (max_depth > policy_depth)
    throw resource_error("requested depth " + std::to_string(max_depth) +
                         " exceeds the chain-degree policy for d = " + std::to_string(d) +
                         " (deepest allowed: " + std::to_string(policy_depth) +
                         "); rerun with --allow-large to opt in");

  Pipeline pipe(d, options.max_domain);
  Json report;
  report["version"] = "1";
  Json params;
  params["d"] = d;
  params["max_depth"] = max_depth;
  params["seed"] = options.seed;
  report["parameters"] = std::move(params);
  report["indices"] = indices_section(pipe, max_depth);
  report["rigid_kernel"] = kernel_section(pipe, d);
  report["nucleus"] = nucleus_section(d);
  report["cycle_space"] = cycle_space_section(d);
  report["closure"] = closure_section(pipe, d, max_depth);
  report["hausdorff"] = hausdorff_section(d);
  Json laws;
  laws["cases"] = 20;
  laws["pass"] = random_law_check(d, options.seed, 20);
  report["random_laws"] = std::move(laws);

  bool pass = report["rigid_kernel"]["pass"].get<bool>() &&
              report["nucleus"]["pass"].get<bool>() &&
              report["cycle_space"]["pass"].get<bool>() &&
              report["closure"]["pass"].get<bool>() &&
              report["hausdorff"]["pass"].get<bool>() &&
              report["random_laws"]["pass"].get<bool>();
  for (const auto& row : report["indices"]) pass = pass && row["pass"].get<bool>();
  report["status"] = pass ? "pass" : "fail";
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  const auto& p = report["parameters"];
  os << "verification report, d = " << p["d"].get<int>()
     << ", max depth " << p["max_depth"].get<int>() << "\n\n";
  os << "level quotient orders:\n";
  for (const auto& row : report["indices"]) {
    os << "  n = " << row["n"].get<int>() << ": order " << row["order"].get<std::string>()
       << " vs closed form " << row["closed_form"].get<std::string>() << ", rank "
       << row["rank_st_mod_triv"].get<int>() << " vs "
       << row["rank_st_mod_triv_expected"].get<int>()
       << (row["pass"].get<bool>() ? "  [pass]" : "  [FAIL]") << "\n";
  }
  const auto& k = report["rigid_kernel"];
  os << "rigid kernel:\n";
  os << "  surjective inverse system: " << (k["surjective"].get<bool>() ? "yes" : "NO") << "\n";
  os << "  rank St(2)/Triv(2) = " << k["rank_st2_mod_triv2"].get<int>() << " (expected "
     << k["rank_st2_mod_triv2_expected"].get<int>() << ")\n";
  os << "  rank (St(2) cap K)/Triv(2) = " << k["rank_st2_cap_kernel"].get<int>()
     << " (expected " << k["rank_st2_cap_kernel_expected"].get<int>() << ")\n";
  os << "  [D : R_1] = " << k["index_rst1"].get<std::string>() << " (closed form "
     << k["index_rst1_closed_form"].get<std::string>() << ")\n";
  os << "  descriptor: " << k["descriptor"].get<std::string>() << "\n";
  os << "  criterion indices: " << k["criterion_lhs"].get<std::string>() << " vs "
     << k["criterion_rhs"].get<std::string>() << " => rigid kernel "
     << (k["criterion_nontrivial_kernel"].get<bool>() ? "nontrivial" : "trivial") << "\n";
  const auto& nuc = report["nucleus"];
  os << "nucleus: size " << nuc["size"].get<std::size_t>() << " (expected "
     << nuc["expected_size"].get<int>() << "):";
  for (const auto& e : nuc["elements"]) os << " " << e.get<std::string>();
  os << "\n";
  const auto& cyc = report["cycle_space"];
  os << "cycle space: rank " << cyc["rank"].get<int>() << " (expected "
     << cyc["rank_expected"].get<int>() << "), vertex conditions rank "
     << cyc["vertex_conditions_rank"].get<int>() << " (expected "
     << cyc["vertex_conditions_rank_expected"].get<int>() << "), span match "
     << (cyc["schreier_span_matches"].get<bool>() ? "yes" : "NO") << "\n";
  const auto& clo = report["closure"];
  os << "closure: allowed size-2 patterns " << clo["allowed_patterns"].get<std::string>()
     << ", level-one index " << clo["level1_index"].get<std::string>() << "\n";
  for (const auto& row : clo["counts"]) {
    os << "  truncation count n = " << row["n"].get<int>() << ": "
       << row["count"].get<std::string>()
       << (row["matches_chain"].get<bool>() ? " (matches chain)" : " (MISMATCH)") << "\n";
  }
  const auto& h = report["hausdorff"];
  os << "hausdorff dimension limit: " << h["limit"]["value"].get<double>() << " = 1 - ("
     << h["limit"]["q"].get<std::string>() << ") log_{2d} 2\n";
  os << "\n" << (report["status"].get<std::string>() == "pass" ? "all checks pass"
                                                               : "CHECKS FAILED")
     << "\n";
  return os.str();
}

bool known_suite(const std::string& suite) {
  return suite == "indices" || suite == "kernel" || suite == "closure" ||
         suite == "nucleus" || suite == "all";
}

namespace {

struct SuiteRunner {
  SuiteResult result;

  void check(bool ok, const std::string& label, const std::string& detail) {
    result.lines.push_back(std::string(ok ? "[pass] " : "[FAIL] ") + label +
                           (ok ? "" : " -- " + detail));
    result.ok = result.ok && ok;
  }
};

template <typename T>
std::string expect_vs_computed(const T& expected, const T& computed) {
  std::ostringstream os;
  os << "expected " << expected << ", computed " << computed;
  return os.str();
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const std::vector<int>& ds,
                      const RunOptions& options) {
  SuiteRunner run;
  for (int d : ds) {
    if (d < 3 || d % 2 == 0)
      throw std::invalid_argument("verify: d must be odd and at least 3");
    std::string tag = "d=" + std::to_string(d) + " ";
    run.check(random_law_check(d, options.seed, 20), tag + "seeded law spot check",
              "evaluation or parity homomorphism law violated on random words");

    Pipeline pipe(d, options.max_domain);
    int max_depth = std::min(depth_policy(d, options.max_domain), d == 3 ? 3 : 2);

    if (suite == "indices" || suite == "all") {
      for (int n = 1; n <= max_depth; ++n) {
        BigInt order = pipe.computed_index_st(n);
        BigInt closed = closed_form_index_st(d, n);
        run.check(order == closed,
                  tag + "order of the level-" + std::to_string(n) + " quotient",
                  "expected 2^{d^{n-1}} d^{(d^n-1)/(d-1)} = " + closed.str() + ", computed " +
                      order.str());
        run.check(pipe.rank_st_mod_triv(n) == rank_st_mod_triv_formula(d, n),
                  tag + "rank of St(" + std::to_string(n) + ")/Triv(" + std::to_string(n) + ")",
                  expect_vs_computed(rank_st_mod_triv_formula(d, n), pipe.rank_st_mod_triv(n)));
      }
      run.check(pipe.computed_index_rst1() == closed_form_index_rst(d, 1),
                tag + "index of the level-one rigid stabilizer",
                "expected 2d 2^{(d-1)^2} = " + closed_form_index_rst(d, 1).str() +
                    ", computed " + pipe.computed_index_rst1().str());
    }
    if (suite == "kernel" || suite == "all") {
      run.check(pipe.surjectivity_check(), tag + "surjective stabilizer inverse system",
                "the root blocks of St(2)/Triv(2) do not span the even-weight subspace");
      run.check(pipe.rank_st2_mod_triv2() == (d - 2) * (d - 1), tag + "rank of St(2)/Triv(2)",
                expect_vs_computed((d - 2) * (d - 1), pipe.rank_st2_mod_triv2()));
      run.check(pipe.rank_st2_cap_K() == (d - 1) * (d - 3),
                tag + "rank of (St(2) cap K)/Triv(2)",
                expect_vs_computed((d - 1) * (d - 3), pipe.rank_st2_cap_K()));
      auto descriptor = pipe.rigid_kernel_report();
      bool structure =
          d == 3 ? descriptor.kind == KernelDescriptor::Kind::finite &&
                       descriptor.rank_st1_mod_triv1 == 2
                 : descriptor.kind == KernelDescriptor::Kind::infinite;
      run.check(structure, tag + "rigid kernel structure: " + descriptor.describe(d),
                "expected the Klein four group for d = 3 and an infinite product otherwise");
      auto criterion = pipe.criterion_check();
      run.check(criterion.lhs == ipow(2, static_cast<unsigned>(2 * d - 1)) &&
                    criterion.rhs == 2 && criterion.nontrivial_kernel,
                tag + "index comparison criterion",
                "expected 2^{2d-1} vs 2, computed " + criterion.lhs.str() + " vs " +
                    criterion.rhs.str());
      run.check(branching_identities_check(d, d == 3 ? 6 : 4),
                tag + "branching identities over the commutator subgroup",
                "an identity family failed as portraits");
    }
    if (suite == "closure" || suite == "all") {
      for (int n = 1; n <= max_depth; ++n) {
        BigInt count = count_closure_truncations(d, n);
        run.check(count == pipe.computed_index_st(n),
                  tag + "closure truncation count at depth " + std::to_string(n),
                  expect_vs_computed(pipe.computed_index_st(n).str(), count.str()));
      }
      run.check(closure_level1_index(d) == 2, tag + "closure level-one index",
                expect_vs_computed(std::string("2"), closure_level1_index(d).str()));
      auto limit = hausdorff_limit(d);
      double direct = 1.0 - std::log(2.0) / (d * std::log(2.0 * d));
      run.check(std::abs(limit.value(d) - direct) < 1e-12, tag + "hausdorff dimension limit",
                "exact coefficients disagree with 1 - (1/d) log_{2d} 2");
      if (d == 3) {
        auto spec = GroupSpec::hanoihedral(3);
        std::vector<ExtElement> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(ExtElement::from_word(spec, {i}, 2));
        auto chain = StabilizerChain::build(gens, 3, 2);
        run.check(exhaustive_closure_equivalence(spec, PatternSet{3}, chain),
                  tag + "exhaustive closure enumeration (648 elements)",
                  "the depth-2 quotient does not match the allowed portraits");
      }
    }
    if (suite == "nucleus" || suite == "all") {
      auto nuc = nucleus(GroupSpec::hanoihedral(d));
      run.check(static_cast<int>(nuc.size()) == d + 1, tag + "nucleus",
                expect_vs_computed(d + 1, static_cast<int>(nuc.size())));
    }
  }
  return run.result;
}

Json patterns_summary(int d, int depth, bool count_only) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("patterns: d must be odd and at least 3");
  Json out;
  out["d"] = d;
  BigInt per_root = allowed_child_tuple_count(d);
  out["allowed_patterns"] = BigInt(per_root * (2 * d)).str();
  if (!count_only) out["allowed_per_root_label"] = per_root.str();
  if (depth > 0) {
    out["depth"] = depth;
    out["truncation_count"] = count_closure_truncations(d, depth).str();
  }
  return out;
}

}  // namespace hh::cli
