#pragma once

// Rigid-kernel computations for the mirror family: level-quotient indices
// against their closed forms, stabilizer-mod-kernel ranks, the surjectivity
// test for the inverse system, the kernel structure report, and the
// index-comparison triviality criterion.

#include <map>
#include <string>
#include <vector>

#include "hanoihedral/bigint.hpp"
#include "hanoihedral/gf2.hpp"
#include "hanoihedral/group_spec.hpp"
#include "hanoihedral/stabilizer_chain.hpp"

namespace hh {

BigInt closed_form_index_st(int d, int n);   // 2^{d^{n-1}} d^{(d^n-1)/(d-1)}
BigInt closed_form_index_rst(int d, int n);  // 2^{(d-2)d^n+2} d^{(d^n-1)/(d-1)}
int rank_st_mod_triv_formula(int d, int n);  // (d-3)(d^{n-1}-1) + (d-1)

struct KernelDescriptor {
  enum class Kind { trivial, finite, infinite };
  Kind kind;
  int rank_a = 0;               // rank of St(2)/Triv(2)
  int rank_b = 0;               // rank of (St(2) cap K)/Triv(2)
  int rank_st1_mod_triv1 = 0;   // rank of St(1)/Triv(1), the finite case group
  std::string describe(int d) const;
};

struct IndexReport {
  int d = 0;
  int n = 0;
  BigInt order_G_mod_St_n;
  BigInt closed_form;
  int rank_st_mod_triv = 0;
  int rank_st_mod_triv_expected = 0;
  int rank_st2_cap_K = 0;
  int rank_st1_mod_branch = 0;
  bool surjective = false;
  KernelDescriptor kernel_descriptor;
  bool pass = false;
};

// Chains for one alphabet size, built on demand and cached.  The domain
// policy keeps default runs at desk scale; pass a larger max_domain to opt
// into stretch runs.
class Pipeline {
 public:
  static constexpr int kDefaultMaxDomain = 200;

  explicit Pipeline(int d, int max_domain = kDefaultMaxDomain);

  int d() const { return d_; }
  const GroupSpec& spec() const { return spec_; }
  const StabilizerChain& chain(int n);

  BigInt computed_index_st(int n);  // chain order
  int rank_st_mod_triv(int n);      // bottom rank of the depth-n chain

  // rank of the span of the level-one cocycle blocks of the St(1) generators:
  // the dimension of St(1) modulo the level-one branching copy
  int rank_st1_mod_branch();
  BigInt computed_index_rst1();  // 2d * 2^{rank_st1_mod_branch}

  bool surjectivity_check();
  int rank_st2_mod_triv2();
  int rank_st2_cap_K();
  KernelDescriptor rigid_kernel_report();

  struct CriterionResult {
    BigInt lhs;  // [X*G : St(1)], computed as 2^{d^2 - rank_st1_mod_branch}
    BigInt rhs;  // level-one index of the closure
    bool nontrivial_kernel;
  };
  CriterionResult criterion_check();

  std::vector<IndexReport> full_report(int max_depth);

 private:
  gf2::Mat2 st1_level_one_blocks();

  int d_;
  int max_domain_;
  GroupSpec spec_;
  std::map<int, StabilizerChain> chains_;
};

}  // namespace hh
