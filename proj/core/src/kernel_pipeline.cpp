#include "hanoihedral/kernel_pipeline.hpp"

#include <stdexcept>

#include "hanoihedral/branching.hpp"
#include "hanoihedral/errors.hpp"
#include "hanoihedral/fincon.hpp"
#include "hanoihedral/portrait.hpp"

namespace hh {

BigInt closed_form_index_st(int d, int n) {
  if (d < 3 || d % 2 == 0 || n < 1)
    throw std::invalid_argument("closed_form_index_st: bad arguments");
  BigInt dn = ipow(d, static_cast<unsigned>(n));
  BigInt t = (dn - 1) / (d - 1);
  return ipow(2, static_cast<unsigned>(ipow(d, static_cast<unsigned>(n - 1)).convert_to<unsigned long long>())) *
         ipow(d, t.convert_to<unsigned>());
}

BigInt closed_form_index_rst(int d, int n) {
  if (d < 3 || d % 2 == 0 || n < 1)
    throw std::invalid_argument("closed_form_index_rst: bad arguments");
  BigInt dn = ipow(d, static_cast<unsigned>(n));
  BigInt s = (d - 2) * dn + 2;
  BigInt t = (dn - 1) / (d - 1);
  return ipow(2, s.convert_to<unsigned>()) * ipow(d, t.convert_to<unsigned>());
}

int rank_st_mod_triv_formula(int d, int n) {
  long long dn1 = 1;
  for (int k = 1; k < n; ++k) dn1 *= d;
  return static_cast<int>((d - 3) * (dn1 - 1) + (d - 1));
}

std::string KernelDescriptor::describe(int d) const {
  switch (kind) {
    case Kind::trivial:
      return "trivial";
    case Kind::finite:
      if (rank_st1_mod_triv1 == 2) return "finite: Klein four group";
      return "finite: elementary abelian of rank " + std::to_string(rank_st1_mod_triv1);
    case Kind::infinite:
      return "infinite: A x prod over nonroot vertices of B, rank(A) = " +
             std::to_string(rank_a) + " = (d-1)(d-2), rank(B) = " + std::to_string(rank_b) +
             " = (d-1)(d-3), d = " + std::to_string(d);
  }
  return "";
}

Pipeline::Pipeline(int d, int max_domain)
    : d_(d), max_domain_(max_domain), spec_(GroupSpec::hanoihedral(d)) {}

const StabilizerChain& Pipeline::chain(int n) {
  auto it = chains_.find(n);
  if (it != chains_.end()) return it->second;
  std::size_t domain = tree_vertex_count(d_, n + 1);
  if (domain > static_cast<std::size_t>(max_domain_))
    throw resource_error(
        "chain degree " + std::to_string(domain) + " exceeds the resource policy cap of " +
        std::to_string(max_domain_) + "; rerun with the large-run override to opt in");
  std::vector<ExtElement> gens;
  gens.reserve(d_);
  for (int i = 0; i < d_; ++i)
    gens.push_back(ExtElement::from_word(spec_, GenWord{i}, n));
  auto [pos, inserted] = chains_.emplace(n, StabilizerChain::build(gens, d_, n));
  return pos->second;
}

BigInt Pipeline::computed_index_st(int n) { return chain(n).order(); }

int Pipeline::rank_st_mod_triv(int n) { return chain(n).bottom_rank(); }

gf2::Mat2 Pipeline::st1_level_one_blocks() {
  // project St(1) generators of the depth-2 chain onto their level-one
  // cocycle blocks (coordinates d..d+d^2)
  const auto& c2 = chain(2);
  gf2::Mat2 rows(d_ * d_);
  for (const auto& g : c2.level_stabilizer_gens(1)) {
    gf2::Vec2 row(d_ * d_);
    for (int x = 0; x < d_; ++x) {
      auto block = g.block(static_cast<std::size_t>(x) + 1);
      for (int j = 0; j < d_; ++j)
        if (block.get(j)) row.set(x * d_ + j, true);
    }
    rows.add_row(std::move(row));
  }
  return rows;
}

int Pipeline::rank_st1_mod_branch() { return st1_level_one_blocks().rank(); }

BigInt Pipeline::computed_index_rst1() {
  return BigInt(2 * d_) * ipow(2, static_cast<unsigned>(rank_st1_mod_branch()));
}

bool Pipeline::surjectivity_check() {
  // the root blocks of St(2)/Triv(2) must span the image of St(1) in G/K,
  // the even-weight subspace of width d
  const auto& c2 = chain(2);
  gf2::Mat2 roots(d_);
  for (const auto& row : c2.st_mod_triv_space().rows()) {
    gf2::Vec2 r(d_);
    for (int j = 0; j < d_; ++j)
      if (row.get(j)) r.set(j, true);
    roots.add_row(std::move(r));
  }
  gf2::Mat2 aug_kernel(d_);
  for (int k = 1; k < d_; ++k) {
    gf2::Vec2 v(d_);
    v.set(0, true);
    v.set(k, true);
    aug_kernel.add_row(std::move(v));
  }
  return span_equal(roots, aug_kernel);
}

int Pipeline::rank_st2_mod_triv2() { return rank_st_mod_triv(2); }

int Pipeline::rank_st2_cap_K() {
  // root block zero <=> the element lies in the kernel of exp
  return chain(2).st_mod_triv_space().subspace_with_zero_block(0, d_).rank();
}

KernelDescriptor Pipeline::rigid_kernel_report() {
  if (!surjectivity_check())
    throw std::runtime_error(
        "rigid_kernel_report: the stabilizer inverse system is not surjective; "
        "the direct-product description does not apply");
  KernelDescriptor out;
  out.rank_a = rank_st2_mod_triv2();
  out.rank_b = rank_st2_cap_K();
  out.rank_st1_mod_triv1 = rank_st_mod_triv(1);
  if (out.rank_a == 0)
    out.kind = KernelDescriptor::Kind::trivial;
  else if (out.rank_b == 0)
    out.kind = KernelDescriptor::Kind::finite;
  else
    out.kind = KernelDescriptor::Kind::infinite;
  return out;
}

Pipeline::CriterionResult Pipeline::criterion_check() {
  CriterionResult out{0, 0, false};
  out.lhs = ipow(2, static_cast<unsigned>(d_ * d_ - rank_st1_mod_branch()));
  out.rhs = closure_level1_index(d_);
  out.nontrivial_kernel = (out.lhs != out.rhs);
  return out;
}

std::vector<IndexReport> Pipeline::full_report(int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("full_report: max_depth must be positive");
  bool surjective = surjectivity_check();
  KernelDescriptor descriptor = rigid_kernel_report();
  int cap_k = rank_st2_cap_K();
  int st1_branch = rank_st1_mod_branch();

  std::vector<IndexReport> out;
  for (int n = 1; n <= max_depth; ++n) {
    IndexReport r;
    r.d = d_;
    r.n = n;
    r.order_G_mod_St_n = computed_index_st(n);
    r.closed_form = closed_form_index_st(d_, n);
    r.rank_st_mod_triv = rank_st_mod_triv(n);
    r.rank_st_mod_triv_expected = rank_st_mod_triv_formula(d_, n);
    r.rank_st2_cap_K = cap_k;
    r.rank_st1_mod_branch = st1_branch;
    r.surjective = surjective;
    r.kernel_descriptor = descriptor;
    r.pass = (r.order_G_mod_St_n == r.closed_form) &&
             (r.rank_st_mod_triv == r.rank_st_mod_triv_expected) && surjective &&
             (st1_branch == (d_ - 1) * (d_ - 1)) &&
             (cap_k == (d_ - 1) * (d_ - 3)) &&
             (count_closure_truncations(d_, n) == r.closed_form);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hh
