#include <stdexcept>
#include "doctest.h"
#include "hanoihedral/bigint.hpp"
#include "hanoihedral/errors.hpp"
#include "hanoihedral/fincon.hpp"
#include "hanoihedral/kernel_pipeline.hpp"

using namespace hh;

namespace {

// slow independent power evaluator
BigInt pow_oracle(BigInt base, BigInt exp) {
  BigInt r = 1;
  for (BigInt k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(closed_form_index_st(3, 1) == 6);
  CHECK(closed_form_index_st(3, 2) == 648);
  CHECK(closed_form_index_st(3, 3) == 816293376);
  CHECK(closed_form_index_st(5, 2) == 500000);
  CHECK(closed_form_index_st(7, 2) == pow_oracle(2, 7) * pow_oracle(7, 8));

  CHECK(closed_form_index_rst(3, 1) == 96);                                 // 2^5 * 3
  CHECK(closed_form_index_rst(3, 2) == pow_oracle(2, 11) * pow_oracle(3, 4));
  CHECK(closed_form_index_rst(5, 1) == pow_oracle(2, 17) * 5);

  CHECK(rank_st_mod_triv_formula(3, 1) == 2);
  CHECK(rank_st_mod_triv_formula(3, 2) == 2);
  CHECK(rank_st_mod_triv_formula(5, 2) == 12);
  CHECK(rank_st_mod_triv_formula(7, 2) == 30);

  CHECK_THROWS_AS((void)closed_form_index_st(4, 1), std::invalid_argument);
}

TEST_CASE("computed level-quotient orders match the closed forms") {
  for (int d : {3, 5}) {
    Pipeline pipe(d);
    for (int n : {1, 2})
      CHECK(pipe.computed_index_st(n) == closed_form_index_st(d, n));
  }
  Pipeline pipe7(7);
  CHECK(pipe7.computed_index_st(2) == closed_form_index_st(7, 2));
}

TEST_CASE("rigid level stabilizer index") {
  Pipeline p3(3);
  CHECK(p3.rank_st1_mod_branch() == 4);  // (d-1)^2
  CHECK(p3.computed_index_rst1() == 96);
  CHECK(p3.computed_index_rst1() == closed_form_index_rst(3, 1));

  Pipeline p5(5);
  CHECK(p5.rank_st1_mod_branch() == 16);
  CHECK(p5.computed_index_rst1() == BigInt(10) * pow_oracle(2, 16));

  Pipeline p7(7);
  CHECK(p7.rank_st1_mod_branch() == 36);
  CHECK(p7.computed_index_rst1() == BigInt(14) * pow_oracle(2, 36));
}

TEST_CASE("surjectivity and kernel ranks") {
  struct Expected {
    int d, rank_a, rank_b;
  };
  for (auto [d, rank_a, rank_b] : {Expected{3, 2, 0}, Expected{5, 12, 8}, Expected{7, 30, 24}}) {
    Pipeline pipe(d);
    CHECK(pipe.surjectivity_check());
    CHECK(pipe.rank_st2_mod_triv2() == rank_a);
    CHECK(pipe.rank_st2_cap_K() == rank_b);
  }
}

TEST_CASE("rigid kernel report") {
  Pipeline p3(3);
  auto k3 = p3.rigid_kernel_report();
  CHECK(k3.kind == KernelDescriptor::Kind::finite);
  CHECK(k3.rank_a == 2);
  CHECK(k3.rank_b == 0);
  CHECK(k3.rank_st1_mod_triv1 == 2);
  CHECK(k3.describe(3) == "finite: Klein four group");

  Pipeline p5(5);
  auto k5 = p5.rigid_kernel_report();
  CHECK(k5.kind == KernelDescriptor::Kind::infinite);
  CHECK(k5.rank_a == 12);
  CHECK(k5.rank_b == 8);

  Pipeline p7(7);
  auto k7 = p7.rigid_kernel_report();
  CHECK(k7.kind == KernelDescriptor::Kind::infinite);
  CHECK(k7.rank_a == 30);
  CHECK(k7.rank_b == 24);
}

TEST_CASE("index comparison criterion") {
  for (int d : {3, 5, 7}) {
    Pipeline pipe(d);
    auto crit = pipe.criterion_check();
    CHECK(crit.lhs == pow_oracle(2, 2 * d - 1));
    CHECK(crit.rhs == 2);
    CHECK(crit.nontrivial_kernel);
  }
}

TEST_CASE("index chain consistency") {
  // [D : R_n] = [D : St(n)] * 2^{rank(St(n)/Triv(n))} * 2^{(d-1)(d-2) d^{n-1}}
  for (int d : {3, 5}) {
    Pipeline pipe(d);
    for (int n : {1, 2, 3}) {
      if (d == 5 && n == 3) continue;  // covered by the acceptance suite
      BigInt lhs = closed_form_index_rst(d, n);
      BigInt rhs = closed_form_index_st(d, n) *
                   pow_oracle(2, pipe.rank_st_mod_triv(n)) *
                   pow_oracle(2, BigInt((d - 1) * (d - 2)) * pow_oracle(d, n - 1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("full report") {
  Pipeline p3(3);
  auto reports = p3.full_report(3);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.pass);
    CHECK(r.order_G_mod_St_n == r.closed_form);
    CHECK(r.surjective);
  }
  CHECK(reports[1].rank_st_mod_triv == 2);

  Pipeline p5(5);
  auto reports5 = p5.full_report(2);
  for (const auto& r : reports5) CHECK(r.pass);

  CHECK_THROWS_AS(Pipeline(4), std::invalid_argument);
}

TEST_CASE("resource policy") {
  Pipeline small(7);  // depth 3 would need domain 399 > 200
  CHECK_THROWS_AS((void)small.chain(3), resource_error);
  Pipeline small3(3);
  CHECK_THROWS_AS((void)small3.chain(5), resource_error);  // domain 363
}
