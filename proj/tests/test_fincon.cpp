#include <stdexcept>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hanoihedral/branching.hpp"
#include "hanoihedral/dihedral.hpp"
#include "hanoihedral/ext_element.hpp"
#include "hanoihedral/fincon.hpp"
#include "hanoihedral/kernel_pipeline.hpp"
#include "hanoihedral/selfsim.hpp"
#include "hanoihedral/stabilizer_chain.hpp"

using namespace hh;

namespace {

std::vector<ExtElement> generator_elements(const GroupSpec& spec, int depth) {
  std::vector<ExtElement> out;
  for (int i = 0; i < spec.d(); ++i)
    out.push_back(ExtElement::from_word(spec, {i}, depth));
  return out;
}

}  // namespace

TEST_CASE("pattern membership") {
  PatternSet ps{3};
  Perm id = Perm::identity(3);
  std::vector<Perm> ids(3, id);
  CHECK(ps.allowed(id, ids));

  // exactly one mirror is forbidden
  Perm m1 = Dihedral::mirror(3, 1).to_perm();
  CHECK_FALSE(ps.allowed(m1, ids));

  // two mirrors are fine
  auto children = ids;
  children[0] = Dihedral::mirror(3, 0).to_perm();
  CHECK(ps.allowed(m1, children));
}

TEST_CASE("pattern tuples form a group") {
  // the even-mirror condition is a homomorphism to Z/2, so allowed tuples are
  // closed under pointwise products and inverses
  std::mt19937_64 rng(9090);
  int d = 5;
  PatternSet ps{d};
  auto random_label = [&]() {
    return (rng() & 1) ? Dihedral::mirror(d, static_cast<int>(rng() % d)).to_perm()
                       : Dihedral::rotation(d, static_cast<int>(rng() % d)).to_perm();
  };
  for (int trial = 0; trial < 200; ++trial) {
    Perm r1 = random_label(), r2 = random_label();
    std::vector<Perm> c1, c2;
    for (int x = 0; x < d; ++x) {
      c1.push_back(random_label());
      c2.push_back(random_label());
    }
    if (!ps.allowed(r1, c1) || !ps.allowed(r2, c2)) continue;
    std::vector<Perm> prod, inv;
    for (int x = 0; x < d; ++x) {
      prod.push_back(c1[x] * c2[x]);
      inv.push_back(c1[x].inverse());
    }
    CHECK(ps.allowed(r1 * r2, prod));
    CHECK(ps.allowed(r1.inverse(), inv));
  }
}

TEST_CASE("portrait closure membership") {
  auto spec = GroupSpec::hanoihedral(3);
  PatternSet ps{3};
  CHECK(portrait_in_closure(ps, Portrait(3, 2)));

  // portraits of group words always lie in the closure
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    GenWord w(rng() % 9);
    for (auto& g : w) g = static_cast<int>(rng() % 3);
    CHECK(portrait_in_closure(ps, evaluate(spec, w, 3)));
  }

  // a single mirror at the root violates the root pattern
  Portrait bad(3, 2);
  bad.set_label(Vertex{}, Dihedral::mirror(3, 0).to_perm());
  CHECK_FALSE(portrait_in_closure(ps, bad));

  // out-of-group labels are an error, not "false"
  Portrait alien(4, 2);
  PatternSet ps4{4};
  std::vector<std::uint8_t> img{1, 0, 3, 2};
  alien.set_label(Vertex{}, Perm::from_images(img));
  CHECK_THROWS_AS((void)portrait_in_closure(ps4, alien), std::invalid_argument);
}

TEST_CASE("closure counting") {
  CHECK(allowed_child_tuple_count(3) == 108);  // 6^3 / 2
  CHECK(count_closure_truncations(3, 2) == 648);
  CHECK(count_closure_truncations(3, 3) == 816293376);
  CHECK(count_closure_truncations(5, 2) == 500000);

  // matches the chain order wherever both exist
  for (int d : {3, 5}) {
    Pipeline pipe(d);
    for (int n : {1, 2})
      CHECK(count_closure_truncations(d, n) == pipe.computed_index_st(n));
  }

  for (int d : {3, 5, 7}) CHECK(closure_level1_index(d) == 2);
}

TEST_CASE("hausdorff terms") {
  auto terms3 = hausdorff_terms(3, 12);
  CHECK(terms3[0].p == 1);
  CHECK(terms3[0].q == 0);
  CHECK(terms3[0].value(3) == doctest::Approx(1.0).epsilon(1e-15));

  auto limit3 = hausdorff_limit(3);
  double expected3 = 1.0 - std::log(2.0) / (3.0 * std::log(6.0));
  CHECK(std::abs(limit3.value(3) - expected3) < 1e-12);
  CHECK(std::abs(limit3.value(3) - 0.871050) < 1e-5);

  auto limit5 = hausdorff_limit(5);
  double expected5 = 1.0 - std::log(2.0) / (5.0 * std::log(10.0));
  CHECK(std::abs(limit5.value(5) - expected5) < 1e-12);
  CHECK(std::abs(limit5.value(5) - 0.939794) < 1e-5);

  // strictly decreasing terms bounded below by the limit, with the stated gap
  for (int d : {3, 5}) {
    auto terms = hausdorff_terms(d, 12);
    auto limit = hausdorff_limit(d);
    for (std::size_t i = 1; i < terms.size(); ++i)
      CHECK(terms[i].value(d) < terms[i - 1].value(d));
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CHECK(terms[i].value(d) > limit.value(d));
      CHECK(terms[i].value(d) - limit.value(d) <
            1.0 / std::pow(static_cast<double>(d), static_cast<double>(terms[i].n - 1)));
    }
  }
}

TEST_CASE("exhaustive closure equivalence at d = 3") {
  auto spec = GroupSpec::hanoihedral(3);
  auto chain = StabilizerChain::build(generator_elements(spec, 2), 3, 2);
  CHECK(exhaustive_closure_equivalence(spec, PatternSet{3}, chain));
  // falsifiability: the odd-parity predicate cannot reproduce the group
  CHECK_FALSE(exhaustive_closure_equivalence(spec, PatternSet{3, 1}, chain));
}

TEST_CASE("dihedral shape recognition") {
  for (int d : {3, 5, 7}) {
    for (int k = 0; k < d; ++k) {
      auto rot = dihedral_shape(Dihedral::rotation(d, k).to_perm());
      REQUIRE(rot.has_value());
      CHECK_FALSE(rot->mirror);
      CHECK(rot->index == k);
      auto mir = dihedral_shape(Dihedral::mirror(d, k).to_perm());
      REQUIRE(mir.has_value());
      CHECK(mir->mirror);
      CHECK(mir->index == k);
    }
  }
  std::vector<std::uint8_t> img{1, 0, 3, 2, 4};
  CHECK_FALSE(dihedral_shape(Perm::from_images(img)).has_value());
}
