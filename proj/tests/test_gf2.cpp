#include <random>

#include "doctest.h"
#include "hanoihedral/gf2.hpp"

using namespace hh::gf2;

TEST_CASE("rank basics") {
  Mat2 zero(3);
  zero.add_row(Vec2(3));
  CHECK(zero.rank() == 0);

  Mat2 id(4);
  for (int i = 0; i < 4; ++i) {
    Vec2 v(4);
    v.set(i, true);
    id.add_row(v);
  }
  CHECK(id.rank() == 4);

  // third row is the sum of the first two
  Mat2 m = Mat2::from_rows({Vec2::from_string("110"), Vec2::from_string("011"),
                            Vec2::from_string("101")});
  CHECK(m.rank() == 2);
}

TEST_CASE("span membership") {
  Mat2 m = Mat2::from_rows({Vec2::from_string("110"), Vec2::from_string("011")});
  CHECK(m.in_span(Vec2(3)));
  CHECK(m.in_span(Vec2::from_string("101")));
  Mat2 single = Mat2::from_rows({Vec2::from_string("10")});
  CHECK_FALSE(single.in_span(Vec2::from_string("01")));
}

TEST_CASE("subspace with zero block") {
  Mat2 id(4);
  for (int i = 0; i < 4; ++i) {
    Vec2 v(4);
    v.set(i, true);
    id.add_row(v);
  }
  Mat2 sub = id.subspace_with_zero_block(0, 2);
  CHECK(sub.rank() == 2);
  for (const auto& row : sub.rows()) CHECK(row.zero_range(0, 2));

  Mat2 m = Mat2::from_rows({Vec2::from_string("1100"), Vec2::from_string("0011")});
  Mat2 s2 = m.subspace_with_zero_block(0, 2);
  CHECK(s2.rank() == 1);
  CHECK(s2.row(0) == Vec2::from_string("0011"));

  // rows independent on the block leave nothing behind
  Mat2 m3 = Mat2::from_rows({Vec2::from_string("1010"), Vec2::from_string("0110")});
  CHECK(m3.subspace_with_zero_block(0, 2).rank() == 0);
}

TEST_CASE("span equality") {
  Mat2 a = Mat2::from_rows({Vec2::from_string("110"), Vec2::from_string("011")});
  Mat2 b = Mat2::from_rows({Vec2::from_string("011"), Vec2::from_string("110")});
  CHECK(span_equal(a, b));
  Mat2 c = Mat2::from_rows({Vec2::from_string("110"), Vec2::from_string("101")});
  CHECK(span_equal(a, c));  // both are the even-weight subspace of width 3
  Mat2 x = Mat2::from_rows({Vec2::from_string("10")});
  Mat2 y = Mat2::from_rows({Vec2::from_string("01")});
  CHECK_FALSE(span_equal(x, y));
}

TEST_CASE("rref invariants on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    int width = 1 + static_cast<int>(rng() % 40);
    int nrows = 1 + static_cast<int>(rng() % 20);
    Mat2 m(width);
    for (int r = 0; r < nrows; ++r) {
      Vec2 v(width);
      for (int i = 0; i < width; ++i)
        if (rng() & 1) v.set(i, true);
      m.add_row(v);
    }
    Mat2 r = m.rref();
    CHECK(r.rank() == m.rank());
    CHECK(r.rref().rows() == r.rows());  // idempotent
    CHECK(span_equal(m, r));

    // rank invariant under adding one row to another
    if (m.row_count() >= 2) {
      Mat2 m2(width);
      m2.add_row(m.row(0) ^ m.row(1));
      for (int i = 1; i < m.row_count(); ++i) m2.add_row(m.row(i));
      CHECK(m2.rank() == m.rank());
    }

    // block-intersection rank identity: rank(sub) + rank(projection) = rank
    int cut = width / 2;
    Mat2 sub = m.subspace_with_zero_block(0, cut);
    Mat2 proj(cut == 0 ? 1 : cut);
    for (int i = 0; i < m.row_count(); ++i) {
      Vec2 p(cut == 0 ? 1 : cut);
      for (int c = 0; c < cut; ++c)
        if (m.row(i).get(c)) p.set(c, true);
      proj.add_row(p);
    }
    CHECK(sub.rank() + proj.rank() == m.rank());
    for (const auto& row : sub.rows()) CHECK(m.in_span(row));
  }
}

TEST_CASE("vector formatting") {
  Vec2 v = Vec2::from_string("101100");
  CHECK(v.str() == "101100");
  CHECK(v.str(3) == "101 100");
  CHECK(v.weight() == 3);
  CHECK(v.leading_bit() == 0);
}
