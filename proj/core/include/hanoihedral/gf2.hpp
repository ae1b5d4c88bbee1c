#pragma once

// Exact linear algebra over GF(2): bit-packed vectors, row matrices, rank,
// span membership, and intersection with coordinate subspaces.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hh::gf2 {

class Vec2 {
 public:
  Vec2() = default;
  explicit Vec2(int width);
  static Vec2 from_string(std::string_view bits);  // e.g. "0110"

  int width() const { return width_; }
  bool get(int i) const;
  void set(int i, bool value);
  void flip(int i);

  Vec2& operator^=(const Vec2& other);
  friend Vec2 operator^(Vec2 a, const Vec2& b) {
    a ^= b;
    return a;
  }

  bool zero() const;
  int weight() const;
  int leading_bit() const;  // index of lowest set bit, -1 if zero
  bool zero_range(int begin, int end) const;

  bool operator==(const Vec2&) const = default;

  // 0/1 string; a positive group size inserts a space every that many bits
  std::string str(int group = 0) const;

 private:
  int width_ = 0;
  std::vector<std::uint64_t> words_;
  friend struct Vec2Hash;
};

struct Vec2Hash {
  std::size_t operator()(const Vec2& v) const;
};

class Mat2 {
 public:
  explicit Mat2(int width) : width_(width) {}
  static Mat2 from_rows(const std::vector<Vec2>& rows);

  int width() const { return width_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const Vec2& row(int i) const { return rows_[i]; }
  const std::vector<Vec2>& rows() const { return rows_; }
  void add_row(Vec2 row);

  int rank() const;
  Mat2 rref() const;
  bool in_span(const Vec2& v) const;

  // basis of { v in rowspan : v restricted to [begin, end) is zero }
  Mat2 subspace_with_zero_block(int begin, int end) const;

  friend bool span_equal(const Mat2& a, const Mat2& b);

 private:
  int width_ = 0;
  std::vector<Vec2> rows_;
};

// Incremental reduced row-echelon basis.  Rows are kept fully reduced against
// each other and sorted by pivot, so the basis is a canonical function of the
// span regardless of insertion order.
class EchelonBasis {
 public:
  explicit EchelonBasis(int width) : width_(width) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  Vec2 reduce(Vec2 v) const;
  bool contains(const Vec2& v) const { return reduce(v).zero(); }
  bool insert(Vec2 v);  // true if the rank grew
  Mat2 to_mat() const;

 private:
  int width_;
  std::vector<std::pair<int, Vec2>> rows_;  // (pivot, row), sorted by pivot
};

}  // namespace hh::gf2
