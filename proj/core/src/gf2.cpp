#include "hanoihedral/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hh::gf2 {

namespace {
constexpr int kBits = 64;
inline std::size_t word_count(int width) {
  return (static_cast<std::size_t>(width) + kBits - 1) / kBits;
}
}  // namespace

Vec2::Vec2(int width) : width_(width), words_(word_count(width), 0) {
  if (width < 0) throw std::invalid_argument("Vec2: negative width");
}

Vec2 Vec2::from_string(std::string_view bits) {
  Vec2 v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(static_cast<int>(i), true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("Vec2: bad bit character");
    }
  }
  return v;
}

bool Vec2::get(int i) const {
  return (words_[i / kBits] >> (i % kBits)) & 1u;
}

void Vec2::set(int i, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (i % kBits);
  if (value)
    words_[i / kBits] |= mask;
  else
    words_[i / kBits] &= ~mask;
}

void Vec2::flip(int i) { words_[i / kBits] ^= std::uint64_t{1} << (i % kBits); }

Vec2& Vec2::operator^=(const Vec2& other) {
  if (width_ != other.width_) throw std::invalid_argument("Vec2: width mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool Vec2::zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int Vec2::weight() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

int Vec2::leading_bit() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w) * kBits + std::countr_zero(words_[w]);
  return -1;
}

bool Vec2::zero_range(int begin, int end) const {
  for (int i = begin; i < end; ++i)
    if (get(i)) return false;
  return true;
}

std::string Vec2::str(int group) const {
  std::string out;
  for (int i = 0; i < width_; ++i) {
    if (group > 0 && i > 0 && i % group == 0) out.push_back(' ');
    out.push_back(get(i) ? '1' : '0');
  }
  return out;
}

std::size_t Vec2Hash::operator()(const Vec2& v) const {
  std::size_t h = static_cast<std::size_t>(v.width_);
  for (auto w : v.words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
  return h;
}

Mat2 Mat2::from_rows(const std::vector<Vec2>& rows) {
  if (rows.empty()) throw std::invalid_argument("Mat2::from_rows: empty");
  Mat2 m(rows.front().width());
  for (const auto& r : rows) m.add_row(r);
  return m;
}

void Mat2::add_row(Vec2 row) {
  if (row.width() != width_) throw std::invalid_argument("Mat2: width mismatch");
  rows_.push_back(std::move(row));
}

int Mat2::rank() const {
  EchelonBasis basis(width_);
  for (const auto& r : rows_) basis.insert(r);
  return basis.rank();
}

Mat2 Mat2::rref() const {
  EchelonBasis basis(width_);
  for (const auto& r : rows_) basis.insert(r);
  return basis.to_mat();
}

bool Mat2::in_span(const Vec2& v) const {
  if (v.width() != width_) throw std::invalid_argument("Mat2: width mismatch");
  EchelonBasis basis(width_);
  for (const auto& r : rows_) basis.insert(r);
  return basis.contains(v);
}

Mat2 Mat2::subspace_with_zero_block(int begin, int end) const {
  if (begin < 0 || end > width_ || begin > end)
    throw std::invalid_argument("Mat2: block out of range");

  // Gaussian elimination with the block columns leading; rref rows whose
  // block part vanished form a basis of the intersection.
  std::vector<int> order;
  order.reserve(width_);
  for (int c = begin; c < end; ++c) order.push_back(c);
  for (int c = 0; c < width_; ++c)
    if (c < begin || c >= end) order.push_back(c);

  std::vector<Vec2> basis;    // pivot rows so far
  std::vector<int> pivots;    // pivot column (in `order` position space)
  auto first_in_order = [&](const Vec2& v) -> int {
    for (std::size_t k = 0; k < order.size(); ++k)
      if (v.get(order[k])) return static_cast<int>(k);
    return -1;
  };

  for (const auto& r0 : rows_) {
    Vec2 r = r0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (r.get(order[pivots[b]])) r ^= basis[b];
    int p = first_in_order(r);
    if (p < 0) continue;
    // back-substitute to keep rows mutually reduced
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (basis[b].get(order[p])) basis[b] ^= r;
    basis.push_back(std::move(r));
    pivots.push_back(p);
  }

  // deterministic row order: by pivot position
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

  Mat2 out(width_);
  for (auto i : idx)
    if (basis[i].zero_range(begin, end)) out.add_row(basis[i]);
  return out;
}

bool span_equal(const Mat2& a, const Mat2& b) {
  if (a.width() != b.width()) throw std::invalid_argument("span_equal: width mismatch");
  for (const auto& r : a.rows_)
    if (!b.in_span(r)) return false;
  for (const auto& r : b.rows_)
    if (!a.in_span(r)) return false;
  return true;
}

Vec2 EchelonBasis::reduce(Vec2 v) const {
  if (v.width() != width_) throw std::invalid_argument("EchelonBasis: width mismatch");
  for (const auto& [pivot, row] : rows_)
    if (v.get(pivot)) v ^= row;
  return v;
}

bool EchelonBasis::insert(Vec2 v) {
  v = reduce(std::move(v));
  int pivot = v.leading_bit();
  if (pivot < 0) return false;
  for (auto& [p, row] : rows_)
    if (row.get(pivot)) row ^= v;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const auto& pr, int p) { return pr.first < p; });
  rows_.insert(pos, {pivot, std::move(v)});
  return true;
}

Mat2 EchelonBasis::to_mat() const {
  Mat2 m(width_);
  for (const auto& [pivot, row] : rows_) m.add_row(row);
  return m;
}

}  // namespace hh::gf2
