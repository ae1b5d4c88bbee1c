#include "hanoihedral/dihedral.hpp"

#include <stdexcept>

#include "hanoihedral/branching.hpp"
#include "hanoihedral/selfsim.hpp"

namespace hh {

Dihedral Dihedral::rotation(int d, int k) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("Dihedral: d must be odd >= 3");
  return Dihedral(d, false, mod_index(k, d));
}

Dihedral Dihedral::mirror(int d, int i) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("Dihedral: d must be odd >= 3");
  return Dihedral(d, true, mod_index(i, d));
}

int Dihedral::apply(int x) const {
  return mirror_ ? mod_index(2 * index_ - x, d_) : mod_index(index_ + x, d_);
}

Dihedral Dihedral::operator*(const Dihedral& other) const {
  if (d_ != other.d_) throw std::invalid_argument("Dihedral: degree mismatch");
  // mu_i mu_j = rho^{2(i-j)}; mu_i rho^j = mu_{i-j/2}; rho^j mu_i = mu_{i+j/2}
  if (mirror_ && other.mirror_)
    return rotation(d_, 2 * (index_ - other.index_));
  if (mirror_ && !other.mirror_)
    return mirror(d_, index_ - half_index(other.index_, d_));
  if (!mirror_ && other.mirror_)
    return mirror(d_, other.index_ + half_index(index_, d_));
  return rotation(d_, index_ + other.index_);
}

Dihedral Dihedral::inverse() const {
  return mirror_ ? *this : rotation(d_, -index_);
}

Perm Dihedral::to_perm() const {
  std::vector<std::uint8_t> img(d_);
  for (int x = 0; x < d_; ++x) img[x] = static_cast<std::uint8_t>(apply(x));
  return Perm::from_images(std::move(img));
}

std::optional<Dihedral> Dihedral::from_perm(const Perm& p) {
  int d = p.degree();
  if (d < 3 || d % 2 == 0) return std::nullopt;
  Dihedral rot = rotation(d, p(0));
  if (rot.to_perm() == p) return rot;
  Dihedral mir = mirror(d, half_index(p(0), d));
  if (mir.to_perm() == p) return mir;
  return std::nullopt;
}

std::string Dihedral::str() const {
  return (mirror_ ? "m" : "r") + std::to_string(index_);
}

Dihedral mirror_product(int d, const std::vector<int>& indices) {
  // mu_{i_m} ... mu_{i_1} = rho^{2s} (m even) or mu_s (m odd) for the
  // alternating sum s = i_m - i_{m-1} + ... taken with a plus on the leftmost
  long long s = 0;
  int sign = 1;
  for (int idx : indices) {
    s += sign * idx;
    sign = -sign;
  }
  if (indices.size() % 2 == 0) return Dihedral::rotation(d, mod_index(2 * s, d));
  return Dihedral::mirror(d, mod_index(s, d));
}

gf2::Vec2 edge_vector(const GroupSpec& spec, const GenWord& w) {
  int d = spec.d();
  auto dec = first_level_decomposition(spec, w);
  gf2::Vec2 out(d * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      // the edge at rotation j with label i is crossed once per a_i landing
      // in coordinate i - j
      const GenWord& section = dec.sections[mod_index(i - j, d)];
      int parity = 0;
      for (int g : section)
        if (g == i) parity ^= 1;
      if (parity) out.set(edge_coordinate(d, j, i), true);
    }
  }
  return out;
}

gf2::Mat2 cycle_space_basis(int d) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("cycle_space_basis: bad d");
  gf2::Mat2 out(d * d);
  // spanning tree: edges (0, i) at the trivial rotation and edges (2i, i) at
  // the mirror through 0; each non-tree edge (j, i), j != 0, i != j/2, closes
  // the four-cycle through rotation 0 and mirror 0
  for (int j = 1; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      if (i == half_index(j, d)) continue;
      gf2::Vec2 v(d * d);
      v.flip(edge_coordinate(d, j, i));
      v.flip(edge_coordinate(d, 0, 0));
      v.flip(edge_coordinate(d, j, half_index(j, d)));
      v.flip(edge_coordinate(d, 0, mod_index(i - half_index(j, d), d)));
      out.add_row(std::move(v));
    }
  }
  return out;
}

gf2::Mat2 vertex_conditions(int d) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("vertex_conditions: bad d");
  gf2::Mat2 out(d * d);
  for (int j = 0; j < d; ++j) {  // rotation vertices: all edges (j, i)
    gf2::Vec2 v(d * d);
    for (int i = 0; i < d; ++i) v.set(edge_coordinate(d, j, i), true);
    out.add_row(std::move(v));
  }
  for (int k = 0; k < d; ++k) {  // mirror vertices: edges (2(i-k), i)
    gf2::Vec2 v(d * d);
    for (int i = 0; i < d; ++i)
      v.set(edge_coordinate(d, mod_index(2 * (i - k), d), i), true);
    out.add_row(std::move(v));
  }
  return out;
}

}  // namespace hh
