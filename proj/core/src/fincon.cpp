#include "hanoihedral/fincon.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hanoihedral/branching.hpp"

namespace hh {

std::optional<DihedralShape> dihedral_shape(const Perm& p) {
  int d = p.degree();
  int k = p(0);
  bool rot = true;
  for (int x = 0; x < d; ++x)
    if (p(x) != mod_index(x + k, d)) {
      rot = false;
      break;
    }
  if (rot) return DihedralShape{false, k};
  int i = half_index(k, d);  // 2i - 0 = k
  for (int x = 0; x < d; ++x)
    if (p(x) != mod_index(2 * i - x, d)) return std::nullopt;
  return DihedralShape{true, i};
}

bool PatternSet::allowed(const Perm& root, const std::vector<Perm>& children) const {
  if (static_cast<int>(children.size()) != d)
    throw std::invalid_argument("PatternSet: need one child label per letter");
  auto mirror_bit = [&](const Perm& p) {
    auto shape = dihedral_shape(p);
    if (!shape) throw std::invalid_argument("PatternSet: label is not dihedral");
    return shape->mirror ? 1 : 0;
  };
  int mirrors = mirror_bit(root);
  for (const auto& c : children) mirrors += mirror_bit(c);
  return mirrors % 2 == parity;
}

bool portrait_in_closure(const PatternSet& ps, const Portrait& p) {
  if (p.d() != ps.d) throw std::invalid_argument("portrait_in_closure: alphabet mismatch");
  // validate all labels first so non-dihedral input is an error, not "false"
  for (std::size_t i = 0; i < p.label_count(); ++i)
    if (!dihedral_shape(p.label(i)))
      throw std::invalid_argument("portrait_in_closure: label outside the dihedral group");
  std::size_t inner = tree_vertex_count(p.d(), p.depth() - 1);
  for (std::size_t u = 0; u < inner; ++u) {
    std::vector<Perm> children;
    children.reserve(ps.d);
    for (int x = 0; x < ps.d; ++x)
      children.push_back(p.label(u * ps.d + x + 1));
    if (!ps.allowed(p.label(u), children)) return false;
  }
  return true;
}

BigInt allowed_child_tuple_count(int d) {
  // count d-tuples with an even number of mirrors among 2d dihedral labels
  BigInt even = 1, odd = 0;
  for (int i = 0; i < d; ++i) {
    BigInt e = even * d + odd * d;  // append a rotation to even / a mirror to odd
    BigInt o = odd * d + even * d;
    even = e;
    odd = o;
  }
  return even;
}

BigInt count_closure_truncations(int d, int n) {
  if (d < 3 || d % 2 == 0 || n < 1)
    throw std::invalid_argument("count_closure_truncations: bad arguments");
  BigInt inner_vertices = (ipow(d, static_cast<unsigned>(n - 1)) - 1) / (d - 1);
  return BigInt(2 * d) *
         ipow(allowed_child_tuple_count(d), inner_vertices.convert_to<unsigned>());
}

BigInt closure_level1_index(int d) {
  return ipow(2 * d, static_cast<unsigned>(d)) / allowed_child_tuple_count(d);
}

double HausdorffTerm::value(int d) const {
  double logratio = std::log(2.0) / std::log(2.0 * d);
  return p.convert_to<double>() - q.convert_to<double>() * logratio;
}

std::vector<HausdorffTerm> hausdorff_terms(int d, int count) {
  if (count < 1) throw std::invalid_argument("hausdorff_terms: count must be positive");
  std::vector<HausdorffTerm> out;
  for (int n = 1; n <= count; ++n) {
    HausdorffTerm t;
    t.n = n;
    t.p = 1;
    t.q = BigRat(ipow(d, static_cast<unsigned>(n - 1)) - 1,
                 ipow(d, static_cast<unsigned>(n)) - 1);
    out.push_back(std::move(t));
  }
  return out;
}

HausdorffTerm hausdorff_limit(int d) {
  HausdorffTerm t;
  t.n = 0;
  t.p = 1;
  t.q = BigRat(1, d);
  return t;
}

bool exhaustive_closure_equivalence(const GroupSpec& spec, const PatternSet& ps,
                                    const StabilizerChain& depth2_chain) {
  int d = spec.d();
  if (depth2_chain.depth() != 2)
    throw std::invalid_argument("exhaustive_closure_equivalence: need a depth-2 chain");

  // portraits of all elements of the level quotient, as canonical strings
  std::set<std::string> group_portraits;
  for (const auto& e : depth2_chain.permutation_image_elements()) {
    Portrait p(d, 2);
    // label(u)(x) = last letter of the image of ux
    for (std::size_t u = 0; u < p.label_count(); ++u) {
      std::vector<std::uint8_t> img(d);
      for (int x = 0; x < d; ++x) {
        std::size_t child = u * d + x + 1;
        img[x] = static_cast<std::uint8_t>((e.image(child) - 1) % d);
      }
      p.set_label(u, Perm::from_images(std::move(img)));
    }
    group_portraits.insert(p.to_text());
  }

  // all dihedral-labelled depth-2 portraits passing the pattern predicate
  std::vector<Perm> labels;
  for (int k = 0; k < d; ++k) {
    std::vector<std::uint8_t> rot(d), mir(d);
    for (int x = 0; x < d; ++x) {
      rot[x] = static_cast<std::uint8_t>(mod_index(x + k, d));
      mir[x] = static_cast<std::uint8_t>(mod_index(2 * k - x, d));
    }
    labels.push_back(Perm::from_images(std::move(rot)));
    labels.push_back(Perm::from_images(std::move(mir)));
  }
  std::set<std::string> allowed_portraits;
  std::size_t label_count = tree_vertex_count(d, 2);
  std::vector<std::size_t> choice(label_count, 0);
  while (true) {
    Portrait p(d, 2);
    for (std::size_t u = 0; u < label_count; ++u) p.set_label(u, labels[choice[u]]);
    if (portrait_in_closure(ps, p)) allowed_portraits.insert(p.to_text());
    std::size_t pos = 0;
    while (pos < label_count && ++choice[pos] == labels.size()) choice[pos++] = 0;
    if (pos == label_count) break;
  }

  return group_portraits == allowed_portraits;
}

}  // namespace hh
