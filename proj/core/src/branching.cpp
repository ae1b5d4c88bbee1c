#include "hanoihedral/branching.hpp"

#include <stdexcept>

#include "hanoihedral/portrait.hpp"
#include "hanoihedral/selfsim.hpp"

namespace hh {

int mod_index(long long v, int d) {
  long long r = v % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

int inverse_of_two(int d) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("inverse_of_two: d must be odd");
  return (d + 1) / 2;
}

int half_index(long long v, int d) { return mod_index(v * inverse_of_two(d), d); }

gf2::Vec2 exp_vector(int d, const GenWord& w) {
  gf2::Vec2 v(d);
  for (int g : w) {
    if (g < 0 || g >= d) throw std::invalid_argument("exp_vector: letter out of range");
    v.flip(g);
  }
  return v;
}

int aug_bit(const GenWord& w) { return static_cast<int>(w.size() % 2); }

bool in_st1_criterion(const GroupSpec& spec, const GenWord& w) {
  if (w.size() % 2 != 0) return false;
  // alternating sum from the rightmost letter
  long long odd = 0, even = 0;
  std::size_t m = w.size();
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t j = m - t;  // 1-based position counted from the right
    if (j % 2 == 1)
      odd += w[t];
    else
      even += w[t];
  }
  return mod_index(odd - even, spec.d()) == 0;
}

GenWord st1_basic_word(int d, int j, int i) {
  if (mod_index(j, d) == 0 || mod_index(i, d) == 0)
    throw std::invalid_argument("st1_basic_word: indices must be nonzero mod d");
  return {mod_index(j, d), mod_index(j + i, d), mod_index(i, d), 0};
}

std::vector<GenWord> st1_generator_words(int d) {
  std::vector<GenWord> out;
  out.reserve(static_cast<std::size_t>(d - 1) * (d - 1));
  for (int j = 1; j < d; ++j)
    for (int i = 1; i < d; ++i) out.push_back(st1_basic_word(d, j, i));
  return out;
}

std::vector<GenWord> st1_schreier_generator_words(int d) {
  // coset transversal of the root-permutation map onto the dihedral group:
  // empty word for the identity, a_k for the mirror mu_k, a_k a_0 for the
  // rotation by 2k
  auto transversal_of = [&](const Perm& root) -> GenWord {
    if (root.is_identity()) return {};
    // mirror mu_i satisfies root(x) = 2i - x; rotation satisfies root(x) = x + k
    int maybe_rot = mod_index(root(0), d);
    bool is_rot = true;
    for (int x = 0; x < d; ++x)
      if (root(x) != mod_index(x + maybe_rot, d)) {
        is_rot = false;
        break;
      }
    if (is_rot) return {half_index(maybe_rot, d), 0};
    return {half_index(root(0), d)};
  };

  GroupSpec spec = GroupSpec::hanoihedral(d);
  std::vector<GenWord> reps;
  reps.push_back({});
  for (int k = 0; k < d; ++k) reps.push_back({k});             // mirrors
  for (int k = 1; k < d; ++k) reps.push_back({k, 0});          // nontrivial rotations

  std::vector<GenWord> out;
  for (const auto& rep : reps) {
    for (int i = 0; i < d; ++i) {
      GenWord w = rep;
      w.insert(w.begin(), i);  // a_i * rep
      GenWord back = word_inverse(spec, transversal_of(root_perm(spec, w)));
      GenWord gen = free_reduce(spec, word_concat(w, back));
      if (!gen.empty()) out.push_back(std::move(gen));
    }
  }
  return out;
}

std::vector<GenWord> st2_mod_branch_generator_words(int d) {
  GroupSpec spec = GroupSpec::hanoihedral(d);
  std::vector<GenWord> out;
  for (int j = 1; j < d; ++j) {
    for (int i = 1; i < d; ++i) {
      if (mod_index(i + j, d) == 0) continue;  // i != -j
      GenWord w = st1_basic_word(d, j, i);
      auto factor = [&](long long a, long long b) {
        return GenWord{half_index(a, d), 0, half_index(b, d), 0};
      };
      w = word_concat(std::move(w), factor(j, -j));
      if (mod_index(j - i, d) != 0) w = word_concat(std::move(w), factor(j - i, i - j));
      w = word_concat(std::move(w), factor(-i, i));
      out.push_back(free_reduce(spec, w));
    }
  }
  return out;
}

GenWord connector_word(int d, int l, int r) {
  l = mod_index(l, d);
  r = mod_index(r, d);
  auto basic = [&](long long j, long long i) { return st1_basic_word(d, mod_index(j, d), mod_index(i, d)); };
  if (r == 0) {
    if (l == 0) return basic(1, 2);
    return basic(half_index(l, d), half_index(-l, d));
  }
  if (l == 0) {
    // merged word contributes a_r a_0 at the root coordinate; a second factor
    // with a bare a_0 there strips the tail
    return word_concat(basic(half_index(r, d), half_index(r, d)), basic(1, 2));
  }
  if (l == r) {
    for (int i = 1; i < d; ++i)
      if (mod_index(i + r, d) != 0) return basic(r, i);
  }
  if (l == mod_index(-r, d)) {
    for (int j = 1; j < d; ++j)
      if (mod_index(j + r, d) != 0) return basic(j, r);
  }
  return basic(half_index(r + l, d), half_index(r - l, d));
}

namespace {

GenWord square(const GenWord& w) { return word_concat(w, w); }

// conjugate a coordinate-l supported word by a_m, moving it to coordinate
// 2m - l while leaving the section untouched (a_m has no section at l != m)
GenWord move_coordinate(int d, const GenWord& w, int from, int to) {
  if (from == to) return w;
  int m = half_index(from + to, d);
  GenWord out{m};
  out = word_concat(std::move(out), w);
  out.push_back(m);
  return out;
}

}  // namespace

GenWord delta_commutator_word(int d, int l, int p, int q) {
  GroupSpec spec = GroupSpec::hanoihedral(d);
  l = mod_index(l, d);
  p = mod_index(p, d);
  q = mod_index(q, d);
  if (p == q) throw std::invalid_argument("delta_commutator_word: p == q");

  if (p == 0)  // [a_0, a_q] = [a_q, a_0]^{-1}
    return free_reduce(spec, word_inverse(spec, delta_commutator_word(d, l, q, 0)));

  if (q == 0) {
    // (a_{p/2} a_p a_{p/2} a_0)^2 is supported at coordinate 0 with section
    // [a_p, a_0]
    GenWord base = square(st1_basic_word(d, half_index(p, d), half_index(p, d)));
    return free_reduce(spec, move_coordinate(d, base, 0, l));
  }

  if (mod_index(p + q, d) == 0) {
    // (a_p a_0 a_{-p} a_0)^2 is supported at coordinate p with section
    // [a_p, a_{-p}]
    GenWord base = square(st1_basic_word(d, p, mod_index(-p, d)));
    return free_reduce(spec, move_coordinate(d, base, p, l));
  }

  // generic coordinates: assemble from
  //   [a_p, a_q] = (a_p [a_p,a_0]^{-1} a_p) ([a_p a_0, a_q a_0]) [a_q, a_0]^{-1}
  // where [a_p a_0, a_q a_0] sits at coordinate 0 as the commutator of the
  // merged St(1) words
  GenWord k_p = delta_commutator_word(d, l, p, 0);
  GenWord k_q = delta_commutator_word(d, l, q, 0);
  GenWord c_pq = word_commutator(
      GroupSpec::hanoihedral(d),
      st1_basic_word(d, half_index(p, d), half_index(p, d)),
      st1_basic_word(d, half_index(q, d), half_index(q, d)));
  c_pq = move_coordinate(d, c_pq, 0, l);

  GenWord v = connector_word(d, l, p);
  GenWord out = word_conjugate(spec, v, word_inverse(spec, k_p));
  out = word_concat(std::move(out), c_pq);
  out = word_concat(std::move(out), word_inverse(spec, k_q));
  return free_reduce(spec, out);
}

GenWord triv_witness_word(int d, int n) {
  if (n < 1) throw std::invalid_argument("triv_witness_word: n must be positive");
  GroupSpec spec = GroupSpec::hanoihedral(d);
  // delta_commutator_word(1,1,2) lies in St(1) with kernel sections; raising
  // to the exponent 2d of the dihedral group kills every section root, which
  // pushes the element one level deeper into the stabilizer while keeping all
  // section parities zero
  GenWord w = delta_commutator_word(d, 1, 1, 2);
  for (int level = 1; level < n; ++level) {
    GenWord power;
    for (int k = 0; k < 2 * d; ++k) power = word_concat(std::move(power), w);
    w = free_reduce(spec, power);
  }
  return w;
}

bool branching_identities_check(int d, int depth, const BranchingCheckOptions& options) {
  if (depth < 2) throw std::invalid_argument("branching_identities_check: depth >= 2");
  GroupSpec spec = GroupSpec::hanoihedral(d);
  int off = options.index_offset;

  auto delta_portrait = [&](int x, const Portrait& inner) {
    return Portrait::delta(x, inner);
  };
  auto gen_portrait = [&](int g, int dep) { return evaluate(spec, GenWord{g}, dep); };

  // family 1: first-level decomposition of a_j a_{j+i} a_i a_0 into
  // coordinates j, j-i, -i, 0
  for (int j = 1; j < d; ++j) {
    for (int i = 1; i < d; ++i) {
      GenWord w = st1_basic_word(d, j, i);
      Portrait lhs = evaluate(spec, w, depth);
      Portrait rhs = delta_portrait(mod_index(j + off, d), gen_portrait(j, depth - 1)) *
                     delta_portrait(mod_index(j - i, d), gen_portrait(mod_index(j + i, d), depth - 1)) *
                     delta_portrait(mod_index(-i, d), gen_portrait(i, depth - 1)) *
                     delta_portrait(0, gen_portrait(0, depth - 1));
      if (!(lhs == rhs)) return false;
    }
  }

  // family 2: the conjugator a_{(l+m)/2} a_m a_{(l+m)/2} decomposes with root
  // mu_l and sections a_m at l, a_{(l+m)/2} at (l+m)/2 and (3l-m)/2
  for (int l = 0; l < d; ++l) {
    for (int m = 0; m < d; ++m) {
      if (l == m) continue;
      int h = half_index(l + m, d);
      GenWord w{h, m, h};
      Portrait lhs = evaluate(spec, w, depth);
      Portrait rhs(spec.d(), depth);
      rhs.set_label(0, spec.generator(l).root);  // root mu_l
      rhs = rhs * delta_portrait(h, gen_portrait(h, depth - 1)) *
            delta_portrait(mod_index(l + off, d), gen_portrait(m, depth - 1)) *
            delta_portrait(half_index(3LL * l - m, d), gen_portrait(h, depth - 1));
      if (!(lhs == rhs)) return false;
    }
  }

  // family 3: closed-form single-coordinate commutator words, all coordinates
  for (int l = 0; l < d; ++l) {
    for (int p = 0; p < d; ++p) {
      for (int q = 0; q < d; ++q) {
        if (p == q) continue;
        GenWord w = delta_commutator_word(d, l, p, q);
        if (!exp_vector(d, w).zero()) return false;
        GenWord commutator = word_commutator(spec, GenWord{p}, GenWord{q});
        Portrait lhs = evaluate(spec, w, depth);
        Portrait rhs = delta_portrait(mod_index(l + off, d),
                                      evaluate(spec, commutator, depth - 1));
        if (!(lhs == rhs)) return false;
      }
    }
  }

  return true;
}

}  // namespace hh
