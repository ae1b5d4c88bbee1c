#include "hanoihedral/selfsim.hpp"

#include <algorithm>
#include <stdexcept>

#include "hanoihedral/errors.hpp"

namespace hh {

GenWord free_reduce(const GroupSpec& spec, GenWord w) {
  if (!spec.involutive())
    throw std::invalid_argument("free_reduce: spec is not involutive");
  GenWord out;
  out.reserve(w.size());
  for (int g : w) {
    if (g < 0 || g >= spec.generator_count())
      throw std::invalid_argument("free_reduce: letter out of range");
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

GenWord word_inverse(const GroupSpec& spec, const GenWord& w) {
  if (!spec.involutive())
    throw std::invalid_argument("word_inverse: spec is not involutive");
  return GenWord(w.rbegin(), w.rend());
}

GenWord word_concat(GenWord a, const GenWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GenWord word_conjugate(const GroupSpec& spec, const GenWord& by, const GenWord& w) {
  return free_reduce(spec, word_concat(word_concat(by, w), word_inverse(spec, by)));
}

GenWord word_commutator(const GroupSpec& spec, const GenWord& a, const GenWord& b) {
  GenWord w = word_concat(word_inverse(spec, a), word_inverse(spec, b));
  w = word_concat(std::move(w), a);
  w = word_concat(std::move(w), b);
  return free_reduce(spec, w);
}

namespace {

// portrait of a single generator: the label at v is the root of the generator
// reached by following section assignments along v
Portrait generator_portrait(const GroupSpec& spec, int gen, int depth) {
  Portrait p(spec.d(), depth);
  int d = spec.d();
  auto fill = [&](auto&& self, std::size_t idx, int g, int remaining) -> void {
    p.set_label(idx, spec.generator(g).root);
    if (remaining <= 1) return;
    for (int x = 0; x < d; ++x) {
      int s = spec.generator(g).sections[x];
      if (s >= 0) self(self, idx * d + x + 1, s, remaining - 1);
    }
  };
  fill(fill, 0, gen, depth);
  return p;
}

}  // namespace

Portrait evaluate(const GroupSpec& spec, const GenWord& w, int depth) {
  Portrait acc(spec.d(), depth);
  bool first = true;
  for (int g : w) {
    if (g < 0 || g >= spec.generator_count())
      throw std::invalid_argument("evaluate: letter out of range");
    Portrait gp = generator_portrait(spec, g, depth);
    acc = first ? std::move(gp) : acc * gp;
    first = false;
  }
  return acc;
}

Perm root_perm(const GroupSpec& spec, const GenWord& w) {
  Perm r = Perm::identity(spec.d());
  for (int g : w) r = r * spec.generator(g).root;
  return r;
}

LevelDecomposition first_level_decomposition(const GroupSpec& spec, const GenWord& w) {
  int d = spec.d();
  LevelDecomposition out{Perm::identity(d), std::vector<GenWord>(d)};
  // process letters right to left; `inv` is the inverse of the product of the
  // root permutations of the already-processed suffix, so a section of letter
  // c at slot x lands in coordinate inv(x); contributions collected this way
  // come out right-to-left per coordinate and are reversed at the end
  Perm inv = Perm::identity(d);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto& gen = spec.generator(*it);
    for (int x = 0; x < d; ++x) {
      int s = gen.sections[x];
      if (s >= 0) out.sections[inv(x)].push_back(s);
    }
    inv = inv * gen.root.inverse();
  }
  for (auto& s : out.sections) std::reverse(s.begin(), s.end());
  out.root = inv.inverse();
  return out;
}

std::size_t TrivialityOracle::WordHash::operator()(const GenWord& w) const {
  std::size_t h = 1469598103934665603ULL;
  for (int g : w) {
    h ^= static_cast<std::size_t>(g) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

TrivialityOracle::TrivialityOracle(const GroupSpec& spec, int depth_cap)
    : spec_(spec), depth_cap_(depth_cap) {}

bool TrivialityOracle::is_trivial(const GenWord& w) {
  return recurse(free_reduce(spec_, w), depth_cap_);
}

bool TrivialityOracle::word_equal(const GenWord& a, const GenWord& b) {
  return is_trivial(word_concat(a, word_inverse(spec_, b)));
}

bool TrivialityOracle::recurse(const GenWord& w, int depth_left) {
  if (w.empty()) return true;
  if (w.size() == 1) return spec_.generator_trivial(w[0]);
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (!root_perm(spec_, w).is_identity()) {
    memo_.emplace(w, false);
    return false;
  }
  if (depth_left == 0)
    throw not_contracting_error(
        "word problem recursion cap exceeded; presentation does not contract");
  bool result = true;
  auto dec = first_level_decomposition(spec_, w);
  for (const auto& s : dec.sections) {
    if (!recurse(free_reduce(spec_, s), depth_left - 1)) {
      result = false;
      break;
    }
  }
  memo_.emplace(w, result);
  return result;
}

bool is_trivial(const GroupSpec& spec, const GenWord& w) {
  TrivialityOracle oracle(spec);
  return oracle.is_trivial(w);
}

bool word_equal(const GroupSpec& spec, const GenWord& a, const GenWord& b) {
  TrivialityOracle oracle(spec);
  return oracle.word_equal(a, b);
}

std::vector<GenWord> nucleus(const GroupSpec& spec, int iteration_cap) {
  TrivialityOracle oracle(spec);
  std::vector<GenWord> reps;  // canonical representative words
  auto better = [](const GenWord& a, const GenWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  auto absorb = [&](const GenWord& candidate) -> bool {  // true if set changed
    GenWord c = free_reduce(spec, candidate);
    for (auto& r : reps) {
      if (oracle.word_equal(r, c)) {
        if (better(c, r) && !r.empty()) r = c;  // keep shortest, ties lexicographic
        return false;
      }
    }
    reps.push_back(std::move(c));
    return true;
  };

  absorb(GenWord{});
  for (int g = 0; g < spec.generator_count(); ++g) absorb(GenWord{g});

  for (int round = 0; round < iteration_cap; ++round) {
    bool grew = false;
    std::vector<GenWord> snapshot = reps;
    for (const auto& u : snapshot) {
      for (const auto& v : snapshot) {
        GenWord prod = free_reduce(spec, word_concat(u, v));
        auto dec = first_level_decomposition(spec, prod);
        for (const auto& s : dec.sections)
          if (absorb(s)) grew = true;
      }
    }
    if (!grew) {
      std::sort(reps.begin(), reps.end(), better);
      return reps;
    }
  }
  throw not_contracting_error("nucleus not verified contracting within iteration cap");
}

}  // namespace hh
