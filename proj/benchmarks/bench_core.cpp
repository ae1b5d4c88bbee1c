#include <benchmark/benchmark.h>

#include <random>

#include "hanoihedral/branching.hpp"
#include "hanoihedral/ext_element.hpp"
#include "hanoihedral/gf2.hpp"
#include "hanoihedral/group_spec.hpp"
#include "hanoihedral/portrait.hpp"
#include "hanoihedral/selfsim.hpp"
#include "hanoihedral/stabilizer_chain.hpp"

namespace {

hh::GenWord random_word(int d, std::size_t len, std::mt19937_64& rng) {
  hh::GenWord w(len);
  for (auto& g : w) g = static_cast<int>(rng() % d);
  return w;
}

void BM_portrait_mul(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  auto spec = hh::GroupSpec::hanoihedral(d);
  std::mt19937_64 rng(1);
  hh::Portrait p = hh::evaluate(spec, random_word(d, 12, rng), 4);
  hh::Portrait q = hh::evaluate(spec, random_word(d, 12, rng), 4);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_portrait_mul)->Arg(3)->Arg(5);

void BM_word_problem(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  auto spec = hh::GroupSpec::hanoihedral(d);
  hh::GenWord w = hh::triv_witness_word(d, 2);
  for (auto _ : state) {
    hh::TrivialityOracle oracle(spec);
    benchmark::DoNotOptimize(oracle.is_trivial(w));
  }
}
BENCHMARK(BM_word_problem)->Arg(3)->Arg(5);

void BM_chain_build(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  int depth = static_cast<int>(state.range(1));
  auto spec = hh::GroupSpec::hanoihedral(d);
  std::vector<hh::ExtElement> gens;
  for (int i = 0; i < d; ++i)
    gens.push_back(hh::ExtElement::from_word(spec, {i}, depth));
  for (auto _ : state)
    benchmark::DoNotOptimize(hh::StabilizerChain::build(gens, d, depth));
}
BENCHMARK(BM_chain_build)->Args({3, 2})->Args({5, 2})->Args({3, 3});

void BM_gf2_rank(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  hh::gf2::Mat2 m(width);
  for (int r = 0; r < width; ++r) {
    hh::gf2::Vec2 v(width);
    for (int i = 0; i < width; ++i)
      if (rng() & 1) v.set(i, true);
    m.add_row(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_gf2_rank)->Arg(64)->Arg(256);

void BM_nucleus(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  auto spec = hh::GroupSpec::hanoihedral(d);
  for (auto _ : state) benchmark::DoNotOptimize(hh::nucleus(spec));
}
BENCHMARK(BM_nucleus)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
