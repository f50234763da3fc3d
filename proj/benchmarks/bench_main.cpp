#include <benchmark/benchmark.h>

#include "rimforge/alexander.hpp"
#include "rimforge/surgery.hpp"
#include "rimforge/symplectic.hpp"
#include "rimforge/text.hpp"

using namespace rimforge;

namespace {

SurfaceKnotGroup cyclic_base(int d) {
  Presentation p = parse_presentation("<u | u^" + std::to_string(d) + ">");
  return surface_knot_base(p, Word::letter(0));
}

void BM_Enumerate_BinaryIcosahedral(benchmark::State& state) {
  Presentation p = parse_presentation("<a,b | a^5*b^-3, b^3*(a*b)^-2>");
  for (auto _ : state) {
    EnumerationResult r = enumerate_cosets(p, {});
    benchmark::DoNotOptimize(r.index());
  }
}
BENCHMARK(BM_Enumerate_BinaryIcosahedral);

void BM_Enumerate_PSL27_Lookahead(benchmark::State& state) {
  Presentation p = parse_presentation("<a,b | a^2, b^3, (a*b)^7, [a,b]^4>");
  for (auto _ : state) {
    EnumerationResult r = enumerate_cosets(p, {}, 20000);
    benchmark::DoNotOptimize(r.index());
  }
}
BENCHMARK(BM_Enumerate_PSL27_Lookahead);

void BM_BranchedCover_Poincare(benchmark::State& state) {
  KnotSpec k = knot_torus(3, 5);
  for (auto _ : state) {
    BranchedCoverGroup bc = branched_cover_group(k, 2);
    EnumerationResult r = enumerate_cosets(bc.presentation, {});
    benchmark::DoNotOptimize(r.index());
  }
}
BENCHMARK(BM_BranchedCover_Poincare);

void BM_DihedralTwist(benchmark::State& state) {
  KnotSpec k = knot_twobridge(7, 3);
  for (auto _ : state) {
    SurfaceKnotGroup g = d_twist_group(cyclic_base(2), k);
    benchmark::DoNotOptimize(g.presentation.ngens());
  }
}
BENCHMARK(BM_DihedralTwist);

void BM_OneTwistCollapse(benchmark::State& state) {
  SurfaceKnotGroup base = d_twist_group(cyclic_base(2), knot_twobridge(5, 3));
  KnotSpec j = knot_jn(knot_torus(3, 5), 1);
  for (auto _ : state) {
    SurfaceKnotGroup g = m_twist_group(base, j, 1);
    benchmark::DoNotOptimize(g.certification.tier);
  }
}
BENCHMARK(BM_OneTwistCollapse);

void BM_Alexander_Jn(benchmark::State& state) {
  KnotSpec jn = knot_jn(knot_torus(3, 5), state.range(0));
  for (auto _ : state) {
    AlexNormalForm nf = alexander_polynomial(jn);
    benchmark::DoNotOptimize(nf.poly.term_count());
  }
}
BENCHMARK(BM_Alexander_Jn)->Arg(1)->Arg(3)->Arg(5);

void BM_CoverOrderResultant(benchmark::State& state) {
  AlexNormalForm nf = alexander_polynomial(knot_jn(knot_torus(3, 5), 3));
  for (auto _ : state) {
    Int r = cyclotomic_resultant_magnitude(nf.poly, 6);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CoverOrderResultant);

void BM_SymplecticPipeline_D10(benchmark::State& state) {
  Presentation g = parse_presentation("<a,b | a^2, b^5, (a*b)^2>");
  auto kd = make_kd_witness(g, Word::letter(0));
  for (auto _ : state) {
    SympPipelineResult out = build_symplectic_pipeline(*kd);
    benchmark::DoNotOptimize(out.md.ngens());
  }
}
BENCHMARK(BM_SymplecticPipeline_D10);

}  // namespace

BENCHMARK_MAIN();
