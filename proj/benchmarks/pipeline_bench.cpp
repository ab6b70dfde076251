// Copyright 2026 The GlyphForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "glyphforge/augment.hpp"
#include "glyphforge/codec.hpp"
#include "glyphforge/config.hpp"
#include "glyphforge/damage.hpp"
#include "glyphforge/dataset.hpp"
#include "glyphforge/glyph_model.hpp"
#include "glyphforge/render.hpp"
#include "glyphforge/rng.hpp"
#include "glyphforge/texture.hpp"

namespace gf = glyphforge;

namespace {

gf::RasterImage random_image(int w, int h, std::uint64_t seed) {
  gf::RasterImage img(w, h);
  gf::SplitMix64 rng(seed);
  for (float& v : img.samples()) v = static_cast<float>(rng.uniform());
  return img;
}

const gf::EngineAssets& assets() {
  static const gf::EngineAssets a = gf::EngineAssets::load(gf::DatasetConfig{});
  return a;
}

void BM_Rasterize(benchmark::State& state) {
  const auto& outline = assets().glyphs.at(gf::LetterLabel::kShin);
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf::rasterize(outline, size, size));
}
BENCHMARK(BM_Rasterize)->Arg(128)->Arg(320);

void BM_FitOutline(benchmark::State& state) {
  const gf::CoverageMask mask = gf::rasterize(assets().glyphs.at(gf::LetterLabel::kHet), 128, 128);
  for (auto _ : state) benchmark::DoNotOptimize(gf::fit_outline_from_mask(mask, 0.5));
}
BENCHMARK(BM_FitOutline);

void BM_Background(benchmark::State& state) {
  const auto material = static_cast<gf::Material>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf::synth_background(material, assets().palettes, 320, 320, seed++));
  }
  state.SetLabel(std::string(gf::name(material)));
}
BENCHMARK(BM_Background)->DenseRange(0, 3);

void BM_Erode(benchmark::State& state) {
  gf::HeightField hf(320, 320);
  gf::SplitMix64 rng(1);
  for (float& v : hf.values()) v = rng.bernoulli(0.5) ? 1.0F : 0.0F;
  const double radius = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf::erode(hf, radius, 2));
}
BENCHMARK(BM_Erode)->Arg(1)->Arg(2)->Arg(4);

void BM_GaussianBlur(benchmark::State& state) {
  const gf::RasterImage img = random_image(320, 320, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gf::gaussian_blur(img, {2.0}));
}
BENCHMARK(BM_GaussianBlur);

void BM_FullKernelConvolve(benchmark::State& state) {
  const gf::RasterImage img = random_image(224, 224, 3);
  const gf::Kernel k = gf::gaussian_kernel({1.0});
  for (auto _ : state) benchmark::DoNotOptimize(gf::convolve(img, k));
}
BENCHMARK(BM_FullKernelConvolve);

void BM_DegradePipeline(benchmark::State& state) {
  const gf::RasterImage img = random_image(320, 320, 4);
  const gf::AugmentConfig cfg = gf::AugmentConfig::aggressive();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gf::degrade_pipeline(img, cfg, seed++));
}
BENCHMARK(BM_DegradePipeline);

void BM_EncodePng(benchmark::State& state) {
  const gf::RasterImage img = random_image(224, 224, 5);
  for (auto _ : state) benchmark::DoNotOptimize(gf::encode_png(img));
}
BENCHMARK(BM_EncodePng);

void BM_GenerateSample(benchmark::State& state) {
  gf::DatasetConfig cfg;
  cfg.total_count = 22;
  const auto specs = gf::plan(cfg);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gf::generate_sample(specs[i++ % specs.size()], assets().glyphs, assets().palettes, cfg));
  }
}
BENCHMARK(BM_GenerateSample)->Unit(benchmark::kMillisecond);

void BM_Plan(benchmark::State& state) {
  gf::DatasetConfig cfg;
  cfg.total_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf::plan(cfg));
}
BENCHMARK(BM_Plan)->Arg(2200)->Arg(250'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
