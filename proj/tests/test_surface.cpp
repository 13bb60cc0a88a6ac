#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidband/surface.hpp"

using namespace braidband;

namespace {

const char* kHSWord = "s(1,2) s(2,4)^2 s(1,2)^-1 s(1,3) s(1,2) s(2,4)^-1 s(1,2)^-2 s(1,3)^-2";

BandWord random_word(std::mt19937_64& rng, int n, int len, bool positiveOnly = false) {
  std::uniform_int_distribution<int> strand(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<BandGen> ls;
  for (int k = 0; k < len; ++k) {
    int i = strand(rng), j = strand(rng);
    while (i == j) j = strand(rng);
    if (i > j) std::swap(i, j);
    ls.emplace_back(i, j, positiveOnly || coin(rng) ? +1 : -1);
  }
  return BandWord(n, std::move(ls));
}

}  // namespace

TEST_CASE("build surface") {
  BennequinSurface empty = build_surface(BandWord(3));
  CHECK(empty.n == 3);
  CHECK(empty.bands.empty());

  // the five-band surface on four disks with three negative bands
  BennequinSurface fig = build_surface(
      parse_band_word("s(2,4)^-1 s(1,4) s(2,3)^-1 s(1,3) s(2,4)^-1", 4));
  CHECK(fig.n == 4);
  REQUIRE(fig.bands.size() == 5);
  int neg = 0;
  for (const auto& b : fig.bands) neg += b.sign < 0;
  CHECK(neg == 3);
  for (std::size_t k = 0; k + 1 < fig.bands.size(); ++k)
    CHECK(fig.bands[k].slot < fig.bands[k + 1].slot);

  BennequinSurface hs = build_surface(parse_band_word(kHSWord, 4));
  CHECK(hs.n == 4);
  CHECK(hs.bands.size() == 11);
  int hsNeg = 0;
  for (const auto& b : hs.bands) hsNeg += b.sign < 0;
  CHECK(hsNeg == 6);
}

TEST_CASE("surface stats") {
  SurfaceStats hs = surface_stats(build_surface(parse_band_word(kHSWord, 4)));
  CHECK(hs.eulerChar == -7);
  CHECK(hs.components == 1);
  CHECK(hs.boundaryComponents == 1);
  REQUIRE(hs.genus.has_value());
  CHECK(*hs.genus == 4);
  CHECK(hs.negativeBands == 6);
  CHECK(hs.positiveBands == 5);

  // words in {s(1,3),s(2,4)} give a two-component surface
  SurfaceStats split = surface_stats(
      build_surface(parse_band_word("s(1,3) s(2,4)^-1 s(1,3)^-1 s(2,4)", 4)));
  CHECK(split.components == 2);
  CHECK_FALSE(split.genus.has_value());

  SurfaceStats ring = surface_stats(
      build_surface(parse_band_word("s(1,2) s(2,3) s(3,4) s(1,4)", 4)));
  CHECK(ring.eulerChar == 0);
  CHECK(ring.components == 1);
  CHECK(ring.boundaryComponents == 2);
  CHECK(*ring.genus == 0);
}

TEST_CASE("component stats") {
  BennequinSurface F =
      build_surface(parse_band_word("s(1,3) s(2,4)^-1 s(1,3) s(2,4)", 4));
  auto comps = component_stats(F);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].disks == std::vector<int>{1, 3});
  CHECK(comps[1].disks == std::vector<int>{2, 4});
  CHECK(comps[0].bands == 2);
  CHECK(comps[0].eulerChar == 0);
  // two bands between two disks: an annulus per component here
  CHECK(comps[0].boundaryComponents == 2);
  CHECK(comps[0].genus == 0);
}

TEST_CASE("defect report") {
  DefectReport hs = defect_report(parse_band_word(kHSWord, 4), 3);
  CHECK(hs.sl == -5);
  CHECK(hs.minusChi == 5);
  CHECK(hs.defect == 5);
  CHECK(hs.negativeBands == 6);
  CHECK_FALSE(hs.minimalGenusConsistent);
  CHECK_FALSE(hs.disconnectedSurfaceHint);

  // transverse unknot on one strand
  DefectReport unknot = defect_report(BandWord(1), 0);
  CHECK(unknot.sl == -1);
  CHECK(unknot.minusChi == -1);
  CHECK(unknot.defect == 0);

  // an all-positive word with the genus of its own Bennequin surface is sharp
  BandWord pos = parse_band_word("s(1,2) s(2,3) s(1,3) s(1,2)", 3);
  SurfaceStats st = surface_stats(build_surface(pos));
  REQUIRE(st.genus.has_value());
  DefectReport sharp = defect_report(pos, *st.genus);
  CHECK(sharp.defect == 0);
  CHECK(sharp.negativeBands == 0);
  CHECK(sharp.minimalGenusConsistent);
}

TEST_CASE("euler characteristic is disks minus bands") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    int len = static_cast<int>(rng() % 12);
    BandWord w = random_word(rng, n, len);
    SurfaceStats s = surface_stats(build_surface(w));
    CHECK(s.eulerChar == n - len);
    CHECK(s.boundaryComponents == closure_profile(w).componentCount);
  }
}

TEST_CASE("all-positive words satisfy sl = -chi exactly") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BandWord w = random_word(rng, n, static_cast<int>(rng() % 12), true);
    SurfaceStats s = surface_stats(build_surface(w));
    CHECK(self_linking(w) == -s.eulerChar);
  }
}

TEST_CASE("defect arithmetic ties genus gap to extra negative bands") {
  // for connected surfaces: negativeBands - defect = g(F_w) - genus input
  std::mt19937_64 rng(19);
  int done = 0;
  while (done < 300) {
    int n = 2 + static_cast<int>(rng() % 4);
    BandWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 11));
    SurfaceStats s = surface_stats(build_surface(w));
    if (s.components != 1) continue;
    long long g = static_cast<long long>(rng() % 5);
    DefectReport r = defect_report(w, g);
    CHECK(r.negativeBands - r.defect == *s.genus - g);
    ++done;
  }
}

TEST_CASE("stats invariant under slot re-timing") {
  BennequinSurface F = build_surface(parse_band_word("s(1,2) s(2,3)^-1 s(1,3)", 3));
  BennequinSurface retimed = F;
  for (auto& b : retimed.bands) b.slot = 10 * b.slot + 3;  // order preserved
  SurfaceStats a = surface_stats(F);
  SurfaceStats b = surface_stats(retimed);
  CHECK(a.eulerChar == b.eulerChar);
  CHECK(a.components == b.components);
  CHECK(a.boundaryComponents == b.boundaryComponents);
  CHECK(a.negativeBands == b.negativeBands);
}
