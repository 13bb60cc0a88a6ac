#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidband/dehornoy.hpp"

using namespace braidband;

namespace {

BandWord random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> strand(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<BandGen> ls;
  for (int k = 0; k < len; ++k) {
    int i = strand(rng), j = strand(rng);
    while (i == j) j = strand(rng);
    if (i > j) std::swap(i, j);
    ls.emplace_back(i, j, coin(rng) ? +1 : -1);
  }
  return BandWord(n, std::move(ls));
}

BandWord remark22_power(int n, int m) {
  std::vector<BandGen> ls;
  for (int t = 0; t < m; ++t) {
    for (int k = 1; k < n; ++k) ls.emplace_back(k, k + 1, +1);
    ls.emplace_back(1, n, +1);
  }
  return BandWord(n, std::move(ls));
}

}  // namespace

TEST_CASE("handle reduction on relators") {
  // free cancellation
  ArtinWord w = parse_artin_word("a1 a1^-1", 3);
  CHECK(handle_reduce(w).letters.empty());

  // braid relation a1 a2 a1 a2^-1 a1^-1 a2^-1
  ArtinWord r = parse_artin_word("a1 a2 a1 a2^-1 a1^-1 a2^-1", 3);
  CHECK(handle_reduce(r).letters.empty());

  // far commutation a1 a3 a1^-1 a3^-1
  ArtinWord c = parse_artin_word("a1 a3 a1^-1 a3^-1", 4);
  CHECK(handle_reduce(c).letters.empty());
}

TEST_CASE("compare basics") {
  BandWord e(3);
  CHECK(dehornoy_compare(e, parse_band_word("s(1,2)", 3)) == OrderVerdict::Greater);
  CHECK(dehornoy_compare(parse_band_word("s(1,2)", 3), e) == OrderVerdict::Less);

  // braid relation: a1 a2 a1 = a2 a1 a2
  BandWord u = parse_band_word("s(1,2) s(2,3) s(1,2)", 3);
  BandWord v = parse_band_word("s(2,3) s(1,2) s(2,3)", 3);
  CHECK(dehornoy_compare(u, v) == OrderVerdict::Equal);

  // antisymmetry on a sample pair
  BandWord p = parse_band_word("s(1,3)", 3);
  BandWord q = parse_band_word("s(1,2) s(2,3)", 3);
  OrderVerdict pq = dehornoy_compare(p, q);
  OrderVerdict qp = dehornoy_compare(q, p);
  if (pq == OrderVerdict::Equal) {
    CHECK(qp == OrderVerdict::Equal);
  } else {
    CHECK(pq != qp);
  }
}

TEST_CASE("triviality oracle") {
  CHECK(is_trivial(BandWord(4)));
  CHECK(is_trivial(parse_band_word("s(1,2) s(2,3) s(1,2) s(2,3)^-1 s(1,2)^-1 s(2,3)^-1", 3)));
  CHECK_FALSE(is_trivial(parse_band_word("s(1,3)", 3)));

  // the full twist delta^n is central
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        BandWord g(n, {BandGen(i, j, +1)});
        BandWord comm =
            delta_word(n, n).concat(g).concat(delta_word(n, -n)).concat(g.inverse());
        CHECK(is_trivial(comm));
      }
  }
}

TEST_CASE("order is a strict total order on samples") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BandWord a = random_word(rng, n, 4 + static_cast<int>(rng() % 5));
    BandWord b = random_word(rng, n, 4 + static_cast<int>(rng() % 5));
    BandWord c = random_word(rng, n, 4 + static_cast<int>(rng() % 5));

    OrderVerdict ab = dehornoy_compare(a, b);
    OrderVerdict ba = dehornoy_compare(b, a);
    if (ab == OrderVerdict::Equal)
      CHECK(ba == OrderVerdict::Equal);
    else
      CHECK(ba != ab);

    // transitivity: a<b and b<c imply a<c
    OrderVerdict bc = dehornoy_compare(b, c);
    if (ab == OrderVerdict::Greater && bc == OrderVerdict::Greater)
      CHECK(dehornoy_compare(a, c) == OrderVerdict::Greater);
  }
}

TEST_CASE("floor basics") {
  CHECK(dehornoy_floor(BandWord(3)) == 0);
  CHECK(dehornoy_floor(delta_word(3, 6)) == 2);   // delta^{2n} = two full twists
  CHECK(dehornoy_floor(delta_word(4, 8)) == 2);
  CHECK(dehornoy_floor(delta_word(3, -3)) == -1);

  CHECK(dehornoy_floor(parse_band_word("s(1,3)", 3)) == 0);
  CHECK(dehornoy_floor(parse_band_word("s(1,3)^-1", 3)) == -1);
}

TEST_CASE("floor shifts exactly under full twists") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BandWord w = random_word(rng, n, static_cast<int>(rng() % 7));
    long long base = dehornoy_floor(w);
    for (long long k : {-2LL, 1LL, 3LL})
      CHECK(dehornoy_floor(w.concat(delta_word(n, n * k))) == base + k);
  }
}

TEST_CASE("floor quasi-invariance under conjugation") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BandWord w = random_word(rng, n, static_cast<int>(rng() % 8));
    BandWord g = random_word(rng, n, static_cast<int>(rng() % 5));
    long long a = dehornoy_floor(w);
    long long b = dehornoy_floor(conjugate(w, g));
    CHECK(std::llabs(a - b) <= 1);
  }
}

TEST_CASE("floor of the twist-anchored powers") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m)
      CHECK(dehornoy_floor(remark22_power(n, m)) == m - 1);
}

TEST_CASE("interval construction") {
  RationalInterval i = fdtc_interval(parse_band_word("s(1,3)", 3));
  CHECK(*i.lo == Rational(0));
  CHECK(*i.hi == Rational(1));
  CHECK(i.str() == "[0, 1]");

  RationalInterval im = fdtc_interval(parse_band_word("s(2,4)^-1", 4));
  CHECK(*im.lo == Rational(-1));
  CHECK(*im.hi == Rational(0));

  for (int n = 3; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m) {
      RationalInterval r = fdtc_interval(remark22_power(n, m));
      CHECK(*r.lo <= Rational(m));
      CHECK(Rational(m) <= *r.hi);
      CHECK(*r.hi - *r.lo == Rational(1));
    }

  for (long long k : {-1LL, 0LL, 2LL}) {
    RationalInterval r = fdtc_interval(delta_word(4, 4 * k));
    CHECK(*r.lo <= Rational(k));
    CHECK(Rational(k) <= *r.hi);
  }
}

TEST_CASE("interval propagation rules") {
  RationalInterval anchor = RationalInterval::point(Rational(3));
  RationalInterval neg = propagate_negative_band_lower(2, 4);  // > -3/4
  CHECK(neg.lo == Rational(-3, 4));
  CHECK(neg.loStrict);
  CHECK(!neg.hi);
  CHECK(neg.str() == "(-3/4, +inf)");

  RationalInterval prod = propagate_product(anchor, neg);
  CHECK(*prod.lo == Rational(3) - Rational(3, 4) - Rational(1));
  CHECK(prod.loStrict);
  CHECK(!prod.hi);

  // widening by one on each side against a point interval
  RationalInterval wide = propagate_product(anchor, RationalInterval::point(Rational(0)));
  CHECK(*wide.lo == Rational(2));
  CHECK(*wide.hi == Rational(4));

  RationalInterval ins = propagate_sqp_insert(neg);
  CHECK(ins.lo == neg.lo);
  CHECK(!ins.hi);
  RationalInterval del = propagate_sqp_delete(anchor);
  CHECK(!del.lo);
  CHECK(*del.hi == Rational(3));

  CHECK_THROWS(propagate_negative_band_lower(-1, 4));
}

TEST_CASE("main hypothesis checks") {
  // lower bound exactly delta/2+1 but strict still establishes the hypothesis
  RationalInterval strict = RationalInterval::aboveStrict(Rational(3, 2));
  HypothesisReport r1 = check_main_hypotheses(strict, 1);
  CHECK(r1.largeTwistForDefect);
  CHECK(r1.twistAboveOne);
  CHECK_FALSE(r1.sqpClause);

  RationalInterval oneTwo = RationalInterval::aboveStrict(Rational(1));
  oneTwo.hi = Rational(2);
  HypothesisReport r2 = check_main_hypotheses(oneTwo, 0);
  CHECK(r2.sqpClause);

  HypothesisReport r3 = check_main_hypotheses(RationalInterval::closed(Rational(0), Rational(1)), 0);
  CHECK_FALSE(r3.largeTwistForDefect);
  CHECK_FALSE(r3.twistAboveOne);

  HypothesisReport r4 = check_main_hypotheses(RationalInterval::point(Rational(3)), 2);
  CHECK(r4.largeTwistForDefect);  // 3 > 2/2+1 = 2
}
