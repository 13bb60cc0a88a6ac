#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidband/dehornoy.hpp"
#include "braidband/noncrossing.hpp"

using namespace braidband;

TEST_CASE("construction and validation") {
  NonCrossingPartition id3(3);
  CHECK(id3.isIdentity());
  CHECK(id3.blocks().size() == 3);

  NonCrossingPartition d3 = NonCrossingPartition::delta(3);
  CHECK(d3.isDelta());

  CHECK(NonCrossingPartition::band(3, 1, 2).str() == "{1 2}{3}");
  CHECK(NonCrossingPartition::band(3, 1, 3).str() == "{1 3}{2}");
  CHECK(NonCrossingPartition::band(4, 1, 3).str() == "{1 3}{2}{4}");

  // {1,3} and {2,4} cross
  CHECK_THROWS(NonCrossingPartition(4, {{1, 3}, {2, 4}}));
  CHECK_THROWS(NonCrossingPartition(3, {{1, 2}}));          // missing strand
  CHECK_THROWS(NonCrossingPartition(3, {{1, 2}, {2, 3}}));  // repeated strand
}

TEST_CASE("catalan counts") {
  CHECK(all_noncrossing_partitions(3).size() == 5);
  CHECK(all_noncrossing_partitions(4).size() == 14);
  CHECK(all_noncrossing_partitions(5).size() == 42);
  CHECK(all_noncrossing_partitions(6).size() == 132);
}

TEST_CASE("canonical words") {
  CHECK(NonCrossingPartition::delta(4).word() ==
        parse_band_word("s(3,4) s(2,3) s(1,2)", 4));
  CHECK(NonCrossingPartition(4, {{1, 2, 4}, {3}}).word() ==
        parse_band_word("s(2,4) s(1,2)", 4));
  CHECK(NonCrossingPartition(3).word().empty());
}

TEST_CASE("permutation of a simple is its increasing-cycle product") {
  NonCrossingPartition p(5, {{1, 3, 4}, {2}, {5}});
  StrandPermutation q = p.permutation();
  CHECK(q.apply(1) == 3);
  CHECK(q.apply(3) == 4);
  CHECK(q.apply(4) == 1);
  CHECK(q.apply(2) == 2);

  // word and partition agree through the braid permutation
  for (const auto& x : all_noncrossing_partitions(5))
    CHECK(permutation_of(x.word()) == x.permutation());
}

TEST_CASE("meet") {
  NonCrossingPartition a = NonCrossingPartition::band(3, 1, 3);
  NonCrossingPartition b = NonCrossingPartition::band(3, 1, 2);
  CHECK(nc_meet(a, b).isIdentity());
  CHECK(nc_meet(a, NonCrossingPartition(3)) == NonCrossingPartition(3));
  CHECK(nc_meet(a, NonCrossingPartition::delta(3)) == a);
  CHECK_THROWS(nc_meet(a, NonCrossingPartition::band(4, 1, 2)));

  for (const auto& x : all_noncrossing_partitions(4))
    for (const auto& y : all_noncrossing_partitions(4)) {
      NonCrossingPartition m = nc_meet(x, y);
      CHECK(nc_leq(m, x));
      CHECK(nc_leq(m, y));
      // greatest lower bound
      for (const auto& z : all_noncrossing_partitions(4))
        if (nc_leq(z, x) && nc_leq(z, y)) CHECK(nc_leq(z, m));
    }
}

TEST_CASE("join") {
  NonCrossingPartition a = NonCrossingPartition::band(4, 1, 3);
  NonCrossingPartition b = NonCrossingPartition::band(4, 2, 4);
  // crossing blocks force the full block
  CHECK(nc_join(a, b).isDelta());

  for (const auto& x : all_noncrossing_partitions(4))
    for (const auto& y : all_noncrossing_partitions(4)) {
      NonCrossingPartition j = nc_join(x, y);
      CHECK(nc_leq(x, j));
      CHECK(nc_leq(y, j));
      for (const auto& z : all_noncrossing_partitions(4))
        if (nc_leq(x, z) && nc_leq(y, z)) CHECK(nc_leq(j, z));
    }
}

TEST_CASE("complement") {
  CHECK(complement(NonCrossingPartition(3)).isDelta());
  CHECK(complement(NonCrossingPartition::delta(3)).isIdentity());
  CHECK(complement(NonCrossingPartition::band(3, 1, 2)) ==
        NonCrossingPartition::band(3, 1, 3));

  // x * complement(x) = delta as braids, certified by the word oracle
  for (const auto& x : all_noncrossing_partitions(4)) {
    BandWord prod = x.word().concat(complement(x).word());
    CHECK(is_trivial(prod.concat(delta_word(4, -1))));
    BandWord lprod = complement_left(x).word().concat(x.word());
    CHECK(is_trivial(lprod.concat(delta_word(4, -1))));
  }
}

TEST_CASE("complement squared is tau") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& x : all_noncrossing_partitions(n))
      CHECK(complement(complement(x)) == tau(x, 1));
}

TEST_CASE("complement reverses the lattice order") {
  for (const auto& x : all_noncrossing_partitions(4))
    for (const auto& y : all_noncrossing_partitions(4))
      if (nc_leq(x, y)) CHECK(nc_leq(complement(y), complement(x)));
}

TEST_CASE("tau") {
  NonCrossingPartition x = NonCrossingPartition::band(3, 1, 2);
  CHECK(tau(x, 0) == x);
  CHECK(tau(x, 3) == x);
  CHECK(tau(x, 1) == NonCrossingPartition::band(3, 2, 3));
  CHECK(tau(x, -1) == tau(x, 2));

  // tau^n is the identity map
  for (const auto& p : all_noncrossing_partitions(5)) CHECK(tau(p, 5) == p);

  // tau(x,1) agrees with conjugation by delta, certified by the word oracle
  for (const auto& p : all_noncrossing_partitions(4)) {
    BandWord conj = delta_word(4, -1).concat(p.word()).concat(delta_word(4, 1));
    CHECK(is_trivial(conj.concat(tau(p, 1).word().inverse())));
  }
}

TEST_CASE("simple_of_band") {
  CHECK(simple_of_band(3, BandGen(1, 2, +1)).str() == "{1 2}{3}");
  CHECK(simple_of_band(3, BandGen(1, 3, +1)).str() == "{1 3}{2}");
  CHECK_THROWS(simple_of_band(3, BandGen(1, 2, -1)));
  CHECK_THROWS(simple_of_band(2, BandGen(1, 3, +1)));
}

TEST_CASE("serialization round trip") {
  for (const auto& x : all_noncrossing_partitions(5))
    CHECK(NonCrossingPartition::parse(x.str(), 5) == x);
  CHECK_THROWS_AS(NonCrossingPartition::parse("{1 2", 2), ParseError);
}

TEST_CASE("mul and quotient") {
  for (const auto& x : all_noncrossing_partitions(4)) {
    NonCrossingPartition c = complement(x);
    CHECK(mul_simple(x, c).isDelta());
    for (const auto& t : all_noncrossing_partitions(4))
      if (nc_leq(t, x)) {
        NonCrossingPartition q = quotient_left(t, x);
        CHECK(mul_simple(t, q) == x);
      }
  }
  CHECK_THROWS(quotient_left(NonCrossingPartition::delta(3),
                             NonCrossingPartition::band(3, 1, 2)));
}
