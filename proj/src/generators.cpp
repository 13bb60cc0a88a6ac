#include "braidband/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidband {

std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over (seed, index) to decorrelate consecutive items
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

BandWord random_band_word(std::mt19937_64& rng, const WordOptions& opt) {
  if (opt.n < 2) return BandWord(opt.n);
  std::uniform_int_distribution<int> strand(1, opt.n);
  std::uniform_int_distribution<int> coin(0, 1);
  int len = opt.exactLen ? opt.maxLen
                         : std::uniform_int_distribution<int>(0, opt.maxLen)(rng);
  std::vector<BandGen> ls;
  ls.reserve(len);
  for (int k = 0; k < len; ++k) {
    int i = strand(rng), j = strand(rng);
    while (i == j) j = strand(rng);
    if (i > j) std::swap(i, j);
    ls.emplace_back(i, j, (opt.positiveOnly || coin(rng)) ? +1 : -1);
  }
  return BandWord(opt.n, std::move(ls));
}

std::pair<BandWord, BandWord> random_word_pair(std::mt19937_64& rng, const WordOptions& opt) {
  BandWord u = random_band_word(rng, opt);
  if (rng() % 2 == 0) return {u, random_band_word(rng, opt)};

  // rewrite u into a different representative of the same braid
  std::vector<BandGen> ls = u.letters();
  WordOptions one = opt;
  one.maxLen = 1;
  one.exactLen = true;
  for (int round = 0; round < 2; ++round) {
    BandWord g = random_band_word(rng, one);
    if (g.empty()) continue;
    std::size_t at = ls.empty() ? 0 : rng() % (ls.size() + 1);
    ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(at), g.letters()[0]);
    ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(at) + 1, g.letters()[0].inverse());
  }
  BandWord v(opt.n, std::move(ls));
  if (opt.n >= 2 && rng() % 2 == 0) {
    // splice in a full-twist commutator, which is trivial by centrality
    BandWord g = random_band_word(rng, one);
    if (!g.empty()) {
      BandWord comm = delta_word(opt.n, opt.n)
                          .concat(g)
                          .concat(delta_word(opt.n, -opt.n))
                          .concat(g.inverse());
      v = v.concat(comm);
    }
  }
  return {u, v};
}

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& choose(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[rng() % xs.size()];
}

}  // namespace

FoliationComplex random_complex(std::mt19937_64& rng, const ComplexOptions& opt) {
  FoliationComplex F;
  int nBindings = pick(rng, 1, 2);
  for (int b = 0; b < nBindings; ++b) F.bindings.push_back("C" + std::to_string(b));

  int ePlus = pick(rng, 1, opt.maxElliptic);
  int eMinus = pick(rng, opt.forceNegativeElliptic ? 1 : 0, opt.maxElliptic);
  std::vector<int> plusIds, minusIds;
  int id = 0;
  for (int k = 0; k < ePlus; ++k) {
    ++id;
    plusIds.push_back(id);
    F.elliptic.push_back({id, +1, choose(rng, F.bindings)});
  }
  for (int k = 0; k < eMinus; ++k) {
    ++id;
    minusIds.push_back(id);
    F.elliptic.push_back({id, -1, choose(rng, F.bindings)});
  }

  int hMinusFloor = opt.forceDefectNonNegative ? eMinus : 0;
  int hMinus = std::min(opt.maxHyperbolic, hMinusFloor + pick(rng, 0, 4));
  hMinus = std::max(hMinus, hMinusFloor);
  int hPlus = pick(rng, 0, std::max(0, opt.maxHyperbolic - hMinus));

  std::vector<RegionType> negTypes, posTypes;
  if (opt.onlyAaAb) {
    negTypes = {RegionType::aa, RegionType::ab};
    posTypes = {RegionType::aa, RegionType::ab};
  } else {
    negTypes = {RegionType::aa, RegionType::ab, RegionType::ab,
                RegionType::bb, RegionType::bc, RegionType::ac, RegionType::cc};
    posTypes = negTypes;
  }

  auto addHyperbolic = [&](int sign, RegionType t) {
    ++id;
    F.hyperbolic.push_back({id, sign, t});
    Region r;
    r.hyperbolicId = id;
    switch (t) {
      case RegionType::aa:
        r.ellipticCorners = {choose(rng, plusIds), choose(rng, plusIds)};
        break;
      case RegionType::ab:
        r.ellipticCorners = {choose(rng, minusIds), choose(rng, plusIds)};
        if (rng() % 2) r.ellipticCorners.push_back(choose(rng, plusIds));
        break;
      case RegionType::bb: {
        int v = choose(rng, minusIds);
        int w = choose(rng, minusIds);
        while (w == v) w = choose(rng, minusIds);
        r.ellipticCorners = {v, w, choose(rng, plusIds), choose(rng, plusIds)};
        break;
      }
      case RegionType::bc:
        r.ellipticCorners = {choose(rng, minusIds), choose(rng, plusIds)};
        break;
      case RegionType::ac:
        r.ellipticCorners = {choose(rng, plusIds)};
        if (rng() % 2) r.ellipticCorners.push_back(choose(rng, plusIds));
        break;
      case RegionType::cc:
        break;
    }
    F.regions.push_back(std::move(r));
  };

  auto typeFor = [&](const std::vector<RegionType>& pool) {
    RegionType t = choose(rng, pool);
    // types needing negative corners require enough negative elliptic points
    if (minusIds.empty() &&
        (t == RegionType::ab || t == RegionType::bb || t == RegionType::bc))
      t = RegionType::aa;
    if (minusIds.size() < 2 && t == RegionType::bb) t = RegionType::ab;
    return t;
  };

  // a negative hyperbolic on an ab-tile per negative elliptic point keeps the
  // structure honest: every puncture of the graph shows up somewhere
  int placed = 0;
  for (int v : minusIds) {
    if (placed >= hMinus) break;
    ++id;
    F.hyperbolic.push_back({id, -1, RegionType::ab});
    F.regions.push_back({id, {v, choose(rng, plusIds)}});
    ++placed;
  }
  for (; placed < hMinus; ++placed) addHyperbolic(-1, typeFor(negTypes));
  for (int k = 0; k < hPlus; ++k) addHyperbolic(+1, typeFor(posTypes));

  F.minimalGenusAsserted = opt.minimalGenus;
  F.essential = rng() % 2 == 0;
  return F;
}

std::vector<CoherenceEvent> random_coherence_events(std::mt19937_64& rng,
                                                    CoherenceState initial, int count) {
  std::vector<CoherenceEvent> out;
  CoherenceState s = initial;
  for (int k = 0; k < count; ++k) {
    std::vector<CoherenceEvent> legal{CoherenceEvent::AcSplit, CoherenceEvent::AaTile};
    if (s.coherent >= 1) {
      legal.push_back(CoherenceEvent::AcMerge);
      legal.push_back(CoherenceEvent::CcSplitCoherent);
    }
    if (s.incoherent >= 1) legal.push_back(CoherenceEvent::CcSplitIncoherent);
    if (s.coherent >= 2) legal.push_back(CoherenceEvent::CcMergeCoherent);
    if (s.coherent >= 1 && s.incoherent >= 1) legal.push_back(CoherenceEvent::CcMergeMixed);
    CoherenceEvent e = choose(rng, legal);
    switch (e) {
      case CoherenceEvent::AcSplit: s.incoherent += 1; break;
      case CoherenceEvent::AcMerge: s.coherent -= 1; break;
      case CoherenceEvent::CcSplitIncoherent: s.incoherent += 1; break;
      case CoherenceEvent::CcSplitCoherent: s.incoherent += 1; break;
      case CoherenceEvent::CcMergeCoherent: s.coherent -= 1; break;
      case CoherenceEvent::CcMergeMixed: s.coherent -= 1; break;
      case CoherenceEvent::AaTile: break;
    }
    out.push_back(e);
  }
  return out;
}

namespace {

std::vector<BandGen> alphabet(int n) {
  std::vector<BandGen> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.emplace_back(i, j, +1);
      out.emplace_back(i, j, -1);
    }
  return out;
}

}  // namespace

long long count_words(int n, int maxLen) {
  long long a = static_cast<long long>(alphabet(n).size());
  long long total = 0, pow = 1;
  for (int len = 0; len <= maxLen; ++len) {
    total += pow;
    pow *= a;
  }
  return total;
}

BandWord word_at(int n, int maxLen, long long index) {
  std::vector<BandGen> ab = alphabet(n);
  long long a = static_cast<long long>(ab.size());
  long long pow = 1;
  for (int len = 0; len <= maxLen; ++len) {
    if (index < pow) {
      std::vector<BandGen> ls;
      ls.reserve(len);
      long long x = index;
      for (int k = 0; k < len; ++k) {
        ls.push_back(ab[x % a]);
        x /= a;
      }
      return BandWord(n, std::move(ls));
    }
    index -= pow;
    pow *= a;
  }
  throw std::out_of_range("word_at: index exceeds enumeration");
}

std::vector<BandWord> enumerate_words(int n, int maxLen) {
  long long total = count_words(n, maxLen);
  std::vector<BandWord> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long long k = 0; k < total; ++k) out.push_back(word_at(n, maxLen, k));
  return out;
}

}  // namespace braidband
