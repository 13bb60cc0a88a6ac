#ifndef BRAIDBAND_GENERATORS_HPP
#define BRAIDBAND_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "braidband/band_word.hpp"
#include "braidband/foliation.hpp"

namespace braidband {

/// Deterministic per-item RNG: the same (seed, index) pair always yields the
/// same stream, independent of evaluation order. This is what lets the sweep
/// driver hand items to threads in any order and still aggregate
/// reproducibly.
std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t index);

struct WordOptions {
  int n = 3;
  int maxLen = 12;
  bool exactLen = false;
  bool positiveOnly = false;
};

BandWord random_band_word(std::mt19937_64& rng, const WordOptions& opt);

/// A pair (u, v); with probability 1/2 the second word is the first one
/// rewritten by relator insertions (free cancellations and full-twist
/// commutators), so equal and unequal pairs both show up.
std::pair<BandWord, BandWord> random_word_pair(std::mt19937_64& rng, const WordOptions& opt);

struct ComplexOptions {
  int maxElliptic = 8;    // per sign
  int maxHyperbolic = 12;
  bool forceNegativeElliptic = true;   // e- >= 1
  bool forceDefectNonNegative = true;  // h- >= e-
  bool minimalGenus = true;
  bool onlyAaAb = false;  // bb-free, circle-free complexes for stabilization runs
};

/// Rejection-free construction of a valid foliation complex.
FoliationComplex random_complex(std::mt19937_64& rng, const ComplexOptions& opt);

/// A legal coherence event sequence from the given initial pool.
std::vector<CoherenceEvent> random_coherence_events(std::mt19937_64& rng,
                                                    CoherenceState initial, int count);

/// All band words on n strands with length <= maxLen, in a fixed order
/// (lengths ascending, letters in lexicographic order).
std::vector<BandWord> enumerate_words(int n, int maxLen);

/// Number of words enumerate_words would produce.
long long count_words(int n, int maxLen);

/// The k-th word of the enumeration without materializing the whole list.
BandWord word_at(int n, int maxLen, long long index);

}  // namespace braidband

#endif
