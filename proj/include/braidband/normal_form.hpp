#ifndef BRAIDBAND_NORMAL_FORM_HPP
#define BRAIDBAND_NORMAL_FORM_HPP

#include <string>
#include <vector>

#include "braidband/band_word.hpp"
#include "braidband/noncrossing.hpp"

namespace braidband {

/// Left canonical normal form delta^N x_1 ... x_k in the band-generator
/// Garside structure. Factors are proper simples (never identity, never
/// delta) and consecutive factors are left-weighted:
/// nc_meet(complement(x_i), x_{i+1}) is the identity.
struct DualNormalForm {
  int n = 1;
  long long deltaPower = 0;
  std::vector<NonCrossingPartition> factors;

  long long infimum() const { return deltaPower; }
  long long supremum() const { return deltaPower + static_cast<long long>(factors.size()); }
  long long canonicalLength() const { return static_cast<long long>(factors.size()); }

  bool isTrivial() const { return deltaPower == 0 && factors.empty(); }

  /// Re-expansion to a band word: the delta power as full-twist letters
  /// followed by each factor's canonical word.
  BandWord word() const;

  /// "delta^N | {1 3}{2} | {1 2}{3}"; round-trips through parse().
  std::string str() const;
  static DualNormalForm parse(const std::string& text, int n);

  friend bool operator==(const DualNormalForm&, const DualNormalForm&) = default;
};

DualNormalForm left_normal_form(const BandWord& w);

long long infimum(const BandWord& w);

bool is_left_weighted_pair(const NonCrossingPartition& a, const NonCrossingPartition& b);

/// Conjugates by the initial factor tau(x_1, -N), moving it to the end.
/// Throws std::invalid_argument on canonical length 0.
BandWord cycling(const BandWord& w);

/// Conjugates by the inverse of the final factor, moving it to the front.
BandWord decycling(const BandWord& w);

struct SummitData {
  long long summitInf = 0;
  BandWord witness;  // conjugator g with inf(g^{-1} w g) = summitInf

  explicit SummitData(int n) : witness(n) {}
};

/// Maximal infimum over the conjugacy class, found by iterated cycling with
/// the stabilization certificate: once n(n-1)/2 consecutive cyclings fail to
/// raise the infimum it is maximal.
SummitData summit_infimum(const BandWord& w);

/// The closure of w is strongly quasipositive iff the summit infimum is
/// non-negative; the witness conjugates w to a braid with a positive band
/// word representative.
struct SqpVerdict {
  bool stronglyQuasipositive = false;
  SummitData summit;
};

SqpVerdict is_strongly_quasipositive_closure(const BandWord& w);

/// True iff the cycling of w is in normal form as written, i.e. the wrap
/// junction pair (x_k, tau(x_1, -N)) is left-weighted.
bool is_rigid(const BandWord& w);

}  // namespace braidband

#endif
