#ifndef BRAIDBAND_NONCROSSING_HPP
#define BRAIDBAND_NONCROSSING_HPP

#include <string>
#include <vector>

#include "braidband/band_word.hpp"

namespace braidband {

/// A dual simple element, stored as a non-crossing set partition of {1..n}.
/// The all-singletons partition is the identity braid; the one-block
/// partition is delta. Lattice operations are partition-native; conversion to
/// a positive band word (descending-cycle product per block) is a separate
/// serialization step.
class NonCrossingPartition {
 public:
  /// Identity (all singletons).
  explicit NonCrossingPartition(int n);
  /// Validates that blocks partition {1..n} and are mutually non-crossing.
  NonCrossingPartition(int n, std::vector<std::vector<int>> blocks);

  static NonCrossingPartition identity(int n) { return NonCrossingPartition(n); }
  static NonCrossingPartition delta(int n);
  /// Partition with the single non-trivial block {i,j}.
  static NonCrossingPartition band(int n, int i, int j);

  int strands() const { return n_; }
  /// Blocks sorted by least element; each block sorted ascending.
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int blockOf(int strand) const { return blockIndex_[strand - 1]; }
  bool sameBlock(int a, int b) const { return blockOf(a) == blockOf(b); }

  bool isIdentity() const;
  bool isDelta() const { return blocks_.size() == 1; }

  /// Underlying permutation: each block {a1<...<ak} acts as the cycle
  /// a1 -> a2 -> ... -> ak -> a1.
  StrandPermutation permutation() const;

  /// Canonical positive band word: per block {a1<...<ak}, the descending
  /// cycle s(a_{k-1},a_k) s(a_{k-2},a_{k-1}) ... s(a1,a2); blocks in order of
  /// least element. For the full block this is exactly the delta word.
  BandWord word() const;

  /// Number of band-generator letters (n minus number of blocks).
  int length() const { return n_ - static_cast<int>(blocks_.size()); }

  /// "{1 3}{2}{4}" — blocks ordered by least element, singletons included.
  std::string str() const;
  static NonCrossingPartition parse(const std::string& text, int n);

  friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;
  friend bool operator<(const NonCrossingPartition& a, const NonCrossingPartition& b) {
    return a.blocks_ < b.blocks_;  // arbitrary total order for containers
  }

 private:
  int n_ = 1;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> blockIndex_;

  void index();
};

/// Coarsest non-crossing partition refining both (blockwise intersection).
NonCrossingPartition nc_meet(const NonCrossingPartition& a, const NonCrossingPartition& b);

/// Finest non-crossing partition coarsening both.
NonCrossingPartition nc_join(const NonCrossingPartition& a, const NonCrossingPartition& b);

/// a <= b in the lattice order (a refines b). For simple elements this is
/// exactly left divisibility.
bool nc_leq(const NonCrossingPartition& a, const NonCrossingPartition& b);

/// The unique simple y with x * y = delta as braids. Applying it twice gives
/// the delta-conjugate tau(x, 1).
NonCrossingPartition complement(const NonCrossingPartition& x);

/// The unique simple y with y * x = delta (inverse of `complement`).
NonCrossingPartition complement_left(const NonCrossingPartition& x);

/// Conjugation by delta^k: every index shifted by k modulo n.
NonCrossingPartition tau(const NonCrossingPartition& x, long long k);

/// Partition whose permutation is p, which must be a product of disjoint
/// increasing cycles forming a non-crossing partition (the caller guarantees
/// this holds; it is validated).
NonCrossingPartition partition_of_permutation(const StrandPermutation& p);

/// Product of two simples known to be simple (b <= complement(a)).
NonCrossingPartition mul_simple(const NonCrossingPartition& a, const NonCrossingPartition& b);

/// Left quotient t^{-1} * f for t <= f; the result is simple.
NonCrossingPartition quotient_left(const NonCrossingPartition& t, const NonCrossingPartition& f);

/// The one-block partition of a positive band generator.
NonCrossingPartition simple_of_band(int n, const BandGen& g);

/// All non-crossing partitions of {1..n} (Catalan(n) of them); test helper
/// and small-n enumeration backend.
std::vector<NonCrossingPartition> all_noncrossing_partitions(int n);

}  // namespace braidband

#endif
