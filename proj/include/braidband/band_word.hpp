#ifndef BRAIDBAND_BAND_WORD_HPP
#define BRAIDBAND_BAND_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidband {

/// Thrown when input text fails the word grammar. `position` is the 0-based
/// character offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg)), position(position) {}
  std::size_t position;
};

/// Signed band generator on strands i < j, written s(i,j) or s(i,j)^-1.
/// Strand indices are 1-based throughout.
struct BandGen {
  int i = 1;
  int j = 2;
  int sign = +1;  // +1 or -1

  BandGen() = default;
  BandGen(int i, int j, int sign);

  BandGen inverse() const { return BandGen(i, j, -sign); }

  friend bool operator==(const BandGen&, const BandGen&) = default;
};

/// Permutation of {1,...,n}; images stored 1-based.
class StrandPermutation {
 public:
  explicit StrandPermutation(int n);  // identity
  static StrandPermutation transposition(int n, int a, int b);
  /// Builds from a 1-based image table; validates bijectivity.
  static StrandPermutation fromImage(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int apply(int strand) const { return image_[strand - 1]; }

  /// Composite that applies *this first, then `next` (word order).
  StrandPermutation then(const StrandPermutation& next) const;
  StrandPermutation inverse() const;

  /// Cycle decomposition; each cycle lists strands in traversal order
  /// starting from its least element, cycles sorted by least element.
  std::vector<std::vector<int>> cycles() const;

  bool isIdentity() const;
  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> image_;
};

/// Cycle structure of the closure of a braid word.
struct ClosureProfile {
  int componentCount = 0;
  std::vector<std::vector<int>> cycles;  // partition of {1..n}
};

/// One Artin generator letter sigma_k^{sign}, 1 <= k <= n-1.
struct ArtinLetter {
  int index = 1;
  int sign = +1;
  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

/// Braid word in the Artin generators.
struct ArtinWord {
  int n = 1;
  std::vector<ArtinLetter> letters;
};

/// Immutable braid word in band generators. Letters act left to right.
/// No free reduction happens on construction; distinct representatives of the
/// same braid stay distinct until a normal-form or order computation is asked
/// for.
class BandWord {
 public:
  explicit BandWord(int n) : n_(n), letters_() {
    if (n < 1) throw std::invalid_argument("BandWord: strand count must be >= 1");
  }
  BandWord(int n, std::vector<BandGen> letters);

  int strands() const { return n_; }
  const std::vector<BandGen>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BandWord append(const BandGen& g) const;
  BandWord concat(const BandWord& other) const;
  BandWord inverse() const;

  /// Canonical text form, e.g. "s(1,2) s(2,4) s(1,3)^-1".
  std::string str() const;

  friend bool operator==(const BandWord&, const BandWord&) = default;

 private:
  int n_;
  std::vector<BandGen> letters_;
};

/// Parses the band-word grammar:
///   factor := "s(" INT "," INT ")" ("^" SIGNED_INT)? | "delta" ("^" SIGNED_INT)?
/// Factors are whitespace-separated; exponents expand to repeated letters and
/// "delta" expands to s(n-1,n) s(n-2,n-1) ... s(1,2) for the ambient n.
BandWord parse_band_word(const std::string& text, int n);

/// Parses Artin-mode input with factors "a" INT ("^" SIGNED_INT)?.
ArtinWord parse_artin_word(const std::string& text, int n);

/// sigma_{i,j} = (sigma_{j-1} ... sigma_{i+1}) sigma_i (sigma_{j-1} ... sigma_{i+1})^{-1},
/// expanded letter by letter and concatenated in word order.
ArtinWord band_to_artin(const BandWord& w);

/// Embeds sigma_k as s(k,k+1).
BandWord artin_to_band(const ArtinWord& w);

/// The full-letter word for delta = s(n-1,n) s(n-2,n-1) ... s(1,2), repeated
/// `power` times (inverted lettering for negative powers).
BandWord delta_word(int n, long long power = 1);

long long exponent_sum(const BandWord& w);
StrandPermutation permutation_of(const BandWord& w);
ClosureProfile closure_profile(const BandWord& w);

/// Self-linking number of the closure: -n(w) + exp(w).
long long self_linking(const BandWord& w);

enum class MarkovMove { StabilizePositive, StabilizeNegative, Destabilize };

/// Positive/negative stabilization appends s(n,n+1)^{+-1} on n+1 strands;
/// destabilization requires the last strand to be touched by exactly one
/// letter s(n-1,n)^{+-1} placed last, and removes it.
BandWord markov_move(const BandWord& w, MarkovMove kind);

/// g^{-1} w g at the word level (no reduction).
BandWord conjugate(const BandWord& w, const BandWord& g);

}  // namespace braidband

#endif
