#ifndef BRAIDBAND_DEHORNOY_HPP
#define BRAIDBAND_DEHORNOY_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "braidband/band_word.hpp"
#include "braidband/rational.hpp"

namespace braidband {

/// Position of u^{-1}v relative to the identity in the Dehornoy order.
enum class OrderVerdict { Less, Equal, Greater };

std::string to_string(OrderVerdict v);

/// Handle reduction ran past its step budget. Reported as a hard failure
/// rather than guessing a verdict.
class HandleBudgetExceeded : public std::runtime_error {
 public:
  explicit HandleBudgetExceeded(long long budget)
      : std::runtime_error("handle reduction exceeded step budget of " +
                           std::to_string(budget)) {}
};

struct DehornoyOptions {
  long long stepBudget = 1'000'000;
};

/// Reduces an Artin word by handle reduction until no handle remains.
/// The result is freely equal to the input and is empty, sigma-positive, or
/// sigma-negative (its lowest-index generator occurs with one sign only).
ArtinWord handle_reduce(const ArtinWord& w, const DehornoyOptions& opt = {});

/// Sign of u^{-1}v in the Dehornoy order: Greater means u^{-1}v is
/// sigma-positive (so v sits above u), Equal means the words represent the
/// same braid.
OrderVerdict dehornoy_compare(const BandWord& u, const BandWord& v,
                              const DehornoyOptions& opt = {});

/// Word-problem oracle: true iff w represents the identity braid.
bool is_trivial(const BandWord& w, const DehornoyOptions& opt = {});

/// Dehornoy floor: the unique integer m with
///   Delta^{2m} <= w < Delta^{2(m+1)}
/// where Delta^2 = delta^n is the full twist. Located by exponential
/// bracketing followed by binary search on k |-> compare(delta^{nk}, w).
long long dehornoy_floor(const BandWord& w, const DehornoyOptions& opt = {});

/// Interval with exact rational endpoints; a missing endpoint means the
/// interval is unbounded on that side. Prints as e.g. "(-3/4, +inf)".
struct RationalInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool loStrict = false;
  bool hiStrict = false;

  static RationalInterval closed(Rational lo, Rational hi);
  static RationalInterval point(Rational v) { return closed(v, v); }
  static RationalInterval aboveStrict(Rational lo);

  /// True when membership in the interval forces value > threshold.
  bool establishesGreaterThan(const Rational& threshold) const;

  std::string str() const;
};

/// Floor-based twist-coefficient interval [floor(w), floor(w)+1] for the
/// closure of w with respect to the disk open book.
RationalInterval fdtc_interval(const BandWord& w, const DehornoyOptions& opt = {});

/// c(alpha beta) lies within 1 of c(alpha)+c(beta) on either side.
RationalInterval propagate_product(const RationalInterval& a, const RationalInterval& b);

/// Inserting a positive band word never lowers the coefficient: the lower
/// bound survives, the upper bound is forgotten.
RationalInterval propagate_sqp_insert(const RationalInterval& before);

/// Deleting a positive band word never raises it: the upper bound survives.
RationalInterval propagate_sqp_delete(const RationalInterval& before);

/// A product of m negative band generators on n strands has coefficient
/// strictly above -(m+1)/n.
RationalInterval propagate_negative_band_lower(long long negativeBands, int strands);

/// Hypothesis checks for the sharpness theorems, evaluated against a
/// coefficient interval and a defect value.
struct HypothesisReport {
  bool largeTwistForDefect = false;  // c > defect/2 + 1
  bool twistAboveOne = false;        // c > 1
  bool sqpClause = false;            // defect == 0 and c > 1
};

HypothesisReport check_main_hypotheses(const RationalInterval& interval, long long defect);

}  // namespace braidband

#endif
