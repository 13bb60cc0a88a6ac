#include "braidband/dehornoy.hpp"

#include <cmath>
#include <list>
#include <sstream>

namespace braidband {

std::string to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Less: return "less";
    case OrderVerdict::Equal: return "equal";
    case OrderVerdict::Greater: return "greater";
  }
  return "?";
}

namespace {

using Letters = std::list<ArtinLetter>;

// Finds the handle whose closing letter comes first in the word: a pair of
// opposite-sign occurrences of the same index with nothing of index <= i in
// between. Scanning for the earliest closing letter guarantees the chosen
// handle contains no complete handle inside it.
struct Handle {
  Letters::iterator open;
  Letters::iterator close;
};

std::optional<Handle> first_handle(Letters& w, int n) {
  std::vector<Letters::iterator> lastSeen(n, w.end());
  std::vector<std::size_t> lastPos(n, 0);
  std::size_t pos = 0;
  for (auto it = w.begin(); it != w.end(); ++it, ++pos) {
    int i = it->index;
    auto prev = lastSeen[i - 1];
    if (prev != w.end() && prev->sign == -it->sign) {
      bool clean = true;
      for (int j = 1; j < i && clean; ++j)
        if (lastSeen[j - 1] != w.end() && lastPos[j - 1] > lastPos[i - 1]) clean = false;
      if (clean) return Handle{prev, it};
    }
    lastSeen[i - 1] = it;
    lastPos[i - 1] = pos;
  }
  return std::nullopt;
}

void reduce_handle(Letters& w, const Handle& h) {
  int i = h.open->index;
  int e = h.open->sign;
  for (auto it = std::next(h.open); it != h.close;) {
    if (it->index == i + 1) {
      int d = it->sign;
      it = w.erase(it);
      it = w.insert(it, {i + 1, e});       // rightmost of the triple
      it = w.insert(it, {i, d});
      it = w.insert(it, {i + 1, -e});      // leftmost
      std::advance(it, 3);
    } else {
      ++it;
    }
  }
  w.erase(h.open);
  w.erase(h.close);
}

}  // namespace

ArtinWord handle_reduce(const ArtinWord& w, const DehornoyOptions& opt) {
  Letters letters(w.letters.begin(), w.letters.end());
  long long steps = 0;
  while (auto h = first_handle(letters, w.n)) {
    if (++steps > opt.stepBudget) throw HandleBudgetExceeded(opt.stepBudget);
    reduce_handle(letters, *h);
  }
  ArtinWord out;
  out.n = w.n;
  out.letters.assign(letters.begin(), letters.end());
  return out;
}

namespace {

OrderVerdict verdict_of_reduced(const ArtinWord& w) {
  if (w.letters.empty()) return OrderVerdict::Equal;
  int minIndex = w.n;
  for (const auto& l : w.letters) minIndex = std::min(minIndex, l.index);
  for (const auto& l : w.letters)
    if (l.index == minIndex)
      return l.sign > 0 ? OrderVerdict::Greater : OrderVerdict::Less;
  return OrderVerdict::Equal;  // unreachable
}

}  // namespace

OrderVerdict dehornoy_compare(const BandWord& u, const BandWord& v,
                              const DehornoyOptions& opt) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("dehornoy_compare: strand count mismatch");
  ArtinWord reduced = handle_reduce(band_to_artin(u.inverse().concat(v)), opt);
  return verdict_of_reduced(reduced);
}

bool is_trivial(const BandWord& w, const DehornoyOptions& opt) {
  return dehornoy_compare(w, BandWord(w.strands()), opt) == OrderVerdict::Equal;
}

namespace {

// True iff delta^{nk} <= w in the Dehornoy order.
bool full_twist_below(const BandWord& w, long long k, const DehornoyOptions& opt) {
  BandWord twist = delta_word(w.strands(), w.strands() * k);
  return dehornoy_compare(twist, w, opt) != OrderVerdict::Less;
}

}  // namespace

long long dehornoy_floor(const BandWord& w, const DehornoyOptions& opt) {
  long long seed = std::llabs(exponent_sum(w));
  long long step = std::max<long long>(1, seed);
  long long lo, hi;  // invariant: twist^lo <= w < twist^hi
  if (full_twist_below(w, 0, opt)) {
    lo = 0;
    hi = step;
    while (full_twist_below(w, hi, opt)) {
      lo = hi;
      hi *= 2;
    }
  } else {
    hi = 0;
    lo = -step;
    while (!full_twist_below(w, lo, opt)) {
      hi = lo;
      lo *= 2;
    }
  }
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (full_twist_below(w, mid, opt))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

RationalInterval RationalInterval::closed(Rational lo, Rational hi) {
  RationalInterval r;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  return r;
}

RationalInterval RationalInterval::aboveStrict(Rational lo) {
  RationalInterval r;
  r.lo = std::move(lo);
  r.loStrict = true;
  return r;
}

bool RationalInterval::establishesGreaterThan(const Rational& threshold) const {
  if (!lo) return false;
  return *lo > threshold || (*lo == threshold && loStrict);
}

std::string RationalInterval::str() const {
  std::ostringstream os;
  if (!lo)
    os << "(-inf";
  else
    os << (loStrict ? '(' : '[') << lo->str();
  os << ", ";
  if (!hi)
    os << "+inf)";
  else
    os << hi->str() << (hiStrict ? ')' : ']');
  return os.str();
}

RationalInterval fdtc_interval(const BandWord& w, const DehornoyOptions& opt) {
  long long m = dehornoy_floor(w, opt);
  return RationalInterval::closed(Rational(m), Rational(m + 1));
}

RationalInterval propagate_product(const RationalInterval& a, const RationalInterval& b) {
  RationalInterval r;
  if (a.lo && b.lo) {
    r.lo = *a.lo + *b.lo - Rational(1);
    r.loStrict = a.loStrict || b.loStrict;
  }
  if (a.hi && b.hi) {
    r.hi = *a.hi + *b.hi + Rational(1);
    r.hiStrict = a.hiStrict || b.hiStrict;
  }
  return r;
}

RationalInterval propagate_sqp_insert(const RationalInterval& before) {
  RationalInterval r;
  r.lo = before.lo;
  r.loStrict = before.loStrict;
  return r;
}

RationalInterval propagate_sqp_delete(const RationalInterval& before) {
  RationalInterval r;
  r.hi = before.hi;
  r.hiStrict = before.hiStrict;
  return r;
}

RationalInterval propagate_negative_band_lower(long long negativeBands, int strands) {
  if (negativeBands < 0 || strands < 1)
    throw std::invalid_argument("propagate_negative_band_lower: malformed inputs");
  return RationalInterval::aboveStrict(Rational(-(negativeBands + 1), strands));
}

HypothesisReport check_main_hypotheses(const RationalInterval& interval, long long defect) {
  if (defect < 0) throw std::invalid_argument("check_main_hypotheses: defect must be >= 0");
  HypothesisReport r;
  r.largeTwistForDefect =
      interval.establishesGreaterThan(Rational(defect, 2) + Rational(1));
  r.twistAboveOne = interval.establishesGreaterThan(Rational(1));
  r.sqpClause = defect == 0 && r.twistAboveOne;
  return r;
}

}  // namespace braidband
