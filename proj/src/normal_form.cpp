#include "braidband/normal_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidband {

BandWord DualNormalForm::word() const {
  BandWord out = delta_word(n, deltaPower);
  for (const auto& f : factors) out = out.concat(f.word());
  return out;
}

std::string DualNormalForm::str() const {
  std::ostringstream os;
  os << "delta^" << deltaPower;
  for (const auto& f : factors) os << " | " << f.str();
  return os.str();
}

DualNormalForm DualNormalForm::parse(const std::string& text, int n) {
  DualNormalForm nf;
  nf.n = n;
  std::size_t bar = text.find('|');
  std::string head = text.substr(0, bar == std::string::npos ? text.size() : bar);
  std::size_t caret = head.find('^');
  if (head.find("delta") == std::string::npos || caret == std::string::npos)
    throw ParseError("normal form must start with delta^N", 0);
  nf.deltaPower = std::stoll(head.substr(caret + 1));
  std::size_t pos = bar;
  while (pos != std::string::npos) {
    std::size_t next = text.find('|', pos + 1);
    std::string piece = text.substr(pos + 1, (next == std::string::npos ? text.size() : next) - pos - 1);
    nf.factors.push_back(NonCrossingPartition::parse(piece, n));
    pos = next;
  }
  for (const auto& f : nf.factors)
    if (f.isIdentity() || f.isDelta())
      throw ParseError("normal form factors must be proper simples", 0);
  return nf;
}

bool is_left_weighted_pair(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  return nc_meet(complement(a), b).isIdentity();
}

namespace {

// Repairs a factor sequence into left-weighted shape, migrating any factor
// that fills up to delta into the power and dropping factors that drain to
// the identity.
void left_weight(long long& deltaPower, std::vector<NonCrossingPartition>& fs) {
  auto migrate_delta_at = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) fs[j] = tau(fs[j], 1);
    fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
    ++deltaPower;
  };
  // drop identities, absorb deltas first
  for (std::size_t i = 0; i < fs.size();) {
    if (fs[i].isIdentity())
      fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
    else if (fs[i].isDelta())
      migrate_delta_at(i);
    else
      ++i;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      NonCrossingPartition t = nc_meet(complement(fs[i]), fs[i + 1]);
      if (t.isIdentity()) continue;
      fs[i] = mul_simple(fs[i], t);
      fs[i + 1] = quotient_left(t, fs[i + 1]);
      changed = true;
      if (fs[i + 1].isIdentity())
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i + 1));
      if (fs[i].isDelta()) migrate_delta_at(i);
      break;
    }
  }
}

}  // namespace

DualNormalForm left_normal_form(const BandWord& w) {
  int n = w.strands();
  // each letter contributes delta^{p} s with p in {0,-1}
  std::vector<long long> powers;
  std::vector<NonCrossingPartition> simples;
  powers.reserve(w.size());
  simples.reserve(w.size());
  for (const auto& g : w.letters()) {
    if (g.sign > 0) {
      powers.push_back(0);
      simples.push_back(NonCrossingPartition::band(n, g.i, g.j));
    } else {
      powers.push_back(-1);
      simples.push_back(complement_left(NonCrossingPartition::band(n, g.i, g.j)));
    }
  }
  // migrate all delta powers to the front: a factor followed by delta^P
  // becomes delta^P tau(factor, P)
  DualNormalForm nf;
  nf.n = n;
  long long suffix = 0;
  std::vector<NonCrossingPartition> fs;
  fs.reserve(simples.size());
  for (std::size_t idx = simples.size(); idx-- > 0;) {
    fs.push_back(tau(simples[idx], suffix));
    suffix += powers[idx];
  }
  std::reverse(fs.begin(), fs.end());
  nf.deltaPower = suffix;
  left_weight(nf.deltaPower, fs);
  nf.factors = std::move(fs);
  return nf;
}

long long infimum(const BandWord& w) { return left_normal_form(w).deltaPower; }

namespace {

// Applies one cycling step to a normal form; returns the conjugator (a
// simple). The normal form is re-normalized afterwards.
NonCrossingPartition cycle_step(DualNormalForm& nf) {
  NonCrossingPartition head = tau(nf.factors.front(), -nf.deltaPower);
  nf.factors.erase(nf.factors.begin());
  nf.factors.push_back(head);
  left_weight(nf.deltaPower, nf.factors);
  return head;
}

}  // namespace

BandWord cycling(const BandWord& w) {
  DualNormalForm nf = left_normal_form(w);
  if (nf.factors.empty())
    throw std::invalid_argument("cycling: canonical length 0 (pure delta power)");
  NonCrossingPartition head = tau(nf.factors.front(), -nf.deltaPower);
  BandWord out = delta_word(w.strands(), nf.deltaPower);
  for (std::size_t k = 1; k < nf.factors.size(); ++k) out = out.concat(nf.factors[k].word());
  return out.concat(head.word());
}

BandWord decycling(const BandWord& w) {
  DualNormalForm nf = left_normal_form(w);
  if (nf.factors.empty())
    throw std::invalid_argument("decycling: canonical length 0 (pure delta power)");
  NonCrossingPartition tail = tau(nf.factors.back(), nf.deltaPower);
  BandWord out = delta_word(w.strands(), nf.deltaPower).concat(tail.word());
  for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k) out = out.concat(nf.factors[k].word());
  return out;
}

SummitData summit_infimum(const BandWord& w) {
  int n = w.strands();
  SummitData data(n);
  DualNormalForm nf = left_normal_form(w);
  data.summitInf = nf.deltaPower;
  if (nf.factors.empty()) return data;  // pure delta power: already maximal

  const long long certificate = std::max<long long>(1, static_cast<long long>(n) * (n - 1) / 2);
  long long sinceGain = 0;
  BandWord witness(n);
  while (sinceGain < certificate && !nf.factors.empty()) {
    NonCrossingPartition conj = cycle_step(nf);
    witness = witness.concat(conj.word());
    if (nf.deltaPower > data.summitInf) {
      data.summitInf = nf.deltaPower;
      sinceGain = 0;
    } else {
      ++sinceGain;
    }
  }
  data.witness = witness;
  return data;
}

SqpVerdict is_strongly_quasipositive_closure(const BandWord& w) {
  SqpVerdict v{false, summit_infimum(w)};
  v.stronglyQuasipositive = v.summit.summitInf >= 0;
  return v;
}

bool is_rigid(const BandWord& w) {
  DualNormalForm nf = left_normal_form(w);
  if (nf.factors.empty())
    throw std::invalid_argument("is_rigid: canonical length 0 (pure delta power)");
  return is_left_weighted_pair(nf.factors.back(), tau(nf.factors.front(), -nf.deltaPower));
}

}  // namespace braidband
