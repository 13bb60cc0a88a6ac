#include "braidband/properties.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "braidband/dehornoy.hpp"
#include "braidband/foliation.hpp"
#include "braidband/generators.hpp"
#include "braidband/normal_form.hpp"
#include "braidband/surface.hpp"

namespace braidband {

namespace {

std::string show(const BandWord& w) {
  return w.empty() ? std::string("<empty>") : w.str();
}

std::optional<std::string> check_sl_markov(const BandWord& w) {
  long long sl = self_linking(w);
  long long exp = exponent_sum(w);
  int comps = closure_profile(w).componentCount;
  int n = w.strands();

  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int sign : {+1, -1}) {
        BandWord g(n, {BandGen(i, j, sign)});
        BandWord c = conjugate(w, g);
        if (self_linking(c) != sl) return "sl not conjugation-invariant on " + show(w);
        if (exponent_sum(c) != exp) return "exp not conjugation-invariant on " + show(w);
        if (closure_profile(c).componentCount != comps)
          return "components not conjugation-invariant on " + show(w);
      }

  BandWord up = markov_move(w, MarkovMove::StabilizePositive);
  BandWord un = markov_move(w, MarkovMove::StabilizeNegative);
  if (self_linking(up) != sl) return "sl changed under positive stabilization on " + show(w);
  if (self_linking(un) != sl - 2)
    return "sl did not drop by 2 under negative stabilization on " + show(w);
  if (closure_profile(up).componentCount != comps ||
      closure_profile(un).componentCount != comps)
    return "components changed under stabilization on " + show(w);
  if (markov_move(up, MarkovMove::Destabilize) != w)
    return "destabilization does not undo stabilization on " + show(w);
  return std::nullopt;
}

std::optional<std::string> check_lemma33(const BandWord& w) {
  FoliationComplex F = from_bennequin_surface(build_surface(w));
  EulerAndSl es = euler_and_sl(F);
  long long n = w.strands(), m = static_cast<long long>(w.size());
  if (es.chi != n - m) return "foliation chi mismatch on " + show(w);
  if (es.sl != -n + exponent_sum(w)) return "foliation sl mismatch on " + show(w);
  if (es.sl != self_linking(w)) return "foliation sl differs from word sl on " + show(w);
  return std::nullopt;
}

std::optional<std::string> check_sqp_sharp(const BandWord& w) {
  SurfaceStats s = surface_stats(build_surface(w));
  if (s.negativeBands != 0) return "generator emitted a negative band on " + show(w);
  if (self_linking(w) != -s.eulerChar)
    return "sl != -chi for the positive word " + show(w);
  DefectBound d = defect_from_foliation(from_bennequin_surface(build_surface(w)));
  if (d.value != 0) return "positive word has nonzero h- - e- on " + show(w);
  return std::nullopt;
}

std::optional<std::string> check_nf_vs_oracle(std::uint64_t seed, long long index,
                                              const PropertyOptions& opt) {
  std::mt19937_64 rng = item_rng(seed, static_cast<std::uint64_t>(index));
  WordOptions wo;
  wo.n = 2 + static_cast<int>(rng() % static_cast<unsigned>(opt.n - 1));
  wo.maxLen = opt.maxLen;
  auto [u, v] = random_word_pair(rng, wo);
  bool nfEqual = left_normal_form(u) == left_normal_form(v);
  bool oracleEqual = is_trivial(u.concat(v.inverse()));
  if (nfEqual != oracleEqual)
    return "normal-form equality and handle reduction disagree on u=" + show(u) +
           " v=" + show(v);
  return std::nullopt;
}

std::optional<std::string> check_nf_sound(std::uint64_t seed, long long index,
                                          const PropertyOptions& opt) {
  std::mt19937_64 rng = item_rng(seed, static_cast<std::uint64_t>(index));
  WordOptions wo;
  wo.n = 2 + static_cast<int>(rng() % static_cast<unsigned>(opt.n - 1));
  wo.maxLen = opt.maxLen;
  BandWord w = random_band_word(rng, wo);
  DualNormalForm nf = left_normal_form(w);
  for (const auto& f : nf.factors)
    if (f.isIdentity() || f.isDelta()) return "improper factor in normal form of " + show(w);
  for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k)
    if (!is_left_weighted_pair(nf.factors[k], nf.factors[k + 1]))
      return "normal form not left-weighted on " + show(w);
  if (!is_trivial(nf.word().concat(w.inverse())))
    return "normal form re-expansion differs from input on " + show(w);
  return std::nullopt;
}

std::optional<std::string> check_garside(std::uint64_t seed, long long index,
                                         const PropertyOptions& opt) {
  std::mt19937_64 rng = item_rng(seed, static_cast<std::uint64_t>(index));
  int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(opt.n - 1));
  WordOptions wo;
  wo.n = n;
  wo.maxLen = opt.maxLen;
  BandWord w = random_band_word(rng, wo);

  // delta^n is central: both solvers agree the commutator dies
  std::uniform_int_distribution<int> strand(1, n);
  int i = strand(rng), j = strand(rng);
  while (i == j) j = strand(rng);
  if (i > j) std::swap(i, j);
  BandWord g(n, {BandGen(i, j, rng() % 2 ? +1 : -1)});
  BandWord comm = delta_word(n, n).concat(g).concat(delta_word(n, -n)).concat(g.inverse());
  if (!left_normal_form(comm).isTrivial())
    return "full twist commutator has nontrivial normal form at n=" + std::to_string(n);
  if (!is_trivial(comm)) return "full twist commutator nontrivial per handle reduction";

  DualNormalForm nf = left_normal_form(w);
  for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k)
    if (!is_left_weighted_pair(nf.factors[k], nf.factors[k + 1]))
      return "emitted factor pair not left-weighted on " + show(w);

  for (const auto& x : nf.factors) {
    if (tau(x, n) != x) return "tau has period larger than n";
    if (complement(complement(x)) != tau(x, 1))
      return "complement squared is not tau(.,1) on " + x.str();
    if (!mul_simple(x, complement(x)).isDelta())
      return "x * complement(x) is not delta on " + x.str();
  }

  if (!nf.factors.empty()) {
    long long before = nf.deltaPower;
    if (left_normal_form(cycling(w)).deltaPower < before)
      return "infimum decreased under cycling on " + show(w);
  }
  return std::nullopt;
}

std::optional<std::string> check_lemma52(std::uint64_t seed, long long index) {
  std::mt19937_64 rng = item_rng(seed, static_cast<std::uint64_t>(index));
  ComplexOptions co;
  FoliationComplex F = random_complex(rng, co);
  std::vector<std::string> bad = validate_complex(F);
  if (!bad.empty()) return "sampler produced invalid complex: " + bad.front();
  KeyLemmaReport r = key_lemma_check(F);
  if (!r.holds)
    return "valence " + std::to_string(r.minNonFakeValence) + " exceeds bound " +
           std::to_string(r.bound);
  return std::nullopt;
}

std::optional<std::string> check_ab_stab(std::uint64_t seed, long long index) {
  std::mt19937_64 rng = item_rng(seed, static_cast<std::uint64_t>(index));
  ComplexOptions co;
  co.onlyAaAb = true;
  FoliationComplex F = random_complex(rng, co);
  std::vector<std::string> bad = validate_complex(F);
  if (!bad.empty()) return "sampler produced invalid complex: " + bad.front();

  long long chi = euler_and_sl(F).chi;
  int guard = 0;
  while (true) {
    int abTile = 0;
    for (const auto& h : F.hyperbolic)
      if (h.type == RegionType::ab) {
        abTile = h.id;
        break;
      }
    if (abTile == 0) break;
    AbStabilization move = ab_stabilization(F, abTile);
    F = move.result;
    if (euler_and_sl(F).chi != chi) return "chi changed under ab stabilization";
    if (++guard > 100) return "stabilization did not terminate";
  }
  if (F.ellipticCount(-1) != 0) return "negative elliptic points survive all-aa drain";
  for (const auto& h : F.hyperbolic)
    if (h.type != RegionType::aa) return "non-aa region survives the drain";
  return std::nullopt;
}

std::optional<std::string> check_coherence(std::uint64_t seed, long long index) {
  std::mt19937_64 rng = item_rng(seed, static_cast<std::uint64_t>(index));
  CoherenceState init{static_cast<long long>(rng() % 4), static_cast<long long>(rng() % 4)};
  std::vector<CoherenceEvent> events =
      random_coherence_events(rng, init, 1 + static_cast<int>(rng() % 12));
  CoherenceRun run = coherence_run(init, events);
  if (!run.incoherentMonotone) return "incoherent count decreased";

  // exact per-case deltas
  for (std::size_t k = 0; k < events.size(); ++k) {
    long long dc = run.history[k + 1].coherent - run.history[k].coherent;
    long long di = run.history[k + 1].incoherent - run.history[k].incoherent;
    long long wantC = 0, wantI = 0;
    switch (events[k]) {
      case CoherenceEvent::AcSplit: wantI = 1; break;
      case CoherenceEvent::AcMerge: wantC = -1; break;
      case CoherenceEvent::CcSplitIncoherent: wantI = 1; break;
      case CoherenceEvent::CcSplitCoherent: wantI = 1; break;
      case CoherenceEvent::CcMergeCoherent: wantC = -1; break;
      case CoherenceEvent::CcMergeMixed: wantC = -1; break;
      case CoherenceEvent::AaTile: break;
    }
    if (dc != wantC || di != wantI)
      return "transition delta mismatch at event " + to_string(events[k]);
  }

  if (run.sawAcSplit && run.closureHolds)
    return "closure condition held despite an a-arc split";
  return std::nullopt;
}

// All positive products of at most `depth` simples, deduplicated by the
// factor part of their normal form (the delta part acts by tau and never
// moves the infimum).
std::vector<BandWord> bounded_conjugators(int n, int depth) {
  std::vector<NonCrossingPartition> simples = all_noncrossing_partitions(n);
  simples.erase(std::remove_if(simples.begin(), simples.end(),
                               [](const NonCrossingPartition& p) { return p.isIdentity(); }),
                simples.end());
  std::map<std::string, BandWord> seen;
  auto key = [](const BandWord& w) {
    DualNormalForm nf = left_normal_form(w);
    std::string k;
    for (const auto& f : nf.factors) k += f.str() + "|";
    return k;
  };
  std::vector<BandWord> layer{BandWord(n)};
  seen.emplace(key(layer[0]), layer[0]);
  for (int d = 0; d < depth; ++d) {
    std::vector<BandWord> next;
    for (const auto& w : layer)
      for (const auto& s : simples) {
        BandWord cand = w.concat(s.word());
        std::string k = key(cand);
        if (seen.emplace(k, cand).second) next.push_back(cand);
      }
    layer = std::move(next);
  }
  std::vector<BandWord> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

}  // namespace

std::vector<std::string> property_names() {
  return {"sl-markov", "lemma33",  "sqp-sharp", "nf-vs-oracle", "nf-sound",
          "garside",   "lemma52",  "ab-stab",   "coherence",    "sqp-brute"};
}

PropertyReport run_property(const std::string& name, const PropertyOptions& opt) {
  PropertyReport report;
  report.property = name;

  if (name == "sl-markov" || name == "lemma33" || name == "sqp-sharp") {
    report.mode = "exhaustive";
    long long total = count_words(opt.n, opt.maxLen);
    ItemCheck item = [&](long long k) -> std::optional<std::string> {
      BandWord w = word_at(opt.n, opt.maxLen, k);
      if (name == "sl-markov") return check_sl_markov(w);
      if (name == "lemma33") return check_lemma33(w);
      // positive words only: flip all signs positive
      std::vector<BandGen> ls = w.letters();
      for (auto& g : ls) g.sign = +1;
      return check_sqp_sharp(BandWord(w.strands(), std::move(ls)));
    };
    report.outcome = sweep_run(total, item, opt.policy);
    return report;
  }

  if (name == "nf-vs-oracle" || name == "nf-sound" || name == "garside" ||
      name == "lemma52" || name == "ab-stab" || name == "coherence") {
    report.mode = "seeded";
    ItemCheck item = [&](long long k) -> std::optional<std::string> {
      if (name == "nf-vs-oracle") return check_nf_vs_oracle(opt.seed, k, opt);
      if (name == "nf-sound") return check_nf_sound(opt.seed, k, opt);
      if (name == "garside") return check_garside(opt.seed, k, opt);
      if (name == "lemma52") return check_lemma52(opt.seed, k);
      if (name == "ab-stab") return check_ab_stab(opt.seed, k);
      return check_coherence(opt.seed, k);
    };
    report.outcome = sweep_run(opt.count, item, opt.policy);
    return report;
  }

  if (name == "sqp-brute") {
    // memoized serial run: many words share a braid element
    report.mode = "exhaustive";
    std::vector<BandWord> conjugators = bounded_conjugators(opt.n, 4);
    std::map<std::string, bool> memo;  // normal form -> brute verdict
    long long total = count_words(opt.n, opt.maxLen);
    std::vector<std::pair<long long, std::string>> hits;
    for (long long k = 0; k < total; ++k) {
      BandWord w = word_at(opt.n, opt.maxLen, k);
      DualNormalForm nf = left_normal_form(w);
      std::string key = nf.str();
      auto it = memo.find(key);
      bool brute;
      if (it != memo.end()) {
        brute = it->second;
      } else {
        brute = false;
        for (const auto& g : conjugators) {
          if (left_normal_form(conjugate(w, g)).deltaPower >= 0) {
            brute = true;
            break;
          }
        }
        memo.emplace(key, brute);
      }
      bool summit = is_strongly_quasipositive_closure(w).stronglyQuasipositive;
      if (summit != brute)
        hits.emplace_back(k, "summit and brute-force disagree on " + show(w) + " (summit " +
                                 (summit ? "true" : "false") + ")");
    }
    report.outcome.checked = total;
    report.outcome.violationCount = static_cast<long long>(hits.size());
    for (std::size_t k = 0; k < hits.size() && k < 8; ++k)
      report.outcome.violations.push_back("item " + std::to_string(hits[k].first) + ": " +
                                          hits[k].second);
    return report;
  }

  throw std::invalid_argument("unknown property '" + name + "'");
}

}  // namespace braidband
