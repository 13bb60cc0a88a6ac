#include "braidband/foliation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace braidband {

std::string to_string(RegionType t) {
  switch (t) {
    case RegionType::aa: return "aa";
    case RegionType::ab: return "ab";
    case RegionType::bb: return "bb";
    case RegionType::ac: return "ac";
    case RegionType::bc: return "bc";
    case RegionType::cc: return "cc";
  }
  return "?";
}

std::optional<RegionType> region_type_from_string(const std::string& s) {
  if (s == "aa") return RegionType::aa;
  if (s == "ab") return RegionType::ab;
  if (s == "bb") return RegionType::bb;
  if (s == "ac") return RegionType::ac;
  if (s == "bc") return RegionType::bc;
  if (s == "cc") return RegionType::cc;
  return std::nullopt;
}

long long FoliationComplex::ellipticCount(int sign) const {
  long long c = 0;
  for (const auto& e : elliptic) c += e.sign == sign;
  return c;
}

long long FoliationComplex::hyperbolicCount(int sign) const {
  long long c = 0;
  for (const auto& h : hyperbolic) c += h.sign == sign;
  return c;
}

const EllipticPoint* FoliationComplex::findElliptic(int id) const {
  for (const auto& e : elliptic)
    if (e.id == id) return &e;
  return nullptr;
}

const HyperbolicPoint* FoliationComplex::findHyperbolic(int id) const {
  for (const auto& h : hyperbolic)
    if (h.id == id) return &h;
  return nullptr;
}

const Region* FoliationComplex::findRegion(int hyperbolicId) const {
  for (const auto& r : regions)
    if (r.hyperbolicId == hyperbolicId) return &r;
  return nullptr;
}

std::string FoliationComplex::str() const {
  std::ostringstream os;
  std::vector<std::string> bs = bindings;
  std::sort(bs.begin(), bs.end());
  os << "bindings";
  for (const auto& b : bs) os << ' ' << b;
  os << '\n';

  std::vector<EllipticPoint> es = elliptic;
  std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& e : es)
    os << "elliptic " << e.id << ' ' << (e.sign > 0 ? '+' : '-') << ' ' << e.binding << '\n';

  std::vector<HyperbolicPoint> hs = hyperbolic;
  std::sort(hs.begin(), hs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& h : hs)
    os << "hyperbolic " << h.id << ' ' << (h.sign > 0 ? '+' : '-') << ' ' << to_string(h.type)
       << '\n';

  std::vector<Region> rs = regions;
  std::sort(rs.begin(), rs.end(),
            [](const auto& a, const auto& b) { return a.hyperbolicId < b.hyperbolicId; });
  for (const auto& r : rs) {
    os << "region " << r.hyperbolicId;
    std::vector<int> corners = r.ellipticCorners;
    std::sort(corners.begin(), corners.end());
    for (int c : corners) os << ' ' << c;
    os << '\n';
  }

  os << "flags";
  if (essential) os << " essential";
  if (minimalGenusAsserted) os << " minimalGenus";
  os << '\n';
  return os.str();
}

FoliationComplex parse_foliation(const std::string& text) {
  FoliationComplex F;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw FoliationError("line " + std::to_string(lineNo) + ": " + why);
    };
    if (head == "bindings") {
      std::string b;
      while (ls >> b) F.bindings.push_back(b);
    } else if (head == "elliptic") {
      EllipticPoint e;
      std::string sign;
      if (!(ls >> e.id >> sign >> e.binding)) fail("expected: elliptic <id> <+|-> <binding>");
      if (sign != "+" && sign != "-") fail("elliptic sign must be + or -");
      e.sign = sign == "+" ? +1 : -1;
      F.elliptic.push_back(e);
    } else if (head == "hyperbolic") {
      HyperbolicPoint h;
      std::string sign, type;
      if (!(ls >> h.id >> sign >> type)) fail("expected: hyperbolic <id> <+|-> <type>");
      if (sign != "+" && sign != "-") fail("hyperbolic sign must be + or -");
      h.sign = sign == "+" ? +1 : -1;
      auto t = region_type_from_string(type);
      if (!t) fail("unknown region type '" + type + "'");
      h.type = *t;
      F.hyperbolic.push_back(h);
    } else if (head == "region") {
      Region r;
      if (!(ls >> r.hyperbolicId)) fail("expected: region <hyperbolicId> [corners...]");
      int c;
      while (ls >> c) r.ellipticCorners.push_back(c);
      F.regions.push_back(std::move(r));
    } else if (head == "flags") {
      std::string f;
      while (ls >> f) {
        if (f == "essential")
          F.essential = true;
        else if (f == "minimalGenus")
          F.minimalGenusAsserted = true;
        else
          fail("unknown flag '" + f + "'");
      }
    } else {
      fail("unknown section '" + head + "'");
    }
  }
  return F;
}

FoliationComplex load_foliation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FoliationError("cannot open foliation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_foliation(buf.str());
}

std::vector<std::string> validate_complex(const FoliationComplex& F) {
  std::vector<std::string> out;
  auto bad = [&](const std::string& msg) { out.push_back(msg); };

  std::set<std::string> bindingSet;
  for (const auto& b : F.bindings) {
    if (b.empty()) bad("empty binding label");
    if (!bindingSet.insert(b).second) bad("duplicate binding label " + b);
  }

  std::set<int> eids;
  for (const auto& e : F.elliptic) {
    if (e.id <= 0) bad("elliptic id must be positive");
    if (!eids.insert(e.id).second) bad("duplicate elliptic id " + std::to_string(e.id));
    if (e.sign != 1 && e.sign != -1) bad("elliptic sign out of range");
    if (!bindingSet.count(e.binding))
      bad("elliptic " + std::to_string(e.id) + " on unknown binding " + e.binding);
  }

  std::set<int> hids;
  for (const auto& h : F.hyperbolic) {
    if (h.id <= 0) bad("hyperbolic id must be positive");
    if (!hids.insert(h.id).second) bad("duplicate hyperbolic id " + std::to_string(h.id));
    if (h.sign != 1 && h.sign != -1) bad("hyperbolic sign out of range");
  }

  std::set<int> withRegion;
  for (const auto& r : F.regions) {
    const HyperbolicPoint* h = F.findHyperbolic(r.hyperbolicId);
    if (!h) {
      bad("region references unknown hyperbolic " + std::to_string(r.hyperbolicId));
      continue;
    }
    if (!withRegion.insert(r.hyperbolicId).second) {
      bad("hyperbolic " + std::to_string(r.hyperbolicId) +
          " lies in more than one region");
      continue;
    }
    int pos = 0, neg = 0;
    std::set<int> negIds;
    bool refsOk = true;
    for (int c : r.ellipticCorners) {
      const EllipticPoint* e = F.findElliptic(c);
      if (!e) {
        bad("region " + std::to_string(r.hyperbolicId) + " references unknown elliptic " +
            std::to_string(c));
        refsOk = false;
        continue;
      }
      if (e->sign > 0) {
        ++pos;
      } else {
        ++neg;
        negIds.insert(c);
      }
    }
    if (!refsOk) continue;
    std::string rid = std::to_string(r.hyperbolicId);
    // corner sign rules follow the region anatomy: every a-arc endpoint on
    // the binding is a positive elliptic point, every b-arc joins one
    // positive and one negative elliptic point
    switch (h->type) {
      case RegionType::aa:
      case RegionType::ac:
        if (neg > 0) bad("a-arc endpoint must be positive elliptic (region " + rid + ")");
        break;
      case RegionType::ab:
      case RegionType::bc:
        if (neg != 1)
          bad(to_string(h->type) + "-region " + rid +
              " needs exactly one negative elliptic corner");
        if (pos < 1)
          bad(to_string(h->type) + "-region " + rid + " needs a positive elliptic corner");
        break;
      case RegionType::bb:
        if (neg != 2 || negIds.size() != 2)
          bad("bb-region " + rid + " needs two distinct negative elliptic corners");
        if (pos < 1) bad("bb-region " + rid + " needs a positive elliptic corner");
        break;
      case RegionType::cc:
        if (pos + neg > 0) bad("cc-region " + rid + " cannot have elliptic corners");
        break;
    }
  }
  for (const auto& h : F.hyperbolic)
    if (!withRegion.count(h.id))
      bad("hyperbolic " + std::to_string(h.id) + " has no region");

  return out;
}

void require_valid(const FoliationComplex& F) {
  std::vector<std::string> v = validate_complex(F);
  if (v.empty()) return;
  std::string msg = "invalid foliation complex:";
  for (std::size_t k = 0; k < v.size() && k < 4; ++k) msg += "\n  " + v[k];
  if (v.size() > 4) msg += "\n  ... (" + std::to_string(v.size() - 4) + " more)";
  throw FoliationError(msg);
}

FoliationComplex from_bennequin_surface(const BennequinSurface& S) {
  FoliationComplex F;
  F.bindings = {"C0"};
  for (int d = 1; d <= S.n; ++d) F.elliptic.push_back({d, +1, "C0"});
  int hid = 0;
  for (const auto& b : S.bands) {
    ++hid;
    F.hyperbolic.push_back({hid, b.sign, RegionType::aa});
    F.regions.push_back({hid, {b.i, b.j}});
  }
  F.essential = true;  // no b-arcs at all
  F.minimalGenusAsserted = false;
  return F;
}

EulerAndSl euler_and_sl(const FoliationComplex& F) {
  require_valid(F);
  EulerAndSl r;
  long long ep = F.ellipticCount(+1), em = F.ellipticCount(-1);
  long long hp = F.hyperbolicCount(+1), hm = F.hyperbolicCount(-1);
  r.chi = (ep + em) - (hp + hm);
  r.sl = -(ep - em) + (hp - hm);
  return r;
}

DefectBound defect_from_foliation(const FoliationComplex& F) {
  require_valid(F);
  return {F.hyperbolicCount(-1) - F.ellipticCount(-1), F.minimalGenusAsserted};
}

long long ExtendedGraph::valence(int vertexId) const {
  long long v = 0;
  for (const auto& e : edges) {
    v += e.a == vertexId;
    v += e.b == vertexId;
  }
  return v;
}

std::optional<long long> ExtendedGraph::minNonFakeValence() const {
  std::optional<long long> best;
  for (int v : nonFakeVertices) {
    long long val = valence(v);
    if (!best || val < *best) best = val;
  }
  return best;
}

ExtendedGraph extended_graph(const FoliationComplex& F) {
  require_valid(F);
  ExtendedGraph G;
  for (const auto& e : F.elliptic)
    if (e.sign < 0) G.nonFakeVertices.push_back(e.id);
  std::sort(G.nonFakeVertices.begin(), G.nonFakeVertices.end());

  std::vector<Region> rs = F.regions;
  std::sort(rs.begin(), rs.end(),
            [](const auto& a, const auto& b) { return a.hyperbolicId < b.hyperbolicId; });
  for (const auto& r : rs) {
    const HyperbolicPoint* h = F.findHyperbolic(r.hyperbolicId);
    if (h->sign > 0) continue;
    if (h->type != RegionType::ab && h->type != RegionType::bb && h->type != RegionType::bc)
      continue;
    std::vector<int> negCorners;
    for (int c : r.ellipticCorners)
      if (F.findElliptic(c)->sign < 0) negCorners.push_back(c);
    std::sort(negCorners.begin(), negCorners.end());
    GraphEdge edge;
    edge.negativeHyperbolicId = r.hyperbolicId;
    edge.a = negCorners.empty() ? -(++G.fakeVertexCount) : negCorners[0];
    edge.b = negCorners.size() >= 2 ? negCorners[1] : -(++G.fakeVertexCount);
    G.edges.push_back(edge);
  }
  return G;
}

KeyLemmaReport key_lemma_check(const FoliationComplex& F) {
  require_valid(F);
  long long em = F.ellipticCount(-1);
  long long hm = F.hyperbolicCount(-1);
  if (em < 1) throw std::invalid_argument("key_lemma_check: needs a negative elliptic point");
  if (!F.minimalGenusAsserted)
    throw std::invalid_argument("key_lemma_check: minimal genus must be asserted");
  if (hm - em < 0)
    throw std::invalid_argument("key_lemma_check: defect h- - e- must be non-negative");
  ExtendedGraph G = extended_graph(F);
  KeyLemmaReport r;
  r.minNonFakeValence = *G.minNonFakeValence();
  r.bound = (hm - em) + 2;
  r.holds = r.minNonFakeValence <= r.bound;
  return r;
}

Rational fdtc_upper_bound(const FoliationComplex& F, const std::string& binding) {
  require_valid(F);
  if (!F.essential)
    throw std::invalid_argument("fdtc_upper_bound: complex must be flagged essential");
  std::set<int> onC;
  for (const auto& e : F.elliptic)
    if (e.sign < 0 && e.binding == binding) onC.insert(e.id);
  if (onC.empty())
    throw std::invalid_argument("fdtc_upper_bound: no negative elliptic point on binding " +
                                 binding);
  long long adjacent = 0;
  for (const auto& r : F.regions) {
    const HyperbolicPoint* h = F.findHyperbolic(r.hyperbolicId);
    if (h->sign > 0) continue;
    bool touches = false;
    for (int c : r.ellipticCorners) touches = touches || onC.count(c);
    adjacent += touches;
  }
  return Rational(adjacent, static_cast<long long>(onC.size()));
}

std::string NegativeEllipticConstraint::str() const {
  switch (kind) {
    case Kind::None: return "no constraint";
    case Kind::Zero: return "e_C = 0";
    case Kind::LessThan: return "e_C < " + std::to_string(k);
  }
  return "?";
}

NegativeEllipticConstraint negative_elliptic_bound(const Rational& cLower, long long defect,
                                                   long long k) {
  if (defect < 0) throw std::invalid_argument("negative_elliptic_bound: defect must be >= 0");
  if (k < 1) throw std::invalid_argument("negative_elliptic_bound: k must be >= 1");
  NegativeEllipticConstraint c;
  if (defect == 0) {
    if (cLower > Rational(1)) c.kind = NegativeEllipticConstraint::Kind::Zero;
    return c;
  }
  if (cLower > Rational(defect, k) + Rational(1)) {
    if (k == 1) {
      c.kind = NegativeEllipticConstraint::Kind::Zero;
    } else {
      c.kind = NegativeEllipticConstraint::Kind::LessThan;
      c.k = k;
    }
  }
  return c;
}

AbStabilization ab_stabilization(const FoliationComplex& F, int hyperbolicId) {
  require_valid(F);
  const HyperbolicPoint* h = F.findHyperbolic(hyperbolicId);
  if (!h) throw std::invalid_argument("ab_stabilization: unknown hyperbolic id");
  if (h->type != RegionType::ab)
    throw std::invalid_argument("ab_stabilization: region is not an ab-tile");
  const Region* r = F.findRegion(hyperbolicId);

  std::set<int> negCorners;
  for (int c : r->ellipticCorners)
    if (F.findElliptic(c)->sign < 0) negCorners.insert(c);
  if (negCorners.size() != 1)
    throw std::invalid_argument(
        "ab_stabilization: tile must meet exactly one negative elliptic point");
  int v = *negCorners.begin();

  AbStabilization out;
  out.stabilizationSign = -h->sign;
  out.removedElliptic = v;
  out.removedHyperbolic = hyperbolicId;

  FoliationComplex R;
  R.bindings = F.bindings;
  R.essential = F.essential;
  R.minimalGenusAsserted = F.minimalGenusAsserted;
  for (const auto& e : F.elliptic)
    if (e.id != v) R.elliptic.push_back(e);

  for (const auto& hh : F.hyperbolic) {
    if (hh.id == hyperbolicId) continue;
    HyperbolicPoint copy = hh;
    const Region* reg = F.findRegion(hh.id);
    bool atV = std::find(reg->ellipticCorners.begin(), reg->ellipticCorners.end(), v) !=
               reg->ellipticCorners.end();
    if (atV) {
      switch (hh.type) {
        case RegionType::ab: copy.type = RegionType::aa; break;
        case RegionType::bb: copy.type = RegionType::ab; break;
        case RegionType::bc: copy.type = RegionType::ac; break;
        default:
          throw std::invalid_argument(
              "ab_stabilization: region of type " + to_string(hh.type) +
              " cannot meet a negative elliptic point");
      }
    }
    R.hyperbolic.push_back(copy);
  }

  for (const auto& reg : F.regions) {
    if (reg.hyperbolicId == hyperbolicId) continue;
    Region copy;
    copy.hyperbolicId = reg.hyperbolicId;
    for (int c : reg.ellipticCorners)
      if (c != v) copy.ellipticCorners.push_back(c);
    R.regions.push_back(std::move(copy));
  }

  std::vector<std::string> broken = validate_complex(R);
  if (!broken.empty())
    throw std::invalid_argument("ab_stabilization: move leaves an inconsistent complex: " +
                                broken.front());
  out.result = std::move(R);
  return out;
}

std::string to_string(CoherenceEvent e) {
  switch (e) {
    case CoherenceEvent::AcSplit: return "ac-split";
    case CoherenceEvent::AcMerge: return "ac-merge";
    case CoherenceEvent::CcSplitIncoherent: return "cc-split-incoherent";
    case CoherenceEvent::CcSplitCoherent: return "cc-split-coherent";
    case CoherenceEvent::CcMergeCoherent: return "cc-merge-coherent";
    case CoherenceEvent::CcMergeMixed: return "cc-merge-mixed";
    case CoherenceEvent::AaTile: return "aa";
  }
  return "?";
}

std::optional<CoherenceEvent> coherence_event_from_string(const std::string& s) {
  if (s == "ac-split") return CoherenceEvent::AcSplit;
  if (s == "ac-merge") return CoherenceEvent::AcMerge;
  if (s == "cc-split-incoherent") return CoherenceEvent::CcSplitIncoherent;
  if (s == "cc-split-coherent") return CoherenceEvent::CcSplitCoherent;
  if (s == "cc-merge-coherent") return CoherenceEvent::CcMergeCoherent;
  if (s == "cc-merge-mixed") return CoherenceEvent::CcMergeMixed;
  if (s == "aa") return CoherenceEvent::AaTile;
  return std::nullopt;
}

CoherenceRun coherence_run(CoherenceState initial, const std::vector<CoherenceEvent>& events) {
  if (initial.coherent < 0 || initial.incoherent < 0)
    throw std::domain_error("coherence_run: negative initial counts");
  CoherenceRun run;
  CoherenceState s = initial;
  run.history.push_back(s);
  auto need = [&](long long have, long long want, CoherenceEvent e) {
    if (have < want)
      throw std::domain_error("coherence_run: event " + to_string(e) +
                              " applied to an empty pool");
  };
  for (CoherenceEvent e : events) {
    switch (e) {
      case CoherenceEvent::AcSplit:
        s.incoherent += 1;
        run.sawAcSplit = true;
        break;
      case CoherenceEvent::AcMerge:
        need(s.coherent, 1, e);
        s.coherent -= 1;
        break;
      case CoherenceEvent::CcSplitIncoherent:
        need(s.incoherent, 1, e);
        s.incoherent += 1;
        break;
      case CoherenceEvent::CcSplitCoherent:
        need(s.coherent, 1, e);
        s.incoherent += 1;
        break;
      case CoherenceEvent::CcMergeCoherent:
        need(s.coherent, 2, e);
        s.coherent -= 1;
        break;
      case CoherenceEvent::CcMergeMixed:
        need(s.coherent, 1, e);
        need(s.incoherent, 1, e);
        s.coherent -= 1;
        break;
      case CoherenceEvent::AaTile:
        break;
    }
    if (s.incoherent < run.history.back().incoherent) run.incoherentMonotone = false;
    run.history.push_back(s);
  }
  run.closureHolds = run.history.back().incoherent == run.history.front().incoherent;
  return run;
}

}  // namespace braidband
