#ifndef BRAIDBAND_FOLIATION_HPP
#define BRAIDBAND_FOLIATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidband/rational.hpp"
#include "braidband/surface.hpp"

namespace braidband {

enum class RegionType { aa, ab, bb, ac, bc, cc };

std::string to_string(RegionType t);
std::optional<RegionType> region_type_from_string(const std::string& s);

struct EllipticPoint {
  int id = 0;  // positive integer, unique
  int sign = +1;
  std::string binding;
};

struct HyperbolicPoint {
  int id = 0;
  int sign = +1;
  RegionType type = RegionType::aa;
};

struct Region {
  int hyperbolicId = 0;
  std::vector<int> ellipticCorners;
};

/// Combinatorial open-book-foliation complex: signed elliptic points on named
/// binding components, signed typed hyperbolic points, and one region per
/// hyperbolic point listing its elliptic corners. Geometry (page embeddings,
/// leaf order around regions) is not modeled; every implemented formula needs
/// only this data.
struct FoliationComplex {
  std::vector<std::string> bindings;
  std::vector<EllipticPoint> elliptic;
  std::vector<HyperbolicPoint> hyperbolic;
  std::vector<Region> regions;
  bool essential = false;             // caller-asserted: all b-arcs essential
  bool minimalGenusAsserted = false;  // caller-asserted: g(F) = g(K,[F])

  long long ellipticCount(int sign) const;
  long long hyperbolicCount(int sign) const;

  const EllipticPoint* findElliptic(int id) const;
  const HyperbolicPoint* findHyperbolic(int id) const;
  const Region* findRegion(int hyperbolicId) const;

  /// Deterministic text form (sorted ids); round-trips through
  /// parse_foliation.
  std::string str() const;
};

FoliationComplex parse_foliation(const std::string& text);
FoliationComplex load_foliation(const std::string& path);

/// Empty iff the complex satisfies every structural invariant: unique ids,
/// resolvable references, a one-to-one match between hyperbolic points and
/// regions, and per-type corner sign rules (aa/ac only positive corners,
/// ab/bc exactly one negative corner plus a positive one, bb two distinct
/// negative corners plus a positive one, cc no corners).
std::vector<std::string> validate_complex(const FoliationComplex& F);

class FoliationError : public std::runtime_error {
 public:
  explicit FoliationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Throws FoliationError listing the first violations when F is invalid.
void require_valid(const FoliationComplex& F);

/// The foliation of the Bennequin surface: one positive elliptic point per
/// disk on a single binding component and one aa-region per band carrying the
/// band's sign.
FoliationComplex from_bennequin_surface(const BennequinSurface& F);

struct EulerAndSl {
  long long chi = 0;  // (e+ + e-) - (h+ + h-)
  long long sl = 0;   // -(e+ - e-) + (h+ - h-)
};

EulerAndSl euler_and_sl(const FoliationComplex& F);

/// h- - e-; exact defect when the minimal-genus flag is asserted, otherwise
/// an upper bound for it.
struct DefectBound {
  long long value = 0;
  bool exact = false;
};

DefectBound defect_from_foliation(const FoliationComplex& F);

/// Graph on the negative elliptic points: one edge per negative ab/bb/bc
/// region, threaded through that region's negative hyperbolic point. Missing
/// negative-elliptic endpoints are fresh valence-1 fake vertices (ids -1,
/// -2, ...). Isolated negative elliptic points stay as vertices.
struct GraphEdge {
  int a = 0;
  int b = 0;
  int negativeHyperbolicId = 0;
};

struct ExtendedGraph {
  std::vector<int> nonFakeVertices;  // negative elliptic ids, sorted
  int fakeVertexCount = 0;
  std::vector<GraphEdge> edges;

  long long valence(int vertexId) const;  // self-loops count twice
  /// Minimum valence over non-fake vertices; nullopt when there are none.
  std::optional<long long> minNonFakeValence() const;
};

ExtendedGraph extended_graph(const FoliationComplex& F);

struct KeyLemmaReport {
  long long minNonFakeValence = 0;
  long long bound = 0;  // (h- - e-) + 2
  bool holds = false;
};

/// Checks the small-valence guarantee on the extended graph. Preconditions
/// (throws std::invalid_argument otherwise): e- >= 1, minimal genus asserted,
/// h- - e- >= 0.
KeyLemmaReport key_lemma_check(const FoliationComplex& F);

/// N/n where n counts negative elliptic points on binding C and N counts
/// negative hyperbolic points sharing a region with any of them. Requires the
/// essential flag and at least one negative elliptic point on C.
Rational fdtc_upper_bound(const FoliationComplex& F, const std::string& binding);

/// Constraint on e_C derived from a twist-coefficient lower bound:
/// cLower > defect/k + 1 with defect > 0 forces e_C < k; cLower > 1 with
/// defect = 0 forces e_C = 0; otherwise no constraint.
struct NegativeEllipticConstraint {
  enum class Kind { None, Zero, LessThan } kind = Kind::None;
  long long k = 0;  // meaningful for LessThan

  std::string str() const;
};

NegativeEllipticConstraint negative_elliptic_bound(const Rational& cLower, long long defect,
                                                   long long k);

/// Removes an ab-tile together with its negative elliptic point; the other
/// regions at that point retype ab->aa, bb->ab, bc->ac. The move is a braid
/// stabilization whose sign is opposite to the tile's hyperbolic sign.
struct AbStabilization {
  FoliationComplex result;
  int stabilizationSign = +1;  // +1 = positive stabilization (tile was negative)
  int removedElliptic = 0;
  int removedHyperbolic = 0;
};

AbStabilization ab_stabilization(const FoliationComplex& F, int hyperbolicId);

/// c-circle bookkeeping for the monodromy-closure argument.
enum class CoherenceEvent {
  AcSplit,            // a-arc splits off an incoherent circle
  AcMerge,            // a coherent circle merges into an a-arc
  CcSplitIncoherent,  // incoherent circle splits into two incoherent
  CcSplitCoherent,    // coherent circle splits into coherent + incoherent
  CcMergeCoherent,    // two coherent circles merge into one coherent
  CcMergeMixed,       // coherent + incoherent merge into incoherent
  AaTile,             // no circles involved
};

std::string to_string(CoherenceEvent e);
std::optional<CoherenceEvent> coherence_event_from_string(const std::string& s);

struct CoherenceState {
  long long coherent = 0;
  long long incoherent = 0;
};

struct CoherenceRun {
  std::vector<CoherenceState> history;  // initial state first
  bool incoherentMonotone = true;
  bool sawAcSplit = false;
  /// Page 0 and page 1 are identified by the monodromy, so a closed surface
  /// needs the incoherent count to return to its initial value.
  bool closureHolds = false;
};

/// Replays the transition table; throws std::domain_error when an event needs
/// a circle kind that is not present.
CoherenceRun coherence_run(CoherenceState initial, const std::vector<CoherenceEvent>& events);

}  // namespace braidband

#endif
