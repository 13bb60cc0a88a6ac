#ifndef BRAIDBAND_SURFACE_HPP
#define BRAIDBAND_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidband/band_word.hpp"

namespace braidband {

/// Bennequin surface of a band word: n disks plus one twisted band per
/// letter. `slot` records the letter's position in the word, standing in for
/// the page parameter at which the band is attached.
struct BennequinBand {
  int i = 1;
  int j = 2;
  int sign = +1;
  int slot = 0;
  friend bool operator==(const BennequinBand&, const BennequinBand&) = default;
};

struct BennequinSurface {
  int n = 1;  // disk count
  std::vector<BennequinBand> bands;  // slots strictly increasing

  std::string str() const;
};

struct SurfaceStats {
  long long eulerChar = 0;
  int components = 1;
  int boundaryComponents = 1;
  std::optional<long long> genus;  // only for connected surfaces
  long long negativeBands = 0;
  long long positiveBands = 0;
};

/// Per connected component of the surface: which disks, how many bands, and
/// the component's own Euler characteristic / boundary count / genus.
struct ComponentStats {
  std::vector<int> disks;
  long long bands = 0;
  long long eulerChar = 0;
  int boundaryComponents = 0;
  long long genus = 0;
};

struct DefectReport {
  long long sl = 0;
  long long minusChi = 0;  // -chi of the closure: 2g - 2 + |components|
  long long defect = 0;    // (minusChi - sl) / 2
  long long negativeBands = 0;
  bool minimalGenusConsistent = false;  // negativeBands == defect
  /// Advisory only: a disconnected Bennequin surface forces Alexander
  /// polynomial zero, hence a non-fibered closure.
  bool disconnectedSurfaceHint = false;
};

BennequinSurface build_surface(const BandWord& w);

/// The word the surface came from (bands back to letters in slot order).
BandWord boundary_word(const BennequinSurface& F);

SurfaceStats surface_stats(const BennequinSurface& F);

std::vector<ComponentStats> component_stats(const BennequinSurface& F);

/// Defect bookkeeping for the closure of w given its (externally supplied)
/// topological genus. Throws std::domain_error when the parity of
/// minusChi - sl is odd, which signals an inconsistent genus/word pair.
DefectReport defect_report(const BandWord& w, long long genusOfClosure);

}  // namespace braidband

#endif
