#include "braidband/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidband {

std::string BennequinSurface::str() const {
  std::ostringstream os;
  os << "disks " << n << '\n';
  for (const auto& b : bands)
    os << "band " << b.i << ' ' << b.j << ' ' << (b.sign > 0 ? '+' : '-') << " slot "
       << b.slot << '\n';
  return os.str();
}

BennequinSurface build_surface(const BandWord& w) {
  BennequinSurface F;
  F.n = w.strands();
  F.bands.reserve(w.size());
  int slot = 0;
  for (const auto& g : w.letters()) F.bands.push_back({g.i, g.j, g.sign, slot++});
  return F;
}

BandWord boundary_word(const BennequinSurface& F) {
  std::vector<BennequinBand> sorted = F.bands;
  std::sort(sorted.begin(), sorted.end(),
            [](const BennequinBand& a, const BennequinBand& b) { return a.slot < b.slot; });
  std::vector<BandGen> letters;
  letters.reserve(sorted.size());
  for (const auto& b : sorted) letters.emplace_back(b.i, b.j, b.sign);
  return BandWord(F.n, std::move(letters));
}

namespace {

std::vector<int> disk_component_labels(const BennequinSurface& F) {
  std::vector<int> parent(F.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& b : F.bands) parent[find(b.i - 1)] = find(b.j - 1);
  std::vector<int> label(F.n);
  for (int d = 0; d < F.n; ++d) label[d] = find(d);
  return label;
}

}  // namespace

SurfaceStats surface_stats(const BennequinSurface& F) {
  SurfaceStats s;
  s.eulerChar = F.n - static_cast<long long>(F.bands.size());
  for (const auto& b : F.bands) (b.sign > 0 ? s.positiveBands : s.negativeBands)++;

  std::vector<int> label = disk_component_labels(F);
  std::vector<int> roots = label;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  s.components = static_cast<int>(roots.size());

  s.boundaryComponents = closure_profile(boundary_word(F)).componentCount;

  if (s.components == 1)
    s.genus = (2 - s.boundaryComponents - s.eulerChar) / 2;
  return s;
}

std::vector<ComponentStats> component_stats(const BennequinSurface& F) {
  std::vector<int> label = disk_component_labels(F);
  std::vector<int> roots = label;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  ClosureProfile profile = closure_profile(boundary_word(F));

  std::vector<ComponentStats> out(roots.size());
  auto slot_of = [&](int root) {
    return static_cast<std::size_t>(
        std::lower_bound(roots.begin(), roots.end(), root) - roots.begin());
  };
  for (int d = 0; d < F.n; ++d) out[slot_of(label[d])].disks.push_back(d + 1);
  for (const auto& b : F.bands) out[slot_of(label[b.i - 1])].bands++;
  // each closure cycle stays inside one surface component
  for (const auto& cyc : profile.cycles) out[slot_of(label[cyc.front() - 1])].boundaryComponents++;
  for (auto& c : out) {
    c.eulerChar = static_cast<long long>(c.disks.size()) - c.bands;
    c.genus = (2 - c.boundaryComponents - c.eulerChar) / 2;
  }
  return out;
}

DefectReport defect_report(const BandWord& w, long long genusOfClosure) {
  if (genusOfClosure < 0)
    throw std::invalid_argument("defect_report: genus must be non-negative");
  DefectReport r;
  SurfaceStats stats = surface_stats(build_surface(w));
  r.sl = self_linking(w);
  r.minusChi = 2 * genusOfClosure - 2 + stats.boundaryComponents;
  if ((r.minusChi - r.sl) % 2 != 0)
    throw std::domain_error("defect_report: parity failure, inconsistent genus/word pair");
  r.defect = (r.minusChi - r.sl) / 2;
  r.negativeBands = stats.negativeBands;
  r.minimalGenusConsistent = r.negativeBands == r.defect;
  r.disconnectedSurfaceHint = stats.components > 1;
  return r;
}

}  // namespace braidband
