#include "braidband/noncrossing.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidband {

namespace {

void sort_blocks(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

NonCrossingPartition::NonCrossingPartition(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("NonCrossingPartition: n must be >= 1");
  blocks_.reserve(n);
  for (int s = 1; s <= n; ++s) blocks_.push_back({s});
  index();
}

NonCrossingPartition::NonCrossingPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("NonCrossingPartition: n must be >= 1");
  sort_blocks(blocks_);
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("NonCrossingPartition: empty block");
    for (int s : b) {
      if (s < 1 || s > n) throw std::invalid_argument("NonCrossingPartition: strand out of range");
      if (seen[s - 1]++) throw std::invalid_argument("NonCrossingPartition: strand repeated");
    }
  }
  for (int s = 0; s < n; ++s)
    if (!seen[s]) throw std::invalid_argument("NonCrossingPartition: strand missing");
  index();
  // crossing check: a < b < c < d with a,c together, b,d together, blocks distinct
  for (int a = 1; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c) {
      if (!sameBlock(a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        if (sameBlock(a, b)) continue;
        for (int d = c + 1; d <= n; ++d)
          if (sameBlock(b, d))
            throw std::invalid_argument("NonCrossingPartition: blocks cross");
      }
    }
}

void NonCrossingPartition::index() {
  blockIndex_.assign(n_, -1);
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int s : blocks_[k]) blockIndex_[s - 1] = static_cast<int>(k);
}

NonCrossingPartition NonCrossingPartition::delta(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return NonCrossingPartition(n, {all});
}

NonCrossingPartition NonCrossingPartition::band(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("NonCrossingPartition::band: need 1 <= i < j <= n");
  std::vector<std::vector<int>> blocks{{i, j}};
  for (int s = 1; s <= n; ++s)
    if (s != i && s != j) blocks.push_back({s});
  return NonCrossingPartition(n, std::move(blocks));
}

bool NonCrossingPartition::isIdentity() const {
  return static_cast<int>(blocks_.size()) == n_;
}

StrandPermutation NonCrossingPartition::permutation() const {
  std::vector<int> img(n_);
  for (const auto& b : blocks_)
    for (std::size_t k = 0; k < b.size(); ++k) img[b[k] - 1] = b[(k + 1) % b.size()];
  return StrandPermutation::fromImage(std::move(img));
}

BandWord NonCrossingPartition::word() const {
  std::vector<BandGen> letters;
  for (const auto& b : blocks_)
    for (std::size_t k = b.size(); k >= 2; --k)
      letters.emplace_back(b[k - 2], b[k - 1], +1);
  return BandWord(n_, std::move(letters));
}

std::string NonCrossingPartition::str() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) os << ' ';
      os << b[k];
    }
    os << '}';
  }
  return os.str();
}

NonCrossingPartition NonCrossingPartition::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '{') throw ParseError("expected '{' in partition", pos);
    ++pos;
    std::vector<int> block;
    skip();
    while (pos < text.size() && text[pos] != '}') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected strand number in partition", pos);
      block.push_back(std::stoi(text.substr(start, pos - start)));
      skip();
    }
    if (pos >= text.size()) throw ParseError("unterminated block in partition", pos);
    ++pos;  // '}'
    blocks.push_back(std::move(block));
    skip();
  }
  return NonCrossingPartition(n, std::move(blocks));
}

NonCrossingPartition nc_meet(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("nc_meet: strand count mismatch");
  int n = a.strands();
  std::vector<std::vector<int>> blocks;
  std::vector<int> assigned(n, -1);
  for (int s = 1; s <= n; ++s) {
    if (assigned[s - 1] >= 0) continue;
    std::vector<int> block{s};
    assigned[s - 1] = static_cast<int>(blocks.size());
    for (int t = s + 1; t <= n; ++t)
      if (assigned[t - 1] < 0 && a.sameBlock(s, t) && b.sameBlock(s, t)) {
        block.push_back(t);
        assigned[t - 1] = static_cast<int>(blocks.size());
      }
    blocks.push_back(std::move(block));
  }
  return NonCrossingPartition(n, std::move(blocks));
}

NonCrossingPartition nc_join(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("nc_join: strand count mismatch");
  int n = a.strands();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      if (a.sameBlock(s, t)) unite(s - 1, t - 1);
      if (b.sameBlock(s, t)) unite(s - 1, t - 1);
    }
  // close crossings: interleaved blocks of the union must merge
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 1; x <= n && !changed; ++x)
      for (int y = x + 1; y <= n && !changed; ++y)
        for (int z = y + 1; z <= n && !changed; ++z)
          for (int u = z + 1; u <= n && !changed; ++u)
            if (find(x - 1) == find(z - 1) && find(y - 1) == find(u - 1) &&
                find(x - 1) != find(y - 1)) {
              unite(x - 1, y - 1);
              changed = true;
            }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> root2block(n, -1);
  for (int s = 1; s <= n; ++s) {
    int r = find(s - 1);
    if (root2block[r] < 0) {
      root2block[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[root2block[r]].push_back(s);
  }
  return NonCrossingPartition(n, std::move(blocks));
}

bool nc_leq(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("nc_leq: strand count mismatch");
  for (int s = 1; s <= a.strands(); ++s)
    for (int t = s + 1; t <= a.strands(); ++t)
      if (a.sameBlock(s, t) && !b.sameBlock(s, t)) return false;
  return true;
}

namespace {

std::vector<int> image_of(const StrandPermutation& p) {
  std::vector<int> img(p.size());
  for (int s = 1; s <= p.size(); ++s) img[s - 1] = p.apply(s);
  return img;
}

}  // namespace

NonCrossingPartition partition_of_permutation(const StrandPermutation& p) {
  int n = p.size();
  std::vector<int> img = image_of(p);
  std::vector<std::vector<int>> blocks;
  std::vector<bool> seen(n, false);
  for (int s = 1; s <= n; ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    int t = s;
    while (!seen[t - 1]) {
      seen[t - 1] = true;
      cyc.push_back(t);
      t = img[t - 1];
    }
    blocks.push_back(std::move(cyc));
  }
  NonCrossingPartition out(n, blocks);
  // the cycles must be increasing (a1 -> a2 -> ... -> ak -> a1, sorted)
  if (!(out.permutation() == p))
    throw std::invalid_argument("partition_of_permutation: not a simple-element permutation");
  return out;
}

NonCrossingPartition complement(const NonCrossingPartition& x) {
  // y = x^{-1} delta: apply x^{-1} first, then delta.
  StrandPermutation dp = NonCrossingPartition::delta(x.strands()).permutation();
  return partition_of_permutation(x.permutation().inverse().then(dp));
}

NonCrossingPartition complement_left(const NonCrossingPartition& x) {
  // y = delta x^{-1}: apply delta first, then x^{-1}.
  StrandPermutation dp = NonCrossingPartition::delta(x.strands()).permutation();
  return partition_of_permutation(dp.then(x.permutation().inverse()));
}

NonCrossingPartition tau(const NonCrossingPartition& x, long long k) {
  int n = x.strands();
  long long shift = ((k % n) + n) % n;
  std::vector<std::vector<int>> blocks = x.blocks();
  for (auto& b : blocks)
    for (int& s : b) s = static_cast<int>((s - 1 + shift) % n) + 1;
  return NonCrossingPartition(n, std::move(blocks));
}

NonCrossingPartition mul_simple(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("mul_simple: strand count mismatch");
  return partition_of_permutation(a.permutation().then(b.permutation()));
}

NonCrossingPartition quotient_left(const NonCrossingPartition& t, const NonCrossingPartition& f) {
  if (!nc_leq(t, f)) throw std::invalid_argument("quotient_left: t does not divide f");
  return partition_of_permutation(t.permutation().inverse().then(f.permutation()));
}

NonCrossingPartition simple_of_band(int n, const BandGen& g) {
  if (g.sign != +1)
    throw std::invalid_argument("simple_of_band: band generator must be positive");
  if (g.j > n) throw std::invalid_argument("simple_of_band: index out of range");
  return NonCrossingPartition::band(n, g.i, g.j);
}

namespace {

void enumerate_partitions(int n, int s, std::vector<std::vector<int>>& blocks,
                          std::vector<NonCrossingPartition>& out) {
  if (s > n) {
    try {
      out.emplace_back(n, blocks);
    } catch (const std::invalid_argument&) {
      // crossing; skip
    }
    return;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k].push_back(s);
    enumerate_partitions(n, s + 1, blocks, out);
    blocks[k].pop_back();
  }
  blocks.push_back({s});
  enumerate_partitions(n, s + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<NonCrossingPartition> all_noncrossing_partitions(int n) {
  std::vector<NonCrossingPartition> out;
  std::vector<std::vector<int>> blocks;
  enumerate_partitions(n, 1, blocks, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace braidband
