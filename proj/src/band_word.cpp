#include "braidband/band_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>

namespace braidband {

BandGen::BandGen(int i, int j, int sign) : i(i), j(j), sign(sign) {
  if (i < 1 || i >= j) throw std::invalid_argument("BandGen: need 1 <= i < j");
  if (sign != 1 && sign != -1) throw std::invalid_argument("BandGen: sign must be +-1");
}

StrandPermutation::StrandPermutation(int n) : image_(n) {
  if (n < 1) throw std::invalid_argument("StrandPermutation: n must be >= 1");
  std::iota(image_.begin(), image_.end(), 1);
}

StrandPermutation StrandPermutation::transposition(int n, int a, int b) {
  StrandPermutation p(n);
  p.image_[a - 1] = b;
  p.image_[b - 1] = a;
  return p;
}

StrandPermutation StrandPermutation::fromImage(std::vector<int> image) {
  int n = static_cast<int>(image.size());
  StrandPermutation p(n);
  std::vector<bool> hit(n, false);
  for (int v : image) {
    if (v < 1 || v > n || hit[v - 1])
      throw std::invalid_argument("StrandPermutation::fromImage: not a bijection");
    hit[v - 1] = true;
  }
  p.image_ = std::move(image);
  return p;
}

StrandPermutation StrandPermutation::then(const StrandPermutation& next) const {
  if (size() != next.size())
    throw std::invalid_argument("StrandPermutation: size mismatch");
  StrandPermutation r(size());
  for (int s = 1; s <= size(); ++s) r.image_[s - 1] = next.apply(apply(s));
  return r;
}

StrandPermutation StrandPermutation::inverse() const {
  StrandPermutation r(size());
  for (int s = 1; s <= size(); ++s) r.image_[apply(s) - 1] = s;
  return r;
}

std::vector<std::vector<int>> StrandPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size(), false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    int t = s;
    while (!seen[t - 1]) {
      seen[t - 1] = true;
      cyc.push_back(t);
      t = apply(t);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool StrandPermutation::isIdentity() const {
  for (int s = 1; s <= size(); ++s)
    if (apply(s) != s) return false;
  return true;
}

BandWord::BandWord(int n, std::vector<BandGen> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw std::invalid_argument("BandWord: strand count must be >= 1");
  for (const auto& g : letters_)
    if (g.j > n_) throw std::invalid_argument("BandWord: letter index exceeds strand count");
}

BandWord BandWord::append(const BandGen& g) const {
  auto ls = letters_;
  ls.push_back(g);
  return BandWord(n_, std::move(ls));
}

BandWord BandWord::concat(const BandWord& other) const {
  if (other.n_ != n_) throw std::invalid_argument("BandWord::concat: strand count mismatch");
  auto ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return BandWord(n_, std::move(ls));
}

BandWord BandWord::inverse() const {
  std::vector<BandGen> ls(letters_.rbegin(), letters_.rend());
  for (auto& g : ls) g.sign = -g.sign;
  return BandWord(n_, std::move(ls));
}

std::string BandWord::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << "s(" << letters_[k].i << ',' << letters_[k].j << ')';
    if (letters_[k].sign < 0) os << "^-1";
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
  bool consume(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "' in " + what, pos);
  }
  long long integer(bool allowSign) {
    std::size_t start = pos;
    if (allowSign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer", start);
    return std::stoll(text.substr(start, pos - start));
  }
  bool keyword(const char* kw) {
    std::size_t len = std::strlen(kw);
    if (text.compare(pos, len, kw) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
};

long long exponentOrOne(Cursor& c) {
  if (c.consume('^')) return c.integer(true);
  return 1;
}

void appendPower(std::vector<BandGen>& out, const BandGen& g, long long e) {
  BandGen letter = e >= 0 ? g : g.inverse();
  for (long long k = 0; k < std::llabs(e); ++k) out.push_back(letter);
}

}  // namespace

BandWord parse_band_word(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("parse_band_word: n must be >= 1");
  Cursor c{text};
  std::vector<BandGen> letters;
  while (!c.done()) {
    std::size_t factorStart = c.pos;
    if (c.keyword("delta")) {
      long long e = exponentOrOne(c);
      BandWord d = delta_word(n, e);
      letters.insert(letters.end(), d.letters().begin(), d.letters().end());
    } else if (c.consume('s')) {
      c.expect('(', "band factor");
      long long i = c.integer(false);
      c.expect(',', "band factor");
      long long j = c.integer(false);
      c.expect(')', "band factor");
      if (i >= j) throw ParseError("band generator needs i < j", factorStart);
      if (i < 1 || j > n) throw ParseError("strand index out of range", factorStart);
      appendPower(letters, BandGen(static_cast<int>(i), static_cast<int>(j), +1),
                  exponentOrOne(c));
    } else {
      throw ParseError("unrecognized factor", c.pos);
    }
  }
  return BandWord(n, std::move(letters));
}

ArtinWord parse_artin_word(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("parse_artin_word: n must be >= 1");
  Cursor c{text};
  ArtinWord w;
  w.n = n;
  while (!c.done()) {
    std::size_t factorStart = c.pos;
    if (!c.consume('a')) throw ParseError("unrecognized factor (expected aK)", c.pos);
    long long k = c.integer(false);
    if (k < 1 || k > n - 1) throw ParseError("Artin index out of range", factorStart);
    long long e = exponentOrOne(c);
    ArtinLetter letter{static_cast<int>(k), e >= 0 ? +1 : -1};
    for (long long t = 0; t < std::llabs(e); ++t) w.letters.push_back(letter);
  }
  return w;
}

ArtinWord band_to_artin(const BandWord& w) {
  ArtinWord out;
  out.n = w.strands();
  for (const auto& g : w.letters()) {
    // prefix sigma_{j-1} ... sigma_{i+1}
    for (int k = g.j - 1; k >= g.i + 1; --k) out.letters.push_back({k, +1});
    out.letters.push_back({g.i, g.sign});
    for (int k = g.i + 1; k <= g.j - 1; ++k) out.letters.push_back({k, -1});
  }
  return out;
}

BandWord artin_to_band(const ArtinWord& w) {
  std::vector<BandGen> letters;
  letters.reserve(w.letters.size());
  for (const auto& a : w.letters) letters.emplace_back(a.index, a.index + 1, a.sign);
  return BandWord(w.n, std::move(letters));
}

BandWord delta_word(int n, long long power) {
  std::vector<BandGen> one;
  for (int k = n - 1; k >= 1; --k) one.emplace_back(k, k + 1, +1);
  BandWord d(n, std::move(one));
  if (power < 0) d = d.inverse();
  BandWord out(n);
  for (long long t = 0; t < std::llabs(power); ++t) out = out.concat(d);
  return out;
}

long long exponent_sum(const BandWord& w) {
  long long e = 0;
  for (const auto& g : w.letters()) e += g.sign;
  return e;
}

StrandPermutation permutation_of(const BandWord& w) {
  StrandPermutation p(w.strands());
  for (const auto& g : w.letters())
    p = p.then(StrandPermutation::transposition(w.strands(), g.i, g.j));
  return p;
}

ClosureProfile closure_profile(const BandWord& w) {
  ClosureProfile out;
  out.cycles = permutation_of(w).cycles();
  out.componentCount = static_cast<int>(out.cycles.size());
  return out;
}

long long self_linking(const BandWord& w) {
  return -static_cast<long long>(w.strands()) + exponent_sum(w);
}

BandWord markov_move(const BandWord& w, MarkovMove kind) {
  int n = w.strands();
  if (kind == MarkovMove::StabilizePositive || kind == MarkovMove::StabilizeNegative) {
    int sign = kind == MarkovMove::StabilizePositive ? +1 : -1;
    std::vector<BandGen> ls = w.letters();
    ls.emplace_back(n, n + 1, sign);
    return BandWord(n + 1, std::move(ls));
  }
  // destabilize
  if (n < 2 || w.empty())
    throw std::invalid_argument("destabilize: word has no stabilizing letter");
  const BandGen& last = w.letters().back();
  if (last.i != n - 1 || last.j != n)
    throw std::invalid_argument("destabilize: last letter is not s(n-1,n)^{+-1}");
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w.letters()[k].j == n)
      throw std::invalid_argument("destabilize: last strand touched more than once");
  std::vector<BandGen> ls(w.letters().begin(), w.letters().end() - 1);
  return BandWord(n - 1, std::move(ls));
}

BandWord conjugate(const BandWord& w, const BandWord& g) {
  if (w.strands() != g.strands())
    throw std::invalid_argument("conjugate: strand count mismatch");
  return g.inverse().concat(w).concat(g);
}

}  // namespace braidband
