#include "hexoct/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hexoct/error.hpp"

namespace hexoct {

namespace {

constexpr int kBase6Codes = 46656;  // 6^6

struct PermTables {
  // base-6 encoding of an image array -> lexicographic rank (or 0xFFFF)
  std::vector<std::uint16_t> rank;
  std::array<std::array<std::uint8_t, kDim>, kOrderS6> unrank{};

  PermTables() : rank(kBase6Codes, 0xFFFF) {
    std::array<std::uint8_t, kDim> p{0, 1, 2, 3, 4, 5};
    std::uint16_t r = 0;
    do {
      int key = 0;
      for (int k = kDim - 1; k >= 0; --k) key = key * 6 + p[k];
      rank[key] = r;
      unrank[r] = p;
      ++r;
    } while (std::next_permutation(p.begin(), p.end()));
  }
};

const PermTables& perm_tables() {
  static const PermTables tables;
  return tables;
}

}  // namespace

std::vector<std::uint8_t> parse_cycles(std::string_view text, int degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle notation: " + std::string(text));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw ParseError("point out of range: " + std::to_string(v));
      if (seen[v - 1]) throw ParseError("point repeated: " + std::to_string(v));
      seen[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c)
      images[cycle[c]] = static_cast<std::uint8_t>(cycle[(c + 1) % cycle.size()]);
    skip_ws();
  }
  return images;
}

std::string format_cycles(const std::vector<std::uint8_t>& images, char sep) {
  std::string out;
  std::vector<bool> done(images.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (done[k] || images[k] == k) continue;
    out += '(';
    std::size_t j = k;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += sep;
      out += std::to_string(j + 1);
      first = false;
      j = images[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---- Perm6 ---------------------------------------------------------------

Perm6 Perm6::parse(std::string_view cycles) {
  auto v = parse_cycles(cycles, kDim);
  Perm6 p;
  std::copy(v.begin(), v.end(), p.images.begin());
  return p;
}

bool Perm6::valid() const {
  std::array<bool, kDim> hit{};
  for (auto v : images) {
    if (v >= kDim || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

int Perm6::sign() const {
  int s = 1;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (images[i] > images[j]) s = -s;
  return s;
}

Perm6 Perm6::inverse() const {
  Perm6 r;
  for (int k = 0; k < kDim; ++k) r.images[images[k]] = static_cast<std::uint8_t>(k);
  return r;
}

Perm6 operator*(const Perm6& pi, const Perm6& sigma) {
  Perm6 r;
  for (int k = 0; k < kDim; ++k) r.images[k] = pi.images[sigma.images[k]];
  return r;
}

// ---- Perm12 --------------------------------------------------------------

Perm12 Perm12::parse(std::string_view cycles) {
  auto v = parse_cycles(cycles, 2 * kDim);
  Perm12 p;
  std::copy(v.begin(), v.end(), p.images.begin());
  return p;
}

std::string Perm12::to_string() const {
  return format_cycles({images.begin(), images.end()});
}

bool Perm12::valid() const {
  std::array<bool, 2 * kDim> hit{};
  for (auto v : images) {
    if (v >= 2 * kDim || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool Perm12::respects_antipodes() const {
  for (int k = 0; k < kDim; ++k)
    if (images[k + kDim] != (images[k] + kDim) % (2 * kDim)) return false;
  return true;
}

Perm12 operator*(const Perm12& p, const Perm12& q) {
  Perm12 r;
  for (int k = 0; k < 2 * kDim; ++k) r.images[k] = p.images[q.images[k]];
  return r;
}

// ---- IntMat6 -------------------------------------------------------------

IntMat6 IntMat6::identity() {
  IntMat6 m;
  for (int i = 0; i < kDim; ++i) m.entries[i][i] = 1;
  return m;
}

IntMat6 IntMat6::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  if (rows.size() != kDim) throw ParseError("IntMat6 needs 6 rows");
  IntMat6 m;
  int i = 0;
  for (const auto& row : rows) {
    if (row.size() != kDim) throw ParseError("IntMat6 rows need 6 entries");
    int j = 0;
    for (int v : row) m.entries[i][j++] = v;
    ++i;
  }
  return m;
}

IntMat6 IntMat6::transpose() const {
  IntMat6 t;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) t.entries[i][j] = entries[j][i];
  return t;
}

int IntMat6::trace() const {
  int t = 0;
  for (int i = 0; i < kDim; ++i) t += entries[i][i];
  return t;
}

bool IntMat6::is_signed_permutation() const {
  std::array<int, kDim> col_hits{};
  for (int i = 0; i < kDim; ++i) {
    int row_hits = 0;
    for (int j = 0; j < kDim; ++j) {
      int v = entries[i][j];
      if (v == 0) continue;
      if (v != 1 && v != -1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int c) { return c == 1; });
}

IntMat6 operator*(const IntMat6& a, const IntMat6& b) {
  IntMat6 r;
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      int aik = a.entries[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < kDim; ++j) r.entries[i][j] += aik * b.entries[k][j];
    }
  return r;
}

// ---- SignedPerm ----------------------------------------------------------

SignedPerm::SignedPerm() : img_{0, 1, 2, 3, 4, 5}, code_(0) {}

SignedPerm::SignedPerm(const std::array<std::uint8_t, kDim>& img) : img_(img) { recode(); }

SignedPerm::SignedPerm(const std::array<std::uint8_t, kDim>& signs, const Perm6& perm) {
  if (!perm.valid()) throw ParseError("not a permutation of 6 points");
  for (int k = 0; k < kDim; ++k) {
    if (signs[k] > 1) throw ParseError("sign entries must be 0 or 1");
    img_[k] = static_cast<std::uint8_t>(perm.images[k] + kDim * signs[k]);
  }
  recode();
}

void SignedPerm::recode() {
  int sign_rank = 0;
  int key = 0;
  for (int k = 0; k < kDim; ++k) sign_rank = (sign_rank << 1) | (img_[k] >= kDim);
  for (int k = kDim - 1; k >= 0; --k) key = key * 6 + img_[k] % kDim;
  code_ = static_cast<std::uint16_t>(sign_rank * kOrderS6 + perm_tables().rank[key]);
}

SignedPerm SignedPerm::from_code(std::uint16_t code) {
  if (code >= kOrderB6) throw ParseError("element code out of range");
  const auto& p = perm_tables().unrank[code % kOrderS6];
  int sign_rank = code / kOrderS6;
  std::array<std::uint8_t, kDim> img;
  for (int k = 0; k < kDim; ++k) {
    int a = (sign_rank >> (kDim - 1 - k)) & 1;
    img[k] = static_cast<std::uint8_t>(p[k] + kDim * a);
  }
  return SignedPerm(img);
}

SignedPerm SignedPerm::parse(std::string_view text) {
  auto l = text.find('[');
  auto bar = text.find('|');
  auto r = text.rfind(']');
  if (l == std::string_view::npos || bar == std::string_view::npos || r == std::string_view::npos ||
      !(l < bar && bar < r) || bar - l - 1 != kDim)
    throw ParseError("expected [a1..a6|cycles]: " + std::string(text));
  std::array<std::uint8_t, kDim> signs{};
  for (int k = 0; k < kDim; ++k) {
    char c = text[l + 1 + k];
    if (c != '0' && c != '1') throw ParseError("sign digits must be 0/1: " + std::string(text));
    signs[k] = static_cast<std::uint8_t>(c - '0');
  }
  return SignedPerm(signs, Perm6::parse(text.substr(bar + 1, r - bar - 1)));
}

std::array<std::uint8_t, kDim> SignedPerm::signs() const {
  std::array<std::uint8_t, kDim> a;
  for (int k = 0; k < kDim; ++k) a[k] = img_[k] >= kDim;
  return a;
}

Perm6 SignedPerm::perm() const {
  Perm6 p;
  for (int k = 0; k < kDim; ++k) p.images[k] = img_[k] % kDim;
  return p;
}

SignedPerm operator*(const SignedPerm& x, const SignedPerm& y) {
  std::array<std::uint8_t, kDim> img;
  for (int k = 0; k < kDim; ++k) {
    int v = y.img_[k];
    int w = x.img_[v % kDim] + (v >= kDim ? kDim : 0);
    img[k] = static_cast<std::uint8_t>(w >= 2 * kDim ? w - 2 * kDim : w);
  }
  return SignedPerm(img);
}

SignedPerm SignedPerm::inverse() const {
  std::array<std::uint8_t, kDim> img;
  for (int k = 0; k < kDim; ++k) {
    int v = img_[k];
    img[v % kDim] = static_cast<std::uint8_t>(k + (v >= kDim ? kDim : 0));
  }
  return SignedPerm(img);
}

int SignedPerm::order() const {
  SignedPerm p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

int SignedPerm::trace() const {
  int t = 0;
  for (int k = 0; k < kDim; ++k) {
    if (img_[k] == k) ++t;
    else if (img_[k] == k + kDim) --t;
  }
  return t;
}

int SignedPerm::determinant() const {
  int d = perm().sign();
  for (int k = 0; k < kDim; ++k)
    if (img_[k] >= kDim) d = -d;
  return d;
}

std::string SignedPerm::to_string() const {
  std::string s = "[";
  for (auto a : signs()) s += static_cast<char>('0' + a);
  s += '|';
  auto p = perm();
  s += format_cycles({p.images.begin(), p.images.end()}, ' ');
  s += ']';
  return s;
}

IntMat6 to_matrix(const SignedPerm& x) {
  IntMat6 m;
  for (int j = 0; j < kDim; ++j) {
    int v = x.image(j);
    m.entries[v % kDim][j] = v >= kDim ? -1 : 1;
  }
  return m;
}

SignedPerm from_matrix(const IntMat6& m) {
  if (!m.is_signed_permutation()) throw ParseError("matrix is not a signed permutation matrix");
  std::array<std::uint8_t, kDim> signs{};
  Perm6 perm;
  for (int j = 0; j < kDim; ++j)
    for (int i = 0; i < kDim; ++i)
      if (m.entries[i][j] != 0) {
        perm.images[j] = static_cast<std::uint8_t>(i);
        signs[j] = m.entries[i][j] < 0;
      }
  return SignedPerm(signs, perm);
}

Perm12 to_s12(const SignedPerm& x) {
  Perm12 p;
  for (int k = 0; k < kDim; ++k) {
    int v = x.image(k);
    p.images[k] = static_cast<std::uint8_t>(v);
    p.images[k + kDim] = static_cast<std::uint8_t>((v + kDim) % (2 * kDim));
  }
  return p;
}

SignedPerm from_s12(const Perm12& p) {
  if (!p.valid() || !p.respects_antipodes())
    throw NotInImage(p.to_string() + " does not commute with k <-> k+6");
  std::array<std::uint8_t, kDim> signs{};
  Perm6 perm;
  for (int k = 0; k < kDim; ++k) {
    perm.images[k] = p.images[k] % kDim;
    signs[k] = p.images[k] >= kDim;
  }
  return SignedPerm(signs, perm);
}

}  // namespace hexoct
