#include "adkdv/affine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace adkdv {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

AffineWord::AffineWord(int rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank_ < 3) throw InvalidInputError("AffineWord: rank must be >= 3");
  for (int l : letters_)
    if (l < 0 || l >= rank_)
      throw InvalidInputError("AffineWord: letter " + std::to_string(l) +
                              " out of range for rank " + std::to_string(rank_));
}

AffineWord AffineWord::prefix(int len) const {
  return AffineWord(rank_, std::vector<int>(letters_.begin(), letters_.begin() + len));
}

AffineWord AffineWord::suffix_from(int pos) const {
  return AffineWord(rank_, std::vector<int>(letters_.begin() + pos, letters_.end()));
}

AffineWord AffineWord::operator*(const AffineWord& rhs) const {
  if (rank_ != rhs.rank_) throw InvalidInputError("AffineWord: rank mismatch in product");
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return AffineWord(rank_, std::move(out));
}

std::string AffineWord::str() const {
  std::ostringstream os;
  if (letters_.empty()) os << "e";
  for (int l : letters_) os << "s" << l;
  return os.str();
}

AffinePermutation::AffinePermutation(std::vector<long long> window)
    : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  if (n < 3) throw InvalidInputError("AffinePermutation: rank must be >= 3");
  long long sum = 0;
  std::vector<char> seen(n, 0);
  for (long long v : window_) {
    sum += v;
    long long r = v % n;
    if (r <= 0) r += n;
    if (seen[r - 1]) throw InvalidInputError("AffinePermutation: congruent window entries");
    seen[r - 1] = 1;
  }
  if (sum != static_cast<long long>(n) * (n + 1) / 2)
    throw InvalidInputError("AffinePermutation: window sum must be n(n+1)/2");
}

AffinePermutation AffinePermutation::identity(int rank) {
  std::vector<long long> w(rank);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

long long AffinePermutation::act(long long a) const {
  const int n = rank();
  long long q = floor_div(a - 1, n);
  int r = static_cast<int>(a - 1 - q * n);  // 0-based position in window
  return window_[r] + q * n;
}

AffinePermutation AffinePermutation::mul_gen_right(int i) const {
  const int n = rank();
  std::vector<long long> w = window_;
  if (i >= 1 && i <= n - 1) {
    std::swap(w[i - 1], w[i]);
  } else if (i == 0) {
    // (w o s_0)(1) = w(0) = w(n) - n, (w o s_0)(n) = w(n+1) = w(1) + n
    long long a = w[0], b = w[n - 1];
    w[0] = b - n;
    w[n - 1] = a + n;
  } else {
    throw InvalidInputError("mul_gen_right: letter out of range");
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::compose(const AffinePermutation& rhs) const {
  const int n = rank();
  if (n != rhs.rank()) throw InvalidInputError("compose: rank mismatch");
  std::vector<long long> w(n);
  for (int p = 0; p < n; ++p) w[p] = act(rhs.window_[p]);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const int n = rank();
  std::vector<long long> w(n);
  for (int p = 0; p < n; ++p) {
    long long v = window_[p];
    long long q = floor_div(v - 1, n);
    int r = static_cast<int>(v - 1 - q * n);
    w[r] = (p + 1) - q * n;
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rho(int t) const {
  const int n = rank();
  int tt = ((t % n) + n) % n;
  AffinePermutation out = *this;
  for (int step = 0; step < tt; ++step) {
    // rho(w)(p) = w(p-1) + 1
    std::vector<long long> w(n);
    for (int p = 1; p <= n; ++p) w[p - 1] = out.act(p - 1) + 1;
    out = AffinePermutation(std::move(w));
  }
  return out;
}

bool AffinePermutation::is_identity() const {
  for (int p = 0; p < rank(); ++p)
    if (window_[p] != p + 1) return false;
  return true;
}

long long& InversionCoords::at(int i, int j) {
  const int n = rank;
  int idx = (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  return m[idx];
}

long long InversionCoords::at(int i, int j) const {
  const int n = rank;
  int idx = (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  return m[idx];
}

Glide::Glide(AffineWord w) : word(std::move(w)), offset(0) {
  if (!is_reduced(word)) throw NotReducedError("Glide: word " + word.str() + " is not reduced");
  auto k = glide_offset(word);
  if (!k) throw NotGlideError("Glide: word " + word.str() + " is not a glide");
  offset = *k;
}

AffinePermutation word_to_perm(const AffineWord& w) {
  AffinePermutation p = AffinePermutation::identity(w.rank());
  for (int l : w.letters()) p = p.mul_gen_right(l);
  return p;
}

long long coxeter_length(const AffinePermutation& p) {
  const int n = p.rank();
  const auto& w = p.window();
  long long len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      len += std::abs(floor_div(w[j] - w[i], n));
  return len;
}

bool is_reduced(const AffineWord& w) {
  return coxeter_length(word_to_perm(w)) == w.size();
}

AffineWord rho_shift(const AffineWord& w, int t) {
  const int n = w.rank();
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) out.push_back(((l + t) % n + n) % n);
  return AffineWord(n, std::move(out));
}

std::optional<int> glide_offset(const AffinePermutation& p) {
  const int n = p.rank();
  const auto& w = p.window();
  // phi maps position class p to class of w(p); a cyclic shift by k sends
  // p to p + k for all p.
  int k = static_cast<int>(((w[0] - 1) % n + n) % n);
  for (int pos = 0; pos < n; ++pos) {
    long long want = pos + 1 + k;
    if (((w[pos] - want) % n + n) % n != 0) return std::nullopt;
  }
  return k;
}

std::optional<int> glide_offset(const AffineWord& w) {
  return glide_offset(word_to_perm(w));
}

std::pair<AffineWord, AffineWord> product_identity_words(const Glide& u, const Glide& v) {
  const AffineWord vu = v.word * u.word;
  if (!is_reduced(vu))
    throw NotReducedError("product_identity_words: vu = " + vu.str() + " is not reduced");
  const AffineWord other = rho_shift(u.word, v.offset) * rho_shift(v.word, -u.offset);
  if (word_to_perm(vu) != word_to_perm(other))
    throw Error("product_identity_words: words disagree as group elements");
  return {vu, other};
}

InversionCoords inversion_coords(const AffinePermutation& p) {
  const int n = p.rank();
  // The hyperplanes separating the fundamental alcove from p's alcove are
  // read off the inverse window: class-(i,j) wires cross |m_ij| times in any
  // reduced word of p, wire j passing from above iff m_ij > 0.
  const auto w = p.inverse().window();
  InversionCoords out;
  out.rank = n;
  out.m.assign(n * (n - 1) / 2, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.at(i, j) = -floor_div(w[j - 1] - w[i - 1], n);
  return out;
}

bool weak_order_leq(const AffinePermutation& w1, const AffinePermutation& w2) {
  if (w1.rank() != w2.rank()) throw InvalidInputError("weak_order_leq: rank mismatch");
  InversionCoords a = inversion_coords(w1), b = inversion_coords(w2);
  for (size_t k = 0; k < a.m.size(); ++k) {
    long long x = a.m[k], y = b.m[k];
    if (x == 0) continue;
    if ((x > 0) != (y > 0)) return false;
    if (std::abs(x) > std::abs(y)) return false;
  }
  return true;
}

AffineWord reduced_word_of(const AffinePermutation& p) {
  const int n = p.rank();
  AffinePermutation cur = p;
  std::vector<int> letters;
  while (!cur.is_identity()) {
    // Find a right descent: i in {1..n-1} with w(i) > w(i+1), or i = 0 with
    // w(0) > w(1) i.e. w(n) - n > w(1).
    const auto& w = cur.window();
    int descent = -1;
    for (int i = 1; i <= n - 1; ++i)
      if (w[i - 1] > w[i]) { descent = i; break; }
    if (descent < 0 && w[n - 1] - n > w[0]) descent = 0;
    if (descent < 0) throw Error("reduced_word_of: no descent for non-identity element");
    cur = cur.mul_gen_right(descent);
    letters.push_back(descent);
  }
  std::reverse(letters.begin(), letters.end());
  return AffineWord(n, std::move(letters));
}

}  // namespace adkdv
