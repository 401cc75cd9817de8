#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adkdv/errors.hpp"

namespace adkdv {

// A word in the generators s_0,...,s_{n-1} of the affine symmetric group.
// Rank n >= 3 throughout: for n = 2 the braid relation degenerates (the
// group is infinite dihedral) and none of the dynamics below apply.
class AffineWord {
 public:
  AffineWord(int rank, std::vector<int> letters);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int pos) const { return letters_[pos]; }

  AffineWord prefix(int len) const;
  AffineWord suffix_from(int pos) const;

  // Concatenation; ranks must agree.
  AffineWord operator*(const AffineWord& rhs) const;

  bool operator==(const AffineWord& rhs) const {
    return rank_ == rhs.rank_ && letters_ == rhs.letters_;
  }
  bool operator!=(const AffineWord& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  int rank_;
  std::vector<int> letters_;
};

// An affine permutation in window notation: w is the bijection of Z with
// w(i+n) = w(i)+n determined by the window (w(1),...,w(n)). The window sums
// to n(n+1)/2 and its entries are pairwise incongruent mod n.
class AffinePermutation {
 public:
  explicit AffinePermutation(std::vector<long long> window);

  static AffinePermutation identity(int rank);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<long long>& window() const { return window_; }

  // Value of the bijection at any integer.
  long long act(long long a) const;

  // Right multiplication by s_i: swaps window positions i, i+1 (position 0
  // wraps through the window edge).
  AffinePermutation mul_gen_right(int i) const;

  AffinePermutation compose(const AffinePermutation& rhs) const;  // this o rhs
  AffinePermutation inverse() const;

  // Conjugation by the rotation automorphism, rho^t.
  AffinePermutation rho(int t) const;

  bool is_identity() const;
  bool operator==(const AffinePermutation& rhs) const { return window_ == rhs.window_; }
  bool operator!=(const AffinePermutation& rhs) const { return !(*this == rhs); }

  // 1-based residue class of an integer wire label: in {1,...,n}.
  int wire_class(long long a) const {
    long long r = a % rank();
    if (r <= 0) r += rank();
    return static_cast<int>(r);
  }

 private:
  std::vector<long long> window_;
};

// Signed inversion coordinates m_ij, 1 <= i < j <= n. m_ij = 0 iff wires of
// classes i and j never cross in a reduced word for the element; the wire of
// class j crosses the one of class i from above iff m_ij > 0.
struct InversionCoords {
  int rank = 0;
  std::vector<long long> m;  // flattened upper triangle, row-major

  long long& at(int i, int j);       // 1 <= i < j <= n
  long long at(int i, int j) const;
};

// A reduced word whose element maps to a cyclic rotation of {1..n}; the
// rotation amount is the offset.
struct Glide {
  AffineWord word;
  int offset;

  // Validates reducedness and glideness.
  explicit Glide(AffineWord w);

  int rank() const { return word.rank(); }
  int size() const { return word.size(); }
};

AffinePermutation word_to_perm(const AffineWord& w);

long long coxeter_length(const AffinePermutation& p);

bool is_reduced(const AffineWord& w);

// Letterwise index shift i -> i + t (mod n).
AffineWord rho_shift(const AffineWord& w, int t);

// Offset k if phi(element) is the cyclic shift by k; nullopt otherwise.
std::optional<int> glide_offset(const AffineWord& w);
std::optional<int> glide_offset(const AffinePermutation& p);

// Lemma-level product identity: the two words (v.u, rho^{k2}(u).rho^{-k1}(v)),
// both spelling the same group element. Throws NotReducedError if the
// concatenation vu is not reduced; the window equality is checked on every
// call.
std::pair<AffineWord, AffineWord> product_identity_words(const Glide& u, const Glide& v);

InversionCoords inversion_coords(const AffinePermutation& p);

// Left weak order: true iff I(w1) is contained in I(w2), tested
// coordinate-wise on the signed inversion numbers.
bool weak_order_leq(const AffinePermutation& w1, const AffinePermutation& w2);

// Some reduced word for p, via repeated descent removal.
AffineWord reduced_word_of(const AffinePermutation& p);

}  // namespace adkdv
