#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "adkdv/affine.hpp"
#include "adkdv/lusztig.hpp"
#include "adkdv/rational.hpp"

namespace adkdv {

// Integer vector labeling a chamber of the universal-cover wiring diagram.
// Vertically shifted chambers differ by the all-ones vector, and most
// comparisons are made modulo that vector.
struct ChamberLabel {
  std::vector<long long> s;

  int rank() const { return static_cast<int>(s.size()); }

  ChamberLabel operator+(const ChamberLabel& rhs) const;
  ChamberLabel operator-(const ChamberLabel& rhs) const;
  ChamberLabel plus_e(int i) const;  // add e_i, 1-based
  ChamberLabel scaled(long long c) const;

  bool operator==(const ChamberLabel& rhs) const { return s == rhs.s; }
  bool operator<(const ChamberLabel& rhs) const { return s < rhs.s; }
};

// Equality modulo the all-ones vector.
bool labels_equal_mod_ones(const ChamberLabel& a, const ChamberLabel& b);

// An a-nice subset of Z: closed downward by steps of n, bounded above in
// every residue class, cofinite below. Stored by its per-class maxima.
class ANiceSet {
 public:
  // S = w(Z_{<= h}).
  static ANiceSet from_window_prefix(const AffinePermutation& w, long long h);
  // S = Z_{<= a}.
  static ANiceSet from_base(int rank, long long a);
  // S = Z_{<= a} with `added` elements above a inserted and `removed`
  // elements below or at a deleted. Throws InvalidInputError unless the
  // result is a-nice (closed under b -> b - n).
  static ANiceSet from_parts(int rank, long long a, const std::set<long long>& added,
                             const std::set<long long>& removed);

  int rank() const { return static_cast<int>(class_max_.size()); }
  // Largest element of S congruent to i mod n (class index i in 1..n).
  long long class_max(int i) const { return class_max_[i - 1]; }

  ANiceSet shifted(long long t) const;  // every element + t

 private:
  explicit ANiceSet(std::vector<long long> class_max) : class_max_(std::move(class_max)) {}
  std::vector<long long> class_max_;
};

// [S] = (ceil(class_max(1)/n), ..., ceil(class_max(n)/n)).
ChamberLabel chamber_label(const ANiceSet& S);

// One crossing of a wiring diagram. Wires carry integer labels from the
// universal cover; level q means the crossing swaps heights (q, q+1) with
// q = the letter index of the generator. The upper wire is the one passing
// from top to bottom.
struct Crossing {
  int pos;                // 0-based index into the word
  int level;              // q, in {0,...,n-1}
  long long lower_wire;   // occupant of height q just left of the crossing
  long long upper_wire;   // occupant of height q+1 just left of the crossing
  int lower_class;        // 1..n
  int upper_class;        // 1..n
  ChamberLabel below;     // label of the face directly below the crossing
};

// Cylindric wiring diagram of a reduced word with a cut. Wires are numbered
// so that at the cut, wire i occupies position i; equivalently the occupancy
// at the left edge is the inverse of the element spelled by the pre-cut
// letters.
struct WiringDiagram {
  AffineWord word;
  int cut;  // number of letters left of the cut
  std::vector<Crossing> crossings;

  int rank() const { return word.rank(); }
};

// Throws NotReducedError if the word is not reduced.
WiringDiagram build_diagram(const AffineWord& word, int cut);

// Labels of every cylinder face: faces are indexed by (gap x in 0..len,
// level h in 1..n), the face between heights h and h+1 after x letters;
// labels at other cover levels differ by multiples of (1,...,1).
std::map<std::pair<int, int>, ChamberLabel> face_labels(const WiringDiagram& d);

// The weight-lattice displacement of a glide, read off as a difference of
// chamber labels in the diagram for |u. Only defined modulo (1,...,1); the
// stored representative is the raw label difference.
struct Trajectory {
  std::vector<long long> t;

  int rank() const { return static_cast<int>(t.size()); }
  bool equal_mod_ones(const Trajectory& rhs) const;
};

Trajectory trajectory(const Glide& u);

// s' = s + i*t(u) - m*t(vtilde) with vtilde = rho^{-k2}(v); maps chamber
// labels across space (i copies of the state glide) and time (m sweeps).
ChamberLabel label_shift(long long i, long long m, const Glide& u, const Glide& v);

// Per-wire weights alpha_1..alpha_n; admissible for a diagram when the upper
// wire of every crossing carries the strictly larger weight.
template <class T>
using WireWeights = std::vector<T>;

// Crossing parameters beta - alpha (upper wire weight minus lower) for all
// crossings of the diagram of v|u, split as (vacuum for u, initial carrier
// for v). Throws PositivityError if some parameter is <= 0. The returned
// pair is an exact fixed point of the interaction (checked by callers).
template <class T>
std::pair<std::vector<T>, std::vector<T>> wire_ansatz(const Glide& u, const Glide& v,
                                                      const WireWeights<T>& alpha) {
  const AffineWord vu = v.word * u.word;
  WiringDiagram d = build_diagram(vu, v.size());
  const int n = vu.rank();
  if (static_cast<int>(alpha.size()) != n)
    throw InvalidInputError("wire_ansatz: alpha size must equal rank");
  std::vector<T> all;
  all.reserve(d.crossings.size());
  for (const Crossing& c : d.crossings) {
    T a = alpha[c.upper_class - 1] - alpha[c.lower_class - 1];
    if (!is_positive(a))
      throw PositivityError("wire_ansatz: nonpositive crossing parameter at position " +
                            std::to_string(c.pos));
    all.push_back(std::move(a));
  }
  std::vector<T> carrier(all.begin(), all.begin() + v.size());
  std::vector<T> vacuum(all.begin() + v.size(), all.end());
  return {std::move(vacuum), std::move(carrier)};
}

// Wire weights making every crossing parameter of the cut diagram strictly
// positive: sort the trajectory of the full word, take alpha_{pi(i)} = n-i+1
// on the uncut diagram, then renumber for the cut. Existence is guaranteed
// for reduced glide words.
WireWeights<Rat> positive_weights_for(const AffineWord& word, int cut);

}  // namespace adkdv
