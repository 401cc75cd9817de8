#include "adkdv/network.hpp"

#include <algorithm>
#include <numeric>

namespace adkdv {

namespace {

long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r > 0) == (b > 0)) ? q + 1 : q;
}

}  // namespace

ChamberLabel ChamberLabel::operator+(const ChamberLabel& rhs) const {
  ChamberLabel out = *this;
  for (size_t i = 0; i < s.size(); ++i) out.s[i] += rhs.s[i];
  return out;
}

ChamberLabel ChamberLabel::operator-(const ChamberLabel& rhs) const {
  ChamberLabel out = *this;
  for (size_t i = 0; i < s.size(); ++i) out.s[i] -= rhs.s[i];
  return out;
}

ChamberLabel ChamberLabel::plus_e(int i) const {
  ChamberLabel out = *this;
  out.s[i - 1] += 1;
  return out;
}

ChamberLabel ChamberLabel::scaled(long long c) const {
  ChamberLabel out = *this;
  for (auto& v : out.s) v *= c;
  return out;
}

bool labels_equal_mod_ones(const ChamberLabel& a, const ChamberLabel& b) {
  if (a.s.size() != b.s.size() || a.s.empty()) return false;
  long long d = a.s[0] - b.s[0];
  for (size_t i = 1; i < a.s.size(); ++i)
    if (a.s[i] - b.s[i] != d) return false;
  return true;
}

ANiceSet ANiceSet::from_window_prefix(const AffinePermutation& w, long long h) {
  const int n = w.rank();
  std::vector<long long> mx(n);
  // The per-class maximum of w(Z_{<=h}) is attained among the last n
  // arguments h-n+1..h because w commutes with the shift by n.
  for (long long b = h - n + 1; b <= h; ++b) {
    long long v = w.act(b);
    long long r = v % n;
    if (r <= 0) r += n;
    mx[r - 1] = v;
  }
  return ANiceSet(std::move(mx));
}

ANiceSet ANiceSet::from_base(int rank, long long a) {
  return from_window_prefix(AffinePermutation::identity(rank), a);
}

ANiceSet ANiceSet::from_parts(int rank, long long a, const std::set<long long>& added,
                              const std::set<long long>& removed) {
  auto in_set = [&](long long b) {
    if (b > a) return added.count(b) > 0;
    return removed.count(b) == 0;
  };
  for (long long b : added) {
    if (b <= a) throw InvalidInputError("ANiceSet: added element not above the base");
    if (!in_set(b - rank))
      throw InvalidInputError("ANiceSet: set not closed under b -> b - n");
  }
  for (long long b : removed) {
    if (b > a) throw InvalidInputError("ANiceSet: removed element not below the base");
    if (in_set(b + rank))
      throw InvalidInputError("ANiceSet: set not closed under b -> b - n");
  }
  std::vector<long long> mx(rank);
  for (long long b = a - rank + 1; b <= a; ++b) {
    long long top = b;
    while (!in_set(top)) top -= rank;
    while (in_set(top + rank)) top += rank;
    long long r = top % rank;
    if (r <= 0) r += rank;
    mx[r - 1] = top;
  }
  return ANiceSet(std::move(mx));
}

ANiceSet ANiceSet::shifted(long long t) const {
  if (t % rank() != 0)
    throw InvalidInputError("ANiceSet::shifted: shift must be a multiple of n");
  std::vector<long long> mx = class_max_;
  for (auto& v : mx) v += t;
  return ANiceSet(std::move(mx));
}

ChamberLabel chamber_label(const ANiceSet& S) {
  const int n = S.rank();
  ChamberLabel out;
  out.s.resize(n);
  for (int i = 1; i <= n; ++i) out.s[i - 1] = ceil_div(S.class_max(i), n);
  return out;
}

WiringDiagram build_diagram(const AffineWord& word, int cut) {
  if (cut < 0 || cut > word.size()) throw InvalidInputError("build_diagram: cut out of range");
  if (!is_reduced(word))
    throw NotReducedError("build_diagram: word " + word.str() + " is not reduced");
  const int n = word.rank();
  // Occupancy at the left edge: the wire at height h is g(h) with
  // g = (pre-cut element)^{-1}, so that at the cut wire i sits at height i.
  AffinePermutation g = word_to_perm(word.prefix(cut)).inverse();
  WiringDiagram d{word, cut, {}};
  d.crossings.reserve(word.size());
  for (int p = 0; p < word.size(); ++p) {
    const int q = word.letter(p);
    Crossing c;
    c.pos = p;
    c.level = q;
    c.lower_wire = g.act(q);
    c.upper_wire = g.act(q + 1);
    c.lower_class = g.wire_class(c.lower_wire);
    c.upper_class = g.wire_class(c.upper_wire);
    c.below = chamber_label(ANiceSet::from_window_prefix(g, q - 1));
    d.crossings.push_back(std::move(c));
    g = g.mul_gen_right(q);
  }
  return d;
}

std::map<std::pair<int, int>, ChamberLabel> face_labels(const WiringDiagram& d) {
  const int n = d.rank();
  AffinePermutation g = word_to_perm(d.word.prefix(d.cut)).inverse();
  std::map<std::pair<int, int>, ChamberLabel> out;
  for (int x = 0; x <= d.word.size(); ++x) {
    for (int h = 1; h <= n; ++h)
      out[{x, h}] = chamber_label(ANiceSet::from_window_prefix(g, h));
    if (x < d.word.size()) g = g.mul_gen_right(d.word.letter(x));
  }
  return out;
}

bool Trajectory::equal_mod_ones(const Trajectory& rhs) const {
  ChamberLabel a{t}, b{rhs.t};
  return labels_equal_mod_ones(a, b);
}

Trajectory trajectory(const Glide& u) {
  const int n = u.rank();
  const AffinePermutation w = word_to_perm(u.word);
  // Left face: between wires 1 and 2, label [Z_{<=1}]. Right face: between
  // the same two wires, i.e. between heights (h, h+1) with w(h) in class 1;
  // h = 1 - offset works since w shifts classes by the offset.
  long long h = 1 - u.offset;
  while (h < 1) h += n;
  ChamberLabel right = chamber_label(ANiceSet::from_window_prefix(w, h));
  ChamberLabel left = chamber_label(ANiceSet::from_base(n, 1));
  ChamberLabel diff = right - left;
  return Trajectory{std::move(diff.s)};
}

ChamberLabel label_shift(long long i, long long m, const Glide& u, const Glide& v) {
  Trajectory tu = trajectory(u);
  Glide vtilde(rho_shift(v.word, -v.offset));
  Trajectory tv = trajectory(vtilde);
  ChamberLabel out{tu.t};
  out = out.scaled(i) - ChamberLabel{tv.t}.scaled(m);
  return out;
}

WireWeights<Rat> positive_weights_for(const AffineWord& word, int cut) {
  const int n = word.rank();
  Glide g(word);  // validates reduced + glide
  Trajectory t = trajectory(g);

  // pi sorts the trajectory weakly decreasing; alpha'_{pi(i)} = n - i + 1
  // makes every crossing parameter of |word positive. Ties only occur for
  // wire pairs that never cross, so any stable order works.
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::stable_sort(pi.begin(), pi.end(),
                   [&](int a, int b) { return t.t[a] > t.t[b]; });
  std::vector<Rat> uncut(n);
  for (int i = 0; i < n; ++i) uncut[pi[i]] = Rat(n - i);

  // Renumber for the cut: the wire numbered j in the cut diagram is the wire
  // of class (pre(j) mod n) in the uncut one, pre = the pre-cut element.
  AffinePermutation pre = word_to_perm(word.prefix(cut));
  std::vector<Rat> alpha(n);
  for (int j = 1; j <= n; ++j) alpha[j - 1] = uncut[pre.wire_class(pre.act(j)) - 1];

  // Existence is a theorem; a failure here means the construction above is
  // wrong, not the input.
  WiringDiagram check = build_diagram(word, cut);
  for (const Crossing& c : check.crossings)
    if (!(alpha[c.upper_class - 1] > alpha[c.lower_class - 1]))
      throw Error("positive_weights_for: internal error, chamber membership violated");
  return alpha;
}

}  // namespace adkdv
