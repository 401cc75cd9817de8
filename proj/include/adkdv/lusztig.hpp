#pragma once

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "adkdv/affine.hpp"
#include "adkdv/rational.hpp"
#include "adkdv/rng.hpp"

namespace adkdv {

// Generator indices paired with positive parameters; the substrate the
// braid dynamics acts on.
template <class T>
struct WeightedWord {
  AffineWord letters;
  std::vector<T> weights;

  WeightedWord(AffineWord w, std::vector<T> ws) : letters(std::move(w)), weights(std::move(ws)) {
    if (static_cast<int>(weights.size()) != letters.size())
      throw InvalidInputError("WeightedWord: weight count differs from letter count");
    for (const T& x : weights)
      if (!is_positive(x)) throw PositivityError("WeightedWord: weights must be positive");
  }
};

struct Move {
  enum class Kind { Braid, Commute };
  Kind kind;
  int pos;  // 0-based; Braid acts on (pos, pos+1, pos+2), Commute on (pos, pos+1)

  bool operator==(const Move& rhs) const { return kind == rhs.kind && pos == rhs.pos; }
};

using MoveSequence = std::vector<Move>;

// The parameter transformation at a braid move s_i s_j s_i -> s_j s_i s_j:
// (a,b,c) -> (bc/(a+c), a+c, ab/(a+c)). Subtraction-free, so positivity is
// preserved; the move is an involution.
template <class T>
std::array<T, 3> braid_move(const T& a, const T& b, const T& c) {
  T s = a + c;
  if (!is_positive(s)) throw PositivityError("braid_move: a + c must be positive");
  return {b * c / s, s, a * b / s};
}

// True iff the move is legal on the letter sequence (braid needs the
// i,j,i pattern with i-j = +-1 mod n; commute needs i-j != 0,+-1 mod n).
bool move_legal(const AffineWord& w, const Move& mv);

// Letters after a legal move.
AffineWord move_letters(const AffineWord& w, const Move& mv);

// All legal moves on a word.
std::vector<Move> legal_moves(const AffineWord& w);

// A sequence of braid/commutation moves carrying src to dst. Both words must
// be reduced and equal as group elements; Tits connectivity guarantees a
// sequence exists. Bidirectional BFS on the move graph; pass an rng to
// randomize the exploration order (used to exhibit independently found
// sequences).
MoveSequence find_move_sequence(const AffineWord& src, const AffineWord& dst,
                                Rng* shuffle = nullptr);

template <class T>
WeightedWord<T> apply_moves(const WeightedWord<T>& w, const MoveSequence& seq) {
  AffineWord letters = w.letters;
  std::vector<T> ws = w.weights;
  for (const Move& mv : seq) {
    if (!move_legal(letters, mv)) throw InvalidInputError("apply_moves: illegal move");
    if (mv.kind == Move::Kind::Braid) {
      auto out = braid_move(ws[mv.pos], ws[mv.pos + 1], ws[mv.pos + 2]);
      ws[mv.pos] = out[0];
      ws[mv.pos + 1] = out[1];
      ws[mv.pos + 2] = out[2];
    } else {
      std::swap(ws[mv.pos], ws[mv.pos + 1]);
    }
    letters = move_letters(letters, mv);
  }
  return WeightedWord<T>(std::move(letters), std::move(ws));
}

// A compiled carrier/state interaction F_{v,u}. The move sequence from vu to
// rho^{k2}(u) rho^{-k1}(v) is found once; the weight map does not depend on
// which sequence was found.
class InteractionMap {
 public:
  InteractionMap(Glide u, Glide v, Rng* shuffle = nullptr);

  const Glide& u() const { return u_; }
  const Glide& v() const { return v_; }
  const AffineWord& src_word() const { return src_; }
  const AffineWord& dst_word() const { return dst_; }
  const MoveSequence& moves() const { return seq_; }

  // (z, y) -> (y', z').
  template <class T>
  std::pair<std::vector<T>, std::vector<T>> apply(const std::vector<T>& z,
                                                  const std::vector<T>& y) const {
    const int m = v_.size(), l = u_.size();
    if (static_cast<int>(z.size()) != m || static_cast<int>(y.size()) != l)
      throw InvalidInputError("interaction: carrier/state size mismatch");
    std::vector<T> ws(z);
    ws.insert(ws.end(), y.begin(), y.end());
    WeightedWord<T> out = apply_moves(WeightedWord<T>(src_, std::move(ws)), seq_);
    std::vector<T> yp(out.weights.begin(), out.weights.begin() + l);
    std::vector<T> zp(out.weights.begin() + l, out.weights.end());
    return {std::move(yp), std::move(zp)};
  }

 private:
  Glide u_, v_;
  AffineWord src_, dst_;
  MoveSequence seq_;
};

// One-shot interaction F_{v,u}(z, y) = (y', z').
template <class T>
std::pair<std::vector<T>, std::vector<T>> interaction(const Glide& u, const Glide& v,
                                                      const std::vector<T>& z,
                                                      const std::vector<T>& y) {
  return InteractionMap(u, v).apply(z, y);
}

}  // namespace adkdv
