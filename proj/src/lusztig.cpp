#include "adkdv/lusztig.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace adkdv {

namespace {

bool braid_pair(int i, int j, int n) {
  int d = ((i - j) % n + n) % n;
  return d == 1 || d == n - 1;
}

std::string key_of(const std::vector<int>& letters) {
  std::string k(letters.size(), 0);
  for (size_t p = 0; p < letters.size(); ++p) k[p] = static_cast<char>(letters[p]);
  return k;
}

struct Visit {
  std::string parent;
  Move mv{Move::Kind::Braid, 0};
  bool root = false;
};

using VisitMap = std::unordered_map<std::string, Visit>;

std::vector<Move> legal_moves_key(const std::string& w, int n) {
  std::vector<Move> out;
  const int len = static_cast<int>(w.size());
  for (int p = 0; p + 2 < len; ++p)
    if (w[p] == w[p + 2] && braid_pair(w[p], w[p + 1], n))
      out.push_back({Move::Kind::Braid, p});
  for (int p = 0; p + 1 < len; ++p) {
    int d = ((w[p] - w[p + 1]) % n + n) % n;
    if (d != 0 && d != 1 && d != n - 1) out.push_back({Move::Kind::Commute, p});
  }
  return out;
}

std::string apply_key(const std::string& w, const Move& mv) {
  std::string out = w;
  if (mv.kind == Move::Kind::Braid) {
    out[mv.pos] = w[mv.pos + 1];
    out[mv.pos + 1] = w[mv.pos];
    out[mv.pos + 2] = w[mv.pos + 1];
  } else {
    std::swap(out[mv.pos], out[mv.pos + 1]);
  }
  return out;
}

// Moves from key a back to the root of its visit map.
MoveSequence chain_to_root(const VisitMap& vm, std::string a) {
  MoveSequence out;
  while (true) {
    const Visit& v = vm.at(a);
    if (v.root) break;
    out.push_back(v.mv);
    a = v.parent;
  }
  return out;
}

}  // namespace

bool move_legal(const AffineWord& w, const Move& mv) {
  const int n = w.rank(), len = w.size();
  if (mv.kind == Move::Kind::Braid) {
    if (mv.pos < 0 || mv.pos + 2 >= len) return false;
    return w.letter(mv.pos) == w.letter(mv.pos + 2) &&
           braid_pair(w.letter(mv.pos), w.letter(mv.pos + 1), n);
  }
  if (mv.pos < 0 || mv.pos + 1 >= len) return false;
  int d = ((w.letter(mv.pos) - w.letter(mv.pos + 1)) % n + n) % n;
  return d != 0 && d != 1 && d != n - 1;
}

AffineWord move_letters(const AffineWord& w, const Move& mv) {
  std::vector<int> out = w.letters();
  if (mv.kind == Move::Kind::Braid) {
    out[mv.pos] = w.letter(mv.pos + 1);
    out[mv.pos + 1] = w.letter(mv.pos);
    out[mv.pos + 2] = w.letter(mv.pos + 1);
  } else {
    std::swap(out[mv.pos], out[mv.pos + 1]);
  }
  return AffineWord(w.rank(), std::move(out));
}

std::vector<Move> legal_moves(const AffineWord& w) {
  return legal_moves_key(key_of(w.letters()), w.rank());
}

MoveSequence find_move_sequence(const AffineWord& src, const AffineWord& dst, Rng* shuffle) {
  if (src.rank() != dst.rank()) throw InvalidInputError("find_move_sequence: rank mismatch");
  if (!is_reduced(src) || !is_reduced(dst))
    throw NotReducedError("find_move_sequence: both words must be reduced");
  if (word_to_perm(src) != word_to_perm(dst))
    throw InvalidInputError("find_move_sequence: words are not equal as group elements");
  if (src == dst) return {};

  const int n = src.rank();
  const std::string a = key_of(src.letters()), b = key_of(dst.letters());

  VisitMap va, vb;
  va[a] = Visit{"", {}, true};
  vb[b] = Visit{"", {}, true};
  std::vector<std::string> fa{a}, fb{b};

  // Meeting key, found when one side generates a node the other has seen.
  std::optional<std::string> meet;
  constexpr size_t kNodeBudget = 6'000'000;

  while (!meet) {
    if (fa.empty() || fb.empty())
      throw Error("find_move_sequence: move graph exhausted (words not connected?)");
    bool expand_a = fa.size() <= fb.size();
    VisitMap& mine = expand_a ? va : vb;
    VisitMap& theirs = expand_a ? vb : va;
    std::vector<std::string>& frontier = expand_a ? fa : fb;

    std::vector<std::string> next;
    for (const std::string& w : frontier) {
      std::vector<Move> moves = legal_moves_key(w, n);
      if (shuffle)
        for (size_t i = moves.size(); i > 1; --i)
          std::swap(moves[i - 1], moves[shuffle->uniform_u64(i)]);
      for (const Move& mv : moves) {
        std::string nb = apply_key(w, mv);
        if (mine.count(nb)) continue;
        mine[nb] = Visit{w, mv, false};
        if (theirs.count(nb)) { meet = nb; break; }
        next.push_back(std::move(nb));
      }
      if (meet) break;
    }
    if (va.size() + vb.size() > kNodeBudget)
      throw Error("find_move_sequence: node budget exceeded");
    frontier = std::move(next);
  }

  // src -> meet, then meet -> dst (edges reversed; every move is an
  // involution at its position, so the same move undoes itself).
  MoveSequence sa = chain_to_root(va, *meet);
  std::reverse(sa.begin(), sa.end());
  MoveSequence sb = chain_to_root(vb, *meet);
  sa.insert(sa.end(), sb.begin(), sb.end());
  return sa;
}

InteractionMap::InteractionMap(Glide u, Glide v, Rng* shuffle)
    : u_(std::move(u)),
      v_(std::move(v)),
      src_(v_.word * u_.word),
      dst_(rho_shift(u_.word, v_.offset) * rho_shift(v_.word, -u_.offset)) {
  if (!is_reduced(src_))
    throw NotReducedError("InteractionMap: vu = " + src_.str() + " is not reduced");
  seq_ = find_move_sequence(src_, dst_, shuffle);
}

}  // namespace adkdv
