#include "adkdv/dkdv.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace adkdv {

namespace {

// Four-face vertex weight that also enforces tau > 0 at every face, as
// required for tau-generated states.
template <class T>
T vertex_weight_positive(const TauFunction<T>& tf, const ChamberLabel& S, int i, int j) {
  const T t0 = tf.eval(S);
  const T t1 = tf.eval(S.plus_e(i));
  const T t2 = tf.eval(S.plus_e(j));
  const T t3 = tf.eval(S.plus_e(i).plus_e(j));
  for (const T* t : {&t0, &t1, &t2, &t3})
    if (!is_positive(*t)) throw NonPositiveTauError("soliton_states: tau <= 0 at a face label");
  const auto& alpha = tf.spec().alpha();
  return (alpha[i - 1] - alpha[j - 1]) * t0 * t3 / (t1 * t2);
}

// Smallest word-level period: w is (len/m) concatenated blocks, each the
// rho^{-k}-shift of the previous, k the offset of the leading block.
std::optional<int> primitive_period(const AffineWord& w) {
  const int len = w.size(), n = w.rank();
  for (int m = 1; m <= len; ++m) {
    if (len % m != 0) continue;
    AffineWord block = w.prefix(m);
    auto k = glide_offset(block);
    if (!k || !is_reduced(block)) continue;
    bool ok = true;
    for (int j = 1; j * m < len && ok; ++j) {
      AffineWord expect = rho_shift(block, -(j * *k) % n);
      for (int p = 0; p < m; ++p)
        if (w.letter(j * m + p) != expect.letter(p)) { ok = false; break; }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

// v . rho^{-k}(v) . ... . rho^{-ell k}(v) as a word.
AffineWord power_word(const Glide& g, int ell) {
  AffineWord out = g.word;
  for (int j = 1; j <= ell; ++j) out = out * rho_shift(g.word, -(j * g.offset));
  return out;
}

template <class T>
std::vector<T> repeat_weights(const std::vector<T>& w, int copies) {
  std::vector<T> out;
  out.reserve(w.size() * copies);
  for (int j = 0; j < copies; ++j) out.insert(out.end(), w.begin(), w.end());
  return out;
}

template <class T>
bool weights_periodic(const std::vector<T>& w, int period) {
  for (size_t i = 0; i + period < w.size(); ++i)
    if (w[i] != w[i + period]) return false;
  return true;
}

}  // namespace

SystemInstance<Rat> make_instance(const Glide& u, const Glide& v) {
  WireWeights<Rat> alpha = positive_weights_for(v.word * u.word, v.size());
  return SystemInstance<Rat>(u, v, std::move(alpha));
}

SolitonChart soliton_chart(const Glide& u, const Glide& v) {
  SolitonChart chart;
  WiringDiagram d = build_diagram(u.word, 0);
  chart.base.reserve(d.crossings.size());
  for (const Crossing& c : d.crossings) {
    chart.base.push_back(c.below);
    chart.upper.push_back(c.upper_class);
    chart.lower.push_back(c.lower_class);
  }
  chart.tu = trajectory(u);
  chart.tv = trajectory(Glide(rho_shift(v.word, -v.offset)));
  return chart;
}

namespace {

template <class T>
StateSequence<T> soliton_states_impl(const SystemInstance<T>& inst, const TauFunction<T>& tf,
                                     long long m, long long i_lo, long long i_hi,
                                     bool use_parallel) {
  if (i_hi < i_lo) throw InvalidInputError("soliton_states: empty window");
  if (!tf.spec().cylindric())
    throw InvalidInputError("soliton_states: spec is not cylindric");
  if (static_cast<int>(tf.spec().alpha().size()) != inst.u().rank())
    throw InvalidInputError("soliton_states: spec rank mismatch");
  SolitonChart chart = soliton_chart(inst.u(), inst.v());
  const int l = inst.u().size();
  const long long count = i_hi - i_lo + 1;

  StateSequence<T> out;
  out.i_lo = i_lo;
  out.states.assign(count, std::vector<T>(l));

  auto state_entry = [&](long long idx, int h) {
    const long long i = i_lo + idx;
    ChamberLabel lab = chart.base[h] + ChamberLabel{chart.tu.t}.scaled(i) -
                       ChamberLabel{chart.tv.t}.scaled(m);
    return vertex_weight_positive(tf, lab, chart.upper[h], chart.lower[h]);
  };

  if constexpr (std::is_same_v<T, double>) {
    if (use_parallel) {
      std::exception_ptr err;
#pragma omp parallel for schedule(static)
      for (long long idx = 0; idx < count; ++idx) {
        try {
          for (int h = 0; h < l; ++h) out.states[idx][h] = state_entry(idx, h);
        } catch (...) {
#pragma omp critical(adkdv_soliton_error)
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
      return out;
    }
  }
  (void)use_parallel;
  for (long long idx = 0; idx < count; ++idx)
    for (int h = 0; h < l; ++h) out.states[idx][h] = state_entry(idx, h);
  return out;
}

}  // namespace

StateSequence<double> soliton_states(const SystemInstance<double>& inst,
                                     const TauFunction<double>& tf, long long m,
                                     long long i_lo, long long i_hi, bool use_parallel) {
  return soliton_states_impl(inst, tf, m, i_lo, i_hi, use_parallel);
}

StateSequence<Rat> soliton_states(const SystemInstance<Rat>& inst, const TauFunction<Rat>& tf,
                                  long long m, long long i_lo, long long i_hi) {
  return soliton_states_impl(inst, tf, m, i_lo, i_hi, false);
}

template <class T>
CommuteReport commuting_pair_check(const Glide& v, const Glide& u, const std::vector<T>& z,
                                   const std::vector<T>& w) {
  if (static_cast<int>(z.size()) != v.size() || static_cast<int>(w.size()) != u.size())
    throw InvalidInputError("commuting_pair_check: weight sizes must match the words");
  for (const std::vector<T>* ws : {&z, &w})
    for (const T& x : *ws)
      if (!is_positive(x))
        throw PositivityError("commuting_pair_check: weights must be positive");

  CommuteReport rep;
  rep.v_period = primitive_period(v.word);
  rep.u_period = primitive_period(u.word);
  if (rep.v_period) rep.z_periodic = weights_periodic(z, *rep.v_period);
  if (rep.u_period) rep.w_periodic = weights_periodic(w, *rep.u_period);

  rep.product_reduced = is_reduced(v.word * u.word);
  if (rep.product_reduced) {
    auto [wp, zp] = InteractionMap(u, v).apply(z, w);
    rep.fixed_point = (wp == w && zp == z);
    return rep;
  }

  // Lift to the smallest powers whose product is reduced, extending the
  // weights periodically; the conjugate claim is that commutation of the
  // primitive pair is equivalent to commutation of the powers.
  for (int total = 1; total <= 6; ++total) {
    for (int lu = 0; lu <= total; ++lu) {
      int lv = total - lu;
      AffineWord V = power_word(v, lv), U = power_word(u, lu);
      if (!is_reduced(V) || !is_reduced(U) || !is_reduced(V * U)) continue;
      Glide gV(V), gU(U);
      std::vector<T> Z = repeat_weights(z, lv + 1), W = repeat_weights(w, lu + 1);
      auto [Wp, Zp] = InteractionMap(gU, gV).apply(Z, W);
      rep.lift_v = lv;
      rep.lift_u = lu;
      rep.fixed_point = (Wp == W && Zp == Z);
      return rep;
    }
  }
  throw InvalidInputError("commuting_pair_check: no reduced power lift within bounds");
}

template CommuteReport commuting_pair_check<Rat>(const Glide&, const Glide&,
                                                 const std::vector<Rat>&,
                                                 const std::vector<Rat>&);
template CommuteReport commuting_pair_check<double>(const Glide&, const Glide&,
                                                    const std::vector<double>&,
                                                    const std::vector<double>&);

bool carrier_free_condition(const Glide& u, const Glide& v) {
  const AffineWord vu = v.word * u.word;
  if (!is_reduced(vu)) throw NotReducedError("carrier_free_condition: vu not reduced");
  WiringDiagram d = build_diagram(vu, 0);
  std::set<std::pair<int, int>> u_pairs, all_pairs;
  for (const Crossing& c : d.crossings) {
    auto pr = std::minmax(c.lower_class, c.upper_class);
    all_pairs.insert({pr.first, pr.second});
    if (c.pos >= v.size()) u_pairs.insert({pr.first, pr.second});
  }
  return std::includes(u_pairs.begin(), u_pairs.end(), all_pairs.begin(), all_pairs.end());
}

template <class T>
double window_probe(const SystemInstance<T>& inst, const StateSequence<T>& s, int r,
                    double eps) {
  if (r < 0) throw InvalidInputError("window_probe: r must be >= 0");
  auto state_at = [&](long long i) -> std::vector<T> {
    if (i >= s.i_lo && i <= s.i_hi()) return s.at(i);
    return inst.vacuum();
  };
  std::vector<T> za = inst.initial_carrier();
  std::vector<T> zb = za;
  for (T& x : zb) x = x * (T(1) + T(eps));

  std::vector<T> ya, yb;
  for (long long i = -r; i <= 0; ++i) {
    std::vector<T> y = state_at(i);
    auto [ypa, zpa] = inst.map().apply(za, y);
    auto [ypb, zpb] = inst.map().apply(zb, y);
    za = std::move(zpa);
    zb = std::move(zpb);
    if (i == 0) {
      ya = std::move(ypa);
      yb = std::move(ypb);
    }
  }
  double worst = 0.0;
  for (size_t h = 0; h < ya.size(); ++h) {
    double a = to_double(ya[h]);
    worst = std::max(worst, std::abs(a - to_double(yb[h])) / std::abs(a));
  }
  return worst;
}

template double window_probe<Rat>(const SystemInstance<Rat>&, const StateSequence<Rat>&, int,
                                  double);
template double window_probe<double>(const SystemInstance<double>&,
                                     const StateSequence<double>&, int, double);

}  // namespace adkdv
