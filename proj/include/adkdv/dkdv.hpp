#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adkdv/lusztig.hpp"
#include "adkdv/network.hpp"
#include "adkdv/rng.hpp"
#include "adkdv/tau.hpp"

namespace adkdv {

// A finite window of states with vacuum boundary data, standing in for a
// bi-infinite sequence. States are indexed i_lo..i_lo+size-1; everything
// outside is the vacuum.
template <class T>
struct StateSequence {
  long long i_lo = 0;
  std::vector<std::vector<T>> states;

  long long i_hi() const { return i_lo + static_cast<long long>(states.size()) - 1; }
  const std::vector<T>& at(long long i) const { return states[i - i_lo]; }
  std::vector<T>& at(long long i) { return states[i - i_lo]; }

  // Max relative deviation of the two edge states from the vacuum; documents
  // the truncation quality (default acceptance threshold is 1e-8 relative).
  double edge_deviation(const std::vector<T>& vacuum) const {
    if (states.empty()) return 0.0;
    double worst = 0.0;
    for (const auto* st : {&states.front(), &states.back()})
      for (size_t h = 0; h < vacuum.size(); ++h) {
        double w = to_double(vacuum[h]);
        worst = std::max(worst, std::abs(to_double((*st)[h]) - w) / std::abs(w));
      }
    return worst;
  }
};

// State glide u, carrier glide v, wire weights, and the wire-ansatz vacuum
// and initial carrier. The compiled interaction map is cached; the
// fixed-point property F(z_inf, w) = (w, z_inf) is checked at construction
// (bit-exact in exact mode).
template <class T>
class SystemInstance {
 public:
  SystemInstance(Glide u, Glide v, WireWeights<T> alpha);

  const Glide& u() const { return u_; }
  const Glide& v() const { return v_; }
  const WireWeights<T>& alpha() const { return alpha_; }
  const std::vector<T>& vacuum() const { return vacuum_; }
  const std::vector<T>& initial_carrier() const { return carrier_; }
  const InteractionMap& map() const { return map_; }

 private:
  Glide u_, v_;
  WireWeights<T> alpha_;
  InteractionMap map_;
  std::vector<T> vacuum_, carrier_;
};

// Auto-chosen wire weights via positive_weights_for on v|u.
SystemInstance<Rat> make_instance(const Glide& u, const Glide& v);

template <class T>
SystemInstance<T> make_instance(const Glide& u, const Glide& v, WireWeights<T> alpha) {
  return SystemInstance<T>(std::move(u), std::move(v), std::move(alpha));
}

template <class T>
struct EvolveResult {
  StateSequence<T> states;
  // Relative deviation of the outgoing carrier from z_inf at the right edge;
  // a truncation diagnostic (0 when the window ends in exact vacuum).
  double carrier_deviation;
};

// One sweep: the carrier enters at z_inf left of the window and interacts
// with each state left to right.
template <class T>
EvolveResult<T> evolve_step(const SystemInstance<T>& inst, const StateSequence<T>& s) {
  std::vector<T> z = inst.initial_carrier();
  StateSequence<T> out;
  out.i_lo = s.i_lo;
  out.states.reserve(s.states.size());
  for (const auto& y : s.states) {
    auto [yp, zp] = inst.map().apply(z, y);
    out.states.push_back(std::move(yp));
    z = std::move(zp);
  }
  double dev = 0.0;
  for (size_t k = 0; k < z.size(); ++k) {
    double zi = to_double(inst.initial_carrier()[k]);
    dev = std::max(dev, std::abs(to_double(z[k]) - zi) / std::abs(zi));
  }
  return {std::move(out), dev};
}

// f_h(j): the h-th entry of each state in the window (h is 1-based).
template <class T>
std::vector<std::pair<long long, T>> observable_fh(const StateSequence<T>& s, int h) {
  if (h < 1 || s.states.empty() || h > static_cast<int>(s.states.front().size()))
    throw InvalidInputError("observable_fh: h out of range");
  std::vector<std::pair<long long, T>> out;
  out.reserve(s.states.size());
  for (long long i = s.i_lo; i <= s.i_hi(); ++i) out.emplace_back(i, s.at(i)[h - 1]);
  return out;
}

// Chamber-label bookkeeping for tau-generated states: the reference chart is
// the time-0, index-0 copy of u (left-edge occupancy is the identity); every
// other copy is reached by the shift i*t(u) - m*t(vtilde).
struct SolitonChart {
  std::vector<ChamberLabel> base;      // face below crossing h of u
  std::vector<int> upper, lower;       // wire classes at crossing h
  Trajectory tu, tv;                   // t(u), t(vtilde)
};

SolitonChart soliton_chart(const Glide& u, const Glide& v);

// States at time m over the window, read from the tau function through the
// vertex-weight formula. Requires a cylindric spec with tau > 0 on every
// label touched. use_parallel selects the OpenMP kernel (float mode only).
StateSequence<double> soliton_states(const SystemInstance<double>& inst,
                                     const TauFunction<double>& tf, long long m,
                                     long long i_lo, long long i_hi,
                                     bool use_parallel = true);

// Exact-mode variant (serial).
StateSequence<Rat> soliton_states(const SystemInstance<Rat>& inst, const TauFunction<Rat>& tf,
                                  long long m, long long i_lo, long long i_hi);

// Report of a commuting-pair probe. When the direct product vu is not
// reduced, the pair is lifted to the smallest powers V = v rho^{-k2}(v)...,
// U = u rho^{-k1}(u)... with VU reduced and the weights extended
// periodically; the fixed-point check then applies to the lifted pair.
struct CommuteReport {
  bool product_reduced = false;  // vu reduced as given
  int lift_v = 0, lift_u = 0;    // extra copies used (0 = as given)
  bool fixed_point = false;      // F(z, w) == (w, z) on the checked pair
  // Word-level primitive structure of the inputs, when present: the word is
  // ell+1 concatenated copies of rho^{-jk}(root).
  std::optional<int> v_period, u_period;  // primitive root lengths
  bool z_periodic = false, w_periodic = false;
};

template <class T>
CommuteReport commuting_pair_check(const Glide& v, const Glide& u, const std::vector<T>& z,
                                   const std::vector<T>& w);

// True iff every wire pair crossing in the diagram of vu crosses at least
// once in the u portion; exactly the condition for a carrier-free local
// evolution rule to exist.
bool carrier_free_condition(const Glide& u, const Glide& v);

// Sensitivity of y_0' to the carrier state r positions to the left: sweeps
// the window twice, once from z_inf and once from z_inf * (1 + eps), and
// reports the max relative difference in y_0'. Decays to zero (exactly, for
// r past the dependence window) iff the carrier-free condition holds.
template <class T>
double window_probe(const SystemInstance<T>& inst, const StateSequence<T>& s, int r,
                    double eps = 0.5);

extern template CommuteReport commuting_pair_check<Rat>(const Glide&, const Glide&,
                                                        const std::vector<Rat>&,
                                                        const std::vector<Rat>&);
extern template CommuteReport commuting_pair_check<double>(const Glide&, const Glide&,
                                                           const std::vector<double>&,
                                                           const std::vector<double>&);
extern template double window_probe<Rat>(const SystemInstance<Rat>&, const StateSequence<Rat>&,
                                         int, double);
extern template double window_probe<double>(const SystemInstance<double>&,
                                            const StateSequence<double>&, int, double);

// ---- implementation ----

template <class T>
SystemInstance<T>::SystemInstance(Glide u, Glide v, WireWeights<T> alpha)
    : u_(std::move(u)), v_(std::move(v)), alpha_(std::move(alpha)), map_(u_, v_) {
  auto [w, z] = wire_ansatz(u_, v_, alpha_);
  vacuum_ = std::move(w);
  carrier_ = std::move(z);
  auto [wp, zp] = map_.apply(carrier_, vacuum_);
  if constexpr (scalar_traits<T>::exact) {
    if (wp != vacuum_ || zp != carrier_)
      throw Error("SystemInstance: wire-ansatz pair is not an exact fixed point");
  } else {
    for (size_t h = 0; h < vacuum_.size(); ++h)
      if (std::abs(wp[h] - vacuum_[h]) > 1e-12 * std::abs(vacuum_[h]))
        throw Error("SystemInstance: wire-ansatz pair is not a fixed point");
    for (size_t k = 0; k < carrier_.size(); ++k)
      if (std::abs(zp[k] - carrier_[k]) > 1e-12 * std::abs(carrier_[k]))
        throw Error("SystemInstance: wire-ansatz pair is not a fixed point");
  }
}

}  // namespace adkdv
