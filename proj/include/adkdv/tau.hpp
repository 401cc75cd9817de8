#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "adkdv/network.hpp"
#include "adkdv/rational.hpp"

namespace adkdv {

// Exponents |s_j| beyond this bound risk float overflow in B^s; evaluation
// raises LabelRangeError instead of returning infinities.
inline constexpr long long kLabelExponentBound = 60;

template <class T>
struct SolitonComponent {
  T A;  // amplitude, > 0
  T b;
  T c;
};

// Wire weights alpha_1..alpha_n plus N (A_i, b_i, c_i) triples. Derived
// quantities: B_{i,j} = (b_i - alpha_j)/(c_i - alpha_j) and
// Z_{i,j} = (b_i - b_j)(c_i - c_j) / ((b_i - c_j)(c_i - b_j)).
//
// Construction enforces b_i, c_i distinct from every alpha_j and the
// regularity condition B_{i,j} > 0 (b_i and c_i drawn from one component of
// the complement of the alpha set). Cylindricity f(b_i) = f(c_i) is checked
// and recorded, not enforced: non-cylindric data still satisfies the
// bilinear relation and is useful as a negative control.
template <class T>
class SolitonSpec {
 public:
  SolitonSpec(WireWeights<T> alpha, std::vector<SolitonComponent<T>> comps);

  int rank() const { return static_cast<int>(alpha_.size()); }
  int order() const { return static_cast<int>(comps_.size()); }  // N
  const WireWeights<T>& alpha() const { return alpha_; }
  const std::vector<SolitonComponent<T>>& components() const { return comps_; }
  const T& B(int i, int j) const { return B_[i * rank() + j]; }  // 0-based
  const T& Z(int i, int j) const { return Z_[i * order() + j]; }
  bool cylindric() const { return cylindric_; }

 private:
  WireWeights<T> alpha_;
  std::vector<SolitonComponent<T>> comps_;
  std::vector<T> B_, Z_;
  bool cylindric_;
};

// tau_{[S]} = sum over subsets T of [N] of prod_{i<j in T} Z_{i,j}
// prod_{i in T} A_i B_{i,1}^{s_1} ... B_{i,n}^{s_n}. Cylindric specs give
// tau_{[S]+(1,...,1)} = tau_{[S]}.
template <class T>
class TauFunction {
 public:
  explicit TauFunction(SolitonSpec<T> spec) : spec_(std::move(spec)) {}

  const SolitonSpec<T>& spec() const { return spec_; }

  T f_term(int i, const ChamberLabel& S) const;  // A_i prod_j B_{i,j}^{s_j}
  T eval(const ChamberLabel& S) const;           // subset sum (N <= 12), else det
  T eval_subset_sum(const ChamberLabel& S) const;
  T eval_det(const ChamberLabel& S) const;       // Cauchy-like determinant form

  TauFunction swap_bc(int k) const;  // b_k <-> c_k, 0-based component index

 private:
  SolitonSpec<T> spec_;
};

// (t - alpha_1) ... (t - alpha_n).
template <class T>
T f_poly(const WireWeights<T>& alpha, const T& t) {
  T out(1);
  for (const T& a : alpha) out = out * (t - a);
  return out;
}

// Bounded components of R minus the alpha set (consecutive distinct sorted
// values), each an open interval.
std::vector<std::pair<double, double>> topological_modes(const WireWeights<double>& alpha);

// The partner c != b in the same bounded component with f(c) = f(b), located
// by bisection on (f(t) - f(b))/(t - b). Throws OutOfRangeError if b is not
// interior to the alpha range (or is one of the alphas), NoPartnerError if b
// is the critical point of its component.
double solve_partner(const WireWeights<double>& alpha, double b);

// Exact partner for mirror-symmetric alpha multisets of even degree:
// c = 2*mu - b with mu the center. Requires b in the central component.
Rat solve_partner_exact(const WireWeights<Rat>& alpha, const Rat& b);

// The Hirota bilinear combination at ([S], i, j, k); vanishes identically
// for soliton tau functions. Indices are 1-based and must be distinct.
template <class T>
T bhz_residual(const TauFunction<T>& tf, const ChamberLabel& S, int i, int j, int k);

// Largest |term| among the three products in the bilinear combination; the
// natural scale for residual tolerances.
double bhz_term_scale(const TauFunction<double>& tf, const ChamberLabel& S, int i, int j, int k);

// Crossing parameter generated by the tau function: (alpha_i - alpha_j)
// tau_[S] tau_[S]+e_i+e_j / (tau_[S]+e_i tau_[S]+e_j), i the upper wire
// class, j the lower, [S] the face below the crossing.
template <class T>
T vertex_weight(const TauFunction<T>& tf, const ChamberLabel& S, int i, int j);

// (log B_1, ..., log B_n) of a 1-component spec.
std::vector<double> slope(const SolitonSpec<double>& spec);

// p = (t(vtilde) . log B) / (t(u) . log B); positive for regular cylindric
// 1-solitons. Throws Error on a vanishing denominator.
double speed(const SolitonSpec<double>& spec, const Trajectory& tu, const Trajectory& tv);

// ---- implementation ----

template <class T>
SolitonSpec<T>::SolitonSpec(WireWeights<T> alpha, std::vector<SolitonComponent<T>> comps)
    : alpha_(std::move(alpha)), comps_(std::move(comps)) {
  const int n = rank(), N = order();
  if (n < 3) throw InvalidInputError("SolitonSpec: rank must be >= 3");
  B_.resize(static_cast<size_t>(N) * n);
  Z_.assign(static_cast<size_t>(N) * N, T(1));
  for (int i = 0; i < N; ++i) {
    const auto& cp = comps_[i];
    if (!is_positive(cp.A)) throw PositivityError("SolitonSpec: A must be positive");
    for (int j = 0; j < n; ++j) {
      T db = cp.b - alpha_[j], dc = cp.c - alpha_[j];
      if (db == T(0) || dc == T(0))
        throw InvalidInputError("SolitonSpec: b, c must avoid the alpha values");
      B_[i * n + j] = db / dc;
      if (!is_positive(B_[i * n + j]))
        throw PositivityError("SolitonSpec: regularity violated, B_{i,j} <= 0");
    }
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const auto &ci = comps_[i], &cj = comps_[j];
      T den = (ci.b - cj.c) * (ci.c - cj.b);
      if (den == T(0)) throw InvalidInputError("SolitonSpec: b_i = c_j degeneracy");
      Z_[i * N + j] = (ci.b - cj.b) * (ci.c - cj.c) / den;
    }
  cylindric_ = true;
  for (int i = 0; i < N; ++i) {
    T fb = f_poly(alpha_, comps_[i].b), fc = f_poly(alpha_, comps_[i].c);
    if constexpr (scalar_traits<T>::exact) {
      if (fb != fc) cylindric_ = false;
    } else {
      double scale = 1.0 + std::max(std::abs(to_double(fb)), std::abs(to_double(fc)));
      if (std::abs(to_double(fb) - to_double(fc)) > 1e-9 * scale) cylindric_ = false;
    }
  }
}

template <class T>
T TauFunction<T>::f_term(int i, const ChamberLabel& S) const {
  const int n = spec_.rank();
  if (S.rank() != n) throw InvalidInputError("tau: label rank mismatch");
  T out = spec_.components()[i].A;
  for (int j = 0; j < n; ++j) {
    long long e = S.s[j];
    if (std::llabs(e) > kLabelExponentBound)
      throw LabelRangeError("tau: label exponent " + std::to_string(e) + " exceeds bound");
    if constexpr (scalar_traits<T>::exact) {
      out = out * rat_pow(spec_.B(i, j), e);
    } else {
      out = out * std::pow(spec_.B(i, j), static_cast<double>(e));
    }
  }
  return out;
}

template <class T>
T TauFunction<T>::eval_subset_sum(const ChamberLabel& S) const {
  const int N = spec_.order();
  std::vector<T> f;
  f.reserve(N);
  for (int i = 0; i < N; ++i) f.push_back(f_term(i, S));
  T total(0);
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    T term(1);
    for (int i = 0; i < N; ++i) {
      if (!(mask >> i & 1)) continue;
      term = term * f[i];
      for (int j = i + 1; j < N; ++j)
        if (mask >> j & 1) term = term * spec_.Z(i, j);
    }
    total = total + term;
  }
  return total;
}

template <class T>
T TauFunction<T>::eval_det(const ChamberLabel& S) const {
  const int N = spec_.order();
  if (N == 0) return T(1);
  const auto& comps = spec_.components();
  std::vector<T> M(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i) {
    T fi = f_term(i, S);
    for (int j = 0; j < N; ++j) {
      T den = comps[i].b - comps[j].c;
      if (den == T(0)) throw InvalidInputError("tau determinant: b_i = c_j");
      M[i * N + j] = fi * (comps[j].b - comps[j].c) / den;
      if (i == j) M[i * N + j] = M[i * N + j] + T(1);
    }
  }
  // Gaussian elimination; exact division in Q, partial pivoting in floats.
  T det(1);
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    if constexpr (scalar_traits<T>::exact) {
      for (int r = col; r < N; ++r)
        if (M[r * N + col] != T(0)) { piv = r; break; }
    } else {
      double best = 0;
      for (int r = col; r < N; ++r)
        if (std::abs(to_double(M[r * N + col])) > best) {
          best = std::abs(to_double(M[r * N + col]));
          piv = r;
        }
    }
    if (piv < 0) return T(0);
    if (piv != col) {
      for (int c2 = 0; c2 < N; ++c2) std::swap(M[piv * N + c2], M[col * N + c2]);
      det = -det;
    }
    det = det * M[col * N + col];
    for (int r = col + 1; r < N; ++r) {
      if (M[r * N + col] == T(0)) continue;
      T factor = M[r * N + col] / M[col * N + col];
      for (int c2 = col; c2 < N; ++c2) M[r * N + c2] = M[r * N + c2] - factor * M[col * N + c2];
    }
  }
  return det;
}

template <class T>
T TauFunction<T>::eval(const ChamberLabel& S) const {
  return spec_.order() <= 12 ? eval_subset_sum(S) : eval_det(S);
}

template <class T>
TauFunction<T> TauFunction<T>::swap_bc(int k) const {
  auto comps = spec_.components();
  std::swap(comps[k].b, comps[k].c);
  return TauFunction(SolitonSpec<T>(spec_.alpha(), std::move(comps)));
}

template <class T>
T bhz_residual(const TauFunction<T>& tf, const ChamberLabel& S, int i, int j, int k) {
  if (i == j || j == k || i == k) throw InvalidInputError("bhz_residual: indices must differ");
  const auto& alpha = tf.spec().alpha();
  T t1 = (alpha[i - 1] - alpha[j - 1]) * tf.eval(S.plus_e(k)) * tf.eval(S.plus_e(i).plus_e(j));
  T t2 = (alpha[j - 1] - alpha[k - 1]) * tf.eval(S.plus_e(i)) * tf.eval(S.plus_e(j).plus_e(k));
  T t3 = (alpha[k - 1] - alpha[i - 1]) * tf.eval(S.plus_e(j)) * tf.eval(S.plus_e(i).plus_e(k));
  return t1 + t2 + t3;
}

template <class T>
T vertex_weight(const TauFunction<T>& tf, const ChamberLabel& S, int i, int j) {
  if (i == j) throw InvalidInputError("vertex_weight: wires must differ");
  const auto& alpha = tf.spec().alpha();
  T num = tf.eval(S) * tf.eval(S.plus_e(i).plus_e(j));
  T den = tf.eval(S.plus_e(i)) * tf.eval(S.plus_e(j));
  if (den == T(0)) throw NonPositiveTauError("vertex_weight: zero tau denominator");
  return (alpha[i - 1] - alpha[j - 1]) * num / den;
}

}  // namespace adkdv
