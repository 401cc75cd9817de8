#include "adkdv/tau.hpp"

#include <algorithm>
#include <cmath>

namespace adkdv {

std::vector<std::pair<double, double>> topological_modes(const WireWeights<double>& alpha) {
  std::vector<double> a = alpha;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::vector<std::pair<double, double>> out;
  for (size_t i = 0; i + 1 < a.size(); ++i) out.emplace_back(a[i], a[i + 1]);
  return out;
}

double solve_partner(const WireWeights<double>& alpha, double b) {
  auto modes = topological_modes(alpha);
  if (modes.empty()) throw OutOfRangeError("solve_partner: no bounded components");
  const double lo_all = modes.front().first, hi_all = modes.back().second;
  if (!(b > lo_all && b < hi_all))
    throw OutOfRangeError("solve_partner: b outside (min alpha, max alpha)");
  double L = 0, R = 0;
  bool found = false;
  for (auto [lo, hi] : modes)
    if (b > lo && b < hi) { L = lo; R = hi; found = true; break; }
  if (!found) throw OutOfRangeError("solve_partner: b coincides with a wire weight");

  const double fb = f_poly(alpha, b);
  // Deflate: h(t) = (f(t) - f(b)) / (t - b) has exactly one root in (L, R)
  // besides possibly t = b itself (all roots of f are real, so f has a
  // single critical point per bounded component). h(L) and h(R) have
  // opposite signs, giving a bracketing interval for bisection.
  auto h = [&](double t) {
    if (t == b) {
      // Derivative of f at b via the product rule.
      double sum = 0;
      for (size_t i = 0; i < alpha.size(); ++i) {
        double prod = 1;
        for (size_t j = 0; j < alpha.size(); ++j)
          if (j != i) prod *= t - alpha[j];
        sum += prod;
      }
      return sum;
    }
    return (f_poly(alpha, t) - fb) / (t - b);
  };

  double lo = L, hi = R;
  double hlo = fb / (b - L), hhi = -fb / (R - b);  // signs of h at the walls
  if (hlo == 0 || hhi == 0 || (hlo > 0) == (hhi > 0))
    throw NoPartnerError("solve_partner: no sign change (b critical or degenerate)");
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double hm = h(mid);
    if (hm == 0) { lo = hi = mid; break; }
    if ((hm > 0) == (hlo > 0)) {
      lo = mid;
      hlo = hm;
    } else {
      hi = mid;
    }
  }
  double c = 0.5 * (lo + hi);
  if (std::abs(c - b) <= 1e-9 * (1.0 + std::abs(b)))
    throw NoPartnerError("solve_partner: only partner in the component is b itself");
  if (std::abs(f_poly(alpha, c) - fb) > 1e-12 * (1.0 + std::abs(fb)))
    throw NoPartnerError("solve_partner: bisection residual too large");
  return c;
}

Rat solve_partner_exact(const WireWeights<Rat>& alpha, const Rat& b) {
  const int n = static_cast<int>(alpha.size());
  if (n % 2 != 0)
    throw InvalidInputError("solve_partner_exact: needs even degree (mirror-symmetric f)");
  std::vector<Rat> a = alpha;
  std::sort(a.begin(), a.end());
  Rat mu = (a.front() + a.back()) / 2;
  for (int i = 0; i < n; ++i)
    if (a[i] + a[n - 1 - i] != 2 * mu)
      throw InvalidInputError("solve_partner_exact: alpha multiset not mirror-symmetric");
  Rat c = 2 * mu - b;
  if (c == b) throw NoPartnerError("solve_partner_exact: b at the center");
  // Same-component check: no alpha value strictly between b and c.
  Rat lo = std::min(b, c), hi = std::max(b, c);
  for (const Rat& x : a) {
    if (x == b || x == c)
      throw OutOfRangeError("solve_partner_exact: b or c coincides with a wire weight");
    if (x > lo && x < hi)
      throw OutOfRangeError("solve_partner_exact: b not in the central component");
  }
  if (f_poly(alpha, b) != f_poly(alpha, c))
    throw Error("solve_partner_exact: internal error, f(b) != f(c)");
  return c;
}

double bhz_term_scale(const TauFunction<double>& tf, const ChamberLabel& S, int i, int j,
                      int k) {
  const auto& alpha = tf.spec().alpha();
  double t1 =
      (alpha[i - 1] - alpha[j - 1]) * tf.eval(S.plus_e(k)) * tf.eval(S.plus_e(i).plus_e(j));
  double t2 =
      (alpha[j - 1] - alpha[k - 1]) * tf.eval(S.plus_e(i)) * tf.eval(S.plus_e(j).plus_e(k));
  double t3 =
      (alpha[k - 1] - alpha[i - 1]) * tf.eval(S.plus_e(j)) * tf.eval(S.plus_e(i).plus_e(k));
  return std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
}

std::vector<double> slope(const SolitonSpec<double>& spec) {
  if (spec.order() != 1) throw InvalidInputError("slope: expects a 1-component spec");
  std::vector<double> out(spec.rank());
  for (int j = 0; j < spec.rank(); ++j) out[j] = std::log(spec.B(0, j));
  return out;
}

double speed(const SolitonSpec<double>& spec, const Trajectory& tu, const Trajectory& tv) {
  std::vector<double> lb = slope(spec);
  double num = 0, den = 0;
  for (int j = 0; j < spec.rank(); ++j) {
    num += static_cast<double>(tv.t[j]) * lb[j];
    den += static_cast<double>(tu.t[j]) * lb[j];
  }
  if (den == 0) throw Error("speed: t(u) . log B vanishes (degenerate soliton)");
  return num / den;
}

}  // namespace adkdv
