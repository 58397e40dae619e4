#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "gev/rng.hpp"
#include "gev/theta.hpp"

namespace gev {

// Standardize x under theta and evaluate u = u_gamma(z).
//
// log u = -(1/gamma) log(1 + gamma z) has a gamma^-1 cancellation when the
// argument is formed in double precision, so for |gamma*z| < 1e-5 we use the
// expansion  log u = -z + g z^2/2 - g^2 z^3/3 + g^3 z^4/4  instead.
inline StdPoint u_gamma(double gamma, double z) {
  StdPoint p;
  p.z = z;
  double gz = gamma * z;
  p.one_plus_gamma_z = 1.0 + gz;
  if (gamma == 0.0) {
    p.in_support = true;
    p.log_u = -z;
    p.u = std::exp(p.log_u);
    return p;
  }
  if (!(p.one_plus_gamma_z > 0.0)) {
    p.in_support = false;  // boundary 1+gz == 0 counts as outside (open support)
    return p;
  }
  p.in_support = true;
  if (std::abs(gz) < 1e-5) {
    p.log_u = -z + gamma * z * z / 2.0 - gamma * gamma * z * z * z / 3.0 +
              gamma * gamma * gamma * z * z * z * z / 4.0;
  } else {
    p.log_u = -std::log1p(gz) / gamma;
  }
  p.u = std::exp(p.log_u);  // may overflow to +inf near the gamma>0 endpoint; callers cope
  return p;
}

inline StdPoint standardize(const Theta& th, double x) {
  return u_gamma(th.gamma, (x - th.mu) / th.sigma);
}

// log p_theta(x) = -log(sigma) - u + (gamma+1) log(u) on the support, -inf off it.
inline double log_density(const Theta& th, double x) {
  StdPoint p = standardize(th, x);
  if (!p.in_support) return -kInf;
  if (std::isinf(p.u)) return -kInf;  // e^{-u} dominates any power of u
  return -std::log(th.sigma) - p.u + (th.gamma + 1.0) * p.log_u;
}

inline double pdf(const Theta& th, double x) {
  double l = log_density(th, x);
  return std::isinf(l) && l < 0 ? 0.0 : std::exp(l);
}

// CDF with the boundary conventions of the distribution function: 0 below the
// finite left endpoint (gamma>0), 1 at and above the finite right endpoint
// (gamma<0).
inline double cdf(const Theta& th, double x) {
  StdPoint p = standardize(th, x);
  if (!p.in_support) return th.gamma > 0.0 ? 0.0 : 1.0;
  return std::exp(-p.u);
}

// Exact inverse of the CDF: x = mu + sigma((-log p)^{-gamma} - 1)/gamma for
// gamma != 0, mu - sigma log(-log p) for gamma = 0.
inline double quantile(const Theta& th, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile: p must lie in (0,1)");
  double ll = std::log(-std::log(p));
  if (th.gamma == 0.0) return th.mu - th.sigma * ll;
  return th.mu + th.sigma * std::expm1(-th.gamma * ll) / th.gamma;
}

// Map a unit-exponential draw e to a GEV variate: x = mu + sigma(e^{-gamma}-1)/gamma.
inline double from_unit_exponential(const Theta& th, double e) {
  double le = std::log(e);
  if (th.gamma == 0.0) return th.mu - th.sigma * le;
  return th.mu + th.sigma * std::expm1(-th.gamma * le) / th.gamma;
}

// Deterministic sampler: n iid draws keyed on `seed`.  Every value lies
// strictly inside S_theta because the exponential draws are strictly positive
// and finite.
inline Sample sample(const Theta& th, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  Sample s;
  s.values.resize(n);
  s.origin = "seed:" + std::to_string(seed);
  CounterRng rng = CounterRng::keyed(seed);
  for (std::size_t i = 0; i < n; ++i) s.values[i] = from_unit_exponential(th, rng.next_exponential());
  return s;
}

}  // namespace gev
