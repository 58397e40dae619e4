#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gev {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Thrown when an operation is queried at a point outside the relevant support.
struct out_of_support_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter triple (shape gamma, location mu, scale sigma).  sigma > 0 is
// enforced at construction; everything downstream may assume it.
struct Theta {
  double gamma = 0.0;
  double mu = 0.0;
  double sigma = 1.0;

  Theta() = default;
  Theta(double g, double m, double s) : gamma(g), mu(m), sigma(s) {
    if (!(s > 0.0) || !std::isfinite(s) || !std::isfinite(g) || !std::isfinite(m))
      throw std::invalid_argument("Theta: sigma must be finite and > 0, gamma/mu finite");
  }

  // gamma > -1/2 marks the regular region where the Fisher matrix exists and
  // the MLE is asymptotically normal.
  bool regular() const { return gamma > -0.5; }

  bool operator==(const Theta& o) const {
    return gamma == o.gamma && mu == o.mu && sigma == o.sigma;
  }
};

// Standardized view of one observation under one parameter: z = (x-mu)/sigma,
// u = u_gamma(z), with an explicit flag for 1 + gamma*z <= 0.
struct StdPoint {
  double z = 0.0;
  double one_plus_gamma_z = 1.0;
  double u = kNaN;
  double log_u = kNaN;
  bool in_support = false;
};

struct Sample {
  std::vector<double> values;
  std::string origin;  // seed tag or file path

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

}  // namespace gev
