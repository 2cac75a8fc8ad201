#pragma once

#include <vector>

#include "gmaxent/errors.hpp"

namespace gmaxent {

// Probability vector over an enumerated state space.
struct Distribution {
  std::vector<double> p;

  int K() const { return static_cast<int>(p.size()); }

  static Distribution uniform(int K) {
    Distribution d;
    d.p.assign(static_cast<size_t>(K), 1.0 / K);
    return d;
  }

  void validate(double tol = 1e-12) const;
};

}  // namespace gmaxent
