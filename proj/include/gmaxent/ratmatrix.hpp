#pragma once

#include <string>
#include <vector>

#include "gmaxent/errors.hpp"
#include "gmaxent/rational.hpp"

namespace gmaxent {

// Small dense square matrix over the exact rationals, row-major.
struct RatMatrix {
  int n = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  explicit RatMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, Rational(0)) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static RatMatrix identity(int dim) {
    RatMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const RatMatrix& o) const { return n == o.n && a == o.a; }

  // Canonical text key, usable as a map key for closure bookkeeping.
  std::string key() const {
    std::string s;
    s.reserve(a.size() * 3);
    for (const auto& v : a) {
      s += v.get_str();
      s += ',';
    }
    return s;
  }
};

RatMatrix mat_mul(const RatMatrix& A, const RatMatrix& B);
std::vector<Rational> mat_apply(const RatMatrix& A, const std::vector<Rational>& x);
Rational mat_det(RatMatrix A);
// Throws NonInvertibleGenerator on a singular input.
RatMatrix mat_inverse(RatMatrix A);

}  // namespace gmaxent
