#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gmaxent/rational.hpp"

namespace gmaxent {

// Finite state space of K lattice points in R^m. Coordinates are stored in
// doubled units (twice the value) so half-integer levels stay exact.
struct LatticeSpace {
  int dimension = 0;
  int K = 0;
  std::vector<std::vector<int>> pts2;  // K x m, doubled coordinates

  std::vector<Rational> point(int k) const;
  std::vector<double> point_d(int k) const;

  std::optional<int> find_doubled(const std::vector<int>& p2) const;
  // Exact lookup; returns nullopt when the point is off-lattice (including
  // any coordinate whose denominator does not divide 2).
  std::optional<int> find(const std::vector<Rational>& x) const;

  static LatticeSpace from_doubled(int dimension, std::vector<std::vector<int>> pts2);

 private:
  std::map<std::vector<int>, int> index_;
};

// The centered grid {-(L-1)/2, ..., (L-1)/2}^m, enumerated with the last
// coordinate fastest (point k spells k in base L).
LatticeSpace centered_grid(int m, int L);

// Microimage state space: n x n patches with L levels, shifted down by
// (L-1)/2. Equals centered_grid(n*n, L).
LatticeSpace microimage_space(int L, int n = 2);

}  // namespace gmaxent
