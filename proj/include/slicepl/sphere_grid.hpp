#pragma once

#include <cstddef>
#include <vector>

#include "slicepl/quaternion.hpp"

namespace slicepl {

// Deterministic, seedless directions on the sphere S of unit imaginary
// quaternions. The first three directions are i, j, k; the rest follow the
// two-dimensional Kronecker (R2, plastic-number) sequence mapped to the sphere
// by the equal-area map z = 1 - 2u, azimuth = 2 pi v. The grid of size n is a
// prefix of the grid of size m > n, so any maximum taken over it is
// nondecreasing under refinement.
std::vector<UnitImaginary> axis_grid(std::size_t n);

// n evenly spaced values covering the closed interval [a, b] (n >= 2), or the
// midpoint when n == 1.
std::vector<double> closed_grid(double a, double b, std::size_t n);

// n evenly spaced values strictly inside (a, b): a + (k + 1)(b - a)/(n + 1).
std::vector<double> open_grid(double a, double b, std::size_t n);

// n geometric values from a to b inclusive (a, b > 0).
std::vector<double> geometric_grid(double a, double b, std::size_t n);

}  // namespace slicepl
