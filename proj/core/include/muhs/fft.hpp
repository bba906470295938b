#pragma once

#include "muhs/types.hpp"

#include <vector>

namespace muhs {

// In-place discrete Fourier transforms, X_k = sum_m x_m e^{-2 pi i m k / n}
// for the forward direction and the 1/n-normalized adjoint for the inverse.
// Plans are cached per (size, direction); concurrent calls are safe.
void dft_forward(std::vector<cplx>& data);
void dft_inverse(std::vector<cplx>& data);

// Angular frequency of DFT bin m for a grid of n points with spacing h,
// i.e. 2 pi m / (n h) folded to the symmetric range.
double dft_frequency(int m, int n, double h);

} // namespace muhs
