#pragma once

#include <complex>
#include <vector>

namespace dbarkit::detail {

// Thin wrappers over FFTW (unnormalized transforms, row-major, rows x cols).

void fft2(std::vector<std::complex<double>>& data, int rows, int cols, bool inverse);

// Real-to-complex forward transform: output rows x (cols/2 + 1).
std::vector<std::complex<double>> rfft2(const std::vector<double>& in, int rows, int cols);

// Complex-to-real inverse transform (input is consumed).
std::vector<double> irfft2(std::vector<std::complex<double>> in, int rows, int cols);

// Smallest size >= m of the form 2^a 3^b 5^c.
int next_fast_size(int m);

}  // namespace dbarkit::detail
