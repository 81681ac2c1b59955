#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "bernlab/error.hpp"

namespace bernlab::specialfn {

// Discrete Hilbert transform (1/pi) PV integral rho(t) dt / (x - t) of samples
// on a uniform grid.  Values beyond the grid are taken as zero.

namespace detail {

template <class T>
void check_uniform(std::span<const T> x) {
  using std::abs;
  if (x.size() < 3)
    throw InvalidArgument("hilbert transform: need at least 3 grid points");
  const T h = x[1] - x[0];
  if (!(h > 0))
    throw InvalidArgument("hilbert transform: grid must be increasing");
  const T slack = 1e-9 * h;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (abs((x[i] - x[i - 1]) - h) > slack)
      throw InvalidArgument("hilbert transform: grid is not uniform at index " + std::to_string(i));
}

} // namespace detail

// Values at the grid nodes.  Each node sees only nodes at odd offsets, which
// makes it a trapezoid rule of spacing 2h centred on the singularity.
template <class T>
std::vector<T> hilbert_grid(std::span<const T> x, std::span<const T> rho) {
  if (x.size() != rho.size())
    throw InvalidArgument("hilbert_grid: grid and samples differ in length");
  detail::check_uniform(x);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const T scale = 2 / boost::math::constants::pi<T>();
  std::vector<T> out(n, T(0));
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    T sum = 0;
    for (std::ptrdiff_t j = (i % 2 == 0) ? 1 : 0; j < n; j += 2)
      sum += rho[j] / T(i - j);
    out[i] = scale * sum;
  }
  return out;
}

// Values at the n-1 cell midpoints (x_i + x_{i+1})/2 from the node samples.
template <class T>
std::vector<T> hilbert_midpoints(std::span<const T> x, std::span<const T> rho) {
  if (x.size() != rho.size())
    throw InvalidArgument("hilbert_midpoints: grid and samples differ in length");
  detail::check_uniform(x);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const T scale = 1 / boost::math::constants::pi<T>();
  std::vector<T> out(n - 1, T(0));
  for (std::ptrdiff_t i = 0; i + 1 < n; ++i) {
    T sum = 0;
    for (std::ptrdiff_t j = 0; j < n; ++j)
      sum += rho[j] / (T(i - j) + T(0.5));
    out[i] = scale * sum;
  }
  return out;
}

} // namespace bernlab::specialfn
