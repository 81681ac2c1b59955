#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "bernlab/error.hpp"

namespace bernlab {

// Knobs shared by every numerical routine.  mantissa_bits sets the tolerance
// budget; the arithmetic itself happens in whatever Real the caller picked,
// which must carry at least that many bits.
struct PrecisionConfig {
  int mantissa_bits = 256;
  int quad_order = 24;      // Gauss-Legendre nodes per panel
  double pv_epsilon = 0.25; // half-width of the principal-value window
  double tail_cut = 50.0;   // lower bound on the truncation point of (0, inf)

  void validate() const {
    if (mantissa_bits < 64)
      throw InvalidArgument("mantissa_bits must be >= 64, got " + std::to_string(mantissa_bits));
    if (quad_order < 2)
      throw InvalidArgument("quad_order must be >= 2");
    if (!(pv_epsilon > 0.0))
      throw InvalidArgument("pv_epsilon must be positive");
    if (!(tail_cut > 0.0))
      throw InvalidArgument("tail_cut must be positive");
  }

  // Relative tolerance for adaptive procedures: 2^(-bits/2).
  double tolerance() const { return std::ldexp(1.0, -mantissa_bits / 2); }

  // Remez levelling tolerance: 2^(-bits/4), i.e. bits/4 binary digits.
  double levelling_tolerance() const { return std::ldexp(1.0, -mantissa_bits / 4); }
};

namespace detail {
constexpr unsigned digits10_for_bits(unsigned bits) { return (bits * 30103u + 99999u) / 100000u; }
} // namespace detail

template <unsigned Bits>
using mp_real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<detail::digits10_for_bits(Bits)>,
    boost::multiprecision::et_off>;

using real64 = mp_real<64>;
using real128 = mp_real<128>;
using real256 = mp_real<256>;
using real512 = mp_real<512>;
using real1024 = mp_real<1024>;

template <class Real>
using complex_t = std::complex<Real>;

// Type with twice the mantissa of Real; used where a conversion is known to
// lose digits (monomial expansion of Chebyshev series).
template <class Real>
struct wider {
  using type = Real;
};
template <unsigned D>
struct wider<boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<D>,
                                           boost::multiprecision::et_off>> {
  using type = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<2 * D>,
                                             boost::multiprecision::et_off>;
};
template <class Real>
using wider_t = typename wider<Real>::type;

template <class Real>
constexpr int mantissa_digits() {
  return std::numeric_limits<Real>::digits;
}

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real parse_real(std::string_view text) {
  std::string s(text);
  if constexpr (std::is_floating_point_v<Real>) {
    std::size_t pos = 0;
    Real v = static_cast<Real>(std::stold(s, &pos));
    if (pos != s.size())
      throw InvalidArgument("not a number: '" + s + "'");
    return v;
  } else {
    try {
      return Real(s);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + s + "'");
    }
  }
}

// Scientific notation with the given number of significant digits (0 = all
// digits the type carries).  Used for every report so that equal values
// always print identically.
template <class Real>
std::string format_real(const Real& x, int digits = 0) {
  std::ostringstream os;
  const int d = digits > 0 ? digits : std::numeric_limits<Real>::digits10;
  os << std::scientific << std::setprecision(d - 1) << x;
  return os.str();
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

// Calls f(std::type_identity<Real>{}) with the narrowest supported Real whose
// mantissa holds at least `bits` bits.
template <class F>
decltype(auto) dispatch_precision(int bits, F&& f) {
  if (bits <= mantissa_digits<real64>())
    return f(std::type_identity<real64>{});
  if (bits <= mantissa_digits<real128>())
    return f(std::type_identity<real128>{});
  if (bits <= mantissa_digits<real256>())
    return f(std::type_identity<real256>{});
  if (bits <= mantissa_digits<real512>())
    return f(std::type_identity<real512>{});
  if (bits <= mantissa_digits<real1024>())
    return f(std::type_identity<real1024>{});
  throw InvalidArgument("unsupported precision: " + std::to_string(bits) + " bits (max " +
                        std::to_string(mantissa_digits<real1024>()) + ")");
}

// The Real chosen for a computation must carry the configured bits.
template <class Real>
void require_precision(const PrecisionConfig& cfg) {
  cfg.validate();
  if (cfg.mantissa_bits > mantissa_digits<Real>())
    throw PrecisionError("configuration asks for " + std::to_string(cfg.mantissa_bits) +
                         " mantissa bits but the arithmetic type carries only " +
                         std::to_string(mantissa_digits<Real>()));
}

} // namespace bernlab
