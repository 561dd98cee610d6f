#pragma once

#include <complex>
#include <stdexcept>

namespace mor {

class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Scaled complex error function W(z) = (i/pi) Integral e^{-t^2}/(z-t) dt
/// for the upper half-plane. Relative accuracy ~1e-11.
///
/// Regional evaluation: Maclaurin series for |z| <= 1, Weideman rational
/// approximation for 1 < |z| < 8, Laplace continued fraction beyond.
/// Throws std::domain_error for Im(z) <= 0 (lower half-plane unsupported).
std::complex<double> faddeeva_w(std::complex<double> z);

/// Independent reference evaluation of W(z), internally iterated to ~1e-14:
/// long-double Taylor series of Erf where cancellation permits, long-double
/// Lentz continued fraction elsewhere. Test oracle; slower than faddeeva_w.
/// Throws NonConvergenceError if the iteration budget is exhausted.
std::complex<double> faddeeva_w_reference(std::complex<double> z);

}  // namespace mor
