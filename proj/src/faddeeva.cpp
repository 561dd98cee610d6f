#include "mor/faddeeva.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mor {

namespace {

template <class T>
using C = std::complex<T>;

template <class T>
constexpr T sqrt_pi = T(1.7724538509055160272981674833411451828L);

// e^{-z^2} (1 - Erf(-iz)) via the Maclaurin series of Erf. Safe where the
// series cancellation stays small (see callers).
template <class T>
C<T> w_by_erf_series(C<T> z, T tol, int max_terms) {
    const C<T> u = C<T>(0, -1) * z;  // -iz
    const C<T> u2 = u * u;
    C<T> term = u;
    C<T> sum = u;
    for (int k = 1; k < max_terms; ++k) {
        term *= -u2 / T(k);
        const C<T> add = term / T(2 * k + 1);
        sum += add;
        if (std::abs(add) <= tol * std::abs(sum)) {
            const C<T> erf = T(2) / sqrt_pi<T> * sum;
            return std::exp(-z * z) * (T(1) - erf);
        }
    }
    throw NonConvergenceError("faddeeva: erf series did not converge");
}

// Laplace continued fraction, modified Lentz evaluation:
// w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
template <class T>
C<T> w_by_continued_fraction(C<T> z, T tol, long max_iters) {
    const T tiny = std::numeric_limits<T>::min() * T(1e8);
    C<T> f = tiny;
    C<T> Cc = f;
    C<T> D = 0;
    for (long k = 1; k <= max_iters; ++k) {
        const C<T> a = (k == 1) ? C<T>(1) : C<T>(-T(k - 1) / T(2));
        const C<T> b = z;
        D = b + a * D;
        if (D == C<T>(0)) D = tiny;
        Cc = b + a / Cc;
        if (Cc == C<T>(0)) Cc = tiny;
        D = T(1) / D;
        const C<T> delta = Cc * D;
        f *= delta;
        if (std::abs(delta - T(1)) < tol)
            return C<T>(0, 1) / sqrt_pi<T> * f;
    }
    throw NonConvergenceError("faddeeva: continued fraction did not converge");
}

// Weideman (1994) rational approximation on the upper half-plane.
constexpr int kWeidemanN = 64;

struct WeidemanTable {
    double L;
    std::array<double, kWeidemanN> a;
    WeidemanTable() {
        const int M = kWeidemanN;
        const int M2 = 2 * M;
        L = std::sqrt(M / std::numbers::sqrt2);
        // f sampled at theta_k = k*pi/M, k = -M+1..M-1, with a leading zero.
        std::array<double, 2 * kWeidemanN> f{};
        f[0] = 0.0;
        for (int j = 1; j < M2; ++j) {
            const int k = j - M;
            const double theta = k * std::numbers::pi / M;
            const double t = L * std::tan(theta / 2.0);
            f[j] = std::exp(-t * t) * (L * L + t * t);
        }
        // a_j = Re(FFT(fftshift(f)))_j / (2M), taken for j = 1..N.
        for (int j = 1; j <= M; ++j) {
            double acc = 0.0;
            for (int m = 0; m < M2; ++m) {
                const double g = f[(m + M) % M2];
                acc += g * std::cos(std::numbers::pi * j * m / M);
            }
            a[j - 1] = acc / M2;
        }
    }
};

C<double> w_weideman(C<double> z) {
    static const WeidemanTable tab;
    const C<double> iz(-z.imag(), z.real());
    const C<double> denom = tab.L - iz;
    const C<double> Z = (tab.L + iz) / denom;
    // p(Z) = sum_{j=1..N} a_j Z^{j-1}, Horner from the top.
    C<double> p = 0.0;
    for (int j = kWeidemanN - 1; j >= 0; --j) p = p * Z + tab.a[j];
    return 2.0 * p / (denom * denom) + (1.0 / sqrt_pi<double>) / denom;
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("faddeeva_w: argument must have Im(z) > 0");
    const double r = std::abs(z);
    if (r <= 1.0) return w_by_erf_series<double>(z, 1e-17, 64);
    if (r < 8.0) return w_weideman(z);
    return w_by_continued_fraction<double>(z, 1e-15, 4000);
}

std::complex<double> faddeeva_w_reference(std::complex<double> zin) {
    if (!(zin.imag() > 0.0))
        throw std::domain_error("faddeeva_w_reference: argument must have Im(z) > 0");
    const C<long double> z(zin.real(), zin.imag());
    const long double r = std::abs(z);
    // The erf series loses digits to 1-Erf cancellation as Im(z) grows
    // (amplification ~ e^{2 Im(z)^2}); route those points to the fraction.
    const bool series_ok = (r <= 2.5L) || (zin.imag() <= 2.0 && r <= 7.0L);
    C<long double> w;
    if (series_ok) {
        w = w_by_erf_series<long double>(z, 1e-21L, 4000);
    } else {
        w = w_by_continued_fraction<long double>(z, 1e-17L, 2000000);
    }
    return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

}  // namespace mor
