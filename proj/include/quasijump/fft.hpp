// Minimal radix-2 FFT plus mode-indexed transforms for periodic data.
// All grids are theta_j = 2*pi*j/M; modes are integers n with the usual
// wrap-around bin convention (negative n lives in bin M-|n|).

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace quasijump {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t pow2_at_least(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place radix-2 Cooley-Tukey.  forward: X_k = sum_j x_j e^{-2 pi i jk/M};
// inverse applies the conjugate kernel and divides by M.
inline void fft_inplace(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_inplace: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

// Fourier coefficients c_n = (1/M) sum_j s_j e^{-i n theta_j} for n in
// [-order, order], samples at theta_j = 2 pi j / M.  Exact for trigonometric
// polynomials of degree <= order sampled at M >= 2*order+1 points.
inline std::vector<Complex> dft_modes(const std::vector<Complex>& samples, int order) {
  const std::size_t m = samples.size();
  if (order < 0) throw std::invalid_argument("dft_modes: negative order");
  if (m < static_cast<std::size_t>(2 * order + 1))
    throw std::invalid_argument("dft_modes: need at least 2*order+1 samples to avoid aliasing");
  std::vector<Complex> out(static_cast<std::size_t>(2 * order + 1));
  if (is_pow2(m)) {
    std::vector<Complex> work = samples;
    fft_inplace(work, false);
    for (int n = -order; n <= order; ++n) {
      const std::size_t bin =
          n >= 0 ? static_cast<std::size_t>(n) : m - static_cast<std::size_t>(-n);
      out[static_cast<std::size_t>(n + order)] = work[bin] / static_cast<double>(m);
    }
  } else {
    for (int n = -order; n <= order; ++n) {
      Complex acc(0.0, 0.0);
      const double w = -kTwoPi * static_cast<double>(n) / static_cast<double>(m);
      for (std::size_t j = 0; j < m; ++j) {
        const double ang = w * static_cast<double>(j);
        acc += samples[j] * Complex(std::cos(ang), std::sin(ang));
      }
      out[static_cast<std::size_t>(n + order)] = acc / static_cast<double>(m);
    }
  }
  return out;
}

// Values v_j = sum_n b_n e^{i n theta_j} from a length-M bin vector in
// wrap-around order (inverse transform without the 1/M normalization).
inline std::vector<Complex> synthesize_bins(std::vector<Complex> bins) {
  const double m = static_cast<double>(bins.size());
  fft_inplace(bins, true);
  for (auto& x : bins) x *= m;
  return bins;
}

}  // namespace quasijump
