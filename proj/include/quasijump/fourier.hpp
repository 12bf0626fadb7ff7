// Truncated Fourier series on the unit circle: the coefficient model for
// boundary data, together with the two boundary norms
//
//   seminorm^2 = sum_n |n| |c_n|^2        (kills constants)
//   norm^2     = |c_0|^2 + seminorm^2
//
// used throughout the decomposition machinery.

#pragma once

#include <complex>
#include <vector>

#include "quasijump/fft.hpp"

namespace quasijump {

class FourierSeries {
 public:
  explicit FourierSeries(int order);

  int order() const { return order_; }

  // Coefficient of e^{i n theta}; zero outside the stored range.
  Complex coeff(int n) const;
  void set(int n, Complex value);

  // Raw storage, index i corresponds to mode n = i - order.
  const std::vector<Complex>& data() const { return c_; }
  std::vector<Complex>& data() { return c_; }

  Complex eval_angle(double theta) const;

  // Hermitian symmetry c_{-n} = conj(c_n), the mark of real boundary data.
  bool is_real_valued(double tol = 1e-12) const;

  // Copy with a different truncation order (pads with zeros or drops tails).
  FourierSeries truncated(int new_order) const;

  FourierSeries& operator+=(const FourierSeries& other);
  FourierSeries& operator-=(const FourierSeries& other);
  FourierSeries& operator*=(Complex s);

 private:
  int order_;
  std::vector<Complex> c_;
};

FourierSeries operator+(FourierSeries a, const FourierSeries& b);
FourierSeries operator-(FourierSeries a, const FourierSeries& b);
FourierSeries operator*(Complex s, FourierSeries a);

// Discrete Fourier coefficients of samples at the M equispaced angles
// theta_j = 2 pi j / M.  Requires M >= 2*order+1; exact on trigonometric
// polynomials of degree <= order.
FourierSeries fourier_from_samples(const std::vector<Complex>& samples, int order);

double boundary_seminorm(const FourierSeries& h);
double boundary_norm(const FourierSeries& h);

}  // namespace quasijump
