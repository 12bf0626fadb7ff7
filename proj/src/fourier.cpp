#include "quasijump/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace quasijump {

FourierSeries::FourierSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("FourierSeries: negative order");
  c_.assign(static_cast<std::size_t>(2 * order + 1), Complex(0.0, 0.0));
}

Complex FourierSeries::coeff(int n) const {
  if (n < -order_ || n > order_) return Complex(0.0, 0.0);
  return c_[static_cast<std::size_t>(n + order_)];
}

void FourierSeries::set(int n, Complex value) {
  if (n < -order_ || n > order_)
    throw std::out_of_range("FourierSeries::set: mode outside truncation");
  c_[static_cast<std::size_t>(n + order_)] = value;
}

Complex FourierSeries::eval_angle(double theta) const {
  // Incremental phasors, no per-term trig.
  const Complex e(std::cos(theta), std::sin(theta));
  const Complex einv = std::conj(e);
  Complex acc = coeff(0);
  Complex ep(1.0, 0.0), em(1.0, 0.0);
  for (int n = 1; n <= order_; ++n) {
    ep *= e;
    em *= einv;
    acc += coeff(n) * ep + coeff(-n) * em;
  }
  return acc;
}

bool FourierSeries::is_real_valued(double tol) const {
  for (int n = 0; n <= order_; ++n) {
    if (std::abs(coeff(-n) - std::conj(coeff(n))) > tol) return false;
  }
  return true;
}

FourierSeries FourierSeries::truncated(int new_order) const {
  FourierSeries out(new_order);
  const int m = std::min(order_, new_order);
  for (int n = -m; n <= m; ++n) out.set(n, coeff(n));
  return out;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& other) {
  if (other.order_ > order_) *this = truncated(other.order_);
  for (int n = -other.order_; n <= other.order_; ++n) set(n, coeff(n) + other.coeff(n));
  return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& other) {
  if (other.order_ > order_) *this = truncated(other.order_);
  for (int n = -other.order_; n <= other.order_; ++n) set(n, coeff(n) - other.coeff(n));
  return *this;
}

FourierSeries& FourierSeries::operator*=(Complex s) {
  for (auto& x : c_) x *= s;
  return *this;
}

FourierSeries operator+(FourierSeries a, const FourierSeries& b) {
  a += b;
  return a;
}

FourierSeries operator-(FourierSeries a, const FourierSeries& b) {
  a -= b;
  return a;
}

FourierSeries operator*(Complex s, FourierSeries a) {
  a *= s;
  return a;
}

FourierSeries fourier_from_samples(const std::vector<Complex>& samples, int order) {
  const auto modes = dft_modes(samples, order);  // throws on M < 2*order+1
  FourierSeries out(order);
  for (int n = -order; n <= order; ++n)
    out.set(n, modes[static_cast<std::size_t>(n + order)]);
  return out;
}

double boundary_seminorm(const FourierSeries& h) {
  double acc = 0.0;
  for (int n = 1; n <= h.order(); ++n) {
    acc += n * (std::norm(h.coeff(n)) + std::norm(h.coeff(-n)));
  }
  return std::sqrt(acc);
}

double boundary_norm(const FourierSeries& h) {
  const double s = boundary_seminorm(h);
  return std::sqrt(std::norm(h.coeff(0)) + s * s);
}

}  // namespace quasijump
