// Monotone (Fritsch-Carlson) cubic interpolation of an increasing circle
// homeomorphism: knots span one period, values lift by a fixed amount per
// period, and monotone data produces a monotone interpolant.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace quasijump {

class MonotonePeriodicSpline {
 public:
  // x: strictly increasing knots covering [x0, x0 + period).
  // y: strictly increasing values with y(x + period) = y(x) + lift.
  MonotonePeriodicSpline() = default;
  MonotonePeriodicSpline(std::vector<double> x, std::vector<double> y,
                         double period, double lift)
      : x_(std::move(x)), y_(std::move(y)), period_(period), lift_(lift) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n)
      throw std::invalid_argument("MonotonePeriodicSpline: need >= 3 matched knots");
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!(x_[i] < x_[i + 1]) || !(y_[i] < y_[i + 1]))
        throw std::invalid_argument("MonotonePeriodicSpline: data not strictly increasing");
    }
    if (!(x_.back() - x_.front() < period_))
      throw std::invalid_argument("MonotonePeriodicSpline: knots exceed one period");
    // Wrap one knot so every interval has both endpoints.
    x_.push_back(x_.front() + period_);
    y_.push_back(y_.front() + lift_);
    build_slopes();
    uniform_ = true;
    const double h0 = x_[1] - x_[0];
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
      if (std::abs((x_[i + 1] - x_[i]) - h0) > 1e-9 * period_) {
        uniform_ = false;
        break;
      }
    }
  }

  double operator()(double x) const {
    const double x0 = x_.front();
    double t = std::floor((x - x0) / period_);
    double xb = x - t * period_;
    // Guard against floating drift at the seam.
    if (xb < x0) {
      xb += period_;
      t -= 1.0;
    } else if (xb >= x0 + period_) {
      xb -= period_;
      t += 1.0;
    }
    std::size_t i;
    if (uniform_) {
      const double h0 = x_[1] - x_[0];
      i = static_cast<std::size_t>((xb - x0) / h0);
      if (i >= x_.size() - 1) i = x_.size() - 2;
      if (xb < x_[i]) --i;
      if (xb > x_[i + 1]) ++i;
    } else {
      i = static_cast<std::size_t>(
          std::upper_bound(x_.begin(), x_.end(), xb) - x_.begin());
      i = i > 0 ? i - 1 : 0;
      if (i >= x_.size() - 1) i = x_.size() - 2;
    }
    const double h = x_[i + 1] - x_[i];
    const double s = (xb - x_[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    const double v = h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
    return v + t * lift_;
  }

  double period() const { return period_; }
  double lift() const { return lift_; }

 private:
  void build_slopes() {
    const std::size_t n = x_.size();
    std::vector<double> delta(n - 1);
    std::vector<double> hlen(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      hlen[i] = x_[i + 1] - x_[i];
      delta[i] = (y_[i + 1] - y_[i]) / hlen[i];
    }
    d_.assign(n, 0.0);
    auto dprev = [&](std::size_t i) { return i == 0 ? delta[n - 2] : delta[i - 1]; };
    auto hprev = [&](std::size_t i) { return i == 0 ? hlen[n - 2] : hlen[i - 1]; };
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double dm = dprev(i), dp = delta[i];
      if (dm * dp <= 0.0) {
        d_[i] = 0.0;
      } else {
        // Weighted harmonic mean (Fritsch-Carlson); keeps the interpolant
        // monotone for monotone data.
        const double hm = hprev(i), hp = hlen[i];
        const double w1 = 2.0 * hp + hm;
        const double w2 = hp + 2.0 * hm;
        d_[i] = (w1 + w2) / (w1 / dm + w2 / dp);
      }
    }
    d_[n - 1] = d_[0];  // periodicity
  }

  std::vector<double> x_, y_, d_;
  double period_ = 0.0, lift_ = 0.0;
  bool uniform_ = false;
};

}  // namespace quasijump
