#include "quasijump/domain.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace quasijump {

namespace {

Complex unit(double angle) { return Complex(std::cos(angle), std::sin(angle)); }

bool is_infinite(Complex z) { return std::isinf(z.real()) || std::isinf(z.imag()); }

}  // namespace

Complex invert_map(const ConformalMap& map, Complex target) {
  Complex w;
  if (map.side() == Side::interior) {
    w = (target - map.basepoint()) / map.derivative_coefficient();
    if (std::abs(w) > 0.98) w *= 0.98 / std::abs(w);
  } else {
    w = target / map.derivative_coefficient();
    if (std::abs(w) < 1.02) w *= 1.02 / std::abs(w);
  }
  const double scale = 1.0 + std::abs(target);
  for (int attempt = 0; attempt < 2; ++attempt) {
    Complex cur = w;
    for (int it = 0; it < 80; ++it) {
      const Complex r = map.eval(cur) - target;
      if (std::abs(r) < 1e-14 * scale) return cur;
      const Complex d = map.deriv(cur);
      if (std::abs(d) < 1e-300) break;
      cur -= r / d;
    }
    if (std::abs(map.eval(cur) - target) < 1e-10 * scale) return cur;
    // Coarse polar re-seed, then retry.
    double best = std::numeric_limits<double>::max();
    for (int ir = 0; ir < 12; ++ir) {
      const double rr = map.side() == Side::interior ? 0.08 * (ir + 1)
                                                     : 1.0 + 0.25 * (ir + 1);
      for (int ia = 0; ia < 64; ++ia) {
        const Complex cand = rr * unit(kTwoPi * ia / 64.0);
        const double d = std::abs(map.eval(cand) - target);
        if (d < best) {
          best = d;
          w = cand;
        }
      }
    }
  }
  throw std::runtime_error("invert_map: Newton iteration did not converge");
}

Complex DomainFunction::eval(Complex z) const {
  if (!pair) throw std::logic_error("DomainFunction: missing pair");
  if (side == CurveSide::plus) return rep.eval(invert_map(pair->f, z));
  if (is_infinite(z)) return rep.basepoint_value();
  return rep.eval(invert_map(pair->g, z));
}

DomainFunction harmonic_on(const ConformalPair& pair, CurveSide side,
                           const FourierSeries& chart_trace) {
  return DomainFunction{&pair, side, extend(chart_trace, rep_side(side))};
}

Complex LaurentRep::eval_pullback(Complex w) const {
  if (side == CurveSide::plus) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * w + coeffs[k];
    return acc;
  }
  if (is_infinite(w)) return Complex(0.0, 0.0);
  const Complex wi = 1.0 / w;
  Complex acc(0.0, 0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = (acc + coeffs[k]) * wi;
  return acc;
}

Complex LaurentRep::eval(Complex z) const {
  if (!pair) throw std::logic_error("LaurentRep: missing pair");
  if (side == CurveSide::plus) return eval_pullback(invert_map(pair->f, z));
  if (is_infinite(z)) return Complex(0.0, 0.0);
  return eval_pullback(invert_map(pair->g, z));
}

FourierSeries LaurentRep::trace() const {
  const int n = static_cast<int>(coeffs.size());
  if (side == CurveSide::plus) {
    FourierSeries out(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) out.set(k, coeffs[static_cast<std::size_t>(k)]);
    return out;
  }
  FourierSeries out(n);
  for (int k = 0; k < n; ++k) out.set(-(k + 1), coeffs[static_cast<std::size_t>(k)]);
  return out;
}

double LaurentRep::seminorm() const {
  double acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double n = side == CurveSide::plus ? static_cast<double>(k)
                                             : static_cast<double>(k + 1);
    acc += n * std::norm(coeffs[k]);
  }
  return std::sqrt(acc);
}

Complex LaurentRep::basepoint_value() const {
  if (side == CurveSide::minus) return Complex(0.0, 0.0);
  return coeffs.empty() ? Complex(0.0, 0.0) : coeffs[0];
}

LaurentRep laurent_plus(const ConformalPair& pair, std::vector<Complex> coeffs) {
  return LaurentRep{&pair, CurveSide::plus, std::move(coeffs)};
}

LaurentRep laurent_minus(const ConformalPair& pair, std::vector<Complex> coeffs) {
  return LaurentRep{&pair, CurveSide::minus, std::move(coeffs)};
}

}  // namespace quasijump
