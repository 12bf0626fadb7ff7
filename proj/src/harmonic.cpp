#include "quasijump/harmonic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace quasijump {

namespace {

bool is_infinite(Complex z) {
  return std::isinf(z.real()) || std::isinf(z.imag());
}

}  // namespace

HarmonicRep::HarmonicRep(Side side, int order) : side_(side), order_(order) {
  if (order < 0) throw std::invalid_argument("HarmonicRep: negative order");
  holo_.assign(static_cast<std::size_t>(order + 1), Complex(0.0, 0.0));
  antiholo_.assign(static_cast<std::size_t>(order), Complex(0.0, 0.0));
}

Complex HarmonicRep::holo(int n) const {
  if (n < 0 || n > order_) return Complex(0.0, 0.0);
  return holo_[static_cast<std::size_t>(n)];
}

void HarmonicRep::set_holo(int n, Complex v) {
  if (n < 0 || n > order_) throw std::out_of_range("HarmonicRep::set_holo");
  holo_[static_cast<std::size_t>(n)] = v;
}

Complex HarmonicRep::antiholo(int n) const {
  if (n < 1 || n > order_) return Complex(0.0, 0.0);
  return antiholo_[static_cast<std::size_t>(n - 1)];
}

void HarmonicRep::set_antiholo(int n, Complex v) {
  if (n < 1 || n > order_) throw std::out_of_range("HarmonicRep::set_antiholo");
  antiholo_[static_cast<std::size_t>(n - 1)] = v;
}

Complex HarmonicRep::eval(Complex z) const {
  if (is_infinite(z)) {
    if (side_ == Side::exterior) return holo(0);
    throw std::domain_error("HarmonicRep::eval: infinity is not in the interior");
  }
  const double r = std::abs(z);
  if (side_ == Side::interior) {
    if (r >= 1.0) throw std::domain_error("HarmonicRep::eval: point not inside the unit disk");
    Complex acc = holo(0);
    Complex zp(1.0, 0.0), zbp(1.0, 0.0);
    const Complex zb = std::conj(z);
    for (int n = 1; n <= order_; ++n) {
      zp *= z;
      zbp *= zb;
      acc += holo(n) * zp + std::conj(antiholo(n)) * zbp;
    }
    return acc;
  }
  if (r <= 1.0) throw std::domain_error("HarmonicRep::eval: point not outside the unit disk");
  const Complex wi = 1.0 / z;
  const Complex wbi = std::conj(wi);
  Complex acc = holo(0);
  Complex wp(1.0, 0.0), wbp(1.0, 0.0);
  for (int n = 1; n <= order_; ++n) {
    wp *= wi;
    wbp *= wbi;
    acc += holo(n) * wp + std::conj(antiholo(n)) * wbp;
  }
  return acc;
}

EvalResult HarmonicRep::eval_with_tail(Complex z) const {
  EvalResult out{eval(z), 0.0};
  if (order_ < 1) return out;
  // Geometric decay ratio guessed from the last (up to) 8 coefficient
  // magnitudes, then summed against the evaluation radius.
  const int lo = std::max(1, order_ - 7);
  double ratio = 0.0;
  int count = 0;
  double prev = -1.0;
  for (int n = lo; n <= order_; ++n) {
    const double mag = std::max(std::abs(holo(n)), std::abs(antiholo(n)));
    if (prev > 1e-300 && mag > 0.0) {
      ratio += mag / prev;
      ++count;
    }
    prev = mag;
  }
  double q = count > 0 ? ratio / count : 0.5;
  q = std::min(q, 0.999);
  double s;
  if (is_infinite(z)) {
    s = 0.0;
  } else {
    const double r = std::abs(z);
    s = side_ == Side::interior ? r : 1.0 / r;
  }
  const double top = std::max(std::abs(holo(order_)), std::abs(antiholo(order_)));
  const double qs = q * s;
  out.tail_estimate = qs < 1.0 ? top * std::pow(s, order_) * qs / (1.0 - qs)
                               : std::numeric_limits<double>::infinity();
  return out;
}

Complex HarmonicRep::basepoint_value() const { return holo(0); }

HarmonicRep extend(const FourierSeries& h, Side side) {
  const int n = h.order();
  HarmonicRep out(side, n);
  if (side == Side::interior) {
    for (int k = 0; k <= n; ++k) out.set_holo(k, h.coeff(k));
    for (int k = 1; k <= n; ++k) out.set_antiholo(k, std::conj(h.coeff(-k)));
  } else {
    for (int k = 0; k <= n; ++k) out.set_holo(k, h.coeff(-k));
    for (int k = 1; k <= n; ++k) out.set_antiholo(k, std::conj(h.coeff(k)));
  }
  return out;
}

FourierSeries restrict_boundary(const HarmonicRep& rep) {
  const int n = rep.order();
  FourierSeries out(n);
  if (rep.side() == Side::interior) {
    for (int k = 0; k <= n; ++k) out.set(k, rep.holo(k));
    for (int k = 1; k <= n; ++k) out.set(-k, std::conj(rep.antiholo(k)));
  } else {
    for (int k = 0; k <= n; ++k) out.set(-k, rep.holo(k));
    for (int k = 1; k <= n; ++k) out.set(k, std::conj(rep.antiholo(k)));
  }
  return out;
}

HarmonicRep reflect_circle(const HarmonicRep& rep) {
  const int n = rep.order();
  HarmonicRep out(rep.side() == Side::interior ? Side::exterior : Side::interior, n);
  out.set_holo(0, rep.holo(0));
  for (int k = 1; k <= n; ++k) {
    out.set_holo(k, std::conj(rep.antiholo(k)));
    out.set_antiholo(k, std::conj(rep.holo(k)));
  }
  return out;
}

double dirichlet_seminorm(const HarmonicRep& rep) {
  double acc = 0.0;
  for (int n = 1; n <= rep.order(); ++n) {
    acc += n * (std::norm(rep.holo(n)) + std::norm(rep.antiholo(n)));
  }
  return std::sqrt(acc);
}

NormReport norm_report(const FourierSeries& h, Side side) {
  NormReport rep;
  rep.seminorm_H = boundary_seminorm(h);
  rep.norm_H0 = boundary_norm(h);
  const HarmonicRep ext = extend(h, side);
  rep.dirichlet_seminorm = dirichlet_seminorm(ext);
  rep.basepoint_value = ext.basepoint_value();
  rep.pointed_norm = std::sqrt(std::norm(rep.basepoint_value) +
                               rep.dirichlet_seminorm * rep.dirichlet_seminorm);
  return rep;
}

}  // namespace quasijump
