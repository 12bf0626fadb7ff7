// Harmonic extensions of circle boundary data to the unit disk and its
// exterior, split into holomorphic and anti-holomorphic coefficient halves:
//
//   interior:  H(z) = sum_{n>=0} u_n z^n + sum_{n>=1} conj(v_n) zbar^n
//   exterior:  H(w) = sum_{n>=0} u_n w^{-n} + sum_{n>=1} conj(v_n) wbar^{-n}
//
// Restriction to |z|=1 and extension are exact inverses on the truncated
// model, and the Dirichlet seminorm sqrt(sum n (|u_n|^2 + |v_n|^2)) equals
// the boundary seminorm of the trace.  The seminorm normalizes area measure
// by pi, i.e. it is (1/pi) * integral of |dH|^2 + |dbarH|^2.

#pragma once

#include <complex>
#include <vector>

#include "quasijump/fourier.hpp"

namespace quasijump {

enum class Side { interior, exterior };

struct EvalResult {
  Complex value;
  double tail_estimate;  // crude geometric bound on the dropped series tail
};

class HarmonicRep {
 public:
  HarmonicRep(Side side, int order);

  Side side() const { return side_; }
  int order() const { return order_; }

  // Holomorphic half: coefficient of z^n (interior) or w^{-n} (exterior),
  // n = 0..order.
  Complex holo(int n) const;
  void set_holo(int n, Complex v);

  // Anti-holomorphic half, stored pre-conjugation: the represented term is
  // conj(antiholo(n)) * zbar^n (interior) or conj(antiholo(n)) * wbar^{-n}
  // (exterior), n = 1..order.
  Complex antiholo(int n) const;
  void set_antiholo(int n, Complex v);

  // Series value; rejects points on the unit circle or on the wrong side.
  // Exterior reps accept infinity (value = constant term).
  Complex eval(Complex z) const;
  EvalResult eval_with_tail(Complex z) const;

  // H(0) for interior reps, H(infinity) for exterior ones.
  Complex basepoint_value() const;

 private:
  Side side_;
  int order_;
  std::vector<Complex> holo_;      // [0..order]
  std::vector<Complex> antiholo_;  // [1..order] at index n-1
};

HarmonicRep extend(const FourierSeries& h, Side side);
FourierSeries restrict_boundary(const HarmonicRep& rep);

// H(z) -> H(1/conj(z)): swaps sides, preserves the Dirichlet seminorm and
// the basepoint value (0 <-> infinity).
HarmonicRep reflect_circle(const HarmonicRep& rep);

double dirichlet_seminorm(const HarmonicRep& rep);

struct NormReport {
  double seminorm_H = 0.0;
  double norm_H0 = 0.0;
  double dirichlet_seminorm = 0.0;
  double pointed_norm = 0.0;
  Complex basepoint_value{0.0, 0.0};
};

NormReport norm_report(const FourierSeries& h, Side side);

}  // namespace quasijump
