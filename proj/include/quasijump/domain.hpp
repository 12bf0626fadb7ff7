// Functions on the two complementary domains of a curve, carried in pullback
// coordinates: a DomainFunction is an element of the harmonic Dirichlet space
// of Omega^+ or Omega^- represented by its pullback under f or g, and a
// LaurentRep is a holomorphic element (plus side: power series under f;
// minus side: pure negative powers under g, so it vanishes at infinity).
//
// Both hold a non-owning pointer to their ConformalPair, which must outlive
// them.

#pragma once

#include <vector>

#include "quasijump/conformal.hpp"
#include "quasijump/fourier.hpp"
#include "quasijump/harmonic.hpp"

namespace quasijump {

enum class CurveSide { plus, minus };

constexpr Side rep_side(CurveSide s) {
  return s == CurveSide::plus ? Side::interior : Side::exterior;
}
constexpr CurveSide other(CurveSide s) {
  return s == CurveSide::plus ? CurveSide::minus : CurveSide::plus;
}

struct DomainFunction {
  const ConformalPair* pair = nullptr;
  CurveSide side = CurveSide::plus;
  HarmonicRep rep{Side::interior, 0};

  // Value at a point of the physical plane (inverts the chart map).
  Complex eval(Complex z) const;
  FourierSeries trace() const { return restrict_boundary(rep); }
  double seminorm() const { return dirichlet_seminorm(rep); }
};

// Harmonic element of the given side from boundary data in that side's chart.
DomainFunction harmonic_on(const ConformalPair& pair, CurveSide side,
                           const FourierSeries& chart_trace);

struct LaurentRep {
  const ConformalPair* pair = nullptr;
  CurveSide side = CurveSide::plus;
  // plus: coeffs[k] multiplies w^k (pullback under f), k = 0..;
  // minus: coeffs[k] multiplies w^{-(k+1)} (pullback under g) - no constant.
  std::vector<Complex> coeffs;

  Complex eval(Complex z) const;      // physical-plane point
  Complex eval_pullback(Complex w) const;
  FourierSeries trace() const;        // boundary series in the own chart
  double seminorm() const;            // Dirichlet seminorm of the function
  Complex basepoint_value() const;    // u(p) on the plus side, u(inf)=0 on minus
};

LaurentRep laurent_plus(const ConformalPair& pair, std::vector<Complex> coeffs);
LaurentRep laurent_minus(const ConformalPair& pair, std::vector<Complex> coeffs);

// Newton inversion of a chart map; used for pointwise evaluation and for
// locating evaluation points relative to the level-curve family.
Complex invert_map(const ConformalMap& map, Complex target);

}  // namespace quasijump
