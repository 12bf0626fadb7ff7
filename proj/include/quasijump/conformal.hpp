// Concrete quasicircles as conformal pairs (f, g): an interior Riemann map
// f on the unit disk with f(0) = p, f'(0) > 0, an exterior map g fixing
// infinity with g'(inf) > 0, and the sampled welding homeomorphism
// phi = g^{-1} o f on the circle.  One of the two maps may be supplied in
// closed form and the other one fitted by alternating analytic projection
// with a tangential correction of the boundary correspondence.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "quasijump/fourier.hpp"
#include "quasijump/harmonic.hpp"
#include "quasijump/interp.hpp"

namespace quasijump {

class ConformalMap {
 public:
  enum class Kind { closed_form, fitted };

  // Interior: f(z) = sum_{k>=0} c[k] z^k, univalent with c[1] != 0.
  static ConformalMap interior(std::vector<Complex> coeffs,
                               Kind kind = Kind::closed_form);
  // Exterior: g(w) = c[0] w + c[1] + sum_{k>=2} c[k] w^{-(k-1)}, c[0] != 0.
  static ConformalMap exterior(std::vector<Complex> coeffs,
                               Kind kind = Kind::closed_form);

  Side side() const { return side_; }
  Kind kind() const { return kind_; }
  const std::vector<Complex>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;

  // f(0) for interior maps; leading coefficient g'(inf) for exterior maps.
  Complex basepoint() const;
  Complex derivative_coefficient() const;

  // Necessary-condition univalence probe: pairwise-distinct values at
  // boundary-adjacent samples.  Throws on failure.
  void check_univalence(std::size_t samples = 256) const;

 private:
  ConformalMap(Side side, Kind kind, std::vector<Complex> c);
  Side side_;
  Kind kind_;
  std::vector<Complex> c_;
};

class Welding {
 public:
  Welding() = default;
  // phi sampled at theta_j = 2 pi j / M, strictly increasing with
  // phi(theta + 2 pi) = phi(theta) + 2 pi.
  explicit Welding(std::vector<double> phi_samples);

  double forward(double theta) const { return fwd_(theta); }
  double inverse(double phi) const { return inv_(phi); }

  std::size_t size() const { return phi_.size(); }
  const std::vector<double>& samples() const { return phi_; }
  double theta_at(std::size_t j) const;

 private:
  std::vector<double> phi_;
  MonotonePeriodicSpline fwd_, inv_;
};

struct ConformalPair {
  ConformalMap f;
  ConformalMap g;
  Welding welding;
  Complex basepoint{0.0, 0.0};  // f(0)
  double boundary_mismatch = 0.0;
  double tolerance = 1e-8;
  std::string name;
  std::vector<Complex> boundary_samples;  // f on the unit circle, for distance checks
};

struct FitOptions {
  int map_order = 64;
  int max_map_order = 512;
  int max_iterations = 200;
  double target_residual = 1e-12;
  double tolerance = 1e-8;  // accepted boundary mismatch
  std::size_t grid = 1024;
};

struct FitDiagnostics {
  int iterations = 0;
  double final_residual = 0.0;
  std::vector<double> residual_history;
};

// Solve for the missing side of a pair.  Alternates (i) analytic projection
// of the traced boundary onto the admissible mode range of the unknown map
// with normalization defects folded in, and (ii) a tangential Newton update
// of the boundary correspondence.  Throws on non-convergence or on a
// non-monotone correspondence.
ConformalMap fit_interior_map(const ConformalMap& g, Complex basepoint,
                              const FitOptions& opts = {},
                              FitDiagnostics* diag = nullptr);
ConformalMap fit_exterior_map(const ConformalMap& f, const FitOptions& opts = {},
                              FitDiagnostics* diag = nullptr);

// Correspondence between two known maps: phi with g(e^{i phi(theta)}) =
// f(e^{i theta}), solved per sample by tangential Newton marching.
Welding compute_welding(const ConformalMap& f, const ConformalMap& g,
                        std::size_t samples = 8192, double* mismatch = nullptr);

ConformalPair assemble_pair(ConformalMap f, ConformalMap g, double tolerance,
                            std::string name);

ConformalPair make_circle_pair();
ConformalPair make_ellipse_pair(double a_axis, double b_axis);
ConformalPair make_perturbed_pair(Complex a, int m);

// Fresh check of max_j |f(e^{i theta_j}) - g(e^{i phi(theta_j)})|.
double welding_mismatch(const ConformalPair& pair, std::size_t samples = 2048);

struct LevelCurve {
  Side side;
  double radius;
  std::vector<Complex> points;            // f or g on |w| = r
  std::vector<Complex> map_derivatives;   // matching f' or g' samples
};

LevelCurve level_curve(const ConformalPair& pair, Side side, double r,
                       std::size_t samples);

enum class WeldingDirection { forward, inverse };

// Fourier coefficients of h o phi (forward) or h o phi^{-1} (inverse),
// resampled on an equispaced grid.  The output truncation widens to hold the
// composed spectrum (capped at 511 modes for inputs up to order 127).
FourierSeries compose_welding(const ConformalPair& pair, const FourierSeries& h,
                              WeldingDirection direction);

}  // namespace quasijump
