#include "quasijump/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "quasijump/fft.hpp"

namespace quasijump {

namespace {

Complex unit(double angle) { return Complex(std::cos(angle), std::sin(angle)); }

std::string fmt_residual(double r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << r;
  return os.str();
}

}  // namespace

ConformalMap::ConformalMap(Side side, Kind kind, std::vector<Complex> c)
    : side_(side), kind_(kind), c_(std::move(c)) {
  if (c_.size() < 2) throw std::invalid_argument("ConformalMap: need at least two coefficients");
  if (side_ == Side::interior && std::abs(c_[1]) == 0.0)
    throw std::invalid_argument("ConformalMap: interior map needs f'(0) != 0");
  if (side_ == Side::exterior && std::abs(c_[0]) == 0.0)
    throw std::invalid_argument("ConformalMap: exterior map needs a nonzero leading coefficient");
}

ConformalMap ConformalMap::interior(std::vector<Complex> coeffs, Kind kind) {
  return ConformalMap(Side::interior, kind, std::move(coeffs));
}

ConformalMap ConformalMap::exterior(std::vector<Complex> coeffs, Kind kind) {
  return ConformalMap(Side::exterior, kind, std::move(coeffs));
}

Complex ConformalMap::eval(Complex z) const {
  if (side_ == Side::interior) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }
  // g(w) = c0 w + c1 + sum_{k>=2} c_k w^{-(k-1)}
  const Complex wi = 1.0 / z;
  Complex tail(0.0, 0.0);
  for (std::size_t k = c_.size(); k-- > 2;) tail = (tail + c_[k]) * wi;
  return c_[0] * z + c_[1] + tail;
}

Complex ConformalMap::deriv(Complex z) const {
  if (side_ == Side::interior) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = c_.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c_[k];
    return acc;
  }
  const Complex wi = 1.0 / z;
  Complex tail(0.0, 0.0);
  for (std::size_t k = c_.size(); k-- > 2;)
    tail = (tail - static_cast<double>(k - 1) * c_[k]) * wi;
  return c_[0] + tail * wi;
}

Complex ConformalMap::basepoint() const {
  return side_ == Side::interior ? c_[0] : c_[1];
}

Complex ConformalMap::derivative_coefficient() const {
  return side_ == Side::interior ? c_[1] : c_[0];
}

void ConformalMap::check_univalence(std::size_t samples) const {
  const double r = side_ == Side::interior ? 0.999 : 1.001;
  std::vector<Complex> vals(samples);
  double scale = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    vals[j] = eval(r * unit(kTwoPi * static_cast<double>(j) / static_cast<double>(samples)));
    scale = std::max(scale, std::abs(vals[j]));
  }
  const double floor = 1e-9 * std::max(scale, 1.0);
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t j = i + 1; j < samples; ++j) {
      if (std::abs(vals[i] - vals[j]) < floor)
        throw std::runtime_error("ConformalMap: univalence probe failed (boundary samples collide)");
    }
  }
}

Welding::Welding(std::vector<double> phi_samples) : phi_(std::move(phi_samples)) {
  const std::size_t m = phi_.size();
  if (m < 8) throw std::invalid_argument("Welding: too few samples");
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (!(phi_[j] < phi_[j + 1]))
      throw std::invalid_argument("Welding: samples not strictly increasing");
  }
  if (!(phi_.back() < phi_.front() + kTwoPi))
    throw std::invalid_argument("Welding: samples exceed one period");
  std::vector<double> theta(m);
  for (std::size_t j = 0; j < m; ++j)
    theta[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
  fwd_ = MonotonePeriodicSpline(theta, phi_, kTwoPi, kTwoPi);
  inv_ = MonotonePeriodicSpline(phi_, theta, kTwoPi, kTwoPi);
}

double Welding::theta_at(std::size_t j) const {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(phi_.size());
}

namespace {

// Shared state of one Fornberg-style alternation step.  `keep_mode` selects
// the admissible spectrum of the unknown map; everything else, plus the
// normalization defects, is pushed back into the correspondence.
struct FitProblem {
  const ConformalMap* known;      // map on the other side, evaluated on S^1
  bool fit_interior;              // which side is being solved for
  Complex basepoint;              // interior normalization f(0) = p
};

bool strictly_increasing_mod(const std::vector<double>& v) {
  for (std::size_t j = 0; j + 1 < v.size(); ++j)
    if (!(v[j] < v[j + 1])) return false;
  return v.back() < v.front() + kTwoPi;
}

std::vector<Complex> run_fit(const FitProblem& prob, const FitOptions& opts,
                             FitDiagnostics* diag, std::size_t& grid_out) {
  const std::size_t m =
      pow2_at_least(std::max<std::size_t>(opts.grid, 16 * static_cast<std::size_t>(opts.map_order)));
  grid_out = m;
  std::vector<double> corr(m);
  for (std::size_t j = 0; j < m; ++j)
    corr[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(m);

  std::vector<Complex> traced(m), spec(m), defect_bins(m), defect(m);
  FitDiagnostics local;
  double res = 0.0;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    for (std::size_t j = 0; j < m; ++j) traced[j] = prob.known->eval(unit(corr[j]));
    spec = traced;
    fft_inplace(spec, false);
    for (auto& s : spec) s /= static_cast<double>(m);

    std::fill(defect_bins.begin(), defect_bins.end(), Complex(0.0, 0.0));
    if (prob.fit_interior) {
      for (std::size_t k = m / 2; k < m; ++k) defect_bins[k] = spec[k];
      defect_bins[0] = spec[0] - prob.basepoint;
      defect_bins[1] = Complex(0.0, spec[1].imag());
    } else {
      for (std::size_t k = 2; k <= m / 2; ++k) defect_bins[k] = spec[k];
      defect_bins[1] = Complex(0.0, spec[1].imag());
    }
    defect = synthesize_bins(defect_bins);

    res = 0.0;
    for (const auto& d : defect) res = std::max(res, std::abs(d));
    local.residual_history.push_back(res);
    local.iterations = iter + 1;
    if (res < opts.target_residual) break;

    // Tangential Newton correction of the correspondence.
    std::vector<double> step(m);
    for (std::size_t j = 0; j < m; ++j) {
      const Complex tangent = Complex(0.0, 1.0) * unit(corr[j]) * prob.known->deriv(unit(corr[j]));
      double delta = -(std::conj(tangent) * defect[j]).real() / std::norm(tangent);
      delta = std::clamp(delta, -0.3, 0.3);
      step[j] = delta;
    }
    double scale = 1.0;
    bool ok = false;
    std::vector<double> cand(m);
    for (int halving = 0; halving < 7; ++halving) {
      for (std::size_t j = 0; j < m; ++j) cand[j] = corr[j] + scale * step[j];
      if (strictly_increasing_mod(cand)) {
        ok = true;
        break;
      }
      scale *= 0.5;
    }
    if (!ok)
      throw std::runtime_error(
          "fit_missing_map: correspondence became non-monotone (curve outside the supported class)");
    corr = cand;
  }

  local.final_residual = res;
  if (diag) *diag = local;
  if (res > opts.tolerance) {
    throw std::runtime_error(
        "fit_missing_map: no convergence after " + std::to_string(local.iterations) +
        " iterations (residual " + fmt_residual(local.residual_history.front()) + " -> " +
        fmt_residual(res) + ")");
  }
  return spec;
}

int pick_order(const std::vector<Complex>& spec, const FitOptions& opts, bool interior) {
  const std::size_t m = spec.size();
  const double scale = std::abs(spec[1]) + 1e-30;
  int order = opts.map_order;
  auto tail_beyond = [&](int n) {
    double t = 0.0;
    for (std::size_t k = static_cast<std::size_t>(n) + 1; k < m / 2; ++k) {
      const std::size_t bin = interior ? k : m - k;
      t = std::max(t, std::abs(spec[bin]));
    }
    return t;
  };
  while (order < opts.max_map_order && order < static_cast<int>(m / 2) - 1 &&
         tail_beyond(order) > 1e-12 * scale) {
    order *= 2;
  }
  return std::min({order, opts.max_map_order, static_cast<int>(m / 2) - 1});
}

}  // namespace

ConformalMap fit_interior_map(const ConformalMap& g, Complex basepoint,
                              const FitOptions& opts, FitDiagnostics* diag) {
  if (g.side() != Side::exterior)
    throw std::invalid_argument("fit_interior_map: known map must be exterior");
  FitProblem prob{&g, true, basepoint};
  std::size_t m = 0;
  const auto spec = run_fit(prob, opts, diag, m);
  const int order = pick_order(spec, opts, true);
  std::vector<Complex> coeffs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) coeffs[static_cast<std::size_t>(k)] = spec[static_cast<std::size_t>(k)];
  coeffs[0] = basepoint;                      // snap the converged normalization
  coeffs[1] = Complex(spec[1].real(), 0.0);
  auto f = ConformalMap::interior(std::move(coeffs), ConformalMap::Kind::fitted);
  f.check_univalence();
  return f;
}

ConformalMap fit_exterior_map(const ConformalMap& f, const FitOptions& opts,
                              FitDiagnostics* diag) {
  if (f.side() != Side::interior)
    throw std::invalid_argument("fit_exterior_map: known map must be interior");
  FitProblem prob{&f, false, Complex(0.0, 0.0)};
  std::size_t m = 0;
  const auto spec = run_fit(prob, opts, diag, m);
  const int order = pick_order(spec, opts, false);
  std::vector<Complex> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = Complex(spec[1].real(), 0.0);  // w coefficient, g'(inf) > 0
  coeffs[1] = spec[0];                       // constant term
  for (int k = 2; k <= order; ++k)
    coeffs[static_cast<std::size_t>(k)] = spec[m - static_cast<std::size_t>(k - 1)];
  auto g = ConformalMap::exterior(std::move(coeffs), ConformalMap::Kind::fitted);
  g.check_univalence();
  return g;
}

Welding compute_welding(const ConformalMap& f, const ConformalMap& g,
                        std::size_t samples, double* mismatch) {
  if (f.side() != Side::interior || g.side() != Side::exterior)
    throw std::invalid_argument("compute_welding: need an (interior, exterior) map pair");
  std::vector<double> phi(samples);
  double worst = 0.0;

  // Coarse global seed for the first sample, then march.
  const Complex first_target = f.eval(Complex(1.0, 0.0));
  double psi = 0.0;
  {
    double best = std::numeric_limits<double>::max();
    for (int k = 0; k < 512; ++k) {
      const double cand = kTwoPi * k / 512.0;
      const double d = std::abs(g.eval(unit(cand)) - first_target);
      if (d < best) {
        best = d;
        psi = cand;
      }
    }
  }

  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    const Complex target = f.eval(unit(theta));
    for (int it = 0; it < 60; ++it) {
      const Complex w = unit(psi);
      const Complex r = g.eval(w) - target;
      const Complex tangent = Complex(0.0, 1.0) * w * g.deriv(w);
      const double delta = -(std::conj(tangent) * r).real() / std::norm(tangent);
      psi += std::clamp(delta, -0.5, 0.5);
      if (std::abs(delta) < 1e-15) break;
    }
    worst = std::max(worst, std::abs(g.eval(unit(psi)) - target));
    phi[j] = psi;
    psi += kTwoPi / static_cast<double>(samples);
  }
  // Reduce the whole branch so that phi(0) lands in [0, 2 pi).
  const double shift = kTwoPi * std::floor(phi[0] / kTwoPi);
  if (shift != 0.0) {
    for (auto& p : phi) p -= shift;
  }
  if (mismatch) *mismatch = worst;
  return Welding(std::move(phi));
}

ConformalPair assemble_pair(ConformalMap f, ConformalMap g, double tolerance,
                            std::string name) {
  f.check_univalence();
  g.check_univalence();
  double mismatch = 0.0;
  Welding welding = compute_welding(f, g, 8192, &mismatch);
  if (mismatch > tolerance) {
    throw std::runtime_error("assemble_pair: boundary mismatch " + fmt_residual(mismatch) +
                             " exceeds tolerance " + fmt_residual(tolerance));
  }
  ConformalPair pair{std::move(f), std::move(g), std::move(welding),
                     Complex(0.0, 0.0),      mismatch, tolerance,
                     std::move(name),        {}};
  pair.basepoint = pair.f.basepoint();
  const std::size_t nb = 2048;
  pair.boundary_samples.resize(nb);
  for (std::size_t j = 0; j < nb; ++j)
    pair.boundary_samples[j] = pair.f.eval(unit(kTwoPi * static_cast<double>(j) / nb));
  return pair;
}

ConformalPair make_circle_pair() {
  auto f = ConformalMap::interior({Complex(0.0, 0.0), Complex(1.0, 0.0)});
  auto g = ConformalMap::exterior({Complex(1.0, 0.0), Complex(0.0, 0.0)});
  return assemble_pair(std::move(f), std::move(g), 1e-8, "circle");
}

ConformalPair make_ellipse_pair(double a_axis, double b_axis) {
  if (!(a_axis >= b_axis && b_axis > 0.0))
    throw std::invalid_argument("make_ellipse_pair: require A >= B > 0");
  // Joukowski exterior map: g(w) = ((A+B) w + (A-B)/w) / 2 traces
  // x^2/A^2 + y^2/B^2 = 1 on |w| = 1.
  auto g = ConformalMap::exterior({Complex(0.5 * (a_axis + b_axis), 0.0), Complex(0.0, 0.0),
                                   Complex(0.5 * (a_axis - b_axis), 0.0)});
  FitOptions opts;
  auto f = fit_interior_map(g, Complex(0.0, 0.0), opts);
  std::ostringstream name;
  name << "ellipse:" << a_axis << "," << b_axis;
  return assemble_pair(std::move(f), std::move(g), opts.tolerance, name.str());
}

ConformalPair make_perturbed_pair(Complex a, int m) {
  if (m < 2) throw std::invalid_argument("make_perturbed_pair: require m >= 2");
  if (!(std::abs(a) < 1.0 / static_cast<double>(m)))
    throw std::invalid_argument("make_perturbed_pair: require |a| < 1/m for univalence");
  std::vector<Complex> coeffs(static_cast<std::size_t>(m) + 1, Complex(0.0, 0.0));
  coeffs[1] = Complex(1.0, 0.0);
  coeffs[static_cast<std::size_t>(m)] = a;
  auto f = ConformalMap::interior(std::move(coeffs));
  FitOptions opts;
  auto g = fit_exterior_map(f, opts);
  std::ostringstream name;
  name << "perturbed:" << a.real() << "," << a.imag() << "," << m;
  return assemble_pair(std::move(f), std::move(g), opts.tolerance, name.str());
}

double welding_mismatch(const ConformalPair& pair, std::size_t samples) {
  double worst = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    const double phi = pair.welding.forward(theta);
    worst = std::max(worst, std::abs(pair.f.eval(unit(theta)) - pair.g.eval(unit(phi))));
  }
  return worst;
}

LevelCurve level_curve(const ConformalPair& pair, Side side, double r,
                       std::size_t samples) {
  if (side == Side::interior && !(r > 0.0 && r < 1.0))
    throw std::invalid_argument("level_curve: interior radius must lie in (0, 1)");
  if (side == Side::exterior && !(r > 1.0))
    throw std::invalid_argument("level_curve: exterior radius must exceed 1");
  const ConformalMap& map = side == Side::interior ? pair.f : pair.g;
  LevelCurve out{side, r, {}, {}};
  out.points.resize(samples);
  out.map_derivatives.resize(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const Complex w = r * unit(kTwoPi * static_cast<double>(j) / static_cast<double>(samples));
    out.points[j] = map.eval(w);
    out.map_derivatives[j] = map.deriv(w);
  }
  return out;
}

FourierSeries compose_welding(const ConformalPair& pair, const FourierSeries& h,
                              WeldingDirection direction) {
  const std::size_t m =
      pow2_at_least(std::max<std::size_t>(1024, 4 * static_cast<std::size_t>(h.order() + 1)));
  const int out_order = static_cast<int>(std::min<std::size_t>(m / 2 - 1, 511));
  std::vector<Complex> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    const double alpha = direction == WeldingDirection::forward
                             ? pair.welding.forward(theta)
                             : pair.welding.inverse(theta);
    samples[j] = h.eval_angle(alpha);
  }
  return fourier_from_samples(samples, out_order);
}

}  // namespace quasijump
