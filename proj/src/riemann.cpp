#include "solverlab/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace solverlab {

namespace {

std::string describe(const IsoState& l, const IsoState& r, double c) {
  std::ostringstream os;
  os.precision(17);
  os << "left (" << l.rho << ", " << l.u << ") right (" << r.rho << ", " << r.u
     << ") c " << c;
  return os.str();
}

std::string describe(const GasState& l, const GasState& r, double gamma) {
  std::ostringstream os;
  os.precision(17);
  os << "left (" << l.rho << ", " << l.u << ", " << l.p << ") right (" << r.rho
     << ", " << r.u << ", " << r.p << ") gamma " << gamma;
  return os.str();
}

// rho * d(curve)/d(rho), i.e. the derivative with respect to log(rho).
double iso_wave_curve_dlog(double rho, double rho_ref, double c) {
  if (rho > rho_ref) {
    const double r = std::sqrt(rho / rho_ref);
    return 0.5 * c * (r + 1.0 / r);
  }
  return c;
}

}  // namespace

double iso_wave_curve(double rho, double rho_ref, double c) {
  if (rho > rho_ref) return c * (std::sqrt(rho / rho_ref) - std::sqrt(rho_ref / rho));
  return c * std::log(rho / rho_ref);
}

IsoStar iso_star(const IsoState& left, const IsoState& right, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("iso_star: sound speed must be positive");
  if (!(left.rho > 0.0) || !(right.rho > 0.0))
    throw RiemannError("iso_star: non-positive density, " + describe(left, right, c));

  const double du = right.u - left.u;
  auto phi = [&](double z) {
    const double rho = std::exp(z);
    return iso_wave_curve(rho, left.rho, c) + iso_wave_curve(rho, right.rho, c) + du;
  };
  auto dphi = [&](double z) {
    const double rho = std::exp(z);
    return iso_wave_curve_dlog(rho, left.rho, c) + iso_wave_curve_dlog(rho, right.rho, c);
  };

  const double zl = std::log(left.rho);
  const double zr = std::log(right.rho);
  // Exact when both waves are rarefactions.
  double z = 0.5 * (zl + zr) - du / (2.0 * c);
  if (du < 0.0) {
    // Strong compressions: the two-shock estimate is far closer.
    const double two_shock =
        2.0 * std::log(-du / (c * (1.0 / std::sqrt(left.rho) + 1.0 / std::sqrt(right.rho))));
    z = std::min(z, std::max(two_shock, std::max(zl, zr)));
  }
  const double scale = c + std::abs(left.u) + std::abs(right.u);
  const double tol = 1e-14 * scale;

  double f = phi(z);
  double lo = z, hi = z;
  double flo = f, fhi = f;
  for (double step = 1.0; flo > 0.0; step *= 2.0) {
    lo = z - step;
    flo = phi(lo);
    if (step > 1e3) throw RiemannError("iso_star: no lower bracket, " + describe(left, right, c));
  }
  for (double step = 1.0; fhi < 0.0; step *= 2.0) {
    hi = z + step;
    fhi = phi(hi);
    if (step > 1e3) throw RiemannError("iso_star: no upper bracket, " + describe(left, right, c));
  }

  bool converged = std::abs(f) <= tol;
  for (int it = 0; it < 100 && !converged; ++it) {
    double next = z - f / dphi(z);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    z = next;
    f = phi(z);
    if (f > 0.0) hi = z;
    else lo = z;
    converged = std::abs(f) <= tol || (hi - lo) <= 1e-15 * std::max(1.0, std::abs(z));
  }
  if (!converged || std::abs(f) > 1e-12 * std::max(1.0, scale))
    throw RiemannError("iso_star: no convergence, " + describe(left, right, c));

  IsoStar star;
  star.rho_star = std::exp(z);
  star.u_star = left.u - iso_wave_curve(star.rho_star, left.rho, c);
  star.left_shock = star.rho_star > left.rho;
  star.right_shock = star.rho_star > right.rho;
  return star;
}

double iso_shock_speed(int family, const IsoState& ahead, double rho_star, double c) {
  if (!(rho_star > 0.0)) throw std::invalid_argument("iso_shock_speed: rho_star must be > 0");
  const double ratio = std::sqrt(rho_star / ahead.rho);
  if (family == 1) return ahead.u - c * ratio;
  if (family == 2) return ahead.u + c * ratio;
  throw std::invalid_argument("iso_shock_speed: family must be 1 or 2");
}

IsoState sample_iso(const IsoState& left, const IsoState& right, const IsoStar& star,
                    double c, double xi) {
  if (xi <= star.u_star) {
    if (star.left_shock) {
      return xi < iso_shock_speed(1, left, star.rho_star, c)
                 ? left
                 : IsoState{star.rho_star, star.u_star};
    }
    if (xi <= left.u - c) return left;
    if (xi >= star.u_star - c) return {star.rho_star, star.u_star};
    const double u = xi + c;
    return {left.rho * std::exp((left.u - u) / c), u};
  }
  if (star.right_shock) {
    return xi > iso_shock_speed(2, right, star.rho_star, c)
               ? right
               : IsoState{star.rho_star, star.u_star};
  }
  if (xi >= right.u + c) return right;
  if (xi <= star.u_star + c) return {star.rho_star, star.u_star};
  const double u = xi - c;
  return {right.rho * std::exp((u - right.u) / c), u};
}

// ---------------------------------------------------------------------------

double GasState::sound_speed(double gamma) const { return std::sqrt(gamma * p / rho); }

StateVec<3> GasState::conserved(double gamma) const {
  return {{rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u}};
}

GasState GasState::from_conserved(const StateVec<3>& s, double gamma) {
  const double u = s[kMom] / s[kRho];
  return {s[kRho], u, (gamma - 1.0) * (s[kEnergy] - 0.5 * s[kMom] * u)};
}

namespace {

struct PressureBranch {
  double f;
  double df;
};

PressureBranch pressure_function(double p, const GasState& k, double gamma) {
  const double ck = k.sound_speed(gamma);
  if (p > k.p) {
    const double a = 2.0 / ((gamma + 1.0) * k.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * k.p;
    const double root = std::sqrt(a / (b + p));
    return {(p - k.p) * root, root * (1.0 - 0.5 * (p - k.p) / (b + p))};
  }
  const double ratio = p / k.p;
  const double expo = 0.5 * (gamma - 1.0) / gamma;
  return {2.0 * ck / (gamma - 1.0) * (std::pow(ratio, expo) - 1.0),
          std::pow(ratio, -0.5 * (gamma + 1.0) / gamma) / (k.rho * ck)};
}

double star_density(const GasState& k, double p_star, double gamma) {
  const double ratio = p_star / k.p;
  if (p_star > k.p) {
    const double g6 = (gamma - 1.0) / (gamma + 1.0);
    return k.rho * (ratio + g6) / (g6 * ratio + 1.0);
  }
  return k.rho * std::pow(ratio, 1.0 / gamma);
}

}  // namespace

GasStar gas_star(const GasState& left, const GasState& right, double gamma) {
  if (!(gamma > 1.0)) throw std::invalid_argument("gas_star: gamma must be > 1");
  if (!(left.rho > kDensityFloor) || !(right.rho > kDensityFloor) ||
      !(left.p > kPressureFloor) || !(right.p > kPressureFloor))
    throw RiemannError("gas_star: state below density/pressure floor, " +
                       describe(left, right, gamma));
  const double cl = left.sound_speed(gamma);
  const double cr = right.sound_speed(gamma);
  const double du = right.u - left.u;
  if (2.0 / (gamma - 1.0) * (cl + cr) <= du)
    throw VacuumError("gas_star: vacuum generated, " + describe(left, right, gamma));

  auto phi = [&](double p) {
    const auto fl = pressure_function(p, left, gamma);
    const auto fr = pressure_function(p, right, gamma);
    return PressureBranch{fl.f + fr.f + du, fl.df + fr.df};
  };

  // Two-rarefaction guess; it is exact when both waves are rarefactions.
  const double z = 0.5 * (gamma - 1.0) / gamma;
  const double num = cl + cr - 0.5 * (gamma - 1.0) * du;
  double p = std::pow(num / (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)), 1.0 / z);
  if (!(p > 0.0) || !std::isfinite(p)) p = 0.5 * (left.p + right.p);

  // phi(0+) < 0 by the no-vacuum condition; phi is increasing.
  double lo = 0.0;
  double hi = std::max({p, left.p, right.p});
  for (int k = 0; phi(hi).f < 0.0; ++k) {
    hi *= 2.0;
    if (k > 200) throw RiemannError("gas_star: no pressure bracket, " + describe(left, right, gamma));
  }

  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    const auto val = phi(p);
    if (val.f == 0.0) {
      converged = true;
      break;
    }
    if (val.f > 0.0) hi = p;
    else lo = p;
    double next = p - val.f / val.df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    const double change = std::abs(next - p);
    p = next;
    if (change <= 1e-15 * p || hi - lo <= 1e-15 * hi) {
      converged = true;
      break;
    }
  }
  if (!converged) throw RiemannError("gas_star: no convergence, " + describe(left, right, gamma));
  if (!(p > kPressureFloor))
    throw RiemannError("gas_star: star pressure below floor, " + describe(left, right, gamma));

  GasStar star;
  star.p_star = p;
  const auto fl = pressure_function(p, left, gamma);
  const auto fr = pressure_function(p, right, gamma);
  star.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr.f - fl.f);
  star.rho_star_L = star_density(left, p, gamma);
  star.rho_star_R = star_density(right, p, gamma);
  star.left_shock = p > left.p;
  star.right_shock = p > right.p;

  if (gas_star_residual(left, right, star, gamma) > 1e-10)
    throw RiemannError("gas_star: residual above tolerance, " + describe(left, right, gamma));
  return star;
}

double gas_star_residual(const GasState& left, const GasState& right,
                         const GasStar& star, double gamma) {
  const double du = right.u - left.u;
  const double f = pressure_function(star.p_star, left, gamma).f +
                   pressure_function(star.p_star, right, gamma).f + du;
  const double scale = left.sound_speed(gamma) + right.sound_speed(gamma) + std::abs(du);
  return std::abs(f) / scale;
}

double gas_left_shock_speed(const GasState& left, double p_star, double gamma) {
  const double cl = left.sound_speed(gamma);
  return left.u - cl * std::sqrt(0.5 * (gamma + 1.0) / gamma * p_star / left.p +
                                 0.5 * (gamma - 1.0) / gamma);
}

double gas_right_shock_speed(const GasState& right, double p_star, double gamma) {
  const double cr = right.sound_speed(gamma);
  return right.u + cr * std::sqrt(0.5 * (gamma + 1.0) / gamma * p_star / right.p +
                                  0.5 * (gamma - 1.0) / gamma);
}

GasState sample_gas(const GasState& left, const GasState& right, const GasStar& star,
                    double gamma, double xi) {
  const double g1 = 0.5 * (gamma - 1.0) / gamma;
  if (xi <= star.u_star) {
    if (star.left_shock) {
      return xi < gas_left_shock_speed(left, star.p_star, gamma) ? left : star.left_state();
    }
    const double cl = left.sound_speed(gamma);
    if (xi <= left.u - cl) return left;
    const double c_star = cl * std::pow(star.p_star / left.p, g1);
    if (xi >= star.u_star - c_star) return star.left_state();
    const double c = 2.0 / (gamma + 1.0) * (cl + 0.5 * (gamma - 1.0) * (left.u - xi));
    const double u = 2.0 / (gamma + 1.0) * (cl + 0.5 * (gamma - 1.0) * left.u + xi);
    return {left.rho * std::pow(c / cl, 2.0 / (gamma - 1.0)), u,
            left.p * std::pow(c / cl, 2.0 * gamma / (gamma - 1.0))};
  }
  if (star.right_shock) {
    return xi > gas_right_shock_speed(right, star.p_star, gamma) ? right : star.right_state();
  }
  const double cr = right.sound_speed(gamma);
  if (xi >= right.u + cr) return right;
  const double c_star = cr * std::pow(star.p_star / right.p, g1);
  if (xi <= star.u_star + c_star) return star.right_state();
  const double c = 2.0 / (gamma + 1.0) * (cr - 0.5 * (gamma - 1.0) * (right.u - xi));
  const double u = 2.0 / (gamma + 1.0) * (-cr + 0.5 * (gamma - 1.0) * right.u + xi);
  return {right.rho * std::pow(c / cr, 2.0 / (gamma - 1.0)), u,
          right.p * std::pow(c / cr, 2.0 * gamma / (gamma - 1.0))};
}

// ---------------------------------------------------------------------------

double RhResidual::max() const { return std::max({mass, momentum, energy}); }

RhResidual rh_residual(const IsoState& up, const IsoState& down, double sigma, double c) {
  const double c2 = c * c;
  RhResidual r;
  r.mass = std::abs(sigma * (down.rho - up.rho) - (down.q() - up.q()));
  r.momentum = std::abs(sigma * (down.q() - up.q()) -
                        ((down.q() * down.u + c2 * down.rho) - (up.q() * up.u + c2 * up.rho)));
  return r;
}

RhResidual rh_residual(const GasState& up, const GasState& down, double sigma, double gamma) {
  const auto a = up.conserved(gamma);
  const auto b = down.conserved(gamma);
  RhResidual r;
  r.mass = std::abs(sigma * (b[kRho] - a[kRho]) - (b[kMom] - a[kMom]));
  r.momentum = std::abs(sigma * (b[kMom] - a[kMom]) -
                        ((b[kMom] * down.u + down.p) - (a[kMom] * up.u + up.p)));
  r.energy = std::abs(sigma * (b[kEnergy] - a[kEnergy]) -
                      (down.u * (b[kEnergy] + down.p) - up.u * (a[kEnergy] + up.p)));
  return r;
}

}  // namespace solverlab
