#include <algorithm>
#include <cmath>

#include "coulomb/error.hpp"
#include "coulomb/specfun.hpp"

namespace coulomb {

RealAxisSolution::RealAxisSolution(double L, double eta, double r_max, const SeriesOptions& opts)
    : L_(L), eta_(eta), r_max_(r_max), opts_(opts) {
  if (!(L > -1.0)) throw Error(ErrorKind::GateViolation, "RealAxisSolution requires L > -1");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw std::invalid_argument("RealAxisSolution: bad r_max");

  // Start from the power series below the turning point, where it is cheap
  // and well conditioned.
  const double lam = L * (L + 1.0);
  const double disc = eta * eta + lam;
  const double turning = disc > 0.0 ? std::max(0.0, eta + std::sqrt(disc)) : 0.0;
  r_start_ = std::min(r_max_, std::max(2.0, 0.8 * turning));

  const ScaledSeries s = specfun::eval_u_scaled({cplx(L, 0.0), eta}, cplx(r_start_, 0.0), opts_);
  double u = s.v.real();
  double du = s.zd1.real() / r_start_;
  long exp2 = s.exp2;

  double z0 = r_start_;
  const double two_l = 2.0 * L;
  while (z0 < r_max_) {
    double h = std::min({0.5 * z0, 1.0, 2.0 * z0 / (L + 1.0)});
    if (r_max_ - z0 < 1.5 * h) h = r_max_ - z0;

    std::vector<double> c{u, du};
    double scale = std::abs(u) + std::abs(du) * h;
    double hk = h;  // h^(k+1) for the coefficient just produced
    int quiet = 0;
    for (int k = 0; k < 400; ++k) {
      const double cm1 = k >= 1 ? c[k - 1] : 0.0;
      const double next = -((k + 1.0) * (k + two_l + 2.0) * c[k + 1] + (z0 - 2.0 * eta) * c[k] + cm1) /
                          (z0 * (k + 2.0) * (k + 1.0));
      c.push_back(next);
      hk *= h;
      const double term = std::abs(next) * hk;
      scale = std::max(scale, term);
      quiet = term <= 1e-18 * scale ? quiet + 1 : 0;
      if (quiet >= 3) break;
    }

    double un = 0.0, dun = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
      un = un * h + c[k];
      if (k >= 1) dun = dun * h + static_cast<double>(k) * c[k];
    }
    seg_.push_back({z0, h, std::move(c), exp2});

    int e = 0;
    (void)std::frexp(std::max(std::abs(un), std::abs(dun)), &e);
    if (e > 200 || e < -200) {
      un = std::ldexp(un, -e);
      dun = std::ldexp(dun, -e);
      exp2 += e;
    }
    if (!std::isfinite(un) || !std::isfinite(dun))
      throw Error(ErrorKind::NonConvergence, "RealAxisSolution: continuation overflowed");
    u = un;
    du = dun;
    z0 += h;
    if (seg_.size() > 5'000'000) throw Error(ErrorKind::NonConvergence, "RealAxisSolution: too many steps");
  }
}

RealAxisSolution::Point RealAxisSolution::at(double r) const {
  if (!(r > 0.0) || r > r_max_ * (1.0 + 1e-12)) throw std::out_of_range("RealAxisSolution::at: r outside (0, r_max]");
  if (r <= r_start_ || seg_.empty()) {
    const ScaledSeries s = specfun::eval_u_scaled({cplx(L_, 0.0), eta_}, cplx(r, 0.0), opts_);
    return {s.v.real(), s.zd1.real() / r, s.exp2};
  }
  auto it = std::upper_bound(seg_.begin(), seg_.end(), r, [](double x, const Segment& s) { return x < s.z0; });
  const Segment& s = *std::prev(it);
  const double t = std::min(r - s.z0, s.h);
  double u = 0.0, du = 0.0;
  for (std::size_t k = s.c.size(); k-- > 0;) {
    u = u * t + s.c[k];
    if (k >= 1) du = du * t + static_cast<double>(k) * s.c[k];
  }
  return {u, du, s.exp2};
}

std::vector<double> RealAxisSolution::knots() const {
  std::vector<double> out{r_start_};
  for (const auto& s : seg_) out.push_back(s.z0 + s.h);
  return out;
}

}  // namespace coulomb
