#include "qwalk/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0,
                           const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "empty parameter vector");

  OptimizeResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto combine = [&](const std::vector<double>& c, const std::vector<double>& x, double t) {
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = c[k] + t * (x[k] - c[k]);
    return y;
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const auto best = order.front();
    const auto worst = order.back();
    const auto second_worst = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) diameter = std::max(diameter, distance(simplex[i], simplex[best]));
    if (diameter < options.xtol) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.max_evaluations) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }

    auto reflected = combine(centroid, simplex[worst], -1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      auto expanded = combine(centroid, simplex[worst], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    auto contracted = combine(centroid, outside ? reflected : simplex[worst], 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = std::move(contracted);
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = combine(simplex[best], simplex[i], 0.5);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

OptimizeResult linear_trust_region(const Objective& f, std::vector<double> x0,
                                   const TrustRegionOptions& options) {
  const std::size_t n = x0.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "empty parameter vector");
  const auto ni = static_cast<Eigen::Index>(n);

  OptimizeResult result;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return f(std::span<const double>(x.data(), n));
  };
  auto clip = [&](Eigen::VectorXd& x) {
    for (auto& v : x) v = std::clamp(v, options.lower, options.upper);
  };

  double rho = options.initial_radius;
  std::vector<Eigen::VectorXd> pts(n + 1, Eigen::Map<Eigen::VectorXd>(x0.data(), ni));
  clip(pts[0]);
  std::vector<double> vals(n + 1);
  vals[0] = eval(pts[0]);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i + 1] = pts[0];
    const auto ii = static_cast<Eigen::Index>(i);
    pts[i + 1][ii] += (pts[0][ii] + rho <= options.upper) ? rho : -rho;
    vals[i + 1] = eval(pts[i + 1]);
  }

  Eigen::MatrixXd D(ni, ni);
  Eigen::VectorXd df(ni);
  std::vector<std::size_t> others(n);
  while (result.evaluations < options.max_evaluations) {
    const auto best = static_cast<std::size_t>(
        std::min_element(vals.begin(), vals.end()) - vals.begin());
    std::size_t k = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      others[k] = i;
      D.row(static_cast<Eigen::Index>(k)) = (pts[i] - pts[best]).transpose();
      df[static_cast<Eigen::Index>(k)] = vals[i] - vals[best];
      ++k;
    }
    const Eigen::VectorXd& x = pts[best];

    // Geometry: vertex distances and distances to the opposite faces.
    Eigen::FullPivLU<Eigen::MatrixXd> lu(D);
    std::size_t far = 0, flat = 0;
    double far_dist = -1.0, flat_sigma = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd Dinv;
    const bool invertible = lu.isInvertible();
    if (invertible) Dinv = lu.inverse();
    for (std::size_t j = 0; j < n; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      const double dist = D.row(jj).norm();
      if (dist > far_dist) {
        far_dist = dist;
        far = j;
      }
      const double sigma = invertible ? 1.0 / Dinv.col(jj).norm() : 0.0;
      if (sigma < flat_sigma) {
        flat_sigma = sigma;
        flat = j;
      }
    }
    const bool too_far = far_dist > 2.1 * rho;
    const bool too_flat = flat_sigma < 0.25 * rho;
    const Eigen::VectorXd g = invertible ? Eigen::VectorXd(lu.solve(df)) : Eigen::VectorXd::Zero(ni);

    if (too_far || too_flat) {
      const std::size_t j = too_far ? far : flat;
      Eigen::VectorXd dir;
      if (invertible) {
        dir = Dinv.col(static_cast<Eigen::Index>(j));
      } else {
        dir = Eigen::VectorXd::Unit(ni, static_cast<Eigen::Index>(j % n));
      }
      dir *= rho / dir.norm();
      if (g.dot(dir) > 0.0) dir = -dir;
      Eigen::VectorXd trial = x + dir;
      clip(trial);
      if ((trial - x).norm() < 0.5 * rho) {
        trial = x - dir;
        clip(trial);
      }
      pts[others[j]] = trial;
      vals[others[j]] = eval(trial);
      continue;
    }

    Eigen::VectorXd d = -g;
    for (Eigen::Index i = 0; i < ni; ++i) {
      if ((x[i] <= options.lower && d[i] < 0.0) || (x[i] >= options.upper && d[i] > 0.0)) d[i] = 0.0;
    }
    const double dn = d.norm();
    bool reduce = dn == 0.0;
    if (!reduce) {
      d *= rho / dn;
      Eigen::VectorXd trial = x + d;
      clip(trial);
      const Eigen::VectorXd step = trial - x;
      const double predicted = -g.dot(step);
      const double ft = eval(trial);
      // replace the vertex whose removal keeps the simplex best conditioned
      const Eigen::VectorXd lambda = Dinv.transpose() * step;
      std::size_t replace = 0;
      double score = -1.0;
      for (std::size_t j = 0; j < n; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        const double w = std::max(1.0, D.row(jj).norm() / rho);
        const double s = std::abs(lambda[jj]) * w * w;
        if (s > score) {
          score = s;
          replace = j;
        }
      }
      pts[others[replace]] = trial;
      vals[others[replace]] = ft;
      const double ratio = predicted > 0.0 ? (vals[best] - ft) / predicted : -1.0;
      reduce = ratio <= 0.1;
    }
    if (reduce) {
      rho *= 0.5;
      if (rho < options.final_radius) {
        result.converged = true;
        break;
      }
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(vals.begin(), vals.end()) - vals.begin());
  result.x.assign(pts[best].data(), pts[best].data() + n);
  result.value = vals[best];
  return result;
}

}  // namespace qwalk
