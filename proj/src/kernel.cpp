#include "bgreedy/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "bgreedy/grid.hpp"

namespace bgreedy {

KernelFamily kernel_family_from_string(const std::string& name) {
  if (name == "brownian_bridge" || name == "bb" || name == "k1") return KernelFamily::BrownianBridge;
  if (name == "iterated_brownian_bridge" || name == "ibb" || name == "k2")
    return KernelFamily::IteratedBrownianBridge;
  if (name == "gaussian") return KernelFamily::Gaussian;
  if (name == "matern") return KernelFamily::Matern;
  throw std::invalid_argument("unknown kernel family: " + name);
}

std::string kernel_family_to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::BrownianBridge: return "brownian_bridge";
    case KernelFamily::IteratedBrownianBridge: return "iterated_brownian_bridge";
    case KernelFamily::Gaussian: return "gaussian";
    case KernelFamily::Matern: return "matern";
  }
  throw std::invalid_argument("unknown kernel family");
}

Domain Domain::unit_interval() { return unit_box(1); }

Domain Domain::unit_box(int dim) {
  Domain d;
  d.lo = Eigen::VectorXd::Zero(dim);
  d.hi = Eigen::VectorXd::Ones(dim);
  d.open = true;
  return d;
}

bool Domain::contains(const Eigen::VectorXd& x) const {
  if (x.size() != lo.size()) return false;
  for (int i = 0; i < x.size(); ++i) {
    if (open) {
      if (!(x[i] > lo[i] && x[i] < hi[i])) return false;
    } else {
      if (!(x[i] >= lo[i] && x[i] <= hi[i])) return false;
    }
  }
  return true;
}

Kernel Kernel::brownian_bridge() {
  Kernel k;
  k.family = KernelFamily::BrownianBridge;
  k.dim = 1;
  return k;
}

Kernel Kernel::iterated_brownian_bridge() {
  Kernel k;
  k.family = KernelFamily::IteratedBrownianBridge;
  k.dim = 1;
  return k;
}

Kernel Kernel::gaussian(double shape, int dim) {
  if (shape <= 0) throw std::invalid_argument("gaussian shape must be positive");
  Kernel k;
  k.family = KernelFamily::Gaussian;
  k.shape = shape;
  k.dim = dim;
  k.domain = Domain::unit_box(dim);
  return k;
}

Kernel Kernel::matern(double nu, double shape, int dim) {
  if (shape <= 0) throw std::invalid_argument("matern shape must be positive");
  if (nu != 0.5 && nu != 1.5 && nu != 2.5)
    throw std::invalid_argument("matern smoothness must be 1/2, 3/2 or 5/2");
  Kernel k;
  k.family = KernelFamily::Matern;
  k.shape = shape;
  k.smoothness = nu;
  k.dim = dim;
  k.domain = Domain::unit_box(dim);
  return k;
}

namespace {

double bb1(double x, double y) { return std::min(x, y) - x * y; }

double bb2(double x, double y) {
  return -(1.0 / 6.0) * (std::min(x, y) - x * y) *
         (x * x + y * y - 2.0 * std::max(x, y));
}

double unscaled_eval(const Kernel& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  switch (k.family) {
    case KernelFamily::BrownianBridge:
      return bb1(x[0], y[0]);
    case KernelFamily::IteratedBrownianBridge:
      return bb2(x[0], y[0]);
    case KernelFamily::Gaussian: {
      const double r2 = (x - y).squaredNorm() / (k.shape * k.shape);
      return std::exp(-r2);
    }
    case KernelFamily::Matern: {
      const double r = (x - y).norm() / k.shape;
      if (k.smoothness == 0.5) return std::exp(-r);
      if (k.smoothness == 1.5) {
        const double a = std::sqrt(3.0) * r;
        return (1.0 + a) * std::exp(-a);
      }
      const double a = std::sqrt(5.0) * r;
      return (1.0 + a + a * a / 3.0) * std::exp(-a);
    }
  }
  throw std::invalid_argument("unknown kernel family");
}

void check_point(const Kernel& k, const Eigen::VectorXd& x) {
  if (x.size() != k.dim)
    throw std::invalid_argument("point dimension does not match kernel dimension");
  if (!k.domain.contains(x))
    throw std::invalid_argument("point outside the kernel domain");
}

}  // namespace

double eval(const Kernel& kernel, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  check_point(kernel, x);
  check_point(kernel, y);
  return kernel.scale * unscaled_eval(kernel, x, y);
}

double eval(const Kernel& kernel, double x, double y) {
  Eigen::VectorXd vx(1), vy(1);
  vx << x;
  vy << y;
  return eval(kernel, vx, vy);
}

Eigen::VectorXd eval_column(const Kernel& kernel, const Eigen::MatrixXd& pts,
                            const Eigen::VectorXd& x) {
  check_point(kernel, x);
  Eigen::VectorXd col(pts.rows());
  for (int i = 0; i < pts.rows(); ++i)
    col[i] = kernel.scale * unscaled_eval(kernel, pts.row(i).transpose(), x);
  return col;
}

Eigen::VectorXd eval_diag(const Kernel& kernel, const Eigen::MatrixXd& pts) {
  Eigen::VectorXd d(pts.rows());
  for (int i = 0; i < pts.rows(); ++i) {
    const Eigen::VectorXd p = pts.row(i).transpose();
    check_point(kernel, p);
    d[i] = kernel.scale * unscaled_eval(kernel, p, p);
  }
  return d;
}

Eigen::MatrixXd gram(const Kernel& kernel, const Eigen::MatrixXd& pts) {
  const int n = static_cast<int>(pts.rows());
  if (n > 1 && !pairwise_distinct(pts))
    throw std::invalid_argument("duplicate points in gram()");
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd xi = pts.row(i).transpose();
    check_point(kernel, xi);
    for (int j = 0; j <= i; ++j) {
      const double v = kernel.scale * unscaled_eval(kernel, xi, pts.row(j).transpose());
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

Kernel normalize(const Kernel& kernel, const Eigen::MatrixXd& grid) {
  if (grid.rows() == 0) throw std::invalid_argument("normalize() needs a nonempty grid");
  const double max_diag = eval_diag(kernel, grid).maxCoeff();
  Kernel out = kernel;
  if (max_diag > 1.0) out.scale = kernel.scale / max_diag;
  return out;
}

}  // namespace bgreedy
