#include "qge/analysis.hpp"

#include <cmath>
#include <map>

#include "element_loop.hpp"
#include "qge/errors.hpp"

namespace qge {

namespace {

struct Squares {
  double l2 = 0.0, h1 = 0.0, h2 = 0.0;
};

}  // namespace

ErrorNorms error_norms(const Solution& numeric, const std::function<Jet2(Point2)>& exact,
                       const AssemblyOptions& opts) {
  const Discretization& disc = numeric.discretization();
  Squares total;
  detail::blocked_element_loop<Squares>(
      disc, opts.workers,
      [&](int tri, const detail::ElementFrame& f, Squares& out) {
        const auto c = detail::coefficient_row(numeric.local_coefficients(tri));
        const Eigen::RowVectorXd v = c * f.value, dx = c * f.dx, dy = c * f.dy, dxx = c * f.dxx,
                                 dxy = c * f.dxy, dyy = c * f.dyy;
        out = {};
        for (int q = 0; q < f.size(); ++q) {
          const Jet2 e = exact(f.points[q]);
          const double w = f.weight[q];
          const double r0 = v[q] - e.value;
          const double rx = dx[q] - e.grad[0], ry = dy[q] - e.grad[1];
          const double rxx = dxx[q] - e.hess[0], rxy = dxy[q] - e.hess[1], ryy = dyy[q] - e.hess[2];
          out.l2 += w * r0 * r0;
          out.h1 += w * (rx * rx + ry * ry);
          out.h2 += w * (rxx * rxx + 2.0 * rxy * rxy + ryy * ryy);
        }
      },
      [&](int, const Squares& s) {
        total.l2 += s.l2;
        total.h1 += s.h1;
        total.h2 += s.h2;
      });
  return {std::sqrt(total.l2), std::sqrt(total.h1), std::sqrt(total.h2)};
}

ErrorNorms error_norms(const Solution& numeric, const ManufacturedSolution& exact,
                       const AssemblyOptions& opts) {
  return error_norms(numeric, [&exact](Point2 p) { return exact.jet(p); }, opts);
}

std::optional<double> observed_order(double e_prev, double e_curr, double h_prev, double h_curr) {
  if (!(h_curr > 0.0) || !(h_prev > h_curr)) {
    throw InvalidArgument("observed order needs h_prev > h_curr > 0");
  }
  if (!(e_prev > 0.0) || !(e_curr > 0.0)) return std::nullopt;
  return std::log(e_prev / e_curr) / std::log(h_prev / h_curr);
}

void fill_orders(ConvergenceTable& table, OrderAxis axis) {
  std::map<std::string, int> last;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    auto& row = table.rows[i];
    row.order_L2 = row.order_H1 = row.order_H2 = std::nullopt;
    const std::string& method = i < table.info.size() ? table.info[i].method : std::string();
    const auto it = last.find(method);
    if (it != last.end()) {
      const auto& prev = table.rows[it->second];
      const double sp = axis == OrderAxis::coarse_size ? prev.H : prev.h;
      const double sc = axis == OrderAxis::coarse_size ? row.H : row.h;
      if (sp > sc && sc > 0.0) {
        row.order_L2 = observed_order(prev.e_L2, row.e_L2, sp, sc);
        row.order_H1 = observed_order(prev.e_H1, row.e_H1, sp, sc);
        row.order_H2 = observed_order(prev.e_H2, row.e_H2, sp, sc);
      }
    }
    last[method] = static_cast<int>(i);
  }
}

}  // namespace qge
