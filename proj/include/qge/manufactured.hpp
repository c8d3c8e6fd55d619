#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qge/argyris.hpp"
#include "qge/discretization.hpp"
#include "qge/mesh.hpp"

namespace qge {

/// f, f', f'', f''', f'''' of a one-dimensional profile.
using Profile = std::function<std::array<double, 5>(double)>;

/// Closed-form separable streamfunction psi(x, y) = f(x) g(y) with all partial
/// derivatives through total order 4.
class ManufacturedSolution {
 public:
  ManufacturedSolution(std::string id, Rectangle domain, Profile fx, Profile gy);

  const std::string& id() const { return id_; }
  const Rectangle& domain() const { return domain_; }

  /// d^(i+j) psi / dx^i dy^j, i + j <= 4.
  double derivative(int i, int j, Point2 p) const;
  double value(Point2 p) const { return derivative(0, 0, p); }
  Jet2 jet(Point2 p) const;

  /// Profile derivatives at p: psi_{x^i y^j} = fx[i] * gy[j].
  std::pair<std::array<double, 5>, std::array<double, 5>> profiles(Point2 p) const {
    return {fx_(p.x), gy_(p.y)};
  }

 private:
  std::string id_;
  Rectangle domain_;
  Profile fx_;
  Profile gy_;
};

/// psi = 0 on the unit square.
ManufacturedSolution zero_solution(Rectangle domain = Rectangle::unit_square());

/// psi = (sin 4 pi x sin 4 pi y)^2 on the unit square.
ManufacturedSolution sine_squared_solution();

/// psi = ((1 - x/3)(1 - exp(-20 x)) sin pi y)^2 on [0,3] x [0,1].
ManufacturedSolution boundary_layer_solution();

/// Registered problem ids: "zero", "sine-squared", "boundary-layer".
ManufacturedSolution solution_by_id(const std::string& id);
std::vector<std::string> registered_problems();

struct ForcingTerms {
  bool biharmonic = true;
  bool jacobian = true;
  bool beta = true;
};

/// F = Ro Re^-1 lap^2 psi + Ro J(psi, lap psi) - psi_x, J(u, v) = u_x v_y - u_y v_x.
double manufactured_forcing(const ManufacturedSolution& sol, const FlowParams& params, Point2 p,
                            const ForcingTerms& terms = {});

/// The forcing as a field, capturing copies of its arguments.
std::function<double(Point2)> forcing_field(const ManufacturedSolution& sol,
                                            const FlowParams& params);

}  // namespace qge
