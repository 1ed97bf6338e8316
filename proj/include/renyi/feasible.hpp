#pragma once

#include <Eigen/Dense>
#include <vector>

#include "renyi/prob.hpp"

namespace renyi {

constexpr double kFeasibleTol = 1e-9;

// The polytope {P_X : W o P_X = q}.
struct FeasibleSet {
  bool feasible = false;
  std::vector<Eigen::VectorXd> vertices;
  // grid hits and a lattice over the vertex hull, lexicographically sorted
  std::vector<Eigen::VectorXd> points;
};

FeasibleSet feasible_polytope(const Eigen::MatrixXd& w, const Eigen::VectorXd& q,
                              int resolution);

struct FeasibleResult {
  bool feasible = false;
  std::vector<Pmf> points;
  std::vector<Pmf> vertices;
};

FeasibleResult input_feasible_set(const Channel& w, const Pmf& q, int resolution);

}  // namespace renyi
