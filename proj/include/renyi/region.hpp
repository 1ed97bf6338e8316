#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace renyi {

// Which inequality the pieces carry besides R0 + R1 <= sum_cap:
// R0 >= r0_min, or R1 <= r1_max.
enum class RegionForm { R0Min, R1Max };
const char* to_string(RegionForm f);
RegionForm parse_form(const std::string& s);

struct Achiever {
  Eigen::VectorXd px;
  // stochastic encoders only
  Eigen::VectorXd pw;
  Eigen::MatrixXd px_given_w;
  bool stochastic() const { return pw.size() > 0; }
};

struct RegionPiece {
  double sum_cap = 0;
  double r0_min = 0;
  double r1_max = 0;  // sum_cap - r0_min
  bool empty = false;
  Achiever achiever;
};

RegionPiece make_piece(double sum_cap, double r0_min, Achiever a = {});

struct RateRegion {
  double s = 0;
  Eigen::VectorXd qz;
  bool feasible = true;
  bool inner_approx = false;
  int w_resolution = 0;  // 0 for deterministic encoders
  std::vector<RegionPiece> pieces;

  bool contains(double r0, double r1, RegionForm form = RegionForm::R0Min) const;
  // (r0, r1) with some extra non-secret rate r0' >= 0 added to r0 lands in the R0Min form
  bool contains_lifted(double r0, double r1) const;
  double max_r1() const;
  double max_sum() const;
  // upper boundary R1(R0) sampled on [0, max sum_cap] plus every piece corner
  std::vector<std::pair<double, double>> boundary(RegionForm form, int samples) const;
};

// drops pieces whose set is contained in another piece's set
void prune_dominated(std::vector<RegionPiece>& pieces);

}  // namespace renyi
