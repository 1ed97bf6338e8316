#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace renyi {

// Lattice points k/res of the (dim-1)-simplex in lexicographic order of k.
class SimplexGrid {
 public:
  SimplexGrid(int dim, int resolution);

  int dim() const { return dim_; }
  int resolution() const { return res_; }
  std::uint64_t size() const;

  void reset();
  // advances to the next point; false once exhausted
  bool next();
  const Eigen::VectorXi& counts() const { return k_; }
  Eigen::VectorXd point() const;

 private:
  int dim_, res_;
  Eigen::VectorXi k_;
  bool started_ = false;
};

std::uint64_t binomial(int n, int k);
std::uint64_t simplex_count(int dim, int resolution);
std::vector<Eigen::VectorXd> simplex_points(int dim, int resolution);

// largest resolution <= want whose grid has at most budget points
int resolution_for_budget(int dim, int want, std::uint64_t budget);

struct SimplexMin {
  Eigen::VectorXd arg;
  double value;
  std::uint64_t evaluations = 0;
};

using SimplexObjective = std::function<double(const Eigen::VectorXd&)>;

struct SimplexSearchOptions {
  int resolution = 100;
  std::uint64_t grid_budget = 200000;
  bool refine = true;
  std::vector<Eigen::VectorXd> seeds;
};

// Exhaustive grid, then one 10x refinement pass in a box of +-2/res around
// the incumbent. First grid point wins ties; seeds only replace on strict <.
SimplexMin minimize_on_simplex(int dim, const SimplexObjective& f,
                               const SimplexSearchOptions& opt);

SimplexMin refine_on_simplex(const SimplexObjective& f, const SimplexMin& start,
                             int coarse_res);

}  // namespace renyi
