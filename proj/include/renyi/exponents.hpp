#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renyi/prob.hpp"

namespace renyi {

struct ExponentResult {
  double value = 0;
  double argmax_t = 0;
  std::optional<double> argmax_eps;
  bool degenerate = false;  // typical-set bound with a zero atom in P_X
  std::string branch;       // "iid" or "ts" for the combined bound
  std::vector<std::string> warnings;
};

ExponentResult e_iid(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s);
ExponentResult e_iid_clipped(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s);

double theta(double s, double eps, const Pmf& px, const Channel& w, const Pmf& q, double rate);

std::vector<double> eps_grid(int count = 200, double lo = 1e-4);

ExponentResult e_ts(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s);

ExponentResult exponent_lower_bound(const Channel& w, const Pmf& q, double rate, double s,
                                    int grid_res);

}  // namespace renyi
