#pragma once

#include <string>
#include <vector>

namespace renyi {

struct FigureRow {
  double x;
  std::string curve;
  double y;
};

struct FigureOptions {
  int grid_res = 100;
  double rate_min = 0.0;
  double rate_max = 0.5;
  double rate_step = 0.01;
  double log_base = 0;  // 0 or e: nats; 2: bits
  std::vector<double> s_list;  // empty: figure default
  int boundary_samples = 100;
};

const std::vector<std::string>& figure_ids();
std::vector<FigureRow> make_figure(const std::string& id, const FigureOptions& opt);
std::string figure_csv(const std::vector<FigureRow>& rows);
std::vector<FigureRow> parse_figure_csv(const std::string& text);

std::vector<double> rate_axis(double lo, double hi, double step);

}  // namespace renyi
