#include "renyi/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/error.hpp"

namespace renyi {

const char* to_string(RegionForm f) {
  return f == RegionForm::R0Min ? "r0_min" : "r1_max";
}

RegionForm parse_form(const std::string& s) {
  if (s == "r0_min") return RegionForm::R0Min;
  if (s == "r1_max") return RegionForm::R1Max;
  throw Error(ErrorCode::ModelValidation, "unknown region form '" + s + "'");
}

RegionPiece make_piece(double sum_cap, double r0_min, Achiever a) {
  RegionPiece p;
  p.sum_cap = sum_cap;
  p.r0_min = r0_min;
  p.r1_max = sum_cap - r0_min;
  p.empty = r0_min > sum_cap;
  p.achiever = std::move(a);
  return p;
}

bool RateRegion::contains(double r0, double r1, RegionForm form) const {
  if (r0 < 0 || r1 < 0) return false;
  for (const auto& p : pieces) {
    if (r0 + r1 > p.sum_cap) continue;
    if (form == RegionForm::R0Min ? r0 >= p.r0_min : r1 <= p.r1_max) return true;
  }
  return false;
}

bool RateRegion::contains_lifted(double r0, double r1) const {
  if (r0 < 0 || r1 < 0) return false;
  for (const auto& p : pieces) {
    // smallest padding that clears the floor; any larger one only costs sum rate
    const double pad = std::max(0.0, p.r0_min - r0);
    const double r0p = r0 + pad;
    if (r0p >= p.r0_min && r0p + r1 <= p.sum_cap) return true;
  }
  return false;
}

double RateRegion::max_r1() const {
  double m = 0;
  for (const auto& p : pieces)
    if (!p.empty) m = std::max(m, p.sum_cap - std::max(0.0, p.r0_min));
  return m;
}

double RateRegion::max_sum() const {
  double m = 0;
  for (const auto& p : pieces) m = std::max(m, p.sum_cap);
  return m;
}

std::vector<std::pair<double, double>> RateRegion::boundary(RegionForm form, int samples) const {
  std::vector<double> xs;
  const double top = max_sum();
  for (int i = 0; i <= samples; ++i) xs.push_back(top * i / std::max(1, samples));
  for (const auto& p : pieces) {
    if (p.empty) continue;
    if (form == RegionForm::R0Min)
      xs.push_back(std::max(0.0, p.r0_min));
    else
      xs.push_back(std::max(0.0, p.sum_cap - std::max(0.0, p.r1_max)));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<double, double>> out;
  for (double r0 : xs) {
    double best = -1;
    for (const auto& p : pieces) {
      if (r0 > p.sum_cap) continue;
      double r1;
      if (form == RegionForm::R0Min) {
        if (r0 < p.r0_min) continue;
        r1 = p.sum_cap - r0;
      } else {
        if (p.r1_max < 0) continue;
        r1 = std::min(p.sum_cap - r0, p.r1_max);
      }
      best = std::max(best, r1);
    }
    if (best >= 0) out.emplace_back(r0, best);
  }
  return out;
}

void prune_dominated(std::vector<RegionPiece>& pieces) {
  std::stable_sort(pieces.begin(), pieces.end(), [](const RegionPiece& a, const RegionPiece& b) {
    if (a.sum_cap != b.sum_cap) return a.sum_cap > b.sum_cap;
    return a.r0_min < b.r0_min;
  });
  std::vector<RegionPiece> keep;
  double best_r0 = std::numeric_limits<double>::infinity();
  for (auto& p : pieces) {
    if (p.r0_min < best_r0) {
      best_r0 = p.r0_min;
      keep.push_back(std::move(p));
    }
  }
  pieces.swap(keep);
}

}  // namespace renyi
