#include "renyi/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/error.hpp"

namespace renyi {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  if (r > 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::llround(r));
}

std::uint64_t simplex_count(int dim, int resolution) {
  return binomial(resolution + dim - 1, dim - 1);
}

SimplexGrid::SimplexGrid(int dim, int resolution) : dim_(dim), res_(resolution) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "simplex grid: dim < 1");
  if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "simplex grid: resolution < 1");
  reset();
}

std::uint64_t SimplexGrid::size() const { return simplex_count(dim_, res_); }

void SimplexGrid::reset() {
  k_ = Eigen::VectorXi::Zero(dim_);
  k_(dim_ - 1) = res_;
  started_ = false;
}

bool SimplexGrid::next() {
  if (!started_) {
    started_ = true;
    return true;
  }
  int tail = 0;
  for (int i = dim_ - 2; i >= 0; --i) {
    tail += k_(i + 1);
    if (tail > 0) {
      k_(i) += 1;
      for (int j = i + 1; j < dim_ - 1; ++j) k_(j) = 0;
      k_(dim_ - 1) = tail - 1;
      return true;
    }
  }
  return false;
}

Eigen::VectorXd SimplexGrid::point() const {
  return k_.cast<double>() / static_cast<double>(res_);
}

std::vector<Eigen::VectorXd> simplex_points(int dim, int resolution) {
  SimplexGrid g(dim, resolution);
  std::vector<Eigen::VectorXd> out;
  out.reserve(g.size());
  while (g.next()) out.push_back(g.point());
  return out;
}

int resolution_for_budget(int dim, int want, std::uint64_t budget) {
  int r = std::max(1, want);
  while (r > 1 && simplex_count(dim, r) > budget) --r;
  return r;
}

namespace {

// box enumeration for small dim, coordinate pattern search otherwise
SimplexMin refine_box(const SimplexObjective& f, const SimplexMin& start, int coarse_res) {
  const int d = static_cast<int>(start.arg.size());
  const int fine = 10 * coarse_res;
  const int half = 20;
  Eigen::VectorXi c(d);
  for (int i = 0; i < d; ++i) c(i) = static_cast<int>(std::lround(start.arg(i) * fine));
  int drift = fine - c.sum();
  for (int i = 0; drift != 0; i = (i + 1) % d) {
    if (drift > 0) { c(i) += 1; --drift; }
    else if (c(i) > 0) { c(i) -= 1; ++drift; }
  }
  SimplexMin best = start;
  auto consider = [&](const Eigen::VectorXi& k) {
    Eigen::VectorXd p = k.cast<double>() / static_cast<double>(fine);
    const double v = f(p);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.arg = p;
    }
  };
  if (d <= 3) {
    Eigen::VectorXi k(d);
    std::vector<int> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = std::max(0, c(i) - half);
      hi[i] = std::min(fine, c(i) + half);
    }
    if (d == 1) return best;
    if (d == 2) {
      for (int a = lo[0]; a <= hi[0]; ++a) {
        k << a, fine - a;
        if (k(1) < lo[1] || k(1) > hi[1]) continue;
        consider(k);
      }
    } else {
      for (int a = lo[0]; a <= hi[0]; ++a)
        for (int b = lo[1]; b <= hi[1]; ++b) {
          k << a, b, fine - a - b;
          if (k(2) < lo[2] || k(2) > hi[2]) continue;
          consider(k);
        }
    }
    return best;
  }
  Eigen::VectorXi cur = c;
  double cur_v = f(cur.cast<double>() / static_cast<double>(fine));
  ++best.evaluations;
  if (cur_v < best.value) {
    best.value = cur_v;
    best.arg = cur.cast<double>() / static_cast<double>(fine);
  }
  for (int h = 16; h >= 1; h /= 2) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (i == j || cur(j) < h) continue;
          Eigen::VectorXi k = cur;
          k(i) += h;
          k(j) -= h;
          if (std::abs(k(i) - c(i)) > half || std::abs(k(j) - c(j)) > half) continue;
          const double v = f(k.cast<double>() / static_cast<double>(fine));
          ++best.evaluations;
          if (v < cur_v) {
            cur_v = v;
            cur = k;
            moved = true;
          }
        }
    }
  }
  if (cur_v < best.value) {
    best.value = cur_v;
    best.arg = cur.cast<double>() / static_cast<double>(fine);
  }
  return best;
}

}  // namespace

SimplexMin refine_on_simplex(const SimplexObjective& f, const SimplexMin& start, int coarse_res) {
  return refine_box(f, start, coarse_res);
}

SimplexMin minimize_on_simplex(int dim, const SimplexObjective& f, const SimplexSearchOptions& opt) {
  const int res = resolution_for_budget(dim, opt.resolution, opt.grid_budget);
  SimplexMin best{Eigen::VectorXd(), std::numeric_limits<double>::infinity(), 0};
  SimplexGrid g(dim, res);
  while (g.next()) {
    Eigen::VectorXd p = g.point();
    const double v = f(p);
    ++best.evaluations;
    if (v < best.value || best.arg.size() == 0) {
      best.value = v;
      best.arg = p;
    }
  }
  for (const auto& sd : opt.seeds) {
    const double v = f(sd);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.arg = sd;
    }
  }
  if (opt.refine) best = refine_box(f, best, res);
  return best;
}

}  // namespace renyi
