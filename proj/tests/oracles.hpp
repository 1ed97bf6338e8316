#pragma once

// Plain-loop reference implementations used to cross-check the library.
// Nothing here calls into renyi:: numerics.

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline double h2(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -p * std::log(p) - (1 - p) * std::log(1 - p);
}

// min rate for BSC(p) with a uniform target
inline double bsc_min_rate(double p, double s) {
  if (s == -1) return 0;
  if (s <= 0) return std::log(2.0) - h2(p);
  return std::log(std::pow(p, 1 + s) * std::pow(2, s) + std::pow(1 - p, 1 + s) * std::pow(2, s)) / s;
}

inline double kl(const Vec& p, const Vec& q) {
  double d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (q[i] == 0) return std::numeric_limits<double>::infinity();
    d += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return d;
}

inline double renyi(const Vec& p, const Vec& q, double s) {
  if (std::abs(s) < 1e-9) return kl(p, q);
  if (s == -1) {
    double m = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > 0) m += q[i];
    return -std::log(m);
  }
  double m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    m += std::exp((1 + s) * std::log(p[i]) - s * std::log(q[i]));
  }
  return std::log(m) / s;
}

inline double tv(const Vec& p, const Vec& q) {
  double t = 0;
  for (std::size_t i = 0; i < p.size(); ++i) t += std::abs(p[i] - q[i]);
  return t / 2;
}

inline Vec push(const Vec& px, const Mat& w) {
  Vec py(w[0].size(), 0.0);
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < py.size(); ++y) py[y] += px[x] * w[x][y];
  return py;
}

inline double cond_kl(const Mat& v, const Mat& w, const Vec& px) {
  double d = 0;
  for (std::size_t x = 0; x < px.size(); ++x)
    if (px[x] > 0) d += px[x] * kl(v[x], w[x]);
  return d;
}

inline double entropy(const Vec& p) {
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

inline double mutual_info(const Vec& px, const Mat& w) {
  Vec py = push(px, w);
  double hyx = 0;
  for (std::size_t x = 0; x < px.size(); ++x) hyx += px[x] * entropy(w[x]);
  return entropy(py) - hyx;
}

// D_{1+s}(P_XY || P_X Q) straight from the joint
inline double cond_renyi(const Vec& px, const Mat& w, const Vec& q, double s) {
  Vec joint, prod;
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) {
      joint.push_back(px[x] * w[x][y]);
      prod.push_back(px[x] * q[y]);
    }
  return renyi(joint, prod, s);
}

inline double expected_renyi(const Vec& px, const Mat& w, const Vec& q, double s) {
  double d = 0;
  for (std::size_t x = 0; x < px.size(); ++x)
    if (px[x] > 0) d += px[x] * renyi(w[x], q, s);
  return d;
}

inline double tau(const Vec& px, const Mat& w, const Vec& q, double r, double s, double t) {
  Vec py = push(px, w);
  double acc = 0;
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (px[x] > 0 && w[x][y] > 0)
        acc += px[x] * std::pow(w[x][y], 1 - t) * std::pow(py[y], t - s) * std::pow(q[y], s);
  return -t * r - std::log(acc);
}

// all codebooks of M words of length n, enumerated by nested counters
inline double ensemble_exhaustive(const Vec& px, const Mat& w, const Vec& q, int n, int m, double s) {
  const int nx = static_cast<int>(px.size()), ny = static_cast<int>(q.size());
  int ny_n = 1;
  for (int i = 0; i < n; ++i) ny_n *= ny;
  std::vector<int> sym(n * m, 0);
  double acc = 0;
  while (true) {
    double wgt = 1;
    for (int v : sym) wgt *= px[v];
    if (wgt > 0) {
      Vec py(ny_n, 0.0), qn(ny_n, 1.0);
      for (int yi = 0; yi < ny_n; ++yi) {
        std::vector<int> ys(n);
        int r = yi;
        for (int i = n - 1; i >= 0; --i) {
          ys[i] = r % ny;
          r /= ny;
        }
        for (int i = 0; i < n; ++i) qn[yi] *= q[ys[i]];
        for (int k = 0; k < m; ++k) {
          double pr = 1;
          for (int i = 0; i < n; ++i) pr *= w[sym[k * n + i]][ys[i]];
          py[yi] += pr / m;
        }
      }
      if (std::abs(s) < 1e-9) {
        acc += wgt * kl(py, qn);
      } else {
        double g = 0;
        for (int yi = 0; yi < ny_n; ++yi)
          if (py[yi] > 0) g += std::pow(py[yi], 1 + s) * std::pow(qn[yi], -s);
        acc += wgt * g;
      }
    }
    int d = n * m - 1;
    while (d >= 0 && ++sym[d] == nx) sym[d--] = 0;
    if (d < 0) break;
  }
  if (std::abs(s) < 1e-9) return acc;
  return std::log(acc) / s;
}

// grid maximum over channels V (rows on a res-grid) of -(1+s)/s D(V||W|pi) + f(V)
inline double channel_grid_max(const Vec& pi, const Mat& w, int res,
                               const std::function<double(const Mat&)>& tail, double s) {
  const std::size_t nx = pi.size();
  const int ny = static_cast<int>(w[0].size());
  // row grid
  std::vector<Vec> rows;
  std::vector<int> k(ny, 0);
  std::function<void(int, int)> gen = [&](int i, int left) {
    if (i == ny - 1) {
      k[i] = left;
      Vec r(ny);
      for (int j = 0; j < ny; ++j) r[j] = double(k[j]) / res;
      rows.push_back(r);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      k[i] = a;
      gen(i + 1, left - a);
    }
  };
  gen(0, res);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(nx, 0);
  while (true) {
    Mat v(nx);
    for (std::size_t x = 0; x < nx; ++x) v[x] = rows[idx[x]];
    const double d = cond_kl(v, w, pi);
    if (std::isfinite(d)) best = std::max(best, -(1 + s) / s * d + tail(v));
    std::size_t x = 0;
    while (x < nx && ++idx[x] == rows.size()) idx[x++] = 0;
    if (x == nx) break;
  }
  return best;
}

struct Random {
  std::mt19937_64 gen;
  explicit Random(std::uint64_t seed) : gen(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0, 1)(gen); }

  // strictly positive pmf unless sparse is set, in which case some atoms may vanish
  Vec pmf(int n, bool sparse = false) {
    Vec p(n);
    double s = 0;
    std::exponential_distribution<double> e(1.0);
    for (auto& v : p) {
      v = e(gen) + 1e-3;
      if (sparse && uniform() < 0.25) v = 0;
      s += v;
    }
    if (s == 0) {
      p[0] = 1;
      return p;
    }
    for (auto& v : p) v /= s;
    return p;
  }

  Mat channel(int nx, int ny) {
    Mat w(nx);
    for (auto& r : w) r = pmf(ny);
    return w;
  }
};

}  // namespace oracle
