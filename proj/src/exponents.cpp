#include "renyi/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "renyi/feasible.hpp"

namespace renyi {

namespace {

constexpr double kStep = 1e-3;

struct TMax {
  double value;
  double t;
};

// grid in t followed by golden-section polish around the best node
TMax maximize_t(const std::function<double(double)>& g, double lo, double hi) {
  if (hi - lo <= 0) return {g(lo), lo};
  const int n = static_cast<int>(std::ceil((hi - lo) / kStep - 1e-12));
  TMax best{-std::numeric_limits<double>::infinity(), lo};
  for (int k = 0; k <= n; ++k) {
    const double t = k == n ? hi : lo + k * kStep;
    const double v = g(t);
    if (v > best.value) best = {v, t};
  }
  double a = std::max(lo, best.t - kStep), b = std::min(hi, best.t + kStep);
  const double r = (std::sqrt(5.0) - 1) / 2;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - r * (b - a); fc = g(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + r * (b - a); fd = g(d);
    }
  }
  const double tm = (a + b) / 2;
  const double vm = g(tm);
  if (vm > best.value) best = {vm, tm};
  return best;
}

void check_args(const Pmf& px, const Channel& w, const Pmf& q, double s) {
  if (px.alphabet() != w.inputs() || q.alphabet() != w.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "pmf and channel alphabets differ");
  if (!(s > -1 && s <= 1)) throw Error(ErrorCode::InvalidArgument, "exponent: s outside (-1,1]");
  require_support(w, q, &px);
}

bool in_feasible_set(const Pmf& px, const Channel& w, const Pmf& q) {
  return tv(push(px.probs(), w.matrix()), q.probs()) <= kFeasibleTol;
}

}  // namespace

ExponentResult e_iid(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_args(px, w, q, s);
  const auto& p = px.probs();
  const auto& W = w.matrix();
  const auto& Q = q.probs();
  ExponentResult r;
  if (!in_feasible_set(px, w, q)) r.warnings.push_back("input distribution is not in the feasible set");
  const double thr = s > 0 ? cond_renyi(p, W, Q, s) : cond_kl_to(p, W, Q);
  if (!(rate > thr)) {
    std::ostringstream os;
    os.precision(6);
    os << "rate " << rate << " not above threshold " << thr;
    r.warnings.push_back(os.str());
  }
  auto g = [&](double t) { return t == 0 ? 0.0 : t * (rate - cond_renyi(p, W, Q, t)); };
  const TMax m = maximize_t(g, s > 0 ? s : 0.0, 1.0);
  r.value = m.value;
  r.argmax_t = m.t;
  r.branch = "iid";
  return r;
}

ExponentResult e_iid_clipped(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  ExponentResult r = e_iid(px, w, q, rate, s);
  r.value = std::max(0.0, r.value);
  return r;
}

namespace {

TMax theta_max(double s, double eps, const Eigen::VectorXd& p, const Eigen::MatrixXd& W,
               const Eigen::VectorXd& Q, double rate) {
  auto g = [&](double t) {
    return t == 0 ? 0.0 : t * (rate - (1 + eps) * expected_renyi(p, W, Q, t));
  };
  return maximize_t(g, std::max(0.0, s), 1.0);
}

}  // namespace

double theta(double s, double eps, const Pmf& px, const Channel& w, const Pmf& q, double rate) {
  check_args(px, w, q, s <= -1 ? 0.0 : s);
  if (!(eps > 0 && eps <= 1)) throw Error(ErrorCode::InvalidArgument, "theta: eps outside (0,1]");
  return theta_max(s, eps, px.probs(), w.matrix(), q.probs(), rate).value;
}

std::vector<double> eps_grid(int count, double lo) {
  std::vector<double> e;
  e.reserve(count);
  const double l0 = std::log10(lo);
  for (int k = 1; k <= count; ++k) e.push_back(std::pow(10.0, l0 * (1.0 - double(k) / count)));
  return e;
}

ExponentResult e_ts(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_args(px, w, q, s);
  ExponentResult r;
  r.branch = "ts";
  if (!in_feasible_set(px, w, q)) r.warnings.push_back("input distribution is not in the feasible set");
  const double pmin = px.min_prob();
  if (pmin <= 0) {
    r.degenerate = true;
    r.warnings.push_back("zero atom in the input distribution; typical-set bound is 0");
    return r;
  }
  const double s0 = s > 0 ? s : 0.0;
  r.value = 0;
  for (double eps : eps_grid()) {
    const TMax th = theta_max(s0, eps, px.probs(), w.matrix(), q.probs(), rate);
    const double v = std::min(eps * eps * pmin / 3, th.value);
    if (v > r.value) {
      r.value = v;
      r.argmax_t = th.t;
      r.argmax_eps = eps;
    }
  }
  return r;
}

ExponentResult exponent_lower_bound(const Channel& w, const Pmf& q, double rate, double s, int grid_res) {
  FeasibleSet fs = feasible_polytope(w.matrix(), q.probs(), grid_res);
  if (!fs.feasible) throw Error(ErrorCode::InfeasibleTarget, "no input distribution reproduces the target");
  ExponentResult best;
  best.value = -1;
  for (const auto& p : fs.points) {
    const Pmf px(w.inputs(), p);
    ExponentResult a = e_iid_clipped(px, w, q, rate, s);
    ExponentResult b = e_ts(px, w, q, rate, s);
    const ExponentResult& m = b.value > a.value ? b : a;
    if (m.value > best.value) best = m;
  }
  best.warnings.clear();
  return best;
}

}  // namespace renyi
