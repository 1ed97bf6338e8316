#include "renyi/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "renyi/feasible.hpp"
#include "renyi/simplex.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kSearchBudget = 200000;
constexpr std::uint64_t kTableBudget = 500000;

void check_s(double s, double lo, bool lo_open, double hi, bool hi_open, const char* what) {
  const bool ok = (lo_open ? s > lo : s >= lo) && (hi_open ? s < hi : s <= hi);
  if (!ok) {
    std::ostringstream os;
    os << what << ": s = " << s << " out of range";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

void check_triple(const Pmf& px, const Channel& w, const Pmf& q) {
  if (px.alphabet() != w.inputs() || q.alphabet() != w.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "pmf and channel alphabets differ");
}

// sum_x px sum_y W^{1+s} q^{-s}
double cond_moment(const Eigen::VectorXd& px, const Eigen::MatrixXd& w, const Eigen::VectorXd& q,
                   double s) {
  double acc = 0;
  for (Eigen::Index x = 0; x < px.size(); ++x)
    if (px(x) > 0) acc += px(x) * renyi_moment(w.row(x), q, s);
  return acc;
}

double minus_sum(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s,
                 double threshold) {
  const auto& W = w.matrix();
  const Eigen::VectorXd& p = px.probs();
  const Eigen::VectorXd& Q = q.probs();
  const Eigen::VectorXd py = push(p, W);
  double hi = 0, lo = 0;
  for (Eigen::Index x = 0; x < W.rows(); ++x) {
    if (p(x) <= 0) continue;
    for (Eigen::Index y = 0; y < W.cols(); ++y) {
      const double wy = W(x, y);
      if (wy <= 0 || (Q(y) <= 0 && s > 0)) continue;
      if (wy >= threshold * py(y))
        hi += p(x) * std::pow(wy, 1 - s) * std::pow(Q(y), s);
      else
        lo += p(x) * wy * std::pow(py(y), -s) * std::pow(Q(y), s);
    }
  }
  return std::exp(s * rate) * hi + lo;
}

double tau_raw(const Eigen::VectorXd& px, const Eigen::MatrixXd& w, const Eigen::VectorXd& q,
               const Eigen::VectorXd& py, double rate, double s, double t) {
  double acc = 0;
  for (Eigen::Index x = 0; x < w.rows(); ++x) {
    if (px(x) <= 0) continue;
    for (Eigen::Index y = 0; y < w.cols(); ++y) {
      const double wy = w(x, y);
      if (wy <= 0 || q(y) <= 0) continue;
      acc += px(x) * std::pow(wy, 1 - t) * std::pow(py(y), t - s) * std::pow(q(y), s);
    }
  }
  return -t * rate - std::log(acc);
}

}  // namespace

double gamma_one_shot(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_triple(px, w, q);
  check_s(s, 0, true, 1, false, "gamma_one_shot");
  require_support(w, q, &px);
  const double dc = cond_renyi(px.probs(), w.matrix(), q.probs(), s);
  const double dy = renyi(push(px.probs(), w.matrix()), q.probs(), s);
  return std::max(dc - rate, dy);
}

double one_shot_direct_plus(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_triple(px, w, q);
  check_s(s, 0, true, 1, false, "one_shot_direct_plus");
  require_support(w, q, &px);
  const double a = cond_moment(px.probs(), w.matrix(), q.probs(), s);
  const double b = renyi_moment(push(px.probs(), w.matrix()), q.probs(), s);
  return a * std::exp(-s * rate) + b;
}

double one_shot_converse_plus(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_triple(px, w, q);
  check_s(s, 0, true, 1, false, "one_shot_converse_plus");
  require_support(w, q, &px);
  const double a = cond_moment(px.probs(), w.matrix(), q.probs(), s);
  const double b = renyi_moment(push(px.probs(), w.matrix()), q.probs(), s);
  return std::max(a * std::exp(-s * rate), b);
}

double one_shot_direct_minus(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_triple(px, w, q);
  check_s(s, 0, false, 1, true, "one_shot_direct_minus");
  return std::pow(2.0, -s) * minus_sum(px, w, q, rate, s, std::exp(rate));
}

double one_shot_converse_minus(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  check_triple(px, w, q);
  check_s(s, 0, false, 1, true, "one_shot_converse_minus");
  return minus_sum(px, w, q, rate, s, std::exp(rate) / 2);
}

OneShotBounds one_shot_bounds(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s) {
  OneShotBounds b;
  b.direct_plus = one_shot_direct_plus(px, w, q, rate, s);
  b.converse_plus = one_shot_converse_plus(px, w, q, rate, s);
  if (s < 1) {
    b.direct_minus = one_shot_direct_minus(px, w, q, rate, s);
    b.converse_minus = one_shot_converse_minus(px, w, q, rate, s);
  } else {
    b.direct_minus = b.converse_minus = std::numeric_limits<double>::quiet_NaN();
  }
  return b;
}

double tau(const Pmf& px, const Channel& w, const Pmf& q, double rate, double s, double t) {
  check_triple(px, w, q);
  const Eigen::VectorXd py = push(px.probs(), w.matrix());
  return tau_raw(px.probs(), w.matrix(), q.probs(), py, rate, s, t);
}

TauMax tau_max(const Eigen::VectorXd& px, const Eigen::MatrixXd& w, const Eigen::VectorXd& q,
               double rate, double s) {
  const Eigen::VectorXd py = push(px, w);
  auto f = [&](double t) { return tau_raw(px, w, q, py, rate, s, t); };
  double lo = 0, hi = s;
  // concave in t, so ternary search is enough
  while (hi - lo > 1e-9) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  TauMax best{f(0.0), 0.0};
  const double tm = (lo + hi) / 2;
  for (double t : {tm, s}) {
    const double v = f(t);
    if (v > best.value) best = {v, t};
  }
  return best;
}

AsymptoticRate gamma_minus_single_letter(const Channel& w, const Pmf& q, double rate, double s,
                                         int grid_res) {
  check_s(s, 0, true, 1, true, "gamma_minus_single_letter");
  if (q.alphabet() != w.outputs()) throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
  const Eigen::MatrixXd& W = w.matrix();
  const Eigen::VectorXd& Q = q.probs();
  SimplexSearchOptions opt;
  opt.resolution = grid_res;
  opt.grid_budget = kSearchBudget;
  FeasibleSet fs = feasible_polytope(W, Q, grid_res);
  opt.seeds = fs.vertices;
  auto f = [&](const Eigen::VectorXd& p) { return tau_max(p, W, Q, rate, s).value / s; };
  SimplexMin m = minimize_on_simplex(w.n_inputs(), f, opt);
  AsymptoticRate r;
  r.value = m.value;
  r.achiever_px = Pmf(w.inputs(), m.arg);
  return r;
}

namespace {

double gamma_n_value(const Eigen::VectorXd& p, const Eigen::MatrixXd& wn, const Eigen::VectorXd& qn,
                     double rate, double s, int n) {
  if (s >= 0) {
    const double dc = cond_renyi(p, wn, qn, s);
    const double dy = renyi(push(p, wn), qn, s);
    return std::max(dc / n - rate, dy / n);
  }
  const double sig = -s;
  return tau_max(p, wn, qn, n * rate, sig).value / (n * sig);
}

SimplexMin gamma_n_search(const Channel& w, const Pmf& q, double rate, double s, int n,
                          int grid_res) {
  const Channel wn = product_channel(w, n, 16);
  const Pmf qn = product_pmf(q, n, kDefaultProductCap);
  const Eigen::MatrixXd& W = wn.matrix();
  const Eigen::VectorXd& Q = qn.probs();
  SimplexSearchOptions opt;
  opt.resolution = grid_res;
  opt.grid_budget = n == 1 ? kSearchBudget : 50000;
  if (n == 1) {
    opt.seeds = feasible_polytope(W, Q, grid_res).vertices;
  } else {
    SimplexMin one = gamma_n_search(w, q, rate, s, 1, grid_res);
    opt.seeds.push_back(product_pmf(Pmf(w.inputs(), one.arg), n).probs());
    for (const auto& v : feasible_polytope(w.matrix(), q.probs(), grid_res).vertices)
      opt.seeds.push_back(product_pmf(Pmf(w.inputs(), v), n).probs());
  }
  auto f = [&](const Eigen::VectorXd& p) { return gamma_n_value(p, W, Q, rate, s, n); };
  return minimize_on_simplex(wn.n_inputs(), f, opt);
}

}  // namespace

double gamma_multiletter(const Channel& w, const Pmf& q, double rate, double s, int n, int grid_res) {
  check_s(s, -1, true, 1, false, "gamma_multiletter");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gamma_multiletter: n < 1");
  if (q.alphabet() != w.outputs()) throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
  if (s > 0) require_support(w, q);
  std::size_t sz = 1;
  for (int i = 0; i < n; ++i) {
    sz *= static_cast<std::size_t>(w.n_inputs());
    if (sz > 16) throw Error(ErrorCode::SizeCap, "gamma_multiletter: |X|^n exceeds 16");
  }
  return gamma_n_search(w, q, rate, s, n, grid_res).value;
}

double eta(const Channel& w, const Pmf& q, const Pmf& ptx, const Channel& pty_given_x, double s) {
  check_s(s, 0, true, 1, false, "eta");
  if (ptx.alphabet() != w.inputs() || pty_given_x.inputs() != w.inputs() ||
      pty_given_x.outputs() != w.outputs() || q.alphabet() != w.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "eta: alphabets differ");
  const Eigen::VectorXd& p = ptx.probs();
  const double d = cond_kl(pty_given_x.matrix(), w.matrix(), p);
  const double dy = kl(push(p, pty_given_x.matrix()), q.probs());
  if (std::isinf(d)) return -kInf;
  return (-1.0 / s - 1.0) * d + dy;
}

EtaSup eta_sup(const Eigen::MatrixXd& w, const Eigen::VectorXd& q, const Eigen::VectorXd& pi, double s) {
  const Eigen::Index nx = w.rows(), ny = w.cols();
  const double c = (1 + s) / s, a = s / (1 + s);
  EtaSup out{0, w, 0};
  for (Eigen::Index x = 0; x < nx; ++x) {
    if (pi(x) <= 0) continue;
    for (Eigen::Index y = 0; y < ny; ++y)
      if (w(x, y) > 0 && q(y) <= 0) {
        out.value = kInf;
        return out;
      }
  }
  Eigen::VectorXd theta = push(pi, w);
  Eigen::MatrixXd v(nx, ny);
  Eigen::VectorXd tilt(ny);
  double prev = -kInf;
  for (int it = 0; it < 20000; ++it) {
    for (Eigen::Index y = 0; y < ny; ++y)
      tilt(y) = q(y) > 0 && theta(y) > 0 ? std::pow(theta(y) / q(y), a) : 0.0;
    double dual = 0;
    for (Eigen::Index x = 0; x < nx; ++x) {
      v.row(x) = w.row(x).cwiseProduct(tilt.transpose());
      const double z = v.row(x).sum();
      if (z > 0) {
        v.row(x) /= z;
        if (pi(x) > 0) dual += pi(x) * std::log(z);
      } else {
        v.row(x) = w.row(x);
      }
    }
    dual *= c;
    Eigen::VectorXd next = push(pi, v);
    const double step = (next - theta).cwiseAbs().sum();
    theta = next;
    out.iterations = it + 1;
    if (step < 1e-15 || (it > 0 && std::abs(dual - prev) < 1e-16 && step < 1e-12)) break;
    prev = dual;
  }
  out.channel = v;
  const double d = cond_kl(v, w, pi);
  out.value = -c * d + kl(push(pi, v), q);
  // never below the V = W feasible point
  const double base = kl(push(pi, w), q);
  if (!(out.value >= base)) {
    out.value = base;
    out.channel = w;
  }
  return out;
}

ResolvabilityProfile::ResolvabilityProfile(const Channel& w, const Pmf& q, double s, int grid_res)
    : w_(w.matrix()), q_(q.probs()), in_(w.inputs()), out_(w.outputs()), s_(s), res_(grid_res) {
  check_s(s, 0, true, 1, false, "asymptotic_resolvability_plus");
  if (q.alphabet() != w.outputs()) throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
  require_support(w, q);
  res_ = resolution_for_budget(w.n_inputs(), grid_res, kSearchBudget);
  pts_ = simplex_points(w.n_inputs(), res_);
  for (const auto& v : feasible_polytope(w_, q_, grid_res).vertices) pts_.push_back(v);
  ed_.reserve(pts_.size());
  psi_.reserve(pts_.size());
  for (const auto& p : pts_) {
    ed_.push_back(expected_renyi(p, w_, q_, s_));
    psi_.push_back(eta_sup(w_, q_, p, s_).value);
  }
}

AsymptoticRate ResolvabilityProfile::at(double rate) const {
  SimplexMin best{pts_.front(), kInf, 0};
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    const double v = std::max(ed_[i] - rate, psi_[i]);
    if (v < best.value) best = {pts_[i], v, 0};
  }
  auto f = [&](const Eigen::VectorXd& p) {
    return std::max(expected_renyi(p, w_, q_, s_) - rate, eta_sup(w_, q_, p, s_).value);
  };
  best = refine_on_simplex(f, best, res_);
  AsymptoticRate r;
  r.value = best.value;
  r.achiever_px = Pmf(in_, best.arg);
  r.achiever_py_given_x = Channel(in_, out_, eta_sup(w_, q_, best.arg, s_).channel);
  return r;
}

AsymptoticRate asymptotic_resolvability_plus(const Channel& w, const Pmf& q, double rate, double s,
                                             int grid_res) {
  return ResolvabilityProfile(w, q, s, grid_res).at(rate);
}

double projected_cond_kl(const Eigen::MatrixXd& w, const Eigen::VectorXd& px, const Eigen::VectorXd& target,
                         bool* converged) {
  const Eigen::Index nx = w.rows(), ny = w.cols();
  Eigen::MatrixXd j = px.asDiagonal() * w;
  bool ok = false;
  for (int it = 0; it < 2000; ++it) {
    Eigen::VectorXd col = j.colwise().sum().transpose();
    double err = 0;
    for (Eigen::Index y = 0; y < ny; ++y) {
      err += std::abs(col(y) - target(y));
      if (col(y) > 0)
        j.col(y) *= target(y) / col(y);
      else if (target(y) > 0)
        err = kInf;
    }
    if (std::isinf(err)) break;
    Eigen::VectorXd row = j.rowwise().sum();
    for (Eigen::Index x = 0; x < nx; ++x)
      if (row(x) > 0) j.row(x) *= px(x) / row(x);
    if (err < 1e-13) {
      ok = true;
      break;
    }
  }
  Eigen::VectorXd col = j.colwise().sum().transpose();
  if ((col - target).cwiseAbs().sum() > 1e-10) ok = false;
  if (converged) *converged = ok;
  if (!ok) return kInf;
  double acc = 0;
  for (Eigen::Index x = 0; x < nx; ++x) {
    if (px(x) <= 0) continue;
    for (Eigen::Index y = 0; y < ny; ++y) {
      const double v = j(x, y) / px(x);
      if (v > 0) acc += px(x) * v * std::log(v / w(x, y));
    }
  }
  return acc;
}

GammaMinusTable::GammaMinusTable(const Channel& w, const Pmf& q, int grid_res)
    : w_(w), q_(q.probs()), res_(grid_res) {
  if (q.alphabet() != w.outputs()) throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
  const int nx = w.n_inputs(), ny = w.n_outputs();
  const Eigen::MatrixXd& W = w.matrix();
  // shared resolution for P_X and the channel rows, shrunk to the budget
  int r = std::max(1, grid_res);
  auto count = [&](int rr) {
    long double c = static_cast<long double>(simplex_count(nx, rr) + 1);
    for (int x = 0; x < nx; ++x) c *= static_cast<long double>(simplex_count(ny, rr) + 1);
    return c;
  };
  while (r > 1 && count(r) > kTableBudget) --r;
  res_ = r;
  px_ = simplex_points(nx, r);
  for (const auto& v : feasible_polytope(W, q_, grid_res).vertices) px_.push_back(v);
  const auto rowgrid = simplex_points(ny, r);
  rows_.assign(nx, rowgrid);
  for (int x = 0; x < nx; ++x) rows_[x].push_back(W.row(x).transpose());

  std::uint64_t nv = 1;
  for (int x = 0; x < nx; ++x) nv *= rows_[x].size();
  for (std::uint32_t i = 0; i < px_.size(); ++i) {
    const Eigen::VectorXd& p = px_[i];
    for (std::uint64_t k = 0; k < nv; ++k) {
      // rows of P_X-null letters do not matter; keep only the first choice
      std::uint64_t rem = k;
      bool redundant = false;
      Eigen::MatrixXd v(nx, ny);
      for (int x = nx - 1; x >= 0; --x) {
        const std::uint64_t idx = rem % rows_[x].size();
        rem /= rows_[x].size();
        if (p(x) <= 0 && idx != 0) redundant = true;
        v.row(x) = rows_[x][idx].transpose();
      }
      if (redundant) continue;
      const double d1 = cond_kl(v, W, p);
      const double d2 = cond_kl_to(p, v, q_);
      if (std::isinf(d1) || std::isinf(d2)) continue;
      const Eigen::VectorXd py = push(p, v);
      const double dout = kl(py, q_);
      const double dm = std::min(projected_cond_kl(W, p, py), d1);
      px_of_.push_back(i);
      v_of_.push_back(k);
      d1_.push_back(d1);
      d2_.push_back(d2);
      dout_.push_back(dout);
      dmin_.push_back(dm);
    }
  }
}

Eigen::MatrixXd GammaMinusTable::channel_at(std::size_t entry) const {
  const int nx = w_.n_inputs();
  Eigen::MatrixXd v(nx, w_.n_outputs());
  std::uint64_t rem = v_of_[entry];
  for (int x = nx - 1; x >= 0; --x) {
    const std::uint64_t idx = rem % rows_[x].size();
    rem /= rows_[x].size();
    v.row(x) = rows_[x][idx].transpose();
  }
  return v;
}

AsymptoticRate GammaMinusTable::best(double rate, double s, bool upper) const {
  check_s(s, 0, true, 1, true, upper ? "gamma_ub_minus" : "gamma_lb_minus");
  double bv = kInf;
  std::size_t bi = 0;
  for (std::size_t i = 0; i < d1_.size(); ++i) {
    const double first = (1 / s - 1) * d1_[i] + d2_[i] - rate;
    const double second =
        upper ? d1_[i] / s + dout_[i] - dmin_[i] : (1 / s - 1) * d1_[i] + dout_[i];
    const double v = std::max(first, second);
    if (v < bv) {
      bv = v;
      bi = i;
    }
  }
  AsymptoticRate r;
  r.value = bv;
  if (!d1_.empty()) {
    r.achiever_px = Pmf(w_.inputs(), px_[px_of_[bi]]);
    r.achiever_py_given_x = Channel(w_.inputs(), w_.outputs(), channel_at(bi));
  }
  return r;
}

AsymptoticRate GammaMinusTable::lb(double rate, double s) const { return best(rate, s, false); }
AsymptoticRate GammaMinusTable::ub(double rate, double s) const { return best(rate, s, true); }

AsymptoticRate gamma_lb_minus(const Channel& w, const Pmf& q, double rate, double s, int grid_res) {
  return GammaMinusTable(w, q, grid_res).lb(rate, s);
}

AsymptoticRate gamma_ub_minus(const Channel& w, const Pmf& q, double rate, double s, int grid_res) {
  return GammaMinusTable(w, q, grid_res).ub(rate, s);
}

MinRate min_rate_detail(const Channel& w, const Pmf& q, double s, int grid_res) {
  check_s(s, -1, false, 1, false, "min_rate");
  if (q.alphabet() != w.outputs()) throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
  FeasibleSet fs = feasible_polytope(w.matrix(), q.probs(), grid_res);
  if (!fs.feasible) throw Error(ErrorCode::InfeasibleTarget, "no input distribution reproduces the target");
  if (s == -1.0) return {0.0, Pmf(w.inputs(), fs.points.front())};
  const bool plus = s > 0 && !is_kl_order(s);
  double bv = kInf;
  const Eigen::VectorXd* arg = &fs.points.front();
  for (const auto& p : fs.points) {
    const double v = plus ? expected_renyi(p, w.matrix(), q.probs(), s) : mutual_information(p, w.matrix());
    if (v < bv) {
      bv = v;
      arg = &p;
    }
  }
  return {bv, Pmf(w.inputs(), *arg)};
}

double min_rate(const Channel& w, const Pmf& q, double s, int grid_res) {
  return min_rate_detail(w, q, s, grid_res).value;
}

}  // namespace renyi
