#include "renyi/wiretap.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "renyi/feasible.hpp"
#include "renyi/rates.hpp"
#include "renyi/simplex.hpp"

namespace renyi {

namespace {

constexpr std::uint64_t kComboBudget = 30000000;

void check_s(double s) {
  if (!(s >= -1 && s <= 1)) throw Error(ErrorCode::InvalidArgument, "wiretap: s outside [-1,1]");
}

// psi(pi) for the eavesdropper, closed form at point masses
double tilted_value(const Eigen::MatrixXd& ez, const Eigen::VectorXd& qz, const Eigen::VectorXd& pi, double s) {
  int support = 0, last = -1;
  for (Eigen::Index x = 0; x < pi.size(); ++x)
    if (pi(x) > 0) {
      ++support;
      last = static_cast<int>(x);
    }
  if (support == 1) return renyi(ez.row(last), qz, s);
  return eta_sup(ez, qz, pi, s).value;
}

std::uint64_t combos_per_input(int nx, int nw, int rw) {
  long double c = 1;
  for (int x = 0; x < nx; ++x) c *= static_cast<long double>(simplex_count(nw, rw));
  return c > 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(c);
}

// Per input distribution: every auxiliary column k in {0..rw}^|X| (k_x = rw P(w|x))
// fixes P_W(w), P_{X|W=w} and so the per-letter entropies and tilted values.
struct ColumnCache {
  int nx, rw;
  std::vector<double> pw, hy, hz, psi;
  std::vector<int> stride;

  ColumnCache(const Eigen::VectorXd& px, const Eigen::MatrixXd& my, const Eigen::MatrixXd& ez,
              const Eigen::VectorXd* qz, double s, int rw_)
      : nx(static_cast<int>(px.size())), rw(rw_) {
    std::size_t total = 1;
    stride.resize(nx);
    for (int x = 0; x < nx; ++x) {
      stride[x] = static_cast<int>(total);
      total *= rw + 1;
    }
    pw.assign(total, 0);
    hy.assign(total, 0);
    hz.assign(total, 0);
    psi.assign(total, 0);
    Eigen::VectorXd pi(nx);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      double mass = 0;
      for (int x = 0; x < nx; ++x) {
        const int k = static_cast<int>(r % (rw + 1));
        r /= rw + 1;
        pi(x) = px(x) * k / rw;
        mass += pi(x);
      }
      pw[idx] = mass;
      if (mass <= 0) continue;
      pi /= mass;
      hy[idx] = entropy(push(pi, my));
      hz[idx] = entropy(push(pi, ez));
      if (qz && s > 0) psi[idx] = tilted_value(ez, *qz, pi, s);
    }
  }
};

// Visits every |W|-column split of the counts rw per input letter.
void for_each_split(int nx, int nw, int rw, const std::vector<int>& stride,
                    const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cols(nw, 0);
  std::vector<int> rem(nx, rw);
  std::function<void(int)> rec = [&](int w) {
    if (w == nw - 1) {
      int idx = 0;
      for (int x = 0; x < nx; ++x) idx += rem[x] * stride[x];
      cols[w] = idx;
      f(cols);
      return;
    }
    std::vector<int> k(nx, 0);
    while (true) {
      int idx = 0;
      for (int x = 0; x < nx; ++x) idx += k[x] * stride[x];
      cols[w] = idx;
      for (int x = 0; x < nx; ++x) rem[x] -= k[x];
      rec(w + 1);
      for (int x = 0; x < nx; ++x) rem[x] += k[x];
      int x = 0;
      while (x < nx) {
        if (k[x] < rem[x]) {
          ++k[x];
          break;
        }
        k[x] = 0;
        ++x;
      }
      if (x == nx) break;
    }
  };
  rec(0);
}

Achiever stochastic_achiever(const Eigen::VectorXd& px, const std::vector<int>& cols, const ColumnCache& c) {
  const int nw = static_cast<int>(cols.size());
  Achiever a;
  a.px = px;
  a.pw = Eigen::VectorXd::Zero(nw);
  a.px_given_w = Eigen::MatrixXd::Zero(nw, c.nx);
  for (int w = 0; w < nw; ++w) {
    a.pw(w) = c.pw[cols[w]];
    int r = cols[w];
    for (int x = 0; x < c.nx; ++x) {
      const int k = r % (c.rw + 1);
      r /= c.rw + 1;
      a.px_given_w(w, x) = a.pw(w) > 0 ? px(x) * k / c.rw / a.pw(w) : 1.0 / c.nx;
    }
  }
  return a;
}

}  // namespace

WiretapChannel::WiretapChannel(Channel main, Channel eaves) : main_(std::move(main)), eaves_(std::move(eaves)) {
  if (main_.inputs() != eaves_.inputs())
    throw Error(ErrorCode::AlphabetMismatch, "main and eavesdropper channels have different inputs");
}

WiretapChannel WiretapChannel::binary(double pm, double pe) {
  return WiretapChannel(Channel::bsc(pm), Channel::bsc(pe));
}

double r_tilde(const Pmf& px, const Channel& eaves, const Pmf& qz, double s) {
  check_s(s);
  if (px.alphabet() != eaves.inputs() || qz.alphabet() != eaves.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "r_tilde: alphabets differ");
  if (s == -1.0) return 0.0;
  if (s > 0 && !is_kl_order(s)) {
    require_support(eaves, qz, &px);
    return expected_renyi(px.probs(), eaves.matrix(), qz.probs(), s);
  }
  return cond_kl_to(px.probs(), eaves.matrix(), qz.probs());
}

double r_tilde_prime(const Pmf& pw, const Channel& px_given_w, const Channel& eaves, const Pmf& qz, double s) {
  check_s(s);
  if (pw.size() != px_given_w.n_inputs() || px_given_w.outputs() != eaves.inputs() ||
      qz.alphabet() != eaves.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "r_tilde_prime: alphabets differ");
  if (s == -1.0) return 0.0;
  const Eigen::MatrixXd& pxw = px_given_w.matrix();
  if (s <= 0 || is_kl_order(s)) return mutual_information(pw.probs(), Eigen::MatrixXd(pxw * eaves.matrix()));
  double acc = 0;
  for (int w = 0; w < pw.size(); ++w) {
    if (pw[w] <= 0) continue;
    acc += pw[w] * tilted_value(eaves.matrix(), qz.probs(), pxw.row(w).transpose(), s);
  }
  return acc;
}

RateRegion det_encoder_region(const WiretapChannel& wc, const Pmf& qz, double s, int grid_res) {
  check_s(s);
  if (qz.alphabet() != wc.eaves().outputs()) throw Error(ErrorCode::AlphabetMismatch, "qz alphabet differs");
  RateRegion r;
  r.s = s;
  r.qz = qz.probs();
  FeasibleSet fs = feasible_polytope(wc.eaves().matrix(), qz.probs(), grid_res);
  r.feasible = fs.feasible;
  for (const auto& p : fs.points) {
    const Pmf px(wc.main().inputs(), p);
    Achiever a;
    a.px = p;
    r.pieces.push_back(make_piece(mutual_information(p, wc.main().matrix()), r_tilde(px, wc.eaves(), qz, s), a));
  }
  return r;
}

int auxiliary_resolution(int nx, int nw, int want, std::uint64_t n_inputs_points) {
  int rw = std::max(1, want);
  while (rw > 1) {
    const std::uint64_t c = combos_per_input(nx, nw, rw);
    if (c != std::numeric_limits<std::uint64_t>::max() && c * std::max<std::uint64_t>(1, n_inputs_points) <= kComboBudget)
      break;
    --rw;
  }
  return rw;
}

RateRegion stochastic_encoder_region(const WiretapChannel& wc, const Pmf& qz, double s, int grid_res, int w_card) {
  check_s(s);
  if (qz.alphabet() != wc.eaves().outputs()) throw Error(ErrorCode::AlphabetMismatch, "qz alphabet differs");
  const int nx = wc.n_inputs();
  const int nw = w_card <= 0 ? nx + 1 : w_card;
  if (nw > nx + 1) throw Error(ErrorCode::InvalidArgument, "auxiliary alphabet larger than |X|+1");
  if (s > 0 && !is_kl_order(s)) require_support(wc.eaves(), qz);
  RateRegion r;
  r.s = s;
  r.qz = qz.probs();
  r.inner_approx = s > 0 && !is_kl_order(s);
  FeasibleSet fs = feasible_polytope(wc.eaves().matrix(), qz.probs(), grid_res);
  r.feasible = fs.feasible;
  if (!fs.feasible) return r;
  const int rw = auxiliary_resolution(nx, nw, grid_res, fs.points.size());
  r.w_resolution = rw;
  const bool renyi_branch = s > 0 && !is_kl_order(s);
  const bool zero_order = s == -1.0;

  // staircase of non-dominated (r0_min, sum_cap); sum_cap increases with r0_min
  struct Entry {
    double sum;
    std::size_t px;
    std::vector<int> cols;
  };
  std::map<double, Entry> front;
  auto offer = [&](double r0, double sum, std::size_t pi, const std::vector<int>& cols) {
    auto it = front.upper_bound(r0);
    if (it != front.begin() && std::prev(it)->second.sum >= sum) return;
    auto jt = front.lower_bound(r0);
    while (jt != front.end() && jt->second.sum <= sum) jt = front.erase(jt);
    front[r0] = Entry{sum, pi, cols};
  };

  std::vector<ColumnCache> caches;
  for (std::size_t i = 0; i < fs.points.size(); ++i) {
    const Eigen::VectorXd& px = fs.points[i];
    ColumnCache c(px, wc.main().matrix(), wc.eaves().matrix(), renyi_branch ? &r.qz : nullptr, s, rw);
    const double hy = entropy(push(px, wc.main().matrix()));
    const double hz = entropy(push(px, wc.eaves().matrix()));
    for_each_split(nx, nw, rw, c.stride, [&](const std::vector<int>& cols) {
      double cy = 0, cz = 0, ps = 0;
      for (int k : cols) {
        const double p = c.pw[k];
        if (p <= 0) continue;
        cy += p * c.hy[k];
        cz += p * c.hz[k];
        ps += p * c.psi[k];
      }
      const double sum = hy - cy;
      const double r0 = zero_order ? 0.0 : renyi_branch ? ps : hz - cz;
      offer(r0, sum, i, cols);
    });
    caches.push_back(std::move(c));
  }
  for (const auto& [r0, e] : front)
    r.pieces.push_back(make_piece(e.sum, r0, stochastic_achiever(fs.points[e.px], e.cols, caches[e.px])));
  return r;
}

double effective_secrecy_capacity(const WiretapChannel& wc, const Pmf& qz, double s, int grid_res, int w_card) {
  const RateRegion r = stochastic_encoder_region(wc, qz, s, grid_res, w_card);
  if (!r.feasible) throw Error(ErrorCode::InfeasibleTarget, "no input distribution reproduces qz");
  return r.max_r1();
}

double mi_secrecy_capacity(const WiretapChannel& wc, int grid_res, int w_card) {
  const int nx = wc.n_inputs();
  const int nw = w_card <= 0 ? nx + 1 : w_card;
  const int xres = resolution_for_budget(nx, grid_res, 2000);
  const auto pts = simplex_points(nx, xres);
  const int rw = auxiliary_resolution(nx, nw, grid_res, pts.size());
  double best = 0;
  for (const auto& px : pts) {
    ColumnCache c(px, wc.main().matrix(), wc.eaves().matrix(), nullptr, 0.0, rw);
    const double base = entropy(push(px, wc.main().matrix())) - entropy(push(px, wc.eaves().matrix()));
    for_each_split(nx, nw, rw, c.stride, [&](const std::vector<int>& cols) {
      double v = base;
      for (int k : cols) v -= c.pw[k] * (c.hy[k] - c.hz[k]);
      if (v > best) best = v;
    });
  }
  return best;
}

}  // namespace renyi
