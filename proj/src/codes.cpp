#include "renyi/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "renyi/rng.hpp"
#include "renyi/simplex.hpp"

namespace renyi {

namespace {

constexpr std::uint64_t kExhaustiveCap = 65536;
constexpr std::size_t kOutputCap = 4096;

int draw(const Eigen::VectorXd& p, double u) {
  double c = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    c += p(i);
    if (u < c) return static_cast<int>(i);
  }
  // u landed in the rounding slack; take the last positive atom
  for (Eigen::Index i = p.size() - 1; i >= 0; --i)
    if (p(i) > 0) return static_cast<int>(i);
  return 0;
}

void check_nm(int n, int m) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "codebook: n < 1");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "codebook: M < 1");
}

std::size_t power_capped(std::size_t b, int e, std::size_t cap, const char* what) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > cap) {
      std::ostringstream os;
      os << what << ": " << b << "^" << e << " exceeds cap " << cap;
      throw Error(ErrorCode::SizeCap, os.str());
    }
  }
  return r;
}

// pairwise summation in fixed index order
double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

// rows of W^n for every input word, index = base-|X| digits, first symbol most significant
Eigen::MatrixXd word_rows(const Eigen::MatrixXd& w, int n) {
  Eigen::MatrixXd m = w;
  for (int i = 1; i < n; ++i) {
    Eigen::MatrixXd k(m.rows() * w.rows(), m.cols() * w.cols());
    for (Eigen::Index a = 0; a < m.rows(); ++a)
      for (Eigen::Index b = 0; b < m.cols(); ++b)
        k.block(a * w.rows(), b * w.cols(), w.rows(), w.cols()) = m(a, b) * w;
    m.swap(k);
  }
  return m;
}

int word_index(const std::vector<int>& word, int nx) {
  int idx = 0;
  for (int s : word) idx = idx * nx + s;
  return idx;
}

double per_codebook(const Eigen::VectorXd& py, const Eigen::VectorXd& qn, double s) {
  if (is_kl_order(s)) return kl(py, qn);
  return renyi_moment(py, qn, s);
}

double finish(double mean, double s) {
  if (is_kl_order(s)) return mean;
  return std::log(mean) / s;
}

}  // namespace

const char* to_string(EnsembleMethod m) {
  switch (m) {
    case EnsembleMethod::ExactEnum: return "exact-enum";
    case EnsembleMethod::ExactMoment: return "exact-moment";
    case EnsembleMethod::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

EnsembleMethod parse_method(const std::string& name) {
  if (name == "exact-enum") return EnsembleMethod::ExactEnum;
  if (name == "exact-moment") return EnsembleMethod::ExactMoment;
  if (name == "monte-carlo") return EnsembleMethod::MonteCarlo;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
}

Codebook sample_iid_codebook(const Pmf& px, int n, int m_count, std::uint64_t seed, std::uint64_t trial) {
  check_nm(n, m_count);
  CounterRng rng(seed);
  Codebook cb;
  cb.n = n;
  cb.codewords.assign(m_count, std::vector<int>(n));
  for (int m = 0; m < m_count; ++m)
    for (int i = 0; i < n; ++i) cb.codewords[m][i] = draw(px.probs(), rng.uniform(trial, m, i));
  return cb;
}

Codebook sample_constant_composition_codebook(const Pmf& type_pmf, int n, int m_count, std::uint64_t seed,
                                              std::uint64_t trial) {
  check_nm(n, m_count);
  std::vector<int> base;
  for (int x = 0; x < type_pmf.size(); ++x) {
    const double c = type_pmf[x] * n;
    const long k = std::lround(c);
    if (std::abs(c - k) > 1e-9) {
      std::ostringstream os;
      os << "n*P(" << type_pmf.alphabet()[x] << ") = " << c << " is not an integer";
      throw Error(ErrorCode::NotAType, os.str());
    }
    base.insert(base.end(), k, x);
  }
  CounterRng rng(seed);
  Codebook cb;
  cb.n = n;
  for (int m = 0; m < m_count; ++m) {
    std::vector<int> w = base;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform(trial, m, i) * (i + 1));
      std::swap(w[i], w[std::min(j, i)]);
    }
    cb.codewords.push_back(std::move(w));
  }
  return cb;
}

bool is_typical(const std::vector<int>& seq, const Pmf& q, double eps) {
  std::vector<int> cnt(q.size(), 0);
  for (int s : seq) ++cnt[s];
  const double n = static_cast<double>(seq.size());
  for (int x = 0; x < q.size(); ++x)
    if (std::abs(cnt[x] / n - q[x]) > eps * q[x] + 1e-12) return false;
  return true;
}

namespace {

bool typical_type(const Eigen::VectorXi& k, int n, const Pmf& q, double eps) {
  for (int x = 0; x < q.size(); ++x)
    if (std::abs(double(k(x)) / n - q[x]) > eps * q[x] + 1e-12) return false;
  return true;
}

}  // namespace

double typical_set_mass(const Pmf& q, int n, double eps) {
  SimplexGrid g(q.size(), n);
  double mass = 0;
  while (g.next()) {
    const Eigen::VectorXi& k = g.counts();
    if (!typical_type(k, n, q, eps)) continue;
    double lp = std::lgamma(n + 1.0);
    bool zero = false;
    for (int x = 0; x < q.size(); ++x) {
      lp -= std::lgamma(k(x) + 1.0);
      if (k(x) > 0) {
        if (q[x] <= 0) zero = true;
        else lp += k(x) * std::log(q[x]);
      }
    }
    if (!zero) mass += std::exp(lp);
  }
  return mass;
}

Codebook sample_typical_set_codebook(const Pmf& q, int n, int m_count, double eps, std::uint64_t seed,
                                     std::uint64_t trial) {
  check_nm(n, m_count);
  if (!(eps >= 0)) throw Error(ErrorCode::InvalidArgument, "typical set: eps < 0");
  if (!(typical_set_mass(q, n, eps) > 0))
    throw Error(ErrorCode::TypicalSetEmpty, "no length-n sequence is eps-typical");
  CounterRng rng(seed);
  Codebook cb;
  cb.n = n;
  long attempts = 0;
  const long cap = 10000000;
  for (int m = 0; m < m_count; ++m) {
    std::vector<int> w(n);
    for (long a = 0;; ++a) {
      if (a >= cap) throw Error(ErrorCode::TypicalSetEmpty, "typical set: rejection sampler gave up");
      ++attempts;
      for (int i = 0; i < n; ++i)
        w[i] = draw(q.probs(), rng.uniform(trial, m, static_cast<std::uint64_t>(a) * n + i));
      if (is_typical(w, q, eps)) break;
    }
    cb.codewords.push_back(w);
  }
  cb.acceptance = double(m_count) / double(attempts);
  return cb;
}

Pmf induced_output_pmf(const Codebook& cb, const Channel& w) {
  if (cb.codewords.empty()) throw Error(ErrorCode::InvalidArgument, "empty codebook");
  power_capped(w.n_outputs(), cb.n, kOutputCap, "induced output");
  const Eigen::MatrixXd& W = w.matrix();
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(std::pow(W.cols(), cb.n) + 0.5));
  for (const auto& word : cb.codewords) {
    if (static_cast<int>(word.size()) != cb.n)
      throw Error(ErrorCode::InvalidArgument, "codeword length differs from n");
    Eigen::VectorXd v = Eigen::VectorXd::Ones(1);
    for (int sym : word) {
      if (sym < 0 || sym >= W.rows()) throw Error(ErrorCode::AlphabetMismatch, "codeword symbol outside input alphabet");
      Eigen::VectorXd nv(v.size() * W.cols());
      for (Eigen::Index a = 0; a < v.size(); ++a) nv.segment(a * W.cols(), W.cols()) = v(a) * W.row(sym).transpose();
      v.swap(nv);
    }
    acc += v;
  }
  acc /= static_cast<double>(cb.codewords.size());
  acc /= acc.sum();
  Labels outs = product_channel(w, cb.n).outputs();
  return Pmf(outs, acc);
}

double code_renyi_div(const Codebook& cb, const Channel& w, const Pmf& q, double s) {
  const Pmf py = induced_output_pmf(cb, w);
  const Pmf qn = product_pmf(q, cb.n);
  return renyi_div(py, Pmf(py.alphabet(), qn.probs()), RenyiOrder(s));
}

void for_each_codebook(const Pmf& px, int n, int m_count, const std::function<void(const Codebook&, double)>& f) {
  check_nm(n, m_count);
  const int nx = px.size();
  const std::size_t total = power_capped(nx, n * m_count, kExhaustiveCap, "exhaustive codebooks");
  Codebook cb;
  cb.n = n;
  cb.codewords.assign(m_count, std::vector<int>(n));
  std::vector<int> digits(n * m_count, 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t r = c;
    double wgt = 1;
    for (int d = n * m_count - 1; d >= 0; --d) {
      digits[d] = static_cast<int>(r % nx);
      r /= nx;
    }
    for (int d = 0; d < n * m_count; ++d) wgt *= px[digits[d]];
    if (wgt <= 0) continue;
    for (int m = 0; m < m_count; ++m)
      for (int i = 0; i < n; ++i) cb.codewords[m][i] = digits[m * n + i];
    f(cb, wgt);
  }
}

double ensemble_renyi_div_exhaustive(const Pmf& px, const Channel& w, const Pmf& q, int n, int m_count,
                                     double s) {
  if (s > 0) require_support(w, q, &px);
  power_capped(w.n_outputs(), n, kOutputCap, "output alphabet");
  const Eigen::MatrixXd rows = word_rows(w.matrix(), n);
  const Eigen::VectorXd qn = product_pmf(q, n).probs();
  const int nx = w.n_inputs();
  double acc = 0;
  for_each_codebook(px, n, m_count, [&](const Codebook& cb, double wgt) {
    Eigen::VectorXd py = Eigen::VectorXd::Zero(rows.cols());
    for (const auto& word : cb.codewords) py += rows.row(word_index(word, nx)).transpose();
    py /= m_count;
    acc += wgt * per_codebook(py, qn, s);
  });
  return finish(acc, s);
}

double ensemble_renyi2_exact(const Pmf& px, const Channel& w, const Pmf& q, int n, int m_count) {
  check_nm(n, m_count);
  require_support(w, q, &px);
  const Eigen::VectorXd& p = px.probs();
  const Eigen::MatrixXd& W = w.matrix();
  const Eigen::VectorXd& Q = q.probs();
  double a = 0;
  for (Eigen::Index x = 0; x < p.size(); ++x)
    if (p(x) > 0) a += p(x) * renyi_moment(W.row(x), Q, 1.0);
  const double b = renyi_moment(push(p, W), Q, 1.0);
  const double mm = static_cast<double>(m_count);
  // log of the mixture, kept stable for large n
  const double la = n * std::log(a), lb = n * std::log(b);
  if (m_count == 1) return la;
  const double t1 = la - std::log(mm), t2 = lb + std::log1p(-1.0 / mm);
  const double hi = std::max(t1, t2);
  return hi + std::log(std::exp(t1 - hi) + std::exp(t2 - hi));
}

EnsembleEstimate ensemble_renyi_div(const Pmf& px, const Channel& w, const Pmf& q, int n, int m_count, double s,
                                    long trials, std::uint64_t seed) {
  check_nm(n, m_count);
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "monte carlo: trials < 1");
  if (s > 0) require_support(w, q, &px);
  power_capped(w.n_outputs(), n, kOutputCap, "output alphabet");
  power_capped(w.n_inputs(), n, kOutputCap, "input alphabet");
  const Eigen::MatrixXd rows = word_rows(w.matrix(), n);
  const Eigen::VectorXd qn = product_pmf(q, n).probs();
  const int nx = w.n_inputs();
  std::vector<double> g(trials);
  Eigen::VectorXd py(rows.cols());
  for (long t = 0; t < trials; ++t) {
    const Codebook cb = sample_iid_codebook(px, n, m_count, seed, static_cast<std::uint64_t>(t));
    py.setZero();
    for (const auto& word : cb.codewords) py += rows.row(word_index(word, nx)).transpose();
    py /= m_count;
    g[t] = per_codebook(py, qn, s);
  }
  const double mean = pairwise_sum(g.data(), g.size()) / trials;
  std::vector<double> dev(trials);
  for (long t = 0; t < trials; ++t) dev[t] = (g[t] - mean) * (g[t] - mean);
  const double var = trials > 1 ? pairwise_sum(dev.data(), dev.size()) / (trials - 1) : 0.0;
  const double sd = std::sqrt(var);
  EnsembleEstimate e;
  e.method = EnsembleMethod::MonteCarlo;
  e.trials = trials;
  e.value = finish(mean, s);
  e.std_error = is_kl_order(s) ? sd / std::sqrt(double(trials))
                               : sd / (std::sqrt(double(trials)) * mean * std::abs(s));
  return e;
}

EnsembleEstimate ensemble_estimate(EnsembleMethod method, const Pmf& px, const Channel& w, const Pmf& q, int n,
                                   int m_count, double s, long trials, std::uint64_t seed) {
  EnsembleEstimate e;
  e.method = method;
  switch (method) {
    case EnsembleMethod::ExactEnum:
      e.value = ensemble_renyi_div_exhaustive(px, w, q, n, m_count, s);
      return e;
    case EnsembleMethod::ExactMoment:
      if (s != 1.0) throw Error(ErrorCode::InvalidArgument, "exact-moment needs s = 1");
      e.value = ensemble_renyi2_exact(px, w, q, n, m_count);
      return e;
    case EnsembleMethod::MonteCarlo:
      return ensemble_renyi_div(px, w, q, n, m_count, s, trials, seed);
  }
  return e;
}

ExponentFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  ExponentFit f;
  const Eigen::Index k = static_cast<Eigen::Index>(x.size());
  if (k == 0) {
    f.slope = 0;
    f.intercept = std::numeric_limits<double>::quiet_NaN();
    return f;
  }
  if (k == 1) {
    f.slope = 0;
    f.intercept = y[0];
    f.residuals = {0.0};
    return f;
  }
  Eigen::MatrixXd a(k, 2);
  Eigen::VectorXd b(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    a(i, 0) = 1;
    a(i, 1) = x[i];
    b(i) = y[i];
  }
  Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
  f.intercept = c(0);
  f.slope = c(1);
  Eigen::VectorXd r = b - a * c;
  f.residuals.assign(r.data(), r.data() + k);
  return f;
}

ExponentFit exponent_fit(const Pmf& px, const Channel& w, const Pmf& q, double m_rate, double s,
                         const std::vector<int>& n_list, long trials, std::uint64_t seed) {
  std::vector<double> xs, ys;
  ExponentFit out;
  for (int n : n_list) {
    const long m = std::max(1L, std::lround(std::exp(n * m_rate)));
    EnsembleMethod method;
    double d;
    long total = 1;
    bool enumerable = true;
    for (long i = 0; i < n * m && enumerable; ++i) {
      total *= px.size();
      if (total > static_cast<long>(kExhaustiveCap)) enumerable = false;
    }
    if (s == 1.0) {
      method = EnsembleMethod::ExactMoment;
      d = ensemble_renyi2_exact(px, w, q, n, static_cast<int>(m));
    } else if (enumerable) {
      method = EnsembleMethod::ExactEnum;
      d = ensemble_renyi_div_exhaustive(px, w, q, n, static_cast<int>(m), s);
    } else {
      method = EnsembleMethod::MonteCarlo;
      d = ensemble_renyi_div(px, w, q, n, static_cast<int>(m), s, trials, seed).value;
    }
    out.n.push_back(n);
    out.m.push_back(m);
    out.divergence.push_back(d);
    out.method.push_back(method);
    // zero divergence carries no exponent information
    if (d > 0 && std::isfinite(d)) {
      xs.push_back(1.0 / n);
      ys.push_back(-std::log(d) / n);
    }
  }
  ExponentFit line = fit_line(xs, ys);
  out.slope = line.slope;
  out.intercept = line.intercept;
  out.residuals = line.residuals;
  return out;
}

}  // namespace renyi
