#include "renyi/prob.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace renyi {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::AlphabetMismatch: return "alphabet mismatch";
    case ErrorCode::SupportViolation: return "support violation";
    case ErrorCode::SizeCap: return "size cap exceeded";
    case ErrorCode::InfeasibleTarget: return "infeasible target";
    case ErrorCode::NotAType: return "not a type";
    case ErrorCode::TypicalSetEmpty: return "typical set empty";
    case ErrorCode::DegenerateInput: return "degenerate input";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ModelValidation: return "model validation";
  }
  return "?";
}

Labels index_labels(int n) {
  Labels l;
  l.reserve(n);
  for (int i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return l;
}

namespace {

void check_labels(const Labels& l, Eigen::Index n, const char* what) {
  if (static_cast<Eigen::Index>(l.size()) != n)
    throw Error(ErrorCode::ModelValidation,
                std::string(what) + ": label count does not match size");
  std::set<std::string> seen(l.begin(), l.end());
  if (seen.size() != l.size())
    throw Error(ErrorCode::ModelValidation, std::string(what) + ": duplicate labels");
}

void check_stochastic(const Eigen::Ref<const Eigen::VectorXd>& p, const char* what) {
  if (p.size() == 0)
    throw Error(ErrorCode::ModelValidation, std::string(what) + ": empty");
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!(p(i) >= 0) || !std::isfinite(p(i))) {
      std::ostringstream os;
      os << what << ": entry " << i << " = " << p(i) << " is not a probability";
      throw Error(ErrorCode::ModelValidation, os.str());
    }
  }
  const double s = p.sum();
  if (std::abs(s - 1.0) > kSumTol) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": sums to " << s;
    throw Error(ErrorCode::ModelValidation, os.str());
  }
}

void same_alphabet(const Labels& a, const Labels& b) {
  if (a != b) throw Error(ErrorCode::AlphabetMismatch, "pmfs over different alphabets");
}

}  // namespace

Pmf::Pmf(Labels alphabet, Eigen::VectorXd probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  check_labels(alphabet_, probs_.size(), "pmf");
  check_stochastic(probs_, "pmf");
}

Pmf::Pmf(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  alphabet_ = index_labels(static_cast<int>(probs_.size()));
  check_stochastic(probs_, "pmf");
}

Pmf Pmf::uniform(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "uniform: n < 1");
  return Pmf(Eigen::VectorXd::Constant(n, 1.0 / n));
}

Pmf Pmf::bernoulli(double p) {
  if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidArgument, "bernoulli: p outside [0,1]");
  Eigen::VectorXd v(2);
  v << 1 - p, p;
  return Pmf(v);
}

Pmf Pmf::point_mass(int n, int k) {
  if (k < 0 || k >= n) throw Error(ErrorCode::InvalidArgument, "point_mass: index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v(k) = 1;
  return Pmf(v);
}

Channel::Channel(Labels inputs, Labels outputs, Eigen::MatrixXd rows)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), rows_(std::move(rows)) {
  check_labels(inputs_, rows_.rows(), "channel inputs");
  check_labels(outputs_, rows_.cols(), "channel outputs");
  for (Eigen::Index x = 0; x < rows_.rows(); ++x) {
    Eigen::VectorXd r = rows_.row(x).transpose();
    check_stochastic(r, "channel row");
  }
}

Channel::Channel(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  inputs_ = index_labels(static_cast<int>(rows_.rows()));
  outputs_ = index_labels(static_cast<int>(rows_.cols()));
  for (Eigen::Index x = 0; x < rows_.rows(); ++x) {
    Eigen::VectorXd r = rows_.row(x).transpose();
    check_stochastic(r, "channel row");
  }
}

Channel Channel::bsc(double p) {
  if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidArgument, "bsc: p outside [0,1]");
  Eigen::MatrixXd m(2, 2);
  m << 1 - p, p, p, 1 - p;
  return Channel(m);
}

Channel Channel::identity(int n) {
  return Channel(Eigen::MatrixXd::Identity(n, n));
}

Channel Channel::constant(const Pmf& row, int n_inputs) {
  Eigen::MatrixXd m = row.probs().transpose().replicate(n_inputs, 1);
  return Channel(index_labels(n_inputs), row.alphabet(), m);
}

Pmf Channel::row(int x) const {
  return Pmf(outputs_, rows_.row(x).transpose());
}

Joint::Joint(Labels xs, Labels ys, Eigen::MatrixXd p)
    : xs_(std::move(xs)), ys_(std::move(ys)), p_(std::move(p)) {
  check_labels(xs_, p_.rows(), "joint x");
  check_labels(ys_, p_.cols(), "joint y");
  Eigen::VectorXd flat = Eigen::Map<const Eigen::VectorXd>(p_.data(), p_.size());
  check_stochastic(flat, "joint");
}

Joint Joint::from(const Pmf& px, const Channel& w) {
  if (px.size() != w.n_inputs())
    throw Error(ErrorCode::AlphabetMismatch, "joint: input size mismatch");
  return Joint(px.alphabet(), w.outputs(), px.probs().asDiagonal() * w.matrix());
}

Pmf Joint::marginal_x() const { return Pmf(xs_, p_.rowwise().sum()); }
Pmf Joint::marginal_y() const { return Pmf(ys_, p_.colwise().sum().transpose()); }

Pmf Joint::flat() const {
  Labels l;
  Eigen::VectorXd v(p_.size());
  Eigen::Index k = 0;
  for (Eigen::Index x = 0; x < p_.rows(); ++x)
    for (Eigen::Index y = 0; y < p_.cols(); ++y) {
      l.push_back(xs_[x] + "," + ys_[y]);
      v(k++) = p_(x, y);
    }
  return Pmf(l, v);
}

RenyiOrder::RenyiOrder(double s_) : s(s_) {
  if (!(s >= -1.0 && s <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "renyi order: s outside [-1,1]");
}

double renyi_div(const Pmf& p, const Pmf& q, RenyiOrder order) {
  same_alphabet(p.alphabet(), q.alphabet());
  const double d = renyi(p.probs(), q.probs(), order.s);
  // the KL branch keeps the +inf sentinel
  if (order.s > 0 && !order.is_kl() && std::isinf(d))
    throw Error(ErrorCode::SupportViolation, "renyi_div: p not dominated by q");
  return d;
}

double kl_div(const Pmf& p, const Pmf& q) {
  same_alphabet(p.alphabet(), q.alphabet());
  return kl(p.probs(), q.probs());
}

double tv_distance(const Pmf& p, const Pmf& q) {
  same_alphabet(p.alphabet(), q.alphabet());
  return tv(p.probs(), q.probs());
}

double shannon_entropy(const Pmf& p) { return entropy(p.probs()); }

void require_support(const Channel& w, const Pmf& q, const Pmf* px) {
  const auto& m = w.matrix();
  for (Eigen::Index x = 0; x < m.rows(); ++x) {
    if (px && (*px)[static_cast<int>(x)] <= 0) continue;
    for (Eigen::Index y = 0; y < m.cols(); ++y)
      if (m(x, y) > 0 && q.probs()(y) <= 0)
        throw Error(ErrorCode::SupportViolation,
                    "channel row " + w.inputs()[x] + " has mass at " + w.outputs()[y] +
                        " where the target vanishes");
  }
}

namespace {

void check_triple(const Pmf& px, const Channel& w, const Pmf& q) {
  if (px.alphabet() != w.inputs())
    throw Error(ErrorCode::AlphabetMismatch, "input pmf and channel inputs differ");
  if (q.alphabet() != w.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
}

}  // namespace

double cond_renyi_div(const Pmf& px, const Channel& w, const Pmf& q, RenyiOrder order) {
  check_triple(px, w, q);
  if (order.s > 0 && !order.is_kl()) require_support(w, q, &px);
  return cond_renyi(px.probs(), w.matrix(), q.probs(), order.s);
}

double expected_renyi_div(const Pmf& px, const Channel& w, const Pmf& q, RenyiOrder order) {
  check_triple(px, w, q);
  if (order.s > 0 && !order.is_kl()) require_support(w, q, &px);
  return expected_renyi(px.probs(), w.matrix(), q.probs(), order.s);
}

double mutual_info(const Pmf& px, const Channel& w) {
  if (px.alphabet() != w.inputs())
    throw Error(ErrorCode::AlphabetMismatch, "input pmf and channel inputs differ");
  return mutual_information(px.probs(), w.matrix());
}

Pmf push_forward(const Pmf& px, const Channel& w) {
  if (px.alphabet() != w.inputs())
    throw Error(ErrorCode::AlphabetMismatch, "input pmf and channel inputs differ");
  Eigen::VectorXd py = push(px.probs(), w.matrix());
  // absorb rounding so the result validates
  py /= py.sum();
  return Pmf(w.outputs(), py);
}

namespace {

std::size_t checked_power(std::size_t base, int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "product: n < 1");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= base;
    if (r > cap) {
      std::ostringstream os;
      os << "product alphabet " << base << "^" << n << " exceeds cap " << cap;
      throw Error(ErrorCode::SizeCap, os.str());
    }
  }
  return r;
}

Labels tuple_labels(const Labels& a, int n) {
  Labels out{""};
  for (int i = 0; i < n; ++i) {
    Labels next;
    next.reserve(out.size() * a.size());
    for (const auto& pre : out)
      for (const auto& l : a) next.push_back(pre + l);
    out.swap(next);
  }
  // concatenated labels can collide for multi-character symbols
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) {
    out = Labels{""};
    for (int i = 0; i < n; ++i) {
      Labels next;
      for (const auto& pre : out)
        for (const auto& l : a) next.push_back(pre.empty() ? l : pre + "." + l);
      out.swap(next);
    }
  }
  return out;
}

Eigen::VectorXd kron_vec(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd r(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r.segment(i * b.size(), b.size()) = a(i) * b;
  return r;
}

}  // namespace

Pmf product_pmf(const Pmf& p, int n, std::size_t cap) {
  checked_power(p.size(), n, cap);
  Eigen::VectorXd v = p.probs();
  for (int i = 1; i < n; ++i) v = kron_vec(v, p.probs());
  return Pmf(tuple_labels(p.alphabet(), n), v / v.sum());
}

Channel product_channel(const Channel& w, int n, std::size_t cap) {
  checked_power(w.n_inputs(), n, cap);
  checked_power(w.n_outputs(), n, cap);
  Eigen::MatrixXd m = w.matrix();
  for (int i = 1; i < n; ++i) {
    Eigen::MatrixXd k(m.rows() * w.n_inputs(), m.cols() * w.n_outputs());
    for (Eigen::Index a = 0; a < m.rows(); ++a)
      for (Eigen::Index b = 0; b < m.cols(); ++b)
        k.block(a * w.n_inputs(), b * w.n_outputs(), w.n_inputs(), w.n_outputs()) =
            m(a, b) * w.matrix();
    m.swap(k);
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) m.row(r) /= m.row(r).sum();
  return Channel(tuple_labels(w.inputs(), n), tuple_labels(w.outputs(), n), m);
}

}  // namespace renyi
