#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "renyi/error.hpp"
#include "renyi/kernels.hpp"

namespace renyi {

using Labels = std::vector<std::string>;

constexpr double kSumTol = 1e-12;
constexpr std::size_t kDefaultProductCap = 4096;

Labels index_labels(int n);

class Pmf {
 public:
  Pmf(Labels alphabet, Eigen::VectorXd probs);
  explicit Pmf(Eigen::VectorXd probs);

  static Pmf uniform(int n);
  static Pmf bernoulli(double p);  // P(1) = p over {0,1}
  static Pmf point_mass(int n, int k);

  const Labels& alphabet() const { return alphabet_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_(i); }
  double min_prob() const { return probs_.minCoeff(); }

 private:
  Labels alphabet_;
  Eigen::VectorXd probs_;
};

class Channel {
 public:
  Channel(Labels inputs, Labels outputs, Eigen::MatrixXd rows);
  explicit Channel(Eigen::MatrixXd rows);

  static Channel bsc(double p);
  static Channel identity(int n);
  static Channel constant(const Pmf& row, int n_inputs);

  const Labels& inputs() const { return inputs_; }
  const Labels& outputs() const { return outputs_; }
  const Eigen::MatrixXd& matrix() const { return rows_; }
  int n_inputs() const { return static_cast<int>(rows_.rows()); }
  int n_outputs() const { return static_cast<int>(rows_.cols()); }
  Pmf row(int x) const;

 private:
  Labels inputs_, outputs_;
  Eigen::MatrixXd rows_;
};

class Joint {
 public:
  Joint(Labels xs, Labels ys, Eigen::MatrixXd p);
  static Joint from(const Pmf& px, const Channel& w);

  const Eigen::MatrixXd& matrix() const { return p_; }
  Pmf marginal_x() const;
  Pmf marginal_y() const;
  // flattened pmf over x-major pairs
  Pmf flat() const;

 private:
  Labels xs_, ys_;
  Eigen::MatrixXd p_;
};

struct RenyiOrder {
  double s;
  RenyiOrder(double s_);  // NOLINT: implicit on purpose
  double alpha() const { return 1.0 + s; }
  bool is_kl() const { return is_kl_order(s); }
  bool is_zero_order() const { return s == -1.0; }
};

double renyi_div(const Pmf& p, const Pmf& q, RenyiOrder order);
double kl_div(const Pmf& p, const Pmf& q);
double tv_distance(const Pmf& p, const Pmf& q);
double shannon_entropy(const Pmf& p);

double cond_renyi_div(const Pmf& px, const Channel& w, const Pmf& q,
                      RenyiOrder order);
double expected_renyi_div(const Pmf& px, const Channel& w, const Pmf& q,
                          RenyiOrder order);
double mutual_info(const Pmf& px, const Channel& w);
Pmf push_forward(const Pmf& px, const Channel& w);

Pmf product_pmf(const Pmf& p, int n, std::size_t cap = kDefaultProductCap);
Channel product_channel(const Channel& w, int n,
                        std::size_t cap = kDefaultProductCap);

// throws SupportViolation if some W_x puts mass outside supp(q)
void require_support(const Channel& w, const Pmf& q, const Pmf* px = nullptr);

}  // namespace renyi
