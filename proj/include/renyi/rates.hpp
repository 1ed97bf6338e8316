#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "renyi/prob.hpp"

namespace renyi {

struct OneShotBounds {
  double direct_plus = 0;
  double converse_plus = 0;
  double direct_minus = 0;
  double converse_minus = 0;
};

double gamma_one_shot(const Pmf& px, const Channel& w, const Pmf& q,
                      double rate, double s);
double one_shot_direct_plus(const Pmf& px, const Channel& w, const Pmf& q,
                            double rate, double s);
double one_shot_converse_plus(const Pmf& px, const Channel& w, const Pmf& q,
                              double rate, double s);
double one_shot_direct_minus(const Pmf& px, const Channel& w, const Pmf& q,
                             double rate, double s);
double one_shot_converse_minus(const Pmf& px, const Channel& w, const Pmf& q,
                               double rate, double s);
OneShotBounds one_shot_bounds(const Pmf& px, const Channel& w, const Pmf& q,
                              double rate, double s);

double tau(const Pmf& px, const Channel& w, const Pmf& q, double rate,
           double s, double t);

struct TauMax {
  double value;
  double t;
};
// max over t in [0,s] of tau, by ternary search
TauMax tau_max(const Eigen::VectorXd& px, const Eigen::MatrixXd& w,
               const Eigen::VectorXd& q, double rate, double s);

struct AsymptoticRate {
  double value = 0;
  Pmf achiever_px = Pmf::uniform(1);
  std::optional<Channel> achiever_py_given_x;
  std::vector<std::string> notes;
};

AsymptoticRate gamma_minus_single_letter(const Channel& w, const Pmf& q,
                                         double rate, double s, int grid_res);

// s > 0 gives the 1+s form, s < 0 the 1-|s| form; per-letter value
double gamma_multiletter(const Channel& w, const Pmf& q, double rate, double s,
                         int n, int grid_res);

double eta(const Channel& w, const Pmf& q, const Pmf& ptx,
           const Channel& pty_given_x, double s);

struct EtaSup {
  double value;
  Eigen::MatrixXd channel;
  int iterations;
};
// max over V of -(1+s)/s D(V||W|pi) + D(V o pi || q), solved through its
// concave dual over output pmfs theta
EtaSup eta_sup(const Eigen::MatrixXd& w, const Eigen::VectorXd& q,
               const Eigen::VectorXd& pi, double s);

AsymptoticRate asymptotic_resolvability_plus(const Channel& w, const Pmf& q,
                                             double rate, double s,
                                             int grid_res);

// Caches the rate-independent terms so sweeps over R stay cheap.
class ResolvabilityProfile {
 public:
  ResolvabilityProfile(const Channel& w, const Pmf& q, double s, int grid_res);
  AsymptoticRate at(double rate) const;
  double s() const { return s_; }

 private:
  Eigen::MatrixXd w_;
  Eigen::VectorXd q_;
  Labels in_, out_;
  double s_;
  int res_;
  std::vector<Eigen::VectorXd> pts_;
  std::vector<double> ed_, psi_;
};

// Candidate table for the 1-s bounds; columns independent of (R, s).
class GammaMinusTable {
 public:
  GammaMinusTable(const Channel& w, const Pmf& q, int grid_res);
  AsymptoticRate lb(double rate, double s) const;
  AsymptoticRate ub(double rate, double s) const;
  std::size_t size() const { return d1_.size(); }
  int resolution() const { return res_; }

 private:
  AsymptoticRate best(double rate, double s, bool upper) const;
  Eigen::MatrixXd channel_at(std::size_t entry) const;

  Channel w_;
  Eigen::VectorXd q_;
  int res_;
  std::vector<Eigen::VectorXd> px_;
  std::vector<std::vector<Eigen::VectorXd>> rows_;  // candidates per input letter
  std::vector<std::uint32_t> px_of_;
  std::vector<std::uint64_t> v_of_;
  std::vector<double> d1_, d2_, dout_, dmin_;
};

AsymptoticRate gamma_lb_minus(const Channel& w, const Pmf& q, double rate,
                              double s, int grid_res);
AsymptoticRate gamma_ub_minus(const Channel& w, const Pmf& q, double rate,
                              double s, int grid_res);

// min over P_hat with P_hat o px = target of D(P_hat||W|px); IPF on the joint
double projected_cond_kl(const Eigen::MatrixXd& w, const Eigen::VectorXd& px,
                         const Eigen::VectorXd& target, bool* converged = nullptr);

struct MinRate {
  double value;
  Pmf achiever;
};

MinRate min_rate_detail(const Channel& w, const Pmf& q, double s, int grid_res);
double min_rate(const Channel& w, const Pmf& q, double s, int grid_res);

}  // namespace renyi
