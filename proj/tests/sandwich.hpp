#pragma once

// One-shot sandwich checks on the n-letter super-alphabet. The rate of a
// codebook with M words is log M.

#include <renyi/codes.hpp>
#include <renyi/rates.hpp>

#include <algorithm>
#include <cmath>

namespace testing_support {

// empirical distribution of a codebook over X^n, first symbol most significant
inline renyi::Pmf codebook_input_pmf(const renyi::Codebook& cb, int nx) {
  int size = 1;
  for (int i = 0; i < cb.n; ++i) size *= nx;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(size);
  for (const auto& c : cb.codewords) {
    int idx = 0;
    for (int v : c) idx = idx * nx + v;
    p(idx) += 1.0 / cb.size();
  }
  p /= p.sum();
  return renyi::Pmf(renyi::product_pmf(renyi::Pmf::uniform(nx), cb.n).alphabet(), p);
}

struct Sandwich {
  double lower, value, upper;
  bool holds(double tol = 1e-12) const {
    return lower <= value * (1 + tol) + tol && value <= upper * (1 + tol) + tol;
  }
};

// converse_plus <= e^{sD} <= direct_plus at the ensemble px
inline Sandwich plus_sandwich(const renyi::Pmf& px, const renyi::Channel& w, const renyi::Pmf& q, int n, int m,
                              double s) {
  const renyi::Pmf pn = renyi::product_pmf(px, n), qn = renyi::product_pmf(q, n);
  const renyi::Channel wn = renyi::product_channel(w, n);
  const double r = std::log(double(m));
  const double d = renyi::ensemble_renyi_div_exhaustive(px, w, q, n, m, s);
  return {renyi::one_shot_converse_plus(pn, wn, qn, r, s), std::exp(s * d),
          renyi::one_shot_direct_plus(pn, wn, qn, r, s)};
}

// direct_minus(px) <= e^{-sD_{1-s}} <= max over realizations of converse_minus(P_X^(u))
inline Sandwich minus_sandwich(const renyi::Pmf& px, const renyi::Channel& w, const renyi::Pmf& q, int n, int m,
                               double s, double* same_px_converse = nullptr) {
  const renyi::Pmf pn = renyi::product_pmf(px, n), qn = renyi::product_pmf(q, n);
  const renyi::Channel wn = renyi::product_channel(w, n);
  const double r = std::log(double(m));
  const double d = renyi::ensemble_renyi_div_exhaustive(px, w, q, n, m, -s);
  double hi = 0;
  renyi::for_each_codebook(px, n, m, [&](const renyi::Codebook& cb, double) {
    hi = std::max(hi, renyi::one_shot_converse_minus(codebook_input_pmf(cb, px.size()), wn, qn, r, s));
  });
  if (same_px_converse) *same_px_converse = renyi::one_shot_converse_minus(pn, wn, qn, r, s);
  return {renyi::one_shot_direct_minus(pn, wn, qn, r, s), std::exp(-s * d), hi};
}

}  // namespace testing_support
