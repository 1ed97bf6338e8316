#pragma once

// Dense divergence kernels. Vectors are pmfs, matrices are row-stochastic
// channels with one row per input letter. Natural logs; 0 log 0 = 0.

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace renyi {

// |s| below this is treated as the KL limit
constexpr double kOrderZeroTol = 1e-9;

inline bool is_kl_order(double s) { return std::abs(s) < kOrderZeroTol; }

template <typename DP>
typename DP::Scalar entropy(const Eigen::DenseBase<DP>& p) {
  using S = typename DP::Scalar;
  S h(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S v = p.derived().coeff(i);
    if (v > 0) h -= v * std::log(v);
  }
  return h;
}

// +inf when p is not absolutely continuous w.r.t. q
template <typename DP, typename DQ>
typename DP::Scalar kl(const Eigen::DenseBase<DP>& p,
                       const Eigen::DenseBase<DQ>& q) {
  using S = typename DP::Scalar;
  S acc(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S a = p.derived().coeff(i);
    if (a <= 0) continue;
    const S b = q.derived().coeff(i);
    if (b <= 0) return std::numeric_limits<S>::infinity();
    acc += a * std::log(a / b);
  }
  return acc;
}

// sum_i p^{1+s} q^{-s} over supp(p); the quantity e^{s D_{1+s}}
template <typename DP, typename DQ>
typename DP::Scalar renyi_moment(const Eigen::DenseBase<DP>& p,
                                 const Eigen::DenseBase<DQ>& q, double s) {
  using S = typename DP::Scalar;
  S acc(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S a = p.derived().coeff(i);
    if (a <= 0) continue;
    const S b = q.derived().coeff(i);
    if (b <= 0) {
      if (s > 0) return std::numeric_limits<S>::infinity();
      continue;
    }
    if (s == -1.0)
      acc += b;
    else
      acc += a * std::pow(a / b, S(s));
  }
  return acc;
}

template <typename DP, typename DQ>
typename DP::Scalar renyi(const Eigen::DenseBase<DP>& p,
                          const Eigen::DenseBase<DQ>& q, double s) {
  using S = typename DP::Scalar;
  if (is_kl_order(s)) return kl(p, q);
  const S m = renyi_moment(p, q, s);
  if (std::isinf(m)) return m;
  if (m <= 0) return std::numeric_limits<S>::infinity();
  return std::log(m) / S(s);
}

template <typename DP, typename DQ>
typename DP::Scalar tv(const Eigen::DenseBase<DP>& p,
                       const Eigen::DenseBase<DQ>& q) {
  return (p.derived() - q.derived()).cwiseAbs().sum() / 2;
}

template <typename DX, typename DW>
Eigen::Matrix<typename DW::Scalar, Eigen::Dynamic, 1> push(
    const Eigen::MatrixBase<DX>& px, const Eigen::MatrixBase<DW>& w) {
  return w.transpose() * px;
}

// D(V||W|px)
template <typename DV, typename DW, typename DX>
typename DW::Scalar cond_kl(const Eigen::MatrixBase<DV>& v,
                            const Eigen::MatrixBase<DW>& w,
                            const Eigen::MatrixBase<DX>& px) {
  using S = typename DW::Scalar;
  S acc(0);
  for (Eigen::Index x = 0; x < px.size(); ++x) {
    if (px(x) <= 0) continue;
    acc += px(x) * kl(v.row(x), w.row(x));
  }
  return acc;
}

// D(W||q|px), the per-row KL averaged over px
template <typename DX, typename DW, typename DQ>
typename DW::Scalar cond_kl_to(const Eigen::MatrixBase<DX>& px,
                               const Eigen::MatrixBase<DW>& w,
                               const Eigen::MatrixBase<DQ>& q) {
  using S = typename DW::Scalar;
  S acc(0);
  for (Eigen::Index x = 0; x < px.size(); ++x) {
    if (px(x) <= 0) continue;
    acc += px(x) * kl(w.row(x), q.transpose());
  }
  return acc;
}

// D_{1+s}(px W || px x q)
template <typename DX, typename DW, typename DQ>
typename DW::Scalar cond_renyi(const Eigen::MatrixBase<DX>& px,
                               const Eigen::MatrixBase<DW>& w,
                               const Eigen::MatrixBase<DQ>& q, double s) {
  using S = typename DW::Scalar;
  if (is_kl_order(s)) return cond_kl_to(px, w, q);
  S acc(0);
  for (Eigen::Index x = 0; x < px.size(); ++x) {
    if (px(x) <= 0) continue;
    const S m = renyi_moment(w.row(x), q.transpose(), s);
    if (std::isinf(m)) return m;
    acc += px(x) * m;
  }
  if (acc <= 0) return std::numeric_limits<S>::infinity();
  return std::log(acc) / S(s);
}

// sum_x px(x) D_{1+s}(W_x || q)
template <typename DX, typename DW, typename DQ>
typename DW::Scalar expected_renyi(const Eigen::MatrixBase<DX>& px,
                                   const Eigen::MatrixBase<DW>& w,
                                   const Eigen::MatrixBase<DQ>& q, double s) {
  using S = typename DW::Scalar;
  S acc(0);
  for (Eigen::Index x = 0; x < px.size(); ++x) {
    if (px(x) <= 0) continue;
    const S d = renyi(w.row(x), q.transpose(), s);
    if (std::isinf(d)) return d;
    acc += px(x) * d;
  }
  return acc;
}

template <typename DX, typename DW>
typename DW::Scalar mutual_information(const Eigen::MatrixBase<DX>& px,
                                       const Eigen::MatrixBase<DW>& w) {
  const auto py = push(px, w);
  return cond_kl_to(px, w, py);
}

}  // namespace renyi
