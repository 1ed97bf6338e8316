#pragma once

#include <renyi/prob.hpp>

#include "oracles.hpp"

namespace testing_support {

inline Eigen::VectorXd ev(const oracle::Vec& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size()); }

inline Eigen::MatrixXd em(const oracle::Mat& m) {
  Eigen::MatrixXd r(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) r(i, j) = m[i][j];
  return r;
}

inline oracle::Vec ov(const Eigen::VectorXd& v) { return oracle::Vec(v.data(), v.data() + v.size()); }

inline oracle::Mat om(const Eigen::MatrixXd& m) {
  oracle::Mat r(m.rows(), oracle::Vec(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

inline renyi::Pmf pmf(const oracle::Vec& v) { return renyi::Pmf(ev(v)); }
inline renyi::Channel chan(const oracle::Mat& m) { return renyi::Channel(em(m)); }

}  // namespace testing_support
