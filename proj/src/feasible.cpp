#include "renyi/feasible.hpp"

#include <algorithm>

#include "renyi/simplex.hpp"

namespace renyi {

namespace {

constexpr std::uint64_t kGridBudget = 200000;
constexpr std::uint64_t kLatticeBudget = 2000;

bool close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

void push_unique(std::vector<Eigen::VectorXd>& v, const Eigen::VectorXd& p, double tol) {
  for (const auto& e : v)
    if (close(e, p, tol)) return;
  v.push_back(p);
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

FeasibleSet feasible_polytope(const Eigen::MatrixXd& w, const Eigen::VectorXd& q, int resolution) {
  const int nx = static_cast<int>(w.rows());
  const int ny = static_cast<int>(w.cols());
  Eigen::MatrixXd a(ny + 1, nx);
  a.topRows(ny) = w.transpose();
  a.row(ny).setOnes();
  Eigen::VectorXd b(ny + 1);
  b.head(ny) = q;
  b(ny) = 1;

  if (nx > 20) throw Error(ErrorCode::SizeCap, "feasible set: too many input letters for vertex enumeration");
  const int rank = static_cast<int>(Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(a).rank());

  FeasibleSet out;
  // basic solutions: supports of size <= rank with independent columns
  for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > rank) continue;
    std::vector<int> idx;
    for (int i = 0; i < nx; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Eigen::MatrixXd as(ny + 1, k);
    for (int j = 0; j < k; ++j) as.col(j) = a.col(idx[j]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(as);
    if (qr.rank() < k) continue;
    Eigen::VectorXd ps = qr.solve(b);
    if ((as * ps - b).cwiseAbs().maxCoeff() > 1e-10) continue;
    if (ps.minCoeff() < -1e-12) continue;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(nx);
    for (int j = 0; j < k; ++j) p(idx[j]) = std::max(0.0, ps(j));
    p /= p.sum();
    push_unique(out.vertices, p, 1e-9);
  }
  out.feasible = !out.vertices.empty();
  if (!out.feasible) return out;
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);

  std::vector<Eigen::VectorXd> pts;
  const int gres = resolution_for_budget(nx, resolution, kGridBudget);
  SimplexGrid g(nx, gres);
  while (g.next()) {
    Eigen::VectorXd p = g.point();
    if (tv(push(p, w), q) <= kFeasibleTol) pts.push_back(p);
  }
  const int nv = static_cast<int>(out.vertices.size());
  if (nv == 1) {
    push_unique(pts, out.vertices.front(), 1e-12);
  } else {
    const int lres = resolution_for_budget(nv, resolution, kLatticeBudget);
    SimplexGrid lg(nv, lres);
    while (lg.next()) {
      Eigen::VectorXd lam = lg.point();
      Eigen::VectorXd p = Eigen::VectorXd::Zero(nx);
      for (int i = 0; i < nv; ++i) p += lam(i) * out.vertices[i];
      p = p.cwiseMax(0.0);
      p /= p.sum();
      push_unique(pts, p, 1e-12);
    }
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  out.points = std::move(pts);
  return out;
}

FeasibleResult input_feasible_set(const Channel& w, const Pmf& q, int resolution) {
  if (q.alphabet() != w.outputs())
    throw Error(ErrorCode::AlphabetMismatch, "target and channel outputs differ");
  FeasibleSet fs = feasible_polytope(w.matrix(), q.probs(), resolution);
  FeasibleResult r;
  r.feasible = fs.feasible;
  for (const auto& p : fs.points) r.points.emplace_back(w.inputs(), p);
  for (const auto& p : fs.vertices) r.vertices.emplace_back(w.inputs(), p);
  return r;
}

}  // namespace renyi
