#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <renyi/simplex.hpp>

#include <cmath>

using namespace renyi;
using doctest::Approx;

TEST_CASE("small grids") {
  const auto g = simplex_points(2, 2);
  REQUIRE(g.size() == 3);
  CHECK(g[0].isApprox(Eigen::Vector2d(0, 1)));
  CHECK(g[1].isApprox(Eigen::Vector2d(0.5, 0.5)));
  CHECK(g[2].isApprox(Eigen::Vector2d(1, 0)));
  CHECK(simplex_points(2, 4).size() == 5);
  CHECK(simplex_points(3, 3).size() == 10);
  CHECK(simplex_count(3, 3) == 10);
  CHECK(simplex_count(4, 100) == binomial(103, 3));
}

TEST_CASE("enumeration is lexicographic and complete") {
  for (int dim = 1; dim <= 4; ++dim)
    for (int res = 1; res <= 7; ++res) {
      SimplexGrid g(dim, res);
      std::uint64_t count = 0;
      Eigen::VectorXi prev;
      while (g.next()) {
        const Eigen::VectorXi& k = g.counts();
        CHECK(k.sum() == res);
        CHECK(k.minCoeff() >= 0);
        if (count > 0)
          CHECK(std::lexicographical_compare(prev.data(), prev.data() + dim, k.data(), k.data() + dim));
        prev = k;
        ++count;
      }
      CHECK(count == simplex_count(dim, res));
      CHECK(count == g.size());
    }
}

TEST_CASE("budgeted resolution") {
  CHECK(resolution_for_budget(3, 100, 1000000) == 100);
  const int r = resolution_for_budget(4, 100, 10000);
  CHECK(simplex_count(4, r) <= 10000);
  CHECK(simplex_count(4, r + 1) > 10000);
}

TEST_CASE("minimization finds interior optimum and refines it") {
  const Eigen::Vector3d target(0.213, 0.4567, 0.3303);
  auto f = [&](const Eigen::VectorXd& p) { return (p - target).squaredNorm(); };
  SimplexSearchOptions opt;
  opt.resolution = 20;
  opt.refine = false;
  const SimplexMin coarse = minimize_on_simplex(3, f, opt);
  opt.refine = true;
  const SimplexMin fine = minimize_on_simplex(3, f, opt);
  CHECK(fine.value <= coarse.value);
  CHECK((fine.arg - target).cwiseAbs().maxCoeff() <= 0.5 / 200 + 1e-12);
  CHECK(std::abs(fine.arg.sum() - 1) < 1e-12);
}

TEST_CASE("ties go to the first grid point") {
  auto f = [](const Eigen::VectorXd&) { return 1.0; };
  SimplexSearchOptions opt;
  opt.resolution = 5;
  opt.seeds.push_back(Eigen::Vector2d(0.5, 0.5));
  const SimplexMin m = minimize_on_simplex(2, f, opt);
  CHECK(m.arg.isApprox(Eigen::Vector2d(0, 1)));
}

TEST_CASE("seeds can beat the grid") {
  const Eigen::Vector2d target(1 / 3.0, 2 / 3.0);
  auto f = [&](const Eigen::VectorXd& p) { return (p - target).norm(); };
  SimplexSearchOptions opt;
  opt.resolution = 4;
  opt.refine = false;
  opt.seeds.push_back(target);
  CHECK(minimize_on_simplex(2, f, opt).value == Approx(0.0));
}
