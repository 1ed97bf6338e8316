#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <renyi/codes.hpp>
#include <renyi/rng.hpp>

#include <cmath>
#include <set>

#include "sandwich.hpp"
#include "support.hpp"

using namespace renyi;
using namespace testing_support;
using doctest::Approx;

namespace {
const Pmf U = Pmf::uniform(2);
const Channel BSC = Channel::bsc(0.2);

std::string word(const std::vector<int>& c) {
  std::string s;
  for (int v : c) s += char('0' + v);
  return s;
}
}  // namespace

TEST_CASE("generator goldens") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  const CounterRng r(7);
  CHECK(r.bits(0, 0, 0) == 0x2bf6f81349ecc50eULL);
  CHECK(r.bits(3, 1, 2) == 0x700667ea08a9f483ULL);
  CHECK(r.uniform(0, 0, 0) == 0.17173719855229574);
  const Codebook cb = sample_iid_codebook(U, 1, 4, 7);
  REQUIRE(cb.size() == 4);
  CHECK(word(cb.codewords[0]) + word(cb.codewords[1]) + word(cb.codewords[2]) + word(cb.codewords[3]) == "0101");
  const Codebook cb4 = sample_iid_codebook(U, 4, 4, 7);
  CHECK(word(cb4.codewords[0]) == "0001");
  CHECK(word(cb4.codewords[1]) == "1111");
  CHECK(word(cb4.codewords[2]) == "0110");
  CHECK(word(cb4.codewords[3]) == "1110");
}

TEST_CASE("i.i.d. codebooks") {
  const Codebook cb = sample_iid_codebook(Pmf::point_mass(2, 0), 3, 2, 99);
  CHECK(word(cb.codewords[0]) == "000");
  CHECK(word(cb.codewords[1]) == "000");
  CHECK_THROWS_AS(sample_iid_codebook(U, 0, 2, 1), Error);
  CHECK(sample_iid_codebook(U, 5, 3, 11).codewords == sample_iid_codebook(U, 5, 3, 11).codewords);
  CHECK(sample_iid_codebook(U, 5, 3, 11).codewords != sample_iid_codebook(U, 5, 3, 12).codewords);
  // symbol frequencies
  const Pmf p(Eigen::Vector3d(0.2, 0.5, 0.3));
  const Codebook big = sample_iid_codebook(p, 100, 400, 5);
  Eigen::Vector3d counts = Eigen::Vector3d::Zero();
  for (const auto& c : big.codewords)
    for (int v : c) counts(v) += 1;
  counts /= 40000;
  for (int i = 0; i < 3; ++i) CHECK(std::abs(counts(i) - p[i]) < 4 * std::sqrt(p[i] * (1 - p[i]) / 40000));
}

TEST_CASE("constant-composition codebooks") {
  for (const auto& c : sample_constant_composition_codebook(U, 2, 20, 3).codewords)
    CHECK((word(c) == "01" || word(c) == "10"));
  std::set<std::string> seen;
  for (const auto& c : sample_constant_composition_codebook(Pmf::bernoulli(0.25), 4, 200, 3).codewords) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    CHECK(word(s) == "0001");
    seen.insert(word(c));
  }
  CHECK(seen.size() == 4);
  try {
    sample_constant_composition_codebook(Pmf::bernoulli(0.3), 4, 2, 1);
    FAIL("expected NotAType");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAType);
  }
}

TEST_CASE("typical-set codebooks") {
  for (const auto& c : sample_typical_set_codebook(U, 2, 20, 0.0, 4).codewords)
    CHECK((word(c) == "01" || word(c) == "10"));
  // exact admissible set by enumerating all 32 sequences
  const Pmf q = Pmf::bernoulli(0.2);
  std::set<std::string> admissible;
  double mass = 0;
  for (int v = 0; v < 32; ++v) {
    std::vector<int> s(5);
    int ones = 0;
    for (int i = 0; i < 5; ++i) ones += s[i] = (v >> (4 - i)) & 1;
    const bool ok = std::abs(ones / 5.0 - 0.2) <= 0.25 * 0.2 + 1e-12 && std::abs((5 - ones) / 5.0 - 0.8) <= 0.25 * 0.8 + 1e-12;
    CHECK(is_typical(s, q, 0.25) == ok);
    if (ok) {
      admissible.insert(word(s));
      mass += std::pow(0.2, ones) * std::pow(0.8, 5 - ones);
    }
  }
  CHECK(admissible.size() == 5);
  CHECK(typical_set_mass(q, 5, 0.25) == Approx(mass).epsilon(1e-13));
  const Codebook cb = sample_typical_set_codebook(q, 5, 500, 0.25, 8);
  for (const auto& c : cb.codewords) CHECK(admissible.count(word(c)) == 1);
  CHECK(std::abs(cb.acceptance - mass) < 0.05);
  try {
    sample_typical_set_codebook(Pmf::bernoulli(0.3), 2, 2, 0.1, 1);
    FAIL("expected TypicalSetEmpty");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TypicalSetEmpty);
  }
}

TEST_CASE("typical-set acceptance respects the Chernoff bound") {
  oracle::Random rng(41);
  for (int i = 0; i < 40; ++i) {
    const int k = 2 + i % 3, n = 4 + i % 9;
    const Pmf q = pmf(rng.pmf(k));
    const double eps = 0.3 + 0.7 * rng.uniform();
    const double bound = 1 - 2 * k * std::exp(-eps * eps * n * q.min_prob() / 3);
    const double mass = typical_set_mass(q, n, eps);
    CHECK(mass >= bound - 1e-12);
    if (mass > 0.05) {
      const Codebook cb = sample_typical_set_codebook(q, n, 400, eps, i);
      CHECK(cb.acceptance >= bound - 0.1);
      CHECK(std::abs(cb.acceptance - mass) < 0.1);
    }
  }
  // wide set with eps = 1
  const Pmf q(Eigen::Vector3d(0.2, 0.3, 0.5));
  for (int n = 10; n <= 60; n += 10) CHECK(typical_set_mass(q, n, 1.0) >= 1 - 6 * std::exp(-n * 0.2 / 3));
}

TEST_CASE("induced output and per-code divergence") {
  Codebook one{1, {{0}}, 1.0};
  CHECK(induced_output_pmf(one, BSC).probs().isApprox(Eigen::Vector2d(0.8, 0.2)));
  Codebook two{1, {{0}, {1}}, 1.0};
  CHECK(induced_output_pmf(two, BSC).probs().isApprox(Eigen::Vector2d(0.5, 0.5)));
  for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) CHECK(code_renyi_div(two, BSC, U, s) == Approx(0.0).epsilon(1e-15));
  Codebook w3{3, {{0, 1, 1}}, 1.0}, w3b{3, {{0, 1, 1}, {0, 1, 1}}, 1.0};
  CHECK(induced_output_pmf(w3, BSC).probs().isApprox(induced_output_pmf(w3b, BSC).probs()));
  CHECK(induced_output_pmf(w3, BSC)[0b011] == Approx(0.8 * 0.8 * 0.8));
  CHECK(code_renyi_div(w3, BSC, U, 0.5) ==
        Approx(renyi_div(BSC.row(0), U, 0.5) + 2 * renyi_div(BSC.row(1), U, 0.5)).epsilon(1e-12));
  // noiseless channel, codebook covering every sequence
  Codebook all{3, {}, 1.0};
  for (int v = 0; v < 8; ++v) all.codewords.push_back({(v >> 2) & 1, (v >> 1) & 1, v & 1});
  CHECK(code_renyi_div(all, Channel::identity(2), U, 1.0) == Approx(0.0).epsilon(1e-14));
  // random codebooks: normalization and a plain-loop re-implementation
  oracle::Random rng(42);
  for (int i = 0; i < 200; ++i) {
    auto w = rng.channel(2 + i % 2, 2 + (i / 2) % 2);
    auto q = rng.pmf(w[0].size());
    const int n = 1 + i % 3, m = 1 + i % 4;
    const Codebook cb = sample_iid_codebook(pmf(rng.pmf(w.size())), n, m, i);
    const Pmf out = induced_output_pmf(cb, chan(w));
    CHECK(std::abs(out.probs().sum() - 1) <= 1e-12);
    const int ny = w[0].size();
    oracle::Vec py(out.size(), 0.0), qn(out.size(), 1.0);
    for (int yi = 0; yi < out.size(); ++yi) {
      int r = yi;
      std::vector<int> ys(n);
      for (int t = n - 1; t >= 0; --t) {
        ys[t] = r % ny;
        r /= ny;
      }
      for (int t = 0; t < n; ++t) qn[yi] *= q[ys[t]];
      for (const auto& c : cb.codewords) {
        double pr = 1.0 / m;
        for (int t = 0; t < n; ++t) pr *= w[c[t]][ys[t]];
        py[yi] += pr;
      }
    }
    const double s = -1 + 2 * rng.uniform();
    CHECK(code_renyi_div(cb, chan(w), pmf(q), s) == Approx(oracle::renyi(py, qn, s)).epsilon(1e-10));
  }
}

TEST_CASE("exact ensemble values") {
  CHECK(ensemble_renyi2_exact(U, BSC, U, 1, 2) == Approx(std::log(1.18)).epsilon(1e-14));
  CHECK(ensemble_renyi2_exact(U, BSC, U, 1, 2) == Approx(0.165514).epsilon(1e-6));
  CHECK(ensemble_renyi2_exact(U, BSC, U, 1, 1) == Approx(std::log(1.36)).epsilon(1e-14));
  CHECK(ensemble_renyi2_exact(U, BSC, U, 1, 1000000) == Approx(0.0).epsilon(1e-5));
  CHECK(ensemble_renyi_div_exhaustive(U, BSC, U, 1, 2, 1.0) == Approx(std::log(1.18)).epsilon(1e-14));
  // strictly decreasing in M
  double prev = INFINITY;
  for (int m = 1; m <= 30; ++m) {
    const double v = ensemble_renyi2_exact(Pmf::bernoulli(0.3), BSC, U, 2, m);
    CHECK(v < prev);
    prev = v;
  }
  try {
    ensemble_renyi_div_exhaustive(U, BSC, U, 4, 5, 1.0);
    FAIL("expected size cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCap);
  }
}

TEST_CASE("exhaustive enumeration against oracles") {
  oracle::Random rng(43);
  for (int i = 0; i < 40; ++i) {
    auto px = rng.pmf(2, i % 4 == 0);
    auto w = rng.channel(2, 2);
    auto q = rng.pmf(2);
    const int n = 1 + i % 2, m = 1 + i % 3;
    const Pmf P = pmf(px), Q = pmf(q);
    const Channel W = chan(w);
    CHECK(ensemble_renyi_div_exhaustive(P, W, Q, n, m, 1.0) ==
          Approx(ensemble_renyi2_exact(P, W, Q, n, m)).epsilon(1e-12));
    for (double s : {-0.7, 0.0, 0.4, 1.0})
      CHECK(ensemble_renyi_div_exhaustive(P, W, Q, n, m, s) ==
            Approx(oracle::ensemble_exhaustive(px, w, q, n, m, s)).epsilon(1e-11));
    for (double s : {-0.5, 0.0, 0.5})
      CHECK(ensemble_renyi_div_exhaustive(P, W, Q, n, 1, s) == Approx(n * cond_renyi_div(P, W, Q, s)).epsilon(1e-12));
  }
}

TEST_CASE("one-shot sandwiches") {
  oracle::Random rng(44);
  for (int i = 0; i < 50; ++i) {
    auto px = rng.pmf(2);
    auto w = rng.channel(2, 2);
    auto q = rng.pmf(2);
    const int n = 1 + i % 2, m = 1 + i % 3;
    for (double s : {0.25, 0.75, 1.0}) CHECK(plus_sandwich(pmf(px), chan(w), pmf(q), n, m, s).holds());
    for (double s : {0.25, 0.5, 0.75}) CHECK(minus_sandwich(pmf(px), chan(w), pmf(q), n, m, s).holds());
  }
}

TEST_CASE("monte carlo") {
  const auto e = ensemble_renyi_div(U, BSC, U, 1, 2, 1.0, 100000, 1);
  CHECK(e.method == EnsembleMethod::MonteCarlo);
  CHECK(e.trials == 100000);
  CHECK(std::abs(e.value - 0.165514) <= 3 * e.std_error);
  const auto again = ensemble_renyi_div(U, BSC, U, 1, 2, 1.0, 100000, 1);
  CHECK(again.value == e.value);
  CHECK(again.std_error == e.std_error);
  CHECK_THROWS_AS(ensemble_renyi_div(U, BSC, U, 1, 2, 1.0, 0, 1), Error);
  oracle::Random rng(45);
  for (int i = 0; i < 8; ++i) {
    auto px = rng.pmf(2);
    auto w = rng.channel(2, 2);
    auto q = rng.pmf(2);
    const int n = 1 + i % 2, m = 1 + i % 3;
    for (double s : {-0.5, 0.0, 0.5, 1.0}) {
      const double exact = ensemble_renyi_div_exhaustive(pmf(px), chan(w), pmf(q), n, m, s);
      const auto mc = ensemble_renyi_div(pmf(px), chan(w), pmf(q), n, m, s, 20000, 100 + i);
      CHECK(std::abs(mc.value - exact) <= 3.5 * mc.std_error + 1e-12);
    }
  }
}

TEST_CASE("standard error scales as one over root trials") {
  double r2 = 0, r4 = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const double a = ensemble_renyi_div(U, BSC, U, 2, 2, 0.5, 4000, 1000 + rep).std_error;
    const double b = ensemble_renyi_div(U, BSC, U, 2, 2, 0.5, 8000, 2000 + rep).std_error;
    const double c = ensemble_renyi_div(U, BSC, U, 2, 2, 0.5, 16000, 3000 + rep).std_error;
    r2 += a / b / 10;
    r4 += a / c / 10;
  }
  CHECK(r2 == Approx(std::sqrt(2.0)).epsilon(0.2));
  CHECK(r4 == Approx(2.0).epsilon(0.2));
}

TEST_CASE("method dispatch") {
  CHECK(parse_method("exact-enum") == EnsembleMethod::ExactEnum);
  CHECK(parse_method("exact-moment") == EnsembleMethod::ExactMoment);
  CHECK(parse_method("monte-carlo") == EnsembleMethod::MonteCarlo);
  CHECK(std::string(to_string(EnsembleMethod::MonteCarlo)) == "monte-carlo");
  CHECK_THROWS_AS(parse_method("bogus"), Error);
  const auto e = ensemble_estimate(EnsembleMethod::ExactEnum, U, BSC, U, 1, 2, 1.0, 1, 0);
  CHECK(e.value == Approx(0.165514).epsilon(1e-6));
  CHECK(e.std_error == 0);
  try {
    ensemble_estimate(EnsembleMethod::ExactEnum, U, BSC, U, 9, 2, 1.0, 1, 0);
    FAIL("expected size cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCap);
  }
  CHECK_THROWS_AS(ensemble_estimate(EnsembleMethod::ExactMoment, U, BSC, U, 1, 2, 0.5, 1, 0), Error);
}

TEST_CASE("line fits") {
  const auto f = fit_line({1, 0.5, 0.25, 0.2}, {3, 3, 3, 3});
  CHECK(f.slope == Approx(0.0).epsilon(1e-12));
  CHECK(f.intercept == Approx(3.0));
  const auto g = fit_line({1, 2, 3}, {1, 3, 5});
  CHECK(g.slope == Approx(2.0));
  CHECK(g.intercept == Approx(-1.0));
  for (double r : g.residuals) CHECK(std::abs(r) < 1e-12);
}

TEST_CASE("exponent fit runs on the BSC") {
  const auto f = exponent_fit(U, BSC, U, 0.5, 1.0, {1, 2, 3, 4}, 1000, 1);
  REQUIRE(f.n.size() == 4);
  for (std::size_t i = 0; i < f.n.size(); ++i) {
    CHECK(f.m[i] == std::lround(std::exp(0.5 * f.n[i])));
    CHECK(f.method[i] == EnsembleMethod::ExactMoment);
    CHECK(f.divergence[i] > 0);
  }
}
