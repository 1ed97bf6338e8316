#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "renyi/prob.hpp"

namespace renyi {

struct Codebook {
  int n = 0;
  std::vector<std::vector<int>> codewords;
  double acceptance = 1.0;  // typical-set sampler only

  int size() const { return static_cast<int>(codewords.size()); }
};

Codebook sample_iid_codebook(const Pmf& px, int n, int m_count, std::uint64_t seed,
                             std::uint64_t trial = 0);
Codebook sample_constant_composition_codebook(const Pmf& type_pmf, int n, int m_count,
                                              std::uint64_t seed, std::uint64_t trial = 0);
Codebook sample_typical_set_codebook(const Pmf& q, int n, int m_count, double eps,
                                     std::uint64_t seed, std::uint64_t trial = 0);

bool is_typical(const std::vector<int>& seq, const Pmf& q, double eps);
// exact q^n mass of the eps-typical set, summed over types
double typical_set_mass(const Pmf& q, int n, double eps);

Pmf induced_output_pmf(const Codebook& cb, const Channel& w);
double code_renyi_div(const Codebook& cb, const Channel& w, const Pmf& q, double s);

enum class EnsembleMethod { ExactEnum, ExactMoment, MonteCarlo };
const char* to_string(EnsembleMethod m);
EnsembleMethod parse_method(const std::string& name);

struct EnsembleEstimate {
  double value = 0;
  double std_error = 0;
  long trials = 1;
  EnsembleMethod method = EnsembleMethod::ExactEnum;
};

EnsembleEstimate ensemble_renyi_div(const Pmf& px, const Channel& w, const Pmf& q, int n,
                                    int m_count, double s, long trials, std::uint64_t seed);
double ensemble_renyi2_exact(const Pmf& px, const Channel& w, const Pmf& q, int n, int m_count);
double ensemble_renyi_div_exhaustive(const Pmf& px, const Channel& w, const Pmf& q, int n,
                                     int m_count, double s);

// runs the requested method, checking its size caps first
EnsembleEstimate ensemble_estimate(EnsembleMethod method, const Pmf& px, const Channel& w,
                                   const Pmf& q, int n, int m_count, double s, long trials,
                                   std::uint64_t seed);

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  std::vector<int> n;
  std::vector<long> m;
  std::vector<double> divergence;
  std::vector<double> residuals;
  std::vector<EnsembleMethod> method;
};

ExponentFit exponent_fit(const Pmf& px, const Channel& w, const Pmf& q, double m_rate, double s,
                         const std::vector<int>& n_list, long trials, std::uint64_t seed);

// least squares y = intercept + slope * x
ExponentFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// for every codebook with positive probability: f(codebook, probability)
void for_each_codebook(const Pmf& px, int n, int m_count,
                       const std::function<void(const Codebook&, double)>& f);

}  // namespace renyi
