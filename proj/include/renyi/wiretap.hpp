#pragma once

#include <cstdint>

#include "renyi/prob.hpp"
#include "renyi/region.hpp"

namespace renyi {

class WiretapChannel {
 public:
  WiretapChannel(Channel main, Channel eaves);
  // main BSC(pm), eavesdropper BSC(pe)
  static WiretapChannel binary(double pm, double pe);

  const Channel& main() const { return main_; }
  const Channel& eaves() const { return eaves_; }
  int n_inputs() const { return main_.n_inputs(); }

 private:
  Channel main_, eaves_;
};

double r_tilde(const Pmf& px, const Channel& eaves, const Pmf& qz, double s);

// px_given_w has one row per auxiliary letter
double r_tilde_prime(const Pmf& pw, const Channel& px_given_w, const Channel& eaves, const Pmf& qz,
                     double s);

RateRegion det_encoder_region(const WiretapChannel& wc, const Pmf& qz, double s, int grid_res);

// w_card <= 0 means |X| + 1
RateRegion stochastic_encoder_region(const WiretapChannel& wc, const Pmf& qz, double s, int grid_res,
                                     int w_card = 0);

double effective_secrecy_capacity(const WiretapChannel& wc, const Pmf& qz, double s, int grid_res,
                                  int w_card = 0);

double mi_secrecy_capacity(const WiretapChannel& wc, int grid_res, int w_card = 0);

// auxiliary-grid resolution used for a given number of input points
int auxiliary_resolution(int nx, int nw, int want, std::uint64_t n_inputs_points);

}  // namespace renyi
