// renyi: command-line front end for the library.
//
// Exit codes: 0 ok, 1 other errors, 2 infeasible target, 3 size cap,
// 4 model validation.

#include <renyi/codes.hpp>
#include <renyi/exponents.hpp>
#include <renyi/figures.hpp>
#include <renyi/io.hpp>
#include <renyi/rates.hpp>
#include <renyi/wiretap.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

using namespace renyi;

namespace {

struct Config {
  std::string model, target, input, out, method = "auto", log_base = "e", form = "r0_min",
                                       encoder = "stochastic", figure;
  std::vector<double> s_list;
  double rate_min = 0, rate_max = 0.5, rate_step = 0.01;
  int grid_res = 100, n = 1, w_card = 0, samples = 100;
  long m = 2, trials = 10000;
  std::uint64_t seed = 1;
  bool rate_set = false;
};

double unit(const Config& c) {
  if (c.log_base == "e") return 1.0;
  if (c.log_base == "2") return 1.0 / std::log(2.0);
  throw Error(ErrorCode::InvalidArgument, "--log-base must be e or 2");
}

double base_value(const Config& c) { return c.log_base == "2" ? 2.0 : 0.0; }

void validate(const Config& c) {
  if (c.grid_res < 2) throw Error(ErrorCode::InvalidArgument, "--grid-res must be >= 2");
  if (!(c.rate_step > 0)) throw Error(ErrorCode::InvalidArgument, "--rate-step must be positive");
  if (!(c.rate_max >= c.rate_min)) throw Error(ErrorCode::InvalidArgument, "empty rate range");
  unit(c);
}

Channel load_channel(const Config& c) {
  return c.model.empty() ? Channel::bsc(0.2) : channel_from_json(read_json_file(c.model));
}

WiretapChannel load_wiretap(const Config& c) {
  return c.model.empty() ? WiretapChannel::binary(0.1, 0.3) : wiretap_from_json(read_json_file(c.model));
}

Pmf load_target(const Config& c, const Channel& w) {
  return c.target.empty() ? Pmf(w.outputs(), Eigen::VectorXd::Constant(w.n_outputs(), 1.0 / w.n_outputs()))
                          : pmf_from_json(read_json_file(c.target));
}

std::vector<double> orders(const Config& c, std::vector<double> dflt) { return c.s_list.empty() ? dflt : c.s_list; }

void emit(const Config& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

std::string num(double v) { return format_double(v); }

int cmd_divergence(const Config& c) {
  if (c.input.empty() || c.target.empty()) throw Error(ErrorCode::InvalidArgument, "divergence needs --input and --target");
  const Pmf p = pmf_from_json(read_json_file(c.input));
  const Pmf q = pmf_from_json(read_json_file(c.target));
  const double u = unit(c);
  std::string out = "s,divergence\n";
  for (double s : orders(c, {1.0})) out += num(s) + "," + num(renyi_div(p, q, s) * u) + "\n";
  emit(c, out);
  return 0;
}

int cmd_min_rate(const Config& c) {
  const Channel w = load_channel(c);
  const Pmf q = load_target(c, w);
  const double u = unit(c);
  std::string out = "s,min_rate";
  for (const auto& l : w.inputs()) out += ",px_" + l;
  out += "\n";
  for (double s : orders(c, {-1.0, 0.0, 0.5, 1.0})) {
    const MinRate m = min_rate_detail(w, q, s, c.grid_res);
    out += num(s) + "," + num(m.value * u);
    for (int i = 0; i < m.achiever.size(); ++i) out += "," + num(m.achiever[i]);
    out += "\n";
  }
  emit(c, out);
  return 0;
}

int cmd_resolvability(const Config& c) {
  const Channel w = load_channel(c);
  const Pmf q = load_target(c, w);
  const double u = unit(c);
  const auto rates = rate_axis(c.rate_min, c.rate_max, c.rate_step);
  std::string out = "rate,s,bound,value\n";
  std::unique_ptr<GammaMinusTable> table;
  for (double s : orders(c, {-0.5, 0.5, 1.0})) {
    if (s > 0 && s <= 1) {
      const ResolvabilityProfile prof(w, q, s, c.grid_res);
      for (double r : rates) out += num(r * u) + "," + num(s) + ",single-letter," + num(prof.at(r).value * u) + "\n";
    } else if (s < 0 && s > -1) {
      if (!table) table = std::make_unique<GammaMinusTable>(w, q, c.grid_res);
      for (double r : rates) {
        out += num(r * u) + "," + num(s) + ",lower," + num(table->lb(r, -s).value * u) + "\n";
        out += num(r * u) + "," + num(s) + ",upper," + num(table->ub(r, -s).value * u) + "\n";
      }
    } else {
      throw Error(ErrorCode::InvalidArgument, "resolvability takes s in (-1,0) or (0,1]");
    }
    if (c.n > 1) {
      for (double r : rates)
        out += num(r * u) + "," + num(s) + ",block n=" + std::to_string(c.n) + "," +
               num(gamma_multiletter(w, q, r, s, c.n, c.grid_res) * u) + "\n";
    }
  }
  if (c.n > 1)
    std::cerr << "note: block form evaluated at n=" << c.n
              << " only; the supremum over longer blocks is not computed\n";
  emit(c, out);
  return 0;
}

int cmd_exponent(const Config& c) {
  const Channel w = load_channel(c);
  const Pmf q = load_target(c, w);
  const double u = unit(c);
  const auto rates = rate_axis(c.rate_min, c.rate_max, c.rate_step);
  std::string out = "rate,s,e_iid,e_iid_clipped,e_ts,lower_bound,branch\n";
  for (double s : orders(c, {-0.5, 0.0, 0.5, 1.0})) {
    const Pmf px = c.input.empty() ? min_rate_detail(w, q, s, c.grid_res).achiever
                                   : pmf_from_json(read_json_file(c.input));
    std::vector<std::string> warned;
    for (double r : rates) {
      const ExponentResult a = e_iid(px, w, q, r, s);
      const ExponentResult lb = exponent_lower_bound(w, q, r, s, c.grid_res);
      out += num(r * u) + "," + num(s) + "," + num(a.value * u) + "," + num(e_iid_clipped(px, w, q, r, s).value * u) +
             "," + num(e_ts(px, w, q, r, s).value * u) + "," + num(lb.value * u) + "," + lb.branch + "\n";
      for (const auto& m : a.warnings)
        if (std::find(warned.begin(), warned.end(), m) == warned.end()) warned.push_back(m);
    }
    for (const auto& m : warned) std::cerr << "warning (s=" << s << "): " << m << "\n";
  }
  emit(c, out);
  return 0;
}

int cmd_region(const Config& c) {
  const WiretapChannel wc = load_wiretap(c);
  const Pmf qz = load_target(c, wc.eaves());
  const auto ss = orders(c, {1.0});
  if (ss.size() != 1) throw Error(ErrorCode::InvalidArgument, "region takes a single --s");
  const RegionForm form = parse_form(c.form);
  RateRegion r;
  if (c.encoder == "det")
    r = det_encoder_region(wc, qz, ss[0], c.grid_res);
  else if (c.encoder == "stochastic")
    r = stochastic_encoder_region(wc, qz, ss[0], c.grid_res, c.w_card);
  else
    throw Error(ErrorCode::InvalidArgument, "--encoder must be det or stochastic");
  if (!r.feasible) {
    std::cerr << "error: target output distribution is not reachable through the eavesdropper channel\n";
    emit(c, to_json(r, form).dump(1) + "\n");
    return 2;
  }
  emit(c, to_json(r, form).dump(1) + "\n");
  return 0;
}

int cmd_capacity(const Config& c) {
  const WiretapChannel wc = load_wiretap(c);
  const Pmf qz = load_target(c, wc.eaves());
  const double u = unit(c);
  std::string out = "measure,s,capacity\n";
  for (double s : orders(c, {0.0, 0.25, 0.5, 1.0}))
    out += "effective," + num(s) + "," + num(effective_secrecy_capacity(wc, qz, s, c.grid_res, c.w_card) * u) + "\n";
  out += "mutual-information,," + num(mi_secrecy_capacity(wc, c.grid_res, c.w_card) * u) + "\n";
  emit(c, out);
  return 0;
}

int cmd_figure(const Config& c) {
  FigureOptions o;
  o.grid_res = c.grid_res;
  o.log_base = base_value(c);
  o.s_list = c.s_list;
  o.boundary_samples = c.samples;
  if (c.rate_set) {
    o.rate_min = c.rate_min;
    o.rate_max = c.rate_max;
    o.rate_step = c.rate_step;
  }
  if (c.figure == "all") {
    const std::filesystem::path dir = c.out.empty() ? "." : c.out;
    std::filesystem::create_directories(dir);
    for (const auto& id : figure_ids()) {
      FigureOptions oi = o;
      // s lists differ per figure, so only the defaults make sense here
      oi.s_list.clear();
      write_text_file((dir / (id + ".csv")).string(), figure_csv(make_figure(id, oi)));
    }
    return 0;
  }
  emit(c, figure_csv(make_figure(c.figure, o)));
  return 0;
}

int cmd_simulate(const Config& c) {
  const Channel w = load_channel(c);
  const Pmf q = load_target(c, w);
  const Pmf px = c.input.empty() ? min_rate_detail(w, q, 0.0, c.grid_res).achiever
                                 : pmf_from_json(read_json_file(c.input));
  if (c.m < 1 || c.m > 1000000000L) throw Error(ErrorCode::InvalidArgument, "--M out of range");
  const int m = static_cast<int>(c.m);
  json records = json::array();
  for (double s : orders(c, {1.0})) {
    EnsembleMethod method;
    if (c.method == "auto") {
      try {
        method = EnsembleMethod::ExactEnum;
        records.push_back(to_json(ensemble_estimate(method, px, w, q, c.n, m, s, c.trials, c.seed), c.n, c.m, s, c.seed));
        continue;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SizeCap) throw;
      }
      method = EnsembleMethod::MonteCarlo;
    } else {
      method = parse_method(c.method);
    }
    records.push_back(to_json(ensemble_estimate(method, px, w, q, c.n, m, s, c.trials, c.seed), c.n, c.m, s, c.seed));
  }
  emit(c, (records.size() == 1 ? records[0] : records).dump(1) + "\n");
  return 0;
}

int exit_code(ErrorCode e) {
  switch (e) {
    case ErrorCode::InfeasibleTarget:
      return 2;
    case ErrorCode::SizeCap:
      return 3;
    case ErrorCode::ModelValidation:
      return 4;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi resolvability, exponents and wiretap regions on finite alphabets"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", c.model, "channel (or wiretap) model JSON; default is the built-in preset");
    sub->add_option("--target", c.target, "target output pmf JSON; default uniform");
    sub->add_option("--s", c.s_list, "Renyi parameters s, comma separated")->delimiter(',');
    sub->add_option("--grid-res", c.grid_res, "simplex grid resolution")->capture_default_str();
    sub->add_option("--log-base", c.log_base, "display units: e (nats) or 2 (bits)")->capture_default_str();
    sub->add_option("--out", c.out, "output file (directory for 'figure all')");
  };
  auto rates = [&](CLI::App* sub) {
    sub->add_option("--rate-min", c.rate_min, "first rate (nats)")->capture_default_str();
    sub->add_option("--rate-max", c.rate_max, "last rate (nats)")->capture_default_str();
    sub->add_option("--rate-step", c.rate_step, "rate step (nats)")->capture_default_str();
  };

  auto* div = app.add_subcommand("divergence", "D_{1+s}(P||Q) for each s");
  common(div);
  div->add_option("--input", c.input, "pmf P (JSON)");

  auto* mr = app.add_subcommand("min-rate", "minimum resolvability rate and its input distribution");
  common(mr);

  auto* res = app.add_subcommand("resolvability", "asymptotic resolvability against rate");
  common(res);
  rates(res);
  res->add_option("--n", c.n, "also evaluate the block form at this block length");

  auto* ex = app.add_subcommand("exponent", "i.i.d. and typical-set exponents against rate");
  common(ex);
  rates(ex);
  ex->add_option("--input", c.input, "input pmf for the single-distribution columns; default the min-rate achiever");

  auto* reg = app.add_subcommand("region", "wiretap admissible rate region (JSON)");
  common(reg);
  reg->add_option("--form", c.form, "r0_min or r1_max")->capture_default_str();
  reg->add_option("--encoder", c.encoder, "det or stochastic")->capture_default_str();
  reg->add_option("--w-card", c.w_card, "auxiliary alphabet size; 0 means |X|+1");

  auto* cap = app.add_subcommand("capacity", "effective and mutual-information secrecy capacities");
  common(cap);
  cap->add_option("--w-card", c.w_card, "auxiliary alphabet size; 0 means |X|+1");

  auto* fig = app.add_subcommand("figure", "figure data as CSV (x,curve,y)");
  common(fig);
  rates(fig);
  fig->add_option("id", c.figure, "fig2, fig3a, fig3b, fig4, fig5, fig6 or all")->required();
  fig->add_option("--samples", c.samples, "boundary samples for region figures")->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "ensemble divergence of random i.i.d. codes (JSON)");
  common(sim);
  sim->add_option("--input", c.input, "codeword symbol pmf; default the s=0 min-rate achiever");
  sim->add_option("--n", c.n, "block length")->capture_default_str();
  sim->add_option("--M", c.m, "number of codewords")->capture_default_str();
  sim->add_option("--trials", c.trials, "monte carlo trials")->capture_default_str();
  sim->add_option("--seed", c.seed, "generator seed")->capture_default_str();
  sim->add_option("--method", c.method, "auto, exact-enum, exact-moment or monte-carlo")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  for (auto* sub : {res, ex, fig})
    if (sub->parsed())
      for (const char* f : {"--rate-min", "--rate-max", "--rate-step"})
        if (sub->count(f) > 0) c.rate_set = true;

  try {
    validate(c);
    if (div->parsed()) return cmd_divergence(c);
    if (mr->parsed()) return cmd_min_rate(c);
    if (res->parsed()) return cmd_resolvability(c);
    if (ex->parsed()) return cmd_exponent(c);
    if (reg->parsed()) return cmd_region(c);
    if (cap->parsed()) return cmd_capacity(c);
    if (fig->parsed()) return cmd_figure(c);
    if (sim->parsed()) return cmd_simulate(c);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
