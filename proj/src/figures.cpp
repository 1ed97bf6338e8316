#include "renyi/figures.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <memory>
#include <sstream>

#include "renyi/exponents.hpp"
#include "renyi/io.hpp"
#include "renyi/rates.hpp"
#include "renyi/wiretap.hpp"

namespace renyi {

namespace {

std::string s_label(double s) { return "s=" + format_double(s); }

double unit(const FigureOptions& o) {
  if (o.log_base == 0 || std::abs(o.log_base - std::exp(1.0)) < 1e-12) return 1.0;
  if (!(o.log_base > 1)) throw Error(ErrorCode::InvalidArgument, "log base must be e or > 1");
  return 1.0 / std::log(o.log_base);
}

std::vector<double> pick(const FigureOptions& o, std::vector<double> dflt) {
  return o.s_list.empty() ? dflt : o.s_list;
}

std::vector<FigureRow> fig2(const FigureOptions& o) {
  const Channel w = Channel::bsc(0.2);
  const Pmf q = Pmf::uniform(2);
  const double u = unit(o);
  std::vector<FigureRow> rows;
  const auto rates = rate_axis(o.rate_min, o.rate_max, o.rate_step);
  std::unique_ptr<GammaMinusTable> table;
  for (double s : pick(o, {-0.5, 0.25, 0.5, 1.0})) {
    if (s > 0) {
      ResolvabilityProfile prof(w, q, s, o.grid_res);
      for (double r : rates) rows.push_back({r * u, s_label(s), prof.at(r).value * u});
    } else if (s < 0 && s > -1) {
      if (!table) table = std::make_unique<GammaMinusTable>(w, q, o.grid_res);
      for (double r : rates) rows.push_back({r * u, "lb " + s_label(s), table->lb(r, -s).value * u});
      for (double r : rates) rows.push_back({r * u, "ub " + s_label(s), table->ub(r, -s).value * u});
    } else {
      throw Error(ErrorCode::InvalidArgument, "fig2 takes s in (-1,0) or (0,1]");
    }
  }
  return rows;
}

std::vector<FigureRow> fig3a(const FigureOptions& o) {
  const Pmf q = Pmf::uniform(2);
  const double u = unit(o);
  std::vector<FigureRow> rows;
  for (double s : pick(o, {-1.0, 0.0, 0.5, 1.0}))
    for (int i = 0; i <= 50; ++i) {
      const double p = i / 100.0;
      rows.push_back({p, s_label(s), min_rate(Channel::bsc(p), q, s, o.grid_res) * u});
    }
  return rows;
}

std::vector<FigureRow> fig3b(const FigureOptions& o) {
  const Channel w = Channel::bsc(0.2);
  const Pmf q = Pmf::uniform(2);
  const double u = unit(o);
  std::vector<FigureRow> rows;
  for (int i = 0; i <= 40; ++i) {
    const double s = -1.0 + i / 20.0;
    rows.push_back({s, "p=0.2", min_rate(w, q, s, o.grid_res) * u});
  }
  return rows;
}

std::vector<FigureRow> fig4(const FigureOptions& o) {
  const Channel w = Channel::bsc(0.2);
  const Pmf q = Pmf::uniform(2);
  const double u = unit(o);
  std::vector<FigureRow> rows;
  for (double s : pick(o, {-0.5, 0.0, 0.5, 1.0}))
    for (double r : rate_axis(o.rate_min, o.rate_max, o.rate_step))
      rows.push_back({r * u, s_label(s), e_iid_clipped(q, w, q, r, s).value * u});
  return rows;
}

std::vector<FigureRow> region_rows(const RateRegion& reg, RegionForm form, const FigureOptions& o) {
  const double u = unit(o);
  std::vector<FigureRow> rows;
  for (const auto& [r0, r1] : reg.boundary(form, o.boundary_samples)) rows.push_back({r0 * u, "boundary", r1 * u});
  // corners of the pieces that are not dominated in this form
  std::vector<const RegionPiece*> live;
  for (const auto& p : reg.pieces)
    if (!p.empty) live.push_back(&p);
  std::stable_sort(live.begin(), live.end(),
                   [](const RegionPiece* a, const RegionPiece* b) { return a->sum_cap > b->sum_cap; });
  double best = -std::numeric_limits<double>::infinity();
  for (const RegionPiece* p : live) {
    const double side = form == RegionForm::R0Min ? -p->r0_min : p->r1_max;
    if (side <= best) continue;
    best = side;
    if (form == RegionForm::R0Min)
      rows.push_back({p->r0_min * u, "corner", (p->sum_cap - p->r0_min) * u});
    else
      rows.push_back({(p->sum_cap - p->r1_max) * u, "corner", p->r1_max * u});
  }
  return rows;
}

std::vector<FigureRow> fig5(const FigureOptions& o) {
  const auto wc = WiretapChannel::binary(0.1, 0.3);
  const double s = o.s_list.empty() ? 1.0 : o.s_list.front();
  return region_rows(det_encoder_region(wc, Pmf::uniform(2), s, o.grid_res), RegionForm::R0Min, o);
}

std::vector<FigureRow> fig6(const FigureOptions& o) {
  const auto wc = WiretapChannel::binary(0.1, 0.3);
  const double s = o.s_list.empty() ? 1.0 : o.s_list.front();
  return region_rows(stochastic_encoder_region(wc, Pmf::uniform(2), s, o.grid_res), RegionForm::R1Max, o);
}

double parse_number(const std::string& t) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) throw Error(ErrorCode::ModelValidation, "bad number '" + t + "'");
  return v;
}

}  // namespace

std::vector<double> rate_axis(double lo, double hi, double step) {
  if (!(step > 0)) throw Error(ErrorCode::InvalidArgument, "rate step must be positive");
  if (!(hi >= lo)) throw Error(ErrorCode::InvalidArgument, "empty rate range");
  std::vector<double> r;
  const long n = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) r.push_back(lo + i * step);
  return r;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2", "fig3a", "fig3b", "fig4", "fig5", "fig6"};
  return ids;
}

std::vector<FigureRow> make_figure(const std::string& id, const FigureOptions& o) {
  if (o.grid_res < 2) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 2");
  if (id == "fig2") return fig2(o);
  if (id == "fig3a") return fig3a(o);
  if (id == "fig3b") return fig3b(o);
  if (id == "fig4") return fig4(o);
  if (id == "fig5") return fig5(o);
  if (id == "fig6") return fig6(o);
  throw Error(ErrorCode::InvalidArgument, "unknown figure '" + id + "'");
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::string out = "x,curve,y\n";
  for (const auto& r : rows) out += format_double(r.x) + "," + r.curve + "," + format_double(r.y) + "\n";
  return out;
}

std::vector<FigureRow> parse_figure_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<FigureRow> rows;
  if (!std::getline(in, line) || line != "x,curve,y") throw Error(ErrorCode::ModelValidation, "bad figure header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto a = line.find(','), b = line.rfind(',');
    if (a == std::string::npos || a == b) throw Error(ErrorCode::ModelValidation, "bad figure row: " + line);
    FigureRow r;
    r.curve = line.substr(a + 1, b - a - 1);
    r.x = parse_number(line.substr(0, a));
    r.y = parse_number(line.substr(b + 1));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace renyi
