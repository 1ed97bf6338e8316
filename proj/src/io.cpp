#include "renyi/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace renyi {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ModelValidation, what); }

double number(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    double out = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    if (ec != std::errc() || ptr != e) bad("not a number: '" + s + "'");
    return out;
  }
  bad("expected a number or decimal string");
}

Labels labels(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) bad(std::string("missing array '") + key + "'");
  Labels l;
  for (const auto& e : j.at(key)) {
    if (e.is_string())
      l.push_back(e.get<std::string>());
    else if (e.is_number_integer())
      l.push_back(std::to_string(e.get<long long>()));
    else
      bad(std::string("labels in '") + key + "' must be strings or integers");
  }
  return l;
}

Eigen::VectorXd vec(const json& a) {
  if (!a.is_array()) bad("expected an array of probabilities");
  Eigen::VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v(i) = number(a[i]);
  return v;
}

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json mat_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r).transpose()));
  return a;
}

Eigen::MatrixXd mat(const json& a) {
  if (!a.is_array() || a.empty()) bad("expected a non-empty matrix");
  const std::size_t cols = a[0].size();
  Eigen::MatrixXd m(a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != cols) bad("ragged matrix");
    m.row(r) = vec(a[r]).transpose();
  }
  return m;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Pmf pmf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("probs")) bad("pmf needs 'alphabet' and 'probs'");
  return Pmf(labels(j, "alphabet"), vec(j.at("probs")));
}

json to_json(const Pmf& p) {
  return json{{"alphabet", p.alphabet()}, {"probs", vec_json(p.probs())}};
}

Channel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) bad("channel needs 'input_alphabet', 'output_alphabet', 'rows'");
  return Channel(labels(j, "input_alphabet"), labels(j, "output_alphabet"), mat(j.at("rows")));
}

json to_json(const Channel& w) {
  return json{{"input_alphabet", w.inputs()}, {"output_alphabet", w.outputs()}, {"rows", mat_json(w.matrix())}};
}

WiretapChannel wiretap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("main") || !j.contains("eaves")) bad("wiretap model needs 'main' and 'eaves'");
  return WiretapChannel(channel_from_json(j.at("main")), channel_from_json(j.at("eaves")));
}

json to_json(const RateRegion& r, RegionForm form) {
  json pieces = json::array();
  for (const auto& p : r.pieces) {
    json e{{"sum_cap", p.sum_cap}, {"empty", p.empty}};
    if (form == RegionForm::R0Min)
      e["r0_min"] = p.r0_min;
    else
      e["r1_max"] = p.r1_max;
    json a{{"px", vec_json(p.achiever.px)}};
    if (p.achiever.stochastic()) {
      a["pw"] = vec_json(p.achiever.pw);
      a["px_given_w"] = mat_json(p.achiever.px_given_w);
    }
    e["achiever"] = a;
    pieces.push_back(e);
  }
  return json{{"s", r.s},
              {"qz", vec_json(r.qz)},
              {"pieces", pieces},
              {"form", to_string(form)},
              {"inner_approx", r.inner_approx},
              {"feasible", r.feasible},
              {"w_resolution", r.w_resolution}};
}

RateRegion region_from_json(const json& j, RegionForm* form_out) {
  RateRegion r;
  try {
    const RegionForm form = parse_form(j.at("form").get<std::string>());
    if (form_out) *form_out = form;
    r.s = number(j.at("s"));
    r.qz = vec(j.at("qz"));
    r.inner_approx = j.value("inner_approx", false);
    r.feasible = j.value("feasible", true);
    r.w_resolution = j.value("w_resolution", 0);
    for (const auto& e : j.at("pieces")) {
      const double sum = number(e.at("sum_cap"));
      RegionPiece p;
      if (form == RegionForm::R0Min)
        p = make_piece(sum, number(e.at("r0_min")));
      else {
        p.sum_cap = sum;
        p.r1_max = number(e.at("r1_max"));
        p.r0_min = sum - p.r1_max;
        p.empty = p.r1_max < 0;
      }
      if (e.contains("empty")) p.empty = e.at("empty").get<bool>();
      if (e.contains("achiever")) {
        const json& a = e.at("achiever");
        p.achiever.px = vec(a.at("px"));
        if (a.contains("pw")) {
          p.achiever.pw = vec(a.at("pw"));
          p.achiever.px_given_w = mat(a.at("px_given_w"));
        }
      }
      r.pieces.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    bad(std::string("region: ") + e.what());
  }
  return r;
}

json to_json(const EnsembleEstimate& e, int n, long m, double s, std::uint64_t seed) {
  return json{{"method", to_string(e.method)}, {"n", n}, {"M", m}, {"s", s}, {"value", e.value},
              {"std_error", e.std_error}, {"seed", seed}, {"trials", e.trials}};
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace renyi
