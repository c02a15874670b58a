#include "fabry/reports.hpp"

#include <sstream>

#include "json.hpp"

namespace fabry {

namespace {

using ojson = nlohmann::ordered_json;

ojson opt(const std::optional<double>& v) {
  return v.has_value() ? ojson(*v) : ojson(nullptr);
}
ojson opt(const std::optional<long>& v) {
  return v.has_value() ? ojson(*v) : ojson(nullptr);
}

std::optional<double> opt_d(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}
std::optional<long> opt_l(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

ojson parse(const std::string& text) { return ojson::parse(text); }

void expect_schema(const ojson& j, const std::string& schema) {
  if (j.value("schema", "") != schema) {
    throw std::runtime_error("expected schema '" + schema + "', got '" +
                             j.value("schema", "<none>") + "'");
  }
}

}  // namespace

std::string to_json(const GoodnessReport& r, int indent) {
  ojson j;
  j["schema"] = "fabry.goodness_report/1";
  j["claim"] = "phases of every N consecutive coefficients fit a closed arc of length alpha";
  j["N"] = r.N;
  j["alpha"] = r.alpha;
  j["verdict"] = r.verdict;
  j["checked_from"] = r.checked_from;
  j["checked_to"] = r.checked_to;
  ojson w = ojson::array();
  for (const auto& [n, phi] : r.witnesses) w.push_back({{"n", n}, {"phi", phi}});
  j["witnesses"] = std::move(w);
  j["first_failure"] = opt(r.first_failure);
  j["failure_phases"] = r.failure_phases;
  return j.dump(indent);
}

GoodnessReport goodness_report_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.goodness_report/1");
  GoodnessReport r;
  r.N = j.at("N").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.verdict = j.at("verdict").get<bool>();
  r.checked_from = j.at("checked_from").get<long>();
  r.checked_to = j.at("checked_to").get<long>();
  for (const auto& w : j.at("witnesses")) {
    r.witnesses.emplace_back(w.at("n").get<long>(), w.at("phi").get<double>());
  }
  r.first_failure = opt_l(j.at("first_failure"));
  r.failure_phases = j.at("failure_phases").get<std::vector<double>>();
  return r;
}

std::string to_json(const QuotientDriftReport& r, int indent) {
  ojson j;
  j["schema"] = "fabry.quotient_drift/1";
  j["claim"] = "consecutive-coefficient quotients a_n / a_{n+1} and largest good N of the tail";
  ojson e = ojson::array();
  for (const auto& x : r.entries) {
    e.push_back({{"n", x.n}, {"modulus", x.ratio_modulus}, {"arg", x.ratio_arg}});
  }
  j["entries"] = std::move(e);
  j["skipped"] = r.skipped;
  j["largest_good_N"] = r.largest_good_N;
  j["tail_index"] = opt(r.tail_index);
  return j.dump(indent);
}

QuotientDriftReport quotient_drift_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.quotient_drift/1");
  QuotientDriftReport r;
  for (const auto& e : j.at("entries")) {
    r.entries.push_back({e.at("n").get<long>(), e.at("modulus").get<double>(),
                         e.at("arg").get<double>()});
  }
  r.skipped = j.at("skipped").get<std::vector<long>>();
  r.largest_good_N = j.at("largest_good_N").get<int>();
  r.tail_index = opt_l(j.at("tail_index"));
  return r;
}

std::string to_json(const NegativityCertificate& r, int indent) {
  ojson j;
  j["schema"] = "fabry.negativity_certificate/1";
  j["claim"] = "separating polynomial is strictly negative outside the arc";
  j["N"] = r.N;
  j["grid_points"] = r.grid_points;
  j["grid_step"] = r.grid_step;
  j["margin"] = opt(r.margin);
  j["argmin_theta"] = opt(r.argmin_theta);
  j["bernstein_bound"] = r.bernstein_bound;
  j["sandwich_slack"] = opt(r.sandwich_slack);
  j["method"] = r.method;
  j["certified"] = r.certified;
  return j.dump(indent);
}

NegativityCertificate negativity_certificate_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.negativity_certificate/1");
  NegativityCertificate r;
  r.N = j.at("N").get<int>();
  r.grid_points = j.at("grid_points").get<long>();
  r.grid_step = j.at("grid_step").get<double>();
  r.margin = opt_d(j.at("margin"));
  r.argmin_theta = opt_d(j.at("argmin_theta"));
  r.bernstein_bound = j.at("bernstein_bound").get<double>();
  r.sandwich_slack = opt_d(j.at("sandwich_slack"));
  r.method = j.at("method").get<std::string>();
  r.certified = j.at("certified").get<bool>();
  return r;
}

std::string to_json(const DenominatorCheck& r, int indent) {
  ojson j;
  j["schema"] = "fabry.denominator_check/1";
  j["claim"] = "2 min sin(theta/2 -+ pi/4N) exceeds max sin(theta/2 -+ pi/4[N/4]) on [4pi/N, pi]";
  j["N"] = r.N;
  j["grid_points"] = r.grid_points;
  j["min_slack"] = r.min_slack;
  j["argmin_theta"] = r.argmin_theta;
  j["holds"] = r.holds;
  return j.dump(indent);
}

DenominatorCheck denominator_check_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.denominator_check/1");
  DenominatorCheck r;
  r.N = j.at("N").get<int>();
  r.grid_points = j.at("grid_points").get<long>();
  r.min_slack = j.at("min_slack").get<double>();
  r.argmin_theta = j.at("argmin_theta").get<double>();
  r.holds = j.at("holds").get<bool>();
  return r;
}

std::string to_json(const ConstantEstimate& r, int indent) {
  ojson j;
  j["schema"] = "fabry.constant_estimate/1";
  j["claim"] = r.kind == "constructed"
                   ? "full-circle l2 mass <= C times arc l2 mass for N-good series"
                   : "feasible-point lower bound for the sharp concentration constant";
  j["N"] = r.N;
  j["kind"] = r.kind;
  j["value"] = r.value;
  j["max_p_on_arc"] = r.max_p_on_arc;
  j["min_neg_p_off_arc"] = r.min_neg_p_off_arc;
  j["T"] = r.T;
  j["iterations"] = r.iterations;
  j["starts"] = r.starts;
  j["converged"] = r.converged;
  j["maximizer"] = r.maximizer;
  return j.dump(indent);
}

ConstantEstimate constant_estimate_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.constant_estimate/1");
  ConstantEstimate r;
  r.N = j.at("N").get<int>();
  r.kind = j.at("kind").get<std::string>();
  r.value = j.at("value").get<double>();
  r.max_p_on_arc = j.at("max_p_on_arc").get<double>();
  r.min_neg_p_off_arc = j.at("min_neg_p_off_arc").get<double>();
  r.T = j.at("T").get<int>();
  r.iterations = j.at("iterations").get<long>();
  r.starts = j.at("starts").get<int>();
  r.converged = j.at("converged").get<bool>();
  r.maximizer = j.at("maximizer").get<std::vector<double>>();
  return r;
}

std::string to_json(const CorollaryReport& r, int indent) {
  ojson j;
  j["schema"] = "fabry.corollary_report/1";
  j["claim"] = "arc concentration inequality for an N-good series";
  j["N"] = r.N;
  j["tau"] = r.tau;
  j["C"] = r.C;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["holds"] = r.holds;
  return j.dump(indent);
}

CorollaryReport corollary_report_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.corollary_report/1");
  CorollaryReport r;
  r.N = j.at("N").get<int>();
  r.tau = j.at("tau").get<double>();
  r.C = j.at("C").get<double>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.slack = j.at("slack").get<double>();
  r.holds = j.at("holds").get<bool>();
  return r;
}

std::string to_json(const PoincareReport& r, int indent) {
  ojson j;
  j["schema"] = "fabry.poincare_report/1";
  j["claim"] = "max|v| <= (1/2) integral |v'| <= sqrt(pi/2 integral |v'|^2) for zero-mean v";
  j["max_abs"] = r.max_abs;
  j["arc_length_bound"] = r.arc_length_bound;
  j["l2_bound"] = r.l2_bound;
  j["holds"] = r.holds;
  return j.dump(indent);
}

PoincareReport poincare_report_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.poincare_report/1");
  PoincareReport r;
  r.max_abs = j.at("max_abs").get<double>();
  r.arc_length_bound = j.at("arc_length_bound").get<double>();
  r.l2_bound = j.at("l2_bound").get<double>();
  r.holds = j.at("holds").get<bool>();
  return r;
}

std::string to_json(const ConcentrationReport& r, int indent) {
  ojson j;
  j["schema"] = "fabry.concentration_report/1";
  j["claim"] = "arc mass ratio stays above 1/C and derivative growth profiles the boundary behaviour";
  j["N"] = r.N;
  j["alpha"] = r.alpha;
  j["L"] = r.L;
  j["tail_index"] = r.tail_index;
  j["C_used"] = r.C_used;
  j["lower_bound"] = r.lower_bound;
  j["taus"] = r.taus;
  j["slice_lengths"] = r.slice_lengths;
  j["mass_ratio"] = r.mass_ratio;
  j["sup_abs"] = r.sup_abs;
  j["growth"] = r.growth;
  j["max_growth_factor"] = r.max_growth_factor;
  j["evidence"] = r.evidence;
  return j.dump(indent);
}

ConcentrationReport concentration_report_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.concentration_report/1");
  ConcentrationReport r;
  r.N = j.at("N").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.L = j.at("L").get<int>();
  r.tail_index = j.at("tail_index").get<long>();
  r.C_used = j.at("C_used").get<double>();
  r.lower_bound = j.at("lower_bound").get<double>();
  r.taus = j.at("taus").get<std::vector<double>>();
  r.slice_lengths = j.at("slice_lengths").get<std::vector<long>>();
  r.mass_ratio = j.at("mass_ratio").get<std::vector<double>>();
  r.sup_abs = j.at("sup_abs").get<std::vector<double>>();
  r.growth = j.at("growth").get<std::vector<std::vector<double>>>();
  r.max_growth_factor = j.at("max_growth_factor").get<double>();
  r.evidence = j.at("evidence").get<bool>();
  return r;
}

std::string to_json(const SelftestReport& r, int indent) {
  ojson j;
  j["schema"] = "fabry.selftest_report/1";
  j["claim"] = "acceptance suite";
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass;
  ojson arr = ojson::array();
  for (const auto& c : r.criteria) {
    ojson d = ojson::object();
    for (const auto& [k, v] : c.details) d[k] = v;
    arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", std::move(d)}});
  }
  j["criteria"] = std::move(arr);
  return j.dump(indent);
}

SelftestReport selftest_report_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.selftest_report/1");
  SelftestReport r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.all_pass = j.at("all_pass").get<bool>();
  for (const auto& c : j.at("criteria")) {
    CriterionResult cr;
    cr.id = c.at("id").get<int>();
    cr.name = c.at("name").get<std::string>();
    cr.pass = c.at("pass").get<bool>();
    for (const auto& [k, v] : c.at("details").items()) {
      cr.details.emplace_back(k, v.get<double>());
    }
    r.criteria.push_back(std::move(cr));
  }
  return r;
}

std::string to_json(const TrigPoly& p, const std::string& name, int N, int indent) {
  ojson j;
  j["schema"] = "fabry.trig_poly/1";
  j["claim"] = "trigonometric polynomial coefficients";
  j["name"] = name;
  j["N"] = N;
  j["degree"] = p.degree();
  ojson arr = ojson::array();
  for (int k = -p.degree(); k <= p.degree(); ++k) {
    arr.push_back({{"k", k}, {"re", p.coeff(k).real()}, {"im", p.coeff(k).imag()}});
  }
  j["coeffs"] = std::move(arr);
  return j.dump(indent);
}

TrigPoly trig_poly_from_json(const std::string& text) {
  const ojson j = parse(text);
  expect_schema(j, "fabry.trig_poly/1");
  TrigPoly p(j.at("degree").get<int>());
  for (const auto& c : j.at("coeffs")) {
    p.set_coeff(c.at("k").get<int>(),
                {c.at("re").get<double>(), c.at("im").get<double>()});
  }
  return p;
}

std::string to_csv(const ConcentrationReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "tau,rho";
  for (int l = 1; l <= r.L; ++l) out << ",growth_l" << l;
  out << "\n";
  for (std::size_t t = 0; t < r.taus.size(); ++t) {
    out << r.taus[t] << "," << r.mass_ratio[t];
    for (int l = 0; l < r.L; ++l) out << "," << r.growth[t][static_cast<std::size_t>(l)];
    out << "\n";
  }
  return out.str();
}

std::string to_csv(const TrigPoly& p) {
  std::ostringstream out;
  out.precision(17);
  out << "k,re,im\n";
  for (int k = -p.degree(); k <= p.degree(); ++k) {
    out << k << "," << p.coeff(k).real() << "," << p.coeff(k).imag() << "\n";
  }
  return out.str();
}

}  // namespace fabry
