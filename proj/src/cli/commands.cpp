#include "cartan235/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cartan235/cli/spec_parser.hpp"
#include "cartan235/dist235/dist235.hpp"
#include "cartan235/error.hpp"
#include "cartan235/odesolve/odesolve.hpp"
#include "cartan235/twistor/twistor.hpp"

namespace cartan235::cli {

using symcore::RationalFunction;
using symcore::Symbol;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Symbol x5() { return Symbol::coordinate("x5"); }

RationalFunction theta_jet(int k) { return RationalFunction(Symbol::jet("Theta", k)); }

void put_quartic(Report& r, const curvature::CartanQuartic& c) {
  for (int k = 1; k <= 5; ++k) r.exact["A" + std::to_string(k)] = c.A(k).str();
  r.verdicts["flat"] = c.is_zero();
}

void fail_if(Report& r, bool bad) {
  if (bad) r.exit_code = kExitVerifyFailed;
}

}  // namespace

Pipeline parse_pipeline(std::string_view name) {
  if (name == "fq") return Pipeline::Fq;
  if (name == "theta") return Pipeline::Theta;
  throw Error(ErrorCode::InvalidArgument, "unknown pipeline '" + std::string(name) + "' (fq or theta)");
}

std::string_view pipeline_name(Pipeline p) { return p == Pipeline::Fq ? "fq" : "theta"; }

// ---------------------------------------------------------------------------

Report cmd_quartic(std::string_view spec_text, Pipeline pipeline) {
  Stopwatch clock;
  const ParsedSpec parsed = parse_spec(spec_text);
  Report r;
  r.command = "quartic";
  r.inputs["pipeline"] = std::string(pipeline_name(pipeline));

  if (pipeline == Pipeline::Fq) {
    const dist235::MongeSpec spec = to_monge(parsed);
    r.inputs["spec"] = spec.str();
    const RationalFunction f2 = spec.derivative(2);
    r.verdicts["generic"] = !f2.is_zero();
    try {
      const auto res = dist235::pipeline_fq(spec);
      put_quartic(r, res.quartic);
      r.verdicts["weyl_flat"] = res.weyl.is_zero();
      const RationalFunction a5 = dist235::a5_residual(spec);
      const RationalFunction normalized = res.quartic.A(5) * RationalFunction(100) * f2.pow(4);
      r.exact["a5"] = a5.str();
      r.exact["normalized_A5"] = normalized.str();
      r.verdicts["normalized_matches"] = normalized == a5;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateDistribution) throw;
      r.verdicts["degenerate"] = true;
      r.messages.push_back(e.what());
    }
  } else {
    const twistor::HeavenlySpec spec = to_heavenly(parsed);
    if (!spec.one_variable()) throw Error(ErrorCode::InvalidArgument, "the quartic needs a one-variable Theta");
    r.inputs["spec"] = spec.str();
    const RationalFunction t4 = spec.derivative(4, x5());
    r.verdicts["generic"] = !t4.is_zero();
    try {
      const auto res = twistor::pipeline_theta(spec);
      put_quartic(r, res.quartic);
      r.verdicts["weyl_flat"] = res.weyl.is_zero();
      const RationalFunction alpha5 = twistor::alpha5(spec);
      const RationalFunction normalized = res.quartic.A(5) * RationalFunction(100) * t4;
      r.exact["alpha5"] = alpha5.str();
      r.exact["normalized_A5"] = normalized.str();
      r.verdicts["normalized_matches"] = normalized == -alpha5;
      if (!alpha5.is_zero()) r.exact["A5_over_minus_alpha5"] = (res.quartic.A(5) / -alpha5).str();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateDistribution) throw;
      r.verdicts["degenerate"] = true;
      r.messages.push_back(e.what());
    }
  }
  r.timings["total"] = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void verify_structure(Report& r, Pipeline pipeline, const ParsedSpec& parsed, bool raw) {
  r.inputs["coframe"] = raw ? "coordinate" : "adapted";
  std::optional<exterior::Coframe> coframe;
  const auto chart = pipeline == Pipeline::Fq ? exterior::charts::monge() : exterior::charts::goursat();
  if (raw) {
    std::vector<exterior::DifferentialForm> dx;
    for (std::size_t a = 0; a < 5; ++a) dx.push_back(exterior::DifferentialForm::basis(chart, a));
    coframe.emplace(std::move(dx), exterior::conformal_metric());
  } else if (pipeline == Pipeline::Fq) {
    const auto spec = to_monge(parsed);
    r.inputs["spec"] = spec.str();
    coframe.emplace(dist235::adapted_coframe_fq(spec));
  } else {
    const auto spec = to_heavenly(parsed);
    r.inputs["spec"] = spec.str();
    coframe.emplace(twistor::adapted_coframe_theta(spec));
  }
  try {
    const auto s = dist235::solve_structure_forms(*coframe);
    r.exact["solution_space_dim"] = std::to_string(s.solution_space_dim);
    r.exact["rank"] = std::to_string(s.rank);
    for (std::size_t k = 0; k < s.omega.size(); ++k) r.exact["Omega" + std::to_string(k + 1)] = s.omega[k].str();
    r.verdicts["structure"] = s.residual_zero();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAdapted) throw;
    r.verdicts["structure"] = false;
    r.messages.push_back(e.what());
  }
  fail_if(r, !r.verdicts["structure"]);
}

void verify_proposition(Report& r) {
  const auto table = twistor::jet_transform(6);
  try {
    const auto cert = twistor::verify_proposition(table);
    r.exact["substituted"] = cert.substituted.str();
    r.exact["expected"] = cert.expected.str();
    r.exact["difference"] = cert.difference.str();
    r.verdicts["proposition"] = cert.difference.is_zero();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PropositionMismatch) throw;
    r.verdicts["proposition"] = false;
    r.messages.push_back(e.what());
  }
  fail_if(r, !r.verdicts["proposition"]);
}

void verify_pairing(Report& r, const ParsedSpec& parsed) {
  const auto spec = to_heavenly(parsed);
  r.inputs["spec"] = spec.str();
  const auto m = twistor::plebanski_metric(spec);
  r.exact["direct"] = m.direct.str();
  r.exact["pairing"] = m.pairing.str();
  r.verdicts["pairing"] = m.pairing_matches();
  fail_if(r, !r.verdicts["pairing"]);
}

void verify_goursat(Report& r, const ParsedSpec& parsed) {
  const auto spec = to_heavenly(parsed);
  r.inputs["spec"] = spec.str();
  try {
    const auto g = twistor::goursat_change(spec);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        r.exact["T" + std::to_string(i + 1) + std::to_string(j + 1)] = g.transition(i, j).str();
      }
    }
    r.exact["determinant"] = g.determinant.str();
    r.exact["q"] = g.q.str();
    r.exact["f"] = g.f.str();
    if (g.df_dq) r.exact["df_dq"] = g.df_dq->str();
    r.verdicts["goursat"] = !g.determinant.is_zero();
    r.verdicts["df_dq_is_x5"] = g.df_dq && *g.df_dq == spec.variable(x5());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ChangeOfChartFailure) throw;
    r.verdicts["goursat"] = false;
    r.messages.push_back(e.what());
  }
  fail_if(r, !r.verdicts["goursat"] || !r.verdicts["df_dq_is_x5"]);
}

void verify_dictionary(Report& r) {
  const auto table = twistor::jet_transform(6);
  for (int p = 1; p <= 6; ++p) r.exact["f" + std::to_string(p)] = table.derivative(p).str();
  const RationalFunction t4 = theta_jet(4), t5 = theta_jet(5), t6 = theta_jet(6);
  r.verdicts["f1"] = table.derivative(1) == RationalFunction(x5());
  r.verdicts["f2"] = table.derivative(2) == RationalFunction(-1) / t4;
  r.verdicts["f3"] = table.derivative(3) == -t5 / t4.pow(3);
  r.verdicts["f4"] = table.derivative(4) == t6 / t4.pow(4) - RationalFunction(3) * t5.pow(2) / t4.pow(5);
  const auto g = twistor::goursat_change(twistor::HeavenlySpec::jet());
  r.verdicts["df_dq_is_x5"] = g.df_dq && *g.df_dq == RationalFunction(x5());
  bool all = true;
  for (const auto& [k, v] : r.verdicts) all = all && v;
  r.verdicts["dictionary"] = all;
  fail_if(r, !all);
}

}  // namespace

Report cmd_verify(std::string_view which, Pipeline pipeline, std::string_view spec_text, bool raw) {
  Stopwatch clock;
  Report r;
  r.command = "verify";
  r.inputs["check"] = std::string(which);
  if (which == "structure") {
    r.inputs["pipeline"] = std::string(pipeline_name(pipeline));
    verify_structure(r, pipeline, parse_spec(spec_text.empty() ? "jet" : spec_text), raw);
  } else if (which == "proposition") {
    verify_proposition(r);
  } else if (which == "pairing") {
    verify_pairing(r, parse_spec(spec_text.empty() ? "jet4" : spec_text));
  } else if (which == "goursat") {
    verify_goursat(r, parse_spec(spec_text.empty() ? "jet" : spec_text));
  } else if (which == "dictionary") {
    verify_dictionary(r);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown check '" + std::string(which) + "'");
  }
  r.timings["total"] = clock.seconds();
  return r;
}

Report cmd_bracket(std::string_view spec_text) {
  Stopwatch clock;
  const auto spec = to_monge(parse_spec(spec_text));
  Report r;
  r.command = "bracket";
  r.inputs["spec"] = spec.str();
  const auto b = dist235::bracket_frame(spec);
  static const char* names[] = {"X1", "X2", "X3", "X4", "X5"};
  for (std::size_t i = 0; i < 5; ++i) r.exact[names[i]] = b.fields[i].str();
  r.exact["determinant"] = b.determinant.str();
  r.verdicts["generic"] = b.generic();
  r.timings["total"] = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

std::vector<double> parse_init(std::string_view text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad number '" + item + "' in --init");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw Error(ErrorCode::InvalidArgument, "bad number '" + item + "' in --init");
    out.push_back(v);
  }
  return out;
}

Report cmd_ode(const OdeOptions& o) {
  Stopwatch clock;
  if (o.order != 7 && o.order != 8) throw Error(ErrorCode::InvalidArgument, "order must be 7 or 8");
  if (!(o.h > 0) || !(o.to > o.from)) throw Error(ErrorCode::InvalidArgument, "need h > 0 and to > from");
  if (o.monomial.has_value() == o.init.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --monomial and --init");
  }
  Report r;
  r.command = "ode";
  r.inputs["order"] = std::to_string(o.order);
  {
    std::ostringstream s;
    s.precision(17);
    s << o.from;
    r.inputs["from"] = s.str();
    s.str("");
    s << o.to;
    r.inputs["to"] = s.str();
    s.str("");
    s << o.h;
    r.inputs["h"] = s.str();
  }

  odesolve::ODEState init;
  if (o.monomial) {
    if (o.from <= 0 && o.monomial->get_den() != 1) {
      throw Error(ErrorCode::InvalidArgument, "a fractional power needs from > 0");
    }
    r.inputs["monomial"] = o.monomial->get_str();
    init = odesolve::monomial_state(*o.monomial, o.from, o.order);
  } else {
    if (o.init->size() != static_cast<std::size_t>(o.order)) {
      throw Error(ErrorCode::InvalidArgument, "--init needs " + std::to_string(o.order) + " values");
    }
    r.inputs["init"] = [&] {
      std::ostringstream s;
      s.precision(17);
      for (std::size_t k = 0; k < o.init->size(); ++k) s << (k ? "," : "") << (*o.init)[k];
      return s.str();
    }();
    init = odesolve::ODEState{o.from, *o.init};
  }

  const odesolve::Rhs rhs = o.order == 7 ? odesolve::Rhs([](const odesolve::ODEState& s) { return odesolve::rhs7(s); })
                                          : odesolve::Rhs([](const odesolve::ODEState& s) { return odesolve::rhs8(s); });
  odesolve::Trajectory traj;
  try {
    traj = odesolve::integrate(rhs, init, o.to, o.h);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularThirdDerivative) throw;
    r.verdicts["singular"] = true;
    r.messages.push_back(e.what());
    r.timings["total"] = clock.seconds();
    return r;
  }
  r.verdicts["singular"] = traj.singular;
  if (traj.singular) r.messages.push_back(traj.message);
  r.numeric["x_end"] = traj.back().x;
  r.numeric["y_end"] = traj.back().derivs[0];
  r.numeric["error_estimate"] = traj.error_estimate;
  r.numeric["steps"] = static_cast<double>(traj.size() - 1);

  if (o.monomial && !traj.singular) {
    const double exact_end = std::pow(o.to, o.monomial->get_d());
    r.numeric["endpoint_error"] = std::abs(traj.back().derivs[0] - exact_end);
    if (o.study_h > 0) {
      const auto study = odesolve::convergence_study(rhs, init, o.to, o.study_h, exact_end);
      r.numeric["study_h"] = o.study_h;
      r.numeric["study_error_h"] = study.error_h;
      r.numeric["study_error_half"] = study.error_half;
      r.numeric["convergence_ratio"] = study.ratio;
    }
  }

  if (o.order == 8 && !traj.singular) {
    try {
      const auto lc = odesolve::parametric_legendre_check(traj);
      r.numeric["df_dq_residual"] = lc.df_dq_residual;
      r.numeric["a5_residual"] = lc.a5_residual;
      r.numeric["a5_quartic"] = lc.a5_quartic;
      r.numeric["a5_relative"] = lc.a5_relative;
      r.verdicts["legendre"] = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotATransform) throw;
      r.verdicts["legendre"] = false;
      r.messages.push_back(e.what());
    }
    try {
      const auto red = odesolve::reduced_order_residual(traj);
      r.numeric["reduced_order_difference"] = red.max_difference;
      r.numeric["reduced_order_bound"] = red.bound;
      r.verdicts["reduced_order"] = red.ok();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularThirdDerivative) throw;
      r.verdicts["reduced_order"] = false;
      r.messages.push_back(e.what());
    }
  }

  if (o.csv_path) {
    std::ofstream out(*o.csv_path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + *o.csv_path);
    odesolve::write_csv(traj, out);
    r.inputs["csv"] = *o.csv_path;
  }
  r.timings["total"] = clock.seconds();
  return r;
}

}  // namespace cartan235::cli
