#include "cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "output.hpp"
#include "specs.hpp"
#include "spinstat/atomic.hpp"
#include "spinstat/cosmology.hpp"
#include "spinstat/exchange.hpp"
#include "spinstat/hilbert_oracle.hpp"
#include "spinstat/prescriptions.hpp"
#include "spinstat/sweep.hpp"

namespace spinstat::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kDefaultModel = R"({"kind":"constant","value":1})";
constexpr const char* kVerifyModel = R"({"kind":"partial_wave","coeffs":[[0.6,0.2],[0.4,-0.3],[0.1,0.25]]})";
constexpr int kMaxExchangeTwiceSpin = 20;

struct Common {
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool degrees = false;
  std::string config;
};

struct Context {
  const Common& common;
  std::ostream& out;
  std::vector<std::string> warnings;
};

Json with_common(Json config, const Common& c) {
  config["format"] = c.format;
  config["seed"] = c.seed;
  config["tol"] = c.tol;
  return config;
}

Json document(const std::string& command, const Json& config, const std::vector<std::string>& warnings,
              Json result) {
  Json doc;
  doc["command"] = command;
  doc["config"] = config;
  doc["warnings"] = warnings;
  doc["result"] = std::move(result);
  return doc;
}

std::string basename(const std::string& path) { return std::filesystem::path(path).filename().string(); }

// csv: the table to stdout, or PREFIX.csv plus a PREFIX.json sidecar.
// json: one document with the summary and rows.
void emit(Context& ctx, const std::string& command, const Json& config, const CsvTable& table, Json summary,
          Json rows = nullptr) {
  const Common& c = ctx.common;
  if (c.format == "json") {
    if (!rows.is_null()) summary["rows"] = std::move(rows);
    const std::string text = document(command, config, ctx.warnings, std::move(summary)).dump(2) + "\n";
    if (c.out.empty()) ctx.out << text;
    else write_file(c.out + ".json", text);
    return;
  }
  if (c.out.empty()) {
    ctx.out << table.str();
    return;
  }
  write_file(c.out + ".csv", table.str());
  summary["outputs"] = Json::array({basename(c.out) + ".csv"});
  write_file(c.out + ".json", document(command, config, ctx.warnings, std::move(summary)).dump(2) + "\n");
}

void check_angles(const std::vector<double>& phis, bool increasing, const std::string& field) {
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (!(phis[i] > -kPi && phis[i] <= kPi)) {
      throw ValidationError(field, "angle " + format_double(phis[i]) + " outside (-pi, pi]");
    }
    if (increasing && i > 0 && !(phis[i] > phis[i - 1])) throw ValidationError(field, "angles must be strictly increasing");
  }
}

std::vector<double> phi_grid(const std::string& explicit_phi, int n_phi, bool degrees) {
  if (explicit_phi.empty()) {
    if (n_phi < 1) throw ValidationError("--n-phi", "must be at least 1");
    return uniform_phi_grid(n_phi);
  }
  auto phis = parse_angles(explicit_phi, degrees, "--phi");
  check_angles(phis, true, "--phi");
  return phis;
}

std::string join_names(const std::vector<Prescription>& ps) {
  std::string s;
  for (Prescription p : ps) s += (s.empty() ? "" : ",") + std::string(to_string(p));
  return s;
}

Json vec3_json(const Vec3& v) { return Json{{"x", v.x()}, {"y", v.y()}, {"z", v.z()}}; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- xsec

struct XsecArgs {
  std::string s = "1/2";
  std::string alpha = "+x";
  std::string beta = "+x";
  std::string top;
  std::string bottom;
  std::string model = kDefaultModel;
  std::string prescriptions = "standard,dynamical,working";
  std::string phi;
  int n_phi = 360;
};

int cmd_xsec(const XsecArgs& a, Context& ctx) {
  const HalfInt s = parse_spin(a.s, "--s");
  const SpinState alpha = parse_state(a.alpha, s, "--alpha", ctx.warnings);
  const SpinState beta = parse_state(a.beta, s, "--beta", ctx.warnings);
  std::optional<SpinState> top, bottom;
  if (!a.top.empty()) top = parse_state(a.top, s, "--top", ctx.warnings);
  if (!a.bottom.empty()) bottom = parse_state(a.bottom, s, "--bottom", ctx.warnings);
  const ModelSpec model = parse_model(a.model, "--model");
  const auto prescriptions = parse_prescriptions(a.prescriptions, "--prescriptions");
  const auto phis = phi_grid(a.phi, a.n_phi, ctx.common.degrees);

  const ScatterConfig cfg = (top || bottom)
                                ? ScatterConfig(alpha, beta, model.model, top.value_or(alpha), bottom.value_or(beta))
                                : ScatterConfig(alpha, beta, model.model);

  Json config{{"s", s.str()}, {"alpha", a.alpha}, {"beta", a.beta}};
  if (!a.top.empty()) config["top"] = a.top;
  if (!a.bottom.empty()) config["bottom"] = a.bottom;
  config["model"] = model.canonical;
  config["prescriptions"] = join_names(prescriptions);
  if (a.phi.empty()) config["n-phi"] = a.n_phi;
  else config["phi"] = phis;
  config = with_common(std::move(config), ctx.common);

  std::vector<CrossSectionCurve> curves;
  for (Prescription p : prescriptions) curves.push_back(cross_section_curve(cfg, p, phis));

  const Common& c = ctx.common;
  if (c.format == "json") {
    Json result{{"phi", phis}, {"curves", Json::object()}};
    for (const auto& curve : curves) result["curves"][std::string(to_string(curve.prescription))] = curve.values;
    const std::string text = document("xsec", config, ctx.warnings, std::move(result)).dump(2) + "\n";
    if (c.out.empty()) ctx.out << text;
    else write_file(c.out + ".json", text);
    return kExitOk;
  }

  if (c.out.empty()) {
    std::vector<std::string> header{"phi"};
    for (const auto& curve : curves) header.push_back("w_" + std::string(to_string(curve.prescription)));
    CsvTable table(header);
    for (std::size_t i = 0; i < phis.size(); ++i) {
      std::vector<std::string> row{format_double(phis[i])};
      for (const auto& curve : curves) row.push_back(format_double(curve.values[i]));
      table.add_row(std::move(row));
    }
    ctx.out << table.str();
    return kExitOk;
  }

  Json outputs = Json::array();
  for (const auto& curve : curves) {
    CsvTable table({"phi", "w"});
    for (std::size_t i = 0; i < phis.size(); ++i) table.add_row({format_double(phis[i]), format_double(curve.values[i])});
    const std::string path = c.out + "_" + std::string(to_string(curve.prescription)) + ".csv";
    write_file(path, table.str());
    outputs.push_back(basename(path));
  }
  write_file(c.out + ".json", document("xsec", config, ctx.warnings, Json{{"outputs", outputs}}).dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string s = "1/2";
  std::string model = kDefaultModel;
  int n_states = 100;
  int n_phi = 360;
};

int cmd_sweep(const SweepArgs& a, Context& ctx) {
  SweepParams params;
  params.s = parse_spin(a.s, "--s");
  const ModelSpec model = parse_model(a.model, "--model");
  if (a.n_states < 0) throw ValidationError("--n-states", "must be non-negative");
  if (a.n_phi < 1) throw ValidationError("--n-phi", "must be at least 1");
  if (!(ctx.common.tol >= 0.0)) throw ValidationError("--tol", "must be non-negative");
  params.n_states = a.n_states;
  params.n_phis = a.n_phi;
  params.seed = ctx.common.seed;
  params.tol = ctx.common.tol;

  const SweepReport report = agreement_sweep(model.model, params);

  const Json config = with_common(
      Json{{"s", params.s.str()}, {"model", model.canonical}, {"n-states", a.n_states}, {"n-phi", a.n_phi}},
      ctx.common);

  CsvTable table({"pair_id", "kind", "alpha_desc", "beta_desc", "max_abs_diff", "phi_at_max", "classification"});
  Json rows = Json::array();
  int eigen_pairs = 0;
  for (const SweepRow& r : report.rows) {
    const std::string kind = r.eigen_pair ? "eigen" : "random";
    const std::string cls = r.agree ? "AGREE" : "DISAGREE";
    eigen_pairs += r.eigen_pair ? 1 : 0;
    table.add_row({std::to_string(r.pair_id), kind, r.alpha_desc, r.beta_desc, format_double(r.max_abs_diff),
                   format_double(r.phi_at_max), cls});
    rows.push_back(Json{{"pair_id", r.pair_id},
                        {"kind", kind},
                        {"alpha_desc", r.alpha_desc},
                        {"beta_desc", r.beta_desc},
                        {"max_abs_diff", r.max_abs_diff},
                        {"phi_at_max", r.phi_at_max},
                        {"classification", cls}});
  }
  const int total = static_cast<int>(report.rows.size());
  Json summary{{"pairs", total},
               {"eigen_pairs", eigen_pairs},
               {"agree", report.agree_count()},
               {"disagree", total - report.agree_count()}};
  emit(ctx, "sweep", config, table, std::move(summary), std::move(rows));
  return kExitOk;
}

// ---------------------------------------------------------------- cll

struct CllArgs {
  std::string s = "1/2";
  std::string model = kDefaultModel;
  std::string prescriptions = "standard,dynamical";
  std::string phi = "pi/2";
};

int cmd_cll(const CllArgs& a, Context& ctx) {
  const HalfInt s = parse_spin(a.s, "--s");
  const ModelSpec model = parse_model(a.model, "--model");
  const auto prescriptions = parse_prescriptions(a.prescriptions, "--prescriptions");
  const auto phis = parse_angles(a.phi, ctx.common.degrees, "--phi");
  check_angles(phis, false, "--phi");

  const Json config = with_common(Json{{"s", s.str()},
                                       {"model", model.canonical},
                                       {"prescriptions", join_names(prescriptions)},
                                       {"phi", phis}},
                                  ctx.common);

  std::vector<std::string> header{"phi"};
  for (Prescription p : prescriptions) header.push_back("c_ll_" + std::string(to_string(p)));
  CsvTable table(header);
  Json rows = Json::array();
  int undefined = 0;
  for (double phi : phis) {
    std::vector<std::string> row{format_double(phi)};
    Json jrow{{"phi", phi}};
    for (Prescription p : prescriptions) {
      const std::string key(to_string(p));
      try {
        const double value = c_ll(model.model, s, p, phi);
        row.push_back(format_double(value));
        jrow[key] = value;
      } catch (const UndefinedObservable&) {
        row.push_back("undefined");
        jrow[key] = nullptr;
        ++undefined;
      }
    }
    table.add_row(std::move(row));
    rows.push_back(std::move(jrow));
  }
  if (undefined > 0) {
    ctx.warnings.push_back(std::to_string(undefined) + " value(s) undefined: w(parallel) + w(antiparallel) vanishes");
  }
  emit(ctx, "cll", config, table, Json{{"points", phis.size()}, {"undefined", undefined}}, std::move(rows));
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string s = "1/2";
  std::string model = kVerifyModel;
  int samples = 50;
};

int cmd_verify(const VerifyArgs& a, Context& ctx, std::ostream& err) {
  const HalfInt s = parse_spin(a.s, "--s");
  if (s > oracle::kMaxOracleSpin) {
    throw ValidationError("--s", "oracle cap exceeded: s = " + s.str() + ", the Hilbert-space check supports s <= " +
                                     oracle::kMaxOracleSpin.str());
  }
  const ModelSpec model = parse_model(a.model, "--model");
  if (a.samples < 1) throw ValidationError("--samples", "must be at least 1");
  const double tol = ctx.common.tol;
  if (!(tol >= 0.0)) throw ValidationError("--tol", "must be non-negative");

  const Json config =
      with_common(Json{{"s", s.str()}, {"model", model.canonical}, {"samples", a.samples}}, ctx.common);

  std::mt19937_64 rng(ctx.common.seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const Prescription all[] = {Prescription::StandardSSC, Prescription::DynamicalGM, Prescription::WorkingSOmega};

  CsvTable table({"sample", "prescription", "phi", "closed_form", "oracle", "abs_diff"});
  Json rows = Json::array();
  double worst = 0.0;
  int worst_sample = 0;
  std::string worst_prescription = "standard";
  bool passed = true;
  for (int k = 0; k < a.samples; ++k) {
    const SpinState alpha = random_state(s, rng), beta = random_state(s, rng);
    double phi = angle(rng);
    if (phi == -kPi) phi = kPi;
    // Every fifth sample also uses detector states different from the inputs.
    const ScatterConfig cfg = k % 5 == 4 ? ScatterConfig(alpha, beta, model.model, random_state(s, rng), random_state(s, rng))
                                         : ScatterConfig(alpha, beta, model.model);
    for (Prescription p : all) {
      const double closed = cross_section(cfg, phi, p);
      const double brute = oracle::oracle_w(cfg, phi, p);
      const double diff = std::abs(closed - brute);
      passed = passed && diff < tol;
      if (diff > worst || (k == 0 && p == all[0])) {
        worst = diff;
        worst_sample = k;
        worst_prescription = std::string(to_string(p));
      }
      table.add_row({std::to_string(k), std::string(to_string(p)), format_double(phi), format_double(closed),
                     format_double(brute), format_double(diff)});
      rows.push_back(Json{{"sample", k},
                          {"prescription", to_string(p)},
                          {"phi", phi},
                          {"closed_form", closed},
                          {"oracle", brute},
                          {"abs_diff", diff}});
    }
  }

  Json summary{{"samples", a.samples},
               {"checks", 3 * a.samples},
               {"worst_deviation", worst},
               {"worst_sample", worst_sample},
               {"worst_prescription", worst_prescription},
               {"tol", tol},
               {"passed", passed}};
  emit(ctx, "verify", config, table, std::move(summary), std::move(rows));
  err << "verify: " << (passed ? "PASS" : "FAIL") << " worst |closed form - oracle| = " << format_double(worst)
      << " (sample " << worst_sample << ", " << worst_prescription << "), tol " << format_double(tol) << "\n";
  return passed ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- metric

struct MetricArgs {
  double omega = 1.0;
  double a = 1.0;
  double t = 0.0;
  double x = 1.0;
  double y = 0.0;
  double z = 0.0;
};

int cmd_metric(const MetricArgs& a, Context& ctx) {
  if (!(a.a > 0.0)) throw ValidationError("--a", "scale factor must be positive");
  const cosmology::Vec4 point(a.t, a.x, a.y, a.z);
  const auto metric = cosmology::rotating_rw_metric(a.omega, a.a, point);
  const auto pulled = cosmology::pulled_back_rw_metric(a.omega, a.a, point);
  const double deviation = (metric.g - pulled.g).cwiseAbs().maxCoeff();

  const Json config = with_common(
      Json{{"omega", a.omega}, {"a", a.a}, {"t", a.t}, {"x", a.x}, {"y", a.y}, {"z", a.z}}, ctx.common);

  static const char* kNames = "txyz";
  CsvTable table({"quantity", "value"});
  Json components = Json::object(), g = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) {
      row.push_back(metric.g(i, j));
      if (j < i) continue;
      const std::string name = std::string("g_") + kNames[i] + kNames[j];
      components[name] = metric.g(i, j);
      table.add_row({name, format_double(metric.g(i, j))});
    }
    g.push_back(std::move(row));
  }
  const bool lorentzian = cosmology::has_lorentzian_signature(metric);
  table.add_row({"lorentzian", bool_str(lorentzian)});
  table.add_row({"pullback_max_deviation", format_double(deviation)});

  Json potential = nullptr, field = nullptr;
  if (a.a == 1.0) {
    const Vec3 p(a.x, a.y, a.z);
    const Vec3 pot = cosmology::extract_potential(a.omega, p);
    const Vec3 b = cosmology::numerical_curl(
        [omega = a.omega](const Vec3& q) { return cosmology::extract_potential(omega, q); }, p, 1e-3);
    potential = vec3_json(pot);
    field = vec3_json(b);
    for (int i = 0; i < 3; ++i) table.add_row({std::string("A_") + kNames[i + 1], format_double(pot[i])});
    for (int i = 0; i < 3; ++i) table.add_row({std::string("B_") + kNames[i + 1], format_double(b[i])});
  } else {
    ctx.warnings.push_back("potential and field need a = 1; only the metric is reported");
  }

  Json summary{{"g", g},
               {"components", components},
               {"lorentzian", lorentzian},
               {"pullback_max_deviation", deviation},
               {"potential", potential},
               {"field", field}};
  emit(ctx, "metric", config, table, std::move(summary));
  return kExitOk;
}

// ---------------------------------------------------------------- exchange

struct ExchangeArgs {
  std::string s = "1/2";
};

int cmd_exchange(const ExchangeArgs& a, Context& ctx) {
  const HalfInt s = parse_spin(a.s, "--s");
  if (s.twice() > kMaxExchangeTwiceSpin) {
    throw ValidationError("--s", "exchange check supports s <= " + HalfInt::from_twice(kMaxExchangeTwiceSpin).str());
  }
  const exchange::ExchangePlan plan = exchange::default_plan(s);
  const exchange::PostulateReport report = exchange::exchange_postulate_check(plan, ctx.common.seed);

  const Json config = with_common(Json{{"s", s.str()}}, ctx.common);

  CsvTable table({"m_a", "m_b", "axis", "constructible", "phase_re", "phase_im", "label_swapped", "phase_matches",
                  "passed", "note"});
  Json rows = Json::array();
  for (std::size_t i = 0; i < report.sectors.size(); ++i) {
    const exchange::SectorCheck& c = report.sectors[i];
    const exchange::SectorAxis& sector = plan.sectors[i];
    std::string axis = "none";
    if (sector.axis) {
      axis = format_double(sector.axis->x()) + " " + format_double(sector.axis->y()) + " " +
             format_double(sector.axis->z());
    }
    table.add_row({c.ma.str(), c.mb.str(), axis, bool_str(c.constructible),
                   c.constructible ? format_double(c.phase.real()) : "", c.constructible ? format_double(c.phase.imag()) : "",
                   bool_str(c.label_swapped), bool_str(c.phase_matches), bool_str(c.passed()), sector.note});
    rows.push_back(Json{{"m_a", c.ma.str()},
                        {"m_b", c.mb.str()},
                        {"axis", sector.axis ? vec3_json(*sector.axis) : Json(nullptr)},
                        {"constructible", c.constructible},
                        {"phase", c.constructible ? complex_to_json(c.phase) : Json(nullptr)},
                        {"label_swapped", c.label_swapped},
                        {"phase_matches", c.phase_matches},
                        {"invariance_forces_sign", c.invariance_forces_sign},
                        {"passed", c.passed()},
                        {"note", sector.note}});
  }
  Json summary{{"s", s.str()},
               {"expected_sign", report.expected_sign},
               {"forced_sign", report.forced_sign ? Json(*report.forced_sign) : Json(nullptr)},
               {"sectors", report.sectors.size()},
               {"constructible", report.constructible_count()},
               {"superposition_ok", report.superposition_ok},
               {"passed", report.passed}};
  emit(ctx, "exchange", config, table, std::move(summary), std::move(rows));
  return report.passed ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- atomic

struct AtomicArgs {
  double v = 0.1;
  double omega = 1.0;
  std::string s = "1/2";
  std::string sz = "1/2";
};

int cmd_atomic(const AtomicArgs& a, Context& ctx) {
  atomic::OrbitParams p;
  p.v = a.v;
  p.omega = a.omega;
  p.s = parse_spin(a.s, "--s");
  try {
    p.sz = HalfInt::parse(a.sz);
  } catch (const std::invalid_argument& e) {
    throw ValidationError("--sz", e.what());
  }
  if (!(p.v > 0.0 && p.v < 1.0)) throw ValidationError("--v", "speed must satisfy 0 < v < 1");
  if (!valid_projection(p.s, p.sz)) throw ValidationError("--sz", p.sz.str() + " is not a projection of s = " + p.s.str());

  const atomic::RatioReport r = atomic::ratio_report(p);
  const Json config =
      with_common(Json{{"v", a.v}, {"omega", a.omega}, {"s", p.s.str()}, {"sz", p.sz.str()}}, ctx.common);

  CsvTable table({"quantity", "value"});
  const std::pair<const char*, double> values[] = {{"gamma", r.gamma},
                                                   {"gm_shift", r.gm_shift},
                                                   {"thomas_shift", r.thomas_shift},
                                                   {"gm_splitting", r.gm_splitting},
                                                   {"ratio", r.ratio},
                                                   {"small_v_estimate", r.small_v_estimate}};
  Json summary = Json::object();
  for (const auto& [name, value] : values) {
    table.add_row({name, format_double(value)});
    summary[name] = value;
  }
  table.add_row({"note", r.note});
  summary["note"] = r.note;
  emit(ctx, "atomic", config, table, std::move(summary));
  return kExitOk;
}

// ---------------------------------------------------------------- config files

std::string config_token(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_array()) {
    std::string joined;
    for (const Json& e : v) joined += (joined.empty() ? "" : ",") + config_token(e);
    return joined;
  }
  return v.dump();
}

// Flags recreating a config echo (or a whole sidecar document) for `command`.
std::vector<std::string> config_flags(const std::string& path, const std::string& command) {
  std::ifstream f(path);
  if (!f) throw ValidationError("--config", "cannot read '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ValidationError("--config", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("--config", "expected a JSON object");
  if (doc.contains("command") && doc["command"] != command) {
    throw ValidationError("--config", "file is for '" + doc["command"].dump() + "', not '" + command + "'");
  }
  const Json& cfg = doc.contains("config") ? doc["config"] : doc;
  if (!cfg.is_object()) throw ValidationError("--config", "'config' must be an object");

  std::vector<std::string> flags;
  for (const auto& [key, value] : cfg.items()) {
    if (key == "command" || value.is_null()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) flags.push_back("--" + key);
      continue;
    }
    flags.push_back("--" + key + "=" + config_token(value));
  }
  return flags;
}

void add_common(CLI::App& cmd, Common& c, double default_tol) {
  c.tol = default_tol;
  cmd.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd.add_option("--out", c.out, "Output prefix; stdout when omitted");
  cmd.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd.add_option("--tol", c.tol, "Tolerance")->capture_default_str();
  cmd.add_flag("--degrees", c.degrees, "Read --phi values in degrees");
  cmd.add_option("--config", c.config, "JSON config or a previous run's .json sidecar; later flags override it");
}

} // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = args_in;
  std::array<Common, 7> commons;
  XsecArgs xsec_args;
  SweepArgs sweep_args;
  CllArgs cll_args;
  VerifyArgs verify_args;
  MetricArgs metric_args;
  ExchangeArgs exchange_args;
  AtomicArgs atomic_args;

  try {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) {
        config_path = args[i + 1];
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      }
      if (args[i].rfind("--config=", 0) == 0) {
        config_path = args[i].substr(9);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
    if (!config_path.empty()) {
      const auto command = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind('-', 0) != 0; });
      if (command == args.end()) throw ValidationError("--config", "a subcommand is required");
      const auto flags = config_flags(config_path, *command);
      args.insert(command + 1, flags.begin(), flags.end());
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  CLI::App app{"Spin-statistics scattering toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto* xsec = app.add_subcommand("xsec", "Cross-section curves for the three prescriptions");
  add_common(*xsec, commons[0], 1e-10);
  xsec->add_option("--s", xsec_args.s, "Spin, e.g. 1/2")->capture_default_str();
  xsec->add_option("--alpha", xsec_args.alpha, "Initial spin of the left particle")->capture_default_str();
  xsec->add_option("--beta", xsec_args.beta, "Initial spin of the right particle")->capture_default_str();
  xsec->add_option("--top", xsec_args.top, "Detected spin at the top detector (default: alpha)");
  xsec->add_option("--bottom", xsec_args.bottom, "Detected spin at the bottom detector (default: beta)");
  xsec->add_option("--model", xsec_args.model, "Amplitude model as JSON")->capture_default_str();
  xsec->add_option("--prescriptions", xsec_args.prescriptions, "Comma list of standard,dynamical,working")
      ->capture_default_str();
  xsec->add_option("--phi", xsec_args.phi, "Comma list of angles (overrides --n-phi)");
  xsec->add_option("--n-phi", xsec_args.n_phi, "Points on the uniform grid")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Where standard and dynamical agree");
  add_common(*sweep, commons[1], 1e-9);
  sweep->add_option("--s", sweep_args.s, "Spin")->capture_default_str();
  sweep->add_option("--model", sweep_args.model, "Amplitude model as JSON")->capture_default_str();
  sweep->add_option("--n-states", sweep_args.n_states, "Random state pairs")->capture_default_str();
  sweep->add_option("--n-phi", sweep_args.n_phi, "Points on the uniform grid")->capture_default_str();

  auto* cll = app.add_subcommand("cll", "Longitudinal spin-correlation asymmetry");
  add_common(*cll, commons[2], 1e-10);
  cll->add_option("--s", cll_args.s, "Spin")->capture_default_str();
  cll->add_option("--model", cll_args.model, "Amplitude model as JSON")->capture_default_str();
  cll->add_option("--prescriptions", cll_args.prescriptions, "Comma list")->capture_default_str();
  cll->add_option("--phi", cll_args.phi, "Comma list of angles")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Closed forms against the explicit Hilbert-space computation");
  add_common(*verify, commons[3], 1e-10);
  verify->add_option("--s", verify_args.s, "Spin, at most 3/2")->capture_default_str();
  verify->add_option("--model", verify_args.model, "Amplitude model as JSON")->capture_default_str();
  verify->add_option("--samples", verify_args.samples, "Random (state, angle) samples")->capture_default_str();

  auto* metric = app.add_subcommand("metric", "Rotating-frame metric, potential and field at a point");
  add_common(*metric, commons[4], 1e-10);
  metric->add_option("--omega", metric_args.omega, "Frame angular velocity")->capture_default_str();
  metric->add_option("--a", metric_args.a, "Scale factor now")->capture_default_str();
  metric->add_option("--t", metric_args.t)->capture_default_str();
  metric->add_option("--x", metric_args.x)->capture_default_str();
  metric->add_option("--y", metric_args.y)->capture_default_str();
  metric->add_option("--z", metric_args.z)->capture_default_str();

  auto* exchange_cmd = app.add_subcommand("exchange", "Rotation-built exchange operator and its phase");
  add_common(*exchange_cmd, commons[5], 1e-10);
  exchange_cmd->add_option("--s", exchange_args.s, "Spin")->capture_default_str();

  auto* atomic_cmd = app.add_subcommand("atomic", "Gravito-magnetic shift against the Thomas term");
  add_common(*atomic_cmd, commons[6], 1e-10);
  atomic_cmd->add_option("--v", atomic_args.v, "Orbital speed over c")->capture_default_str();
  atomic_cmd->add_option("--omega", atomic_args.omega, "Orbital angular velocity")->capture_default_str();
  atomic_cmd->add_option("--s", atomic_args.s, "Spin")->capture_default_str();
  atomic_cmd->add_option("--sz", atomic_args.sz, "Spin projection")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::array<CLI::App*, 7> order{xsec, sweep, cll, verify, metric, exchange_cmd, atomic_cmd};
  const auto slot = static_cast<std::size_t>(std::find(order.begin(), order.end(), chosen) - order.begin());
  Context ctx{commons.at(slot), out, {}};
  int code = kExitValidation;
  try {
    if (xsec->parsed()) code = cmd_xsec(xsec_args, ctx);
    else if (sweep->parsed()) code = cmd_sweep(sweep_args, ctx);
    else if (cll->parsed()) code = cmd_cll(cll_args, ctx);
    else if (verify->parsed()) code = cmd_verify(verify_args, ctx, err);
    else if (metric->parsed()) code = cmd_metric(metric_args, ctx);
    else if (exchange_cmd->parsed()) code = cmd_exchange(exchange_args, ctx);
    else if (atomic_cmd->parsed()) code = cmd_atomic(atomic_args, ctx);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitValidation;
  }
  for (const std::string& w : ctx.warnings) err << "warning: " << w << "\n";
  return code;
}

} // namespace spinstat::cli
