#include "hh3/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "hh3/biharmonic.hpp"
#include "hh3/errors.hpp"
#include "hh3/frenet.hpp"
#include "hh3/generators.hpp"
#include "hh3/verifier.hpp"
#include "json.hpp"

namespace hh3 {

namespace {

using json = nlohmann::ordered_json;

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

// Unreadable or malformed --input; reported with exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

Real parse_real(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  try {
    (void)std::stold(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw RejectedInput(flag + ": not a number: '" + text + "'");
  const Real v(text);
  using std::isfinite;
  if (!isfinite(v)) throw RejectedInput(flag + ": not finite: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

struct Range {
  Real lo, hi, step;
};

Range parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw RejectedInput("--range: expected lo:hi:step, got '" + text + "'");
  const Range r{parse_real("--range", parts[0]), parse_real("--range", parts[1]), parse_real("--range", parts[2])};
  if (!(r.step > 0)) throw RejectedInput("--range: step must be positive");
  if (!(r.hi > r.lo)) throw RejectedInput("--range: empty range");
  return r;
}

std::string number(double v) {
  char buf[64];
  if (v == 0) v = 0;  // no "-0"
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write to standard output");
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f << content;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot rename onto " + path + ": " + ec.message());
  }
}

// -- Curve selection -----------------------------------------------------------

struct CurveArgs {
  std::string family;
  std::string alpha0, nu0, m;
  std::string branch = "+";
  std::string b = "0", c1 = "0", c2 = "0", c3 = "0";
  int axis = 3;
  std::string profile_offset = "0.5", profile_rate = "1", profile_amplitude = "0", profile_omega = "1";
  std::string range = "0:1:0.1";
  bool as_printed = false;
};

void add_curve_options(CLI::App* app, CurveArgs& a) {
  app->add_option("--family", a.family,
                  "spacelike | timelike | spacelike-horizontal | b3zero-spacelike | b3zero-timelike | "
                  "timelike-horizontal | geodesic");
  app->add_option("--alpha0", a.alpha0, "alpha0 of the spacelike family");
  app->add_option("--nu0", a.nu0, "nu0 of the timelike family");
  app->add_option("--m", a.m, "rate of the timelike horizontal helix");
  app->add_option("--branch", a.branch, "slope root: + or - (also plus, minus)")->capture_default_str();
  app->add_option("--b", a.b, "phase b (b~ for timelike)")->capture_default_str();
  app->add_option("--c1", a.c1, "integration constant c1 (d1 for timelike)")->capture_default_str();
  app->add_option("--c2", a.c2, "integration constant c2 (d2)")->capture_default_str();
  app->add_option("--c3", a.c3, "integration constant c3 (d3)")->capture_default_str();
  app->add_option("--axis", a.axis, "geodesic axis 1..3")->capture_default_str();
  app->add_option("--profile-offset", a.profile_offset, "b3zero: alpha(s) offset")->capture_default_str();
  app->add_option("--profile-rate", a.profile_rate, "b3zero: alpha(s) rate")->capture_default_str();
  app->add_option("--profile-amplitude", a.profile_amplitude, "b3zero: sine amplitude")->capture_default_str();
  app->add_option("--profile-omega", a.profile_omega, "b3zero: sine frequency")->capture_default_str();
  app->add_option("--range", a.range, "lo:hi:step (use --range=-1:1:0.1 for a negative lo)")->capture_default_str();
  app->add_flag("--as-printed", a.as_printed, "use the printed slope constants instead of the quadratic roots");
}

Branch parse_branch(const std::string& text) {
  if (text == "+" || text == "plus") return Branch::Plus;
  if (text == "-" || text == "minus") return Branch::Minus;
  throw RejectedInput("--branch: expected + or -, got '" + text + "'");
}

FamilyParams family_params(const CurveArgs& a, const Range& range) {
  if (a.family.empty()) throw RejectedInput("--family is required");
  const auto kind = parse_family(a.family);
  if (!kind) throw RejectedInput("--family: unknown family '" + a.family + "'");

  FamilyParams p;
  p.kind = *kind;
  p.branch = parse_branch(a.branch);
  p.phase = parse_real("--b", a.b);
  p.constants = {parse_real("--c1", a.c1), parse_real("--c2", a.c2), parse_real("--c3", a.c3)};
  p.mode = a.as_printed ? SlopeMode::AsPrinted : SlopeMode::Quadratic;
  p.axis = a.axis;
  p.profile_offset = parse_real("--profile-offset", a.profile_offset);
  p.profile_rate = parse_real("--profile-rate", a.profile_rate);
  p.profile_amplitude = parse_real("--profile-amplitude", a.profile_amplitude);
  p.profile_omega = parse_real("--profile-omega", a.profile_omega);
  p.range = {range.lo, range.hi};

  const auto shape = [&](const char* flag, const std::string& value, bool wanted) {
    if (!value.empty() && !wanted) throw RejectedInput(std::string(flag) + " does not apply to family " + a.family);
    if (wanted) {
      if (value.empty()) throw RejectedInput(std::string(flag) + " is required for family " + a.family);
      p.shape = parse_real(flag, value);
    }
  };
  shape("--alpha0", a.alpha0, p.kind == FamilyKind::SpacelikeBiharmonic);
  shape("--nu0", a.nu0, p.kind == FamilyKind::TimelikeBiharmonic);
  shape("--m", a.m, p.kind == FamilyKind::TimelikeHorizontalHelix);

  const bool has_slope = p.kind == FamilyKind::SpacelikeBiharmonic || p.kind == FamilyKind::TimelikeBiharmonic ||
                         p.kind == FamilyKind::SpacelikeHorizontal;
  if (a.as_printed && !has_slope) throw RejectedInput("--as-printed applies only to families with a slope constant");
  if (p.kind == FamilyKind::Geodesic && (p.axis < 1 || p.axis > 3)) throw RejectedInput("--axis must be 1, 2 or 3");
  return p;
}

// Positions of a frame curve: RK4 from `start` with steps of at most 1e-3.
std::vector<Point3> integrate_positions(const Curve& curve, const Point3& start, const Range& r, std::size_t samples) {
  const long long per_step = std::max<long long>(1, static_cast<long long>(ceil(r.step / Real(1e-3))));
  const SampledCurve path = integrate_frame_curve(curve, start, {r.lo, r.hi}, r.step / per_step);
  std::vector<Point3> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(path.points()[i * static_cast<std::size_t>(per_step)]);
  return out;
}

Point3 parse_point(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw RejectedInput("--start: expected x:y:z, got '" + text + "'");
  return {parse_real("--start", parts[0]), parse_real("--start", parts[1]), parse_real("--start", parts[2])};
}

// -- Tables ----------------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

std::string render(const Table& t, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i] ? json_number(*row[i]) : json(nullptr);
      rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      if (row[i]) out += number(*row[i]);
    }
    out += "\n";
  }
  return out;
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") throw RejectedInput("--format: expected csv or json, got '" + format + "'");
}

Table generate_table(const CurveArgs& args, const std::string& start_text) {
  const Range range = parse_range(args.range);
  const std::vector<Real> grid = make_grid(range.lo, range.hi, range.step);
  const std::unique_ptr<Curve> curve = make_family(family_params(args, range));

  std::vector<Point3> positions;
  if (const auto* coords = dynamic_cast<const CoordinateCurve*>(curve.get())) {
    if (!start_text.empty()) throw RejectedInput("--start applies only to frame-defined families");
    for (const Real& s : grid) positions.push_back(coords->position(s));
  } else {
    const Point3 start = start_text.empty() ? Point3{} : parse_point(start_text);
    positions = integrate_positions(*curve, start, range, grid.size());
  }

  Table t{{"s", "x", "y", "z", "T1", "T2", "T3"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const FrameVector T = tangent_frame_components(*curve, grid[i]);
    const Point3& p = positions[i];
    t.rows.push_back({to_double(grid[i]), to_double(p.x), to_double(p.y), to_double(p.z), to_double(T.u1),
                      to_double(T.u2), to_double(T.u3)});
  }
  return t;
}

struct FrenetArgs {
  CurveArgs curve;
  std::string input;
  std::string fd_step;
  std::string tol;  // empty: analytic or finite-difference default
};

Table frenet_table(const FrenetArgs& a) {
  std::unique_ptr<Curve> owned;
  std::vector<Real> grid;
  bool numeric = !a.fd_step.empty();
  if (!a.input.empty()) {
    numeric = true;
    if (!a.curve.family.empty()) throw RejectedInput("--input and --family are mutually exclusive");
    std::ifstream in(a.input);
    if (!in) throw InputError("cannot read " + a.input);
    std::unique_ptr<SampledCurve> sampled;
    try {
      sampled = std::make_unique<SampledCurve>(read_sampled_curve_csv(in, a.input));
    } catch (const RejectedInput& e) {
      throw InputError(a.input + ": " + e.what());
    }
    const auto s = sampled->parameters();
    grid.assign(s.begin(), s.end());
    owned = std::move(sampled);
  } else {
    const Range range = parse_range(a.curve.range);
    grid = make_grid(range.lo, range.hi, range.step);
    owned = make_family(family_params(a.curve, range));
  }

  if (!a.fd_step.empty()) {
    const auto* closed = dynamic_cast<const ClosedFormCurve*>(owned.get());
    if (!closed) throw RejectedInput("--fd-step needs a closed-form coordinate family");
    const Real h = parse_real("--fd-step", a.fd_step);
    if (!(h > 0)) throw RejectedInput("--fd-step must be positive");
    owned = std::make_unique<FiniteDifferenceCurve>(closed->position_function(), FDConfig{h, true, 2},
                                                    "finite differences of " + closed->describe());
  }

  FrenetOptions options;
  options.tol = a.tol.empty() ? Real(numeric ? kFiniteDifferenceFrenetTolerance : kAnalyticFrenetTolerance)
                              : parse_real("--tol", a.tol);
  if (!(options.tol > 0)) throw RejectedInput("--tol must be positive");
  if (numeric) options.unit_speed_tol = Real(kSampledUnitSpeedTolerance);

  Table t{{"s", "k1", "k2", "eps1", "eps2", "eps3", "N3", "B3", "res_direct", "res_frenet", "degenerate"}, {}};
  for (const Real& s : grid) {
    const TangentJet jet = owned->tangent_jet(s);
    const double direct = to_double(residual_norm(bitension_direct(jet)));
    try {
      const FrenetData f = compute_frenet(jet, options);
      t.rows.push_back({to_double(s), to_double(f.k1), to_double(f.k2), double(f.eps1), double(f.eps2),
                        double(f.eps3), to_double(f.N3()), to_double(f.B3()), direct,
                        to_double(residual_norm(bitension_frenet(f))), 0.0});
    } catch (const DegenerateInput&) {
      t.rows.push_back({to_double(s), {}, {}, {}, {}, {}, {}, {}, direct, {}, 1.0});
    }
  }
  return t;
}

// Negative control for the verifier: flips the sign of ∇_{e1} e2.
ConnectionTable tampered_connection() {
  ConnectionTable c = standard_connection();
  c[0][1] = -1 * c[0][1];
  return c;
}

std::string verify_csv(const VerificationReport& report) {
  std::string out = "claim_id,status,max_residual\n";
  for (const CheckRow& row : report.checks) {
    out += row.claim_id + "," + std::string(to_string(row.status)) + "," + number(row.max_residual) + "\n";
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves, Frenet frames and bitension fields in the three-dimensional Lorentzian Heisenberg group"};
  app.name("hh3");
  app.require_subcommand(1);

  std::string output = "-";
  std::string format = "csv";

  CurveArgs gen_args;
  std::string start;
  CLI::App* gen = app.add_subcommand("generate", "sample a curve family: s,x,y,z,T1,T2,T3");
  add_curve_options(gen, gen_args);
  gen->add_option("--start", start, "x:y:z start point for frame-defined families (default origin)");

  FrenetArgs frenet_args, residual_args;
  CLI::App* frenet = app.add_subcommand("frenet", "Frenet data and bitension residuals along a curve");
  CLI::App* residual = app.add_subcommand("residual", "same table as frenet; named for the residual columns");
  for (auto [cmd, a] : {std::pair{frenet, &frenet_args}, std::pair{residual, &residual_args}}) {
    add_curve_options(cmd, a->curve);
    cmd->add_option("--input", a->input, "CSV file with header s,x,y,z instead of --family");
    cmd->add_option("--fd-step", a->fd_step, "use finite differences with this step (Richardson) for --family");
    cmd->add_option("--tol", a->tol, "geodesic / null-normal threshold on k1 (default 1e-9, or 1e-5 for --input and --fd-step)");
  }

  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> claims;
  bool tamper = false;
  CLI::App* verify = app.add_subcommand("verify", "run the claim registry and print the JSON report");
  verify->add_option("--seed", seed, "seed of the random sweeps")->capture_default_str();
  verify->add_option("--claim", claims, "run only this claim (repeatable)");
  verify->add_flag("--tamper-connection", tamper)->group("");

  for (CLI::App* cmd : {gen, frenet, residual, verify}) {
    cmd->add_option("--output,-o", output, "output path, - for standard output")->capture_default_str();
    cmd->add_option("--format", format, "csv or json")->capture_default_str();
  }
  verify->get_option("--format")->default_str("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends.
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: usage: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (verify->parsed()) {
      // The shared --format default is csv; verify defaults to json.
      if (verify->get_option("--format")->count() == 0) format = "json";
      check_format(format);
      VerifierConfig config;
      config.seed = seed;
      if (tamper) config.connection = tampered_connection();
      VerificationReport report;
      report.seed = seed;
      if (claims.empty()) {
        report = run_all(config);
      } else {
        for (const std::string& id : claims) report.checks.push_back(verify_claim(id, config));
      }
      write_output(output, format == "json" ? to_json(report) : verify_csv(report), out);
      const auto mismatches = manifest_mismatches(report);
      for (const std::string& m : mismatches) err << "error: manifest: " << m << "\n";
      return mismatches.empty() ? kExitOk : kExitManifestMismatch;
    }
    check_format(format);
    if (gen->parsed()) {
      write_output(output, render(generate_table(gen_args, start), format), out);
    } else {
      write_output(output, render(frenet_table(frenet->parsed() ? frenet_args : residual_args), format), out);
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace hh3
