#include "app.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fourpoint/error.hpp"
#include "fourpoint/forms.hpp"
#include "fourpoint/invariants.hpp"
#include "fourpoint/moebius.hpp"
#include "fourpoint/shape.hpp"
#include "literal.hpp"
#include "selfcheck.hpp"

namespace fourpoint::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> positional;
  bool json = false;
  bool orbit = false;
  bool points = false;
  bool help = false;
  int digits = 15;
  std::optional<std::string> to;
  std::optional<std::string> svg;
  std::optional<std::size_t> samples;
};

// Options with a value; everything else starting with "--" is a switch.
const std::map<std::string_view, std::string_view> kValueOptions{
    {"--digits", "N"}, {"--to", "KIND"}, {"--svg", "FILE"}, {"--samples", "N"}};

std::size_t parse_count(const std::string& flag, const std::string& text, std::size_t lo,
                        std::size_t hi) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < lo || value > hi) {
    throw UsageError(flag + " expects an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got '" + text + "'");
  }
  return value;
}

// Tokens beginning with "--" are options; a lone "-..." is a literal such
// as "-1" or "-i".
Options parse_options(std::span<const std::string> args) {
  Options opt;
  bool literal_only = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (literal_only || a.rfind("--", 0) != 0) {
      opt.positional.push_back(a);
      continue;
    }
    if (a == "--") {
      literal_only = true;
      continue;
    }
    std::string name = a;
    std::optional<std::string> value;
    if (const auto eq = a.find('='); eq != std::string::npos) {
      name = a.substr(0, eq);
      value = a.substr(eq + 1);
    }
    if (kValueOptions.contains(name)) {
      if (!value) {
        if (i + 1 >= args.size()) throw UsageError(name + " needs a value");
        value = args[++i];
      }
      if (name == "--digits") opt.digits = static_cast<int>(parse_count(name, *value, 1, 17));
      if (name == "--to") opt.to = *value;
      if (name == "--svg") opt.svg = *value;
      if (name == "--samples") opt.samples = parse_count(name, *value, 1, 10'000'000);
      continue;
    }
    if (value) throw UsageError(name + " takes no value");
    if (name == "--json") {
      opt.json = true;
    } else if (name == "--orbit") {
      opt.orbit = true;
    } else if (name == "--points") {
      opt.points = true;
    } else if (name == "--help") {
      opt.help = true;
    } else {
      throw UsageError("unknown option " + name);
    }
  }
  return opt;
}

json to_json(const SpherePoint& p) {
  if (p.is_infinite()) return "inf";
  return json{{"re", p.value().real()}, {"im", p.value().imag()}};
}

json to_json(Cx z) { return to_json(SpherePoint(z)); }

// Output sink for one command: either text lines or a single JSON object.
class Report {
 public:
  Report(std::string command, const Options& opt) : opt_(opt) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = json::object();
    doc_["result"] = json::object();
    doc_["tolerances"] = json::object();
  }

  json& inputs() { return doc_["inputs"]; }
  json& result() { return doc_["result"]; }
  json& tolerances() { return doc_["tolerances"]; }
  std::ostringstream& text() { return text_; }

  std::string fmt(const SpherePoint& p) const { return format_point(p, opt_.digits); }
  std::string fmt(double x) const { return format_real(x, opt_.digits); }

  void flush(std::ostream& out) const {
    if (opt_.json) {
      out << doc_.dump() << "\n";
    } else {
      out << text_.str();
    }
  }

 private:
  const Options& opt_;
  json doc_;
  std::ostringstream text_;
};

void expect_args(const Options& opt, std::size_t lo, std::size_t hi, const char* what) {
  const std::size_t n = opt.positional.size() - 1;
  if (n < lo || n > hi) throw UsageError(std::string("expected ") + what);
}

std::vector<SpherePoint> parse_points(const Options& opt) {
  std::vector<SpherePoint> pts;
  for (std::size_t i = 1; i < opt.positional.size(); ++i) {
    pts.push_back(parse_complex(opt.positional[i]));
  }
  if (pts.size() == 3) pts.push_back(SpherePoint::infinity());
  return pts;
}

FourPoints four_points(const Options& opt) {
  expect_args(opt, 3, 4, "three or four points (three imply z4 = inf)");
  const auto p = parse_points(opt);
  return FourPoints(p[0], p[1], p[2], p[3]);
}

json points_json(const FourPoints& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

std::string angles_text(const Report& r, const std::array<double, 3>& a) {
  return "(" + r.fmt(a[0]) + ", " + r.fmt(a[1]) + ", " + r.fmt(a[2]) + ")";
}

int cmd_xratio(const Options& opt, Report& r) {
  const FourPoints pts = four_points(opt);
  const Cx chi = cross_ratio(pts);
  r.inputs()["points"] = points_json(pts);
  r.result()["chi"] = to_json(chi);
  r.text() << "chi = " << r.fmt(chi) << "\n";
  if (opt.orbit) {
    const auto orbit = cross_ratio_orbit(chi);
    json arr = json::array();
    r.text() << "orbit =";
    for (const Cx v : orbit.values()) {
      arr.push_back(to_json(v));
      r.text() << " " << r.fmt(v);
    }
    r.text() << "\n";
    r.result()["orbit"] = std::move(arr);
    r.tolerances()["orbit_dedup"] = kDefaultTol;
  }
  return kExitOk;
}

int cmd_orbit(const Options& opt, Report& r) {
  expect_args(opt, 1, 1, "one cross ratio");
  const Cx lambda = parse_finite_complex(opt.positional[1]);
  const auto orbit = cross_ratio_orbit(lambda);
  r.inputs()["lambda"] = to_json(lambda);
  json arr = json::array();
  for (const Cx v : orbit.values()) {
    arr.push_back(to_json(v));
    r.text() << r.fmt(v) << "\n";
  }
  r.result()["size"] = orbit.size();
  r.result()["orbit"] = std::move(arr);
  r.result()["J"] = to_json(j_invariant(lambda));
  r.tolerances()["orbit_dedup"] = kDefaultTol;
  return kExitOk;
}

int cmd_jinv(const Options& opt, Report& r) {
  SpherePoint j;
  if (opt.points) {
    const FourPoints pts = four_points(opt);
    r.inputs()["points"] = points_json(pts);
    j = j_of_points(pts);
  } else {
    expect_args(opt, 1, 1, "one cross ratio, or --points z1 z2 z3 [z4]");
    const SpherePoint lambda = parse_complex(opt.positional[1]);
    r.inputs()["lambda"] = to_json(lambda);
    j = j_invariant(lambda);
  }
  r.result()["J"] = to_json(j);
  r.text() << "J = " << r.fmt(j) << "\n";
  return kExitOk;
}

struct Operand {
  SpherePoint j;
  json description;
};

Operand evaluate_operand(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    const SpherePoint lambda = parse_complex(text);
    return {j_invariant(lambda), json{{"lambda", to_json(lambda)}}};
  }
  const FormOperand op = parse_form(text);
  if (const auto* pts = std::get_if<FourPoints>(&op)) {
    return {j_of_points(*pts), json{{"points", points_json(*pts)}}};
  }
  const auto& form = std::get<CurveForm>(op);
  return {j_of_form(form), json{{"form", format_form(form, 17)}}};
}

int cmd_equiv(const Options& opt, Report& r) {
  expect_args(opt, 2, 2, "two forms, e.g. legendre:-1 points:1,i,-1,-i");
  const Operand a = evaluate_operand(opt.positional[1]);
  const Operand b = evaluate_operand(opt.positional[2]);
  const bool same = j_values_equal(a.j, b.j);
  r.inputs()["a"] = a.description;
  r.inputs()["b"] = b.description;
  r.result()["equivalent"] = same;
  r.result()["J_a"] = to_json(a.j);
  r.result()["J_b"] = to_json(b.j);
  r.tolerances()["j_rel"] = kJTol;
  r.text() << (same ? "yes" : "no") << "\n"
           << "J(A) = " << r.fmt(a.j) << "\n"
           << "J(B) = " << r.fmt(b.j) << "\n";
  return kExitOk;
}

json form_params_json(const CurveForm& form) {
  return std::visit(
      [](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Weierstrass>) {
          return json{{"g2", to_json(f.g2)}, {"g3", to_json(f.g3)}};
        } else if constexpr (std::is_same_v<T, Legendre>) {
          return json{{"lambda", to_json(f.lambda)}};
        } else if constexpr (std::is_same_v<T, Jacobi> || std::is_same_v<T, Hesse>) {
          return json{{"k", to_json(f.k)}};
        } else {
          return json{{"a", to_json(f.a)}};
        }
      },
      form);
}

int cmd_convert(const Options& opt, Report& r) {
  expect_args(opt, 1, 1, "one form and --to KIND");
  if (!opt.to) throw UsageError("convert needs --to KIND");
  const auto target = parse_form_kind(*opt.to);
  if (!target) throw UsageError("unknown target kind '" + *opt.to + "'");

  const FormOperand op = parse_form(opt.positional[1]);
  CurveForm source = Legendre{0.0};
  if (const auto* pts = std::get_if<FourPoints>(&op)) {
    source = Legendre{legendre_from_points(*pts)};
    r.inputs()["points"] = points_json(*pts);
  } else {
    source = std::get<CurveForm>(op);
    r.inputs()["form"] = format_form(source, 17);
  }
  r.inputs()["to"] = *opt.to;

  const CurveForm out = convert(source, *target);
  const SpherePoint j_in = j_of_form(source);
  const SpherePoint j_out = j_of_form(out);
  r.result()["form"] = format_form(out, opt.digits);
  r.result()["kind"] = std::string(to_string(kind_of(out)));
  r.result()["params"] = form_params_json(out);
  r.result()["J"] = to_json(j_out);
  r.result()["isomorphic"] = j_values_equal(j_in, j_out);
  r.tolerances()["j_rel"] = kJTol;
  r.text() << format_form(out, opt.digits) << "\n";
  return kExitOk;
}

int cmd_shape(const Options& opt, Report& r) {
  const FourPoints pts = four_points(opt);
  r.inputs()["points"] = points_json(pts);
  const Shape main = shape_of(pts);
  const Cx apex = cross_ratio_geometric(pts);

  auto vertex_names = [](const Shape& s) {
    std::string v;
    for (std::size_t i = 0; i < 3; ++i) v += (i ? " z" : "z") + std::to_string(s.vertices[i] + 1);
    return v;
  };

  r.text() << "shape = " << angles_text(r, main.angles) << "  [" << vertex_names(main) << "]\n";
  if (main.relabeled) r.text() << "relabeled: vertices reordered for positive orientation\n";
  if (main.near_concyclic) r.text() << "warning: nearly concyclic input, angles ill-conditioned\n";
  r.text() << "canonical = " << angles_text(r, main.canonical()) << "\n";

  json triangles = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    const Shape t = triangle_shape(pts, k);
    r.text() << "triangle without z" << k + 1 << " = " << angles_text(r, t.angles) << "  ["
             << vertex_names(t) << "]\n";
    json vertices = json::array();
    for (auto v : t.vertices) vertices.push_back(v + 1);
    triangles.push_back(json{{"omitted", k + 1},
                             {"vertices", std::move(vertices)},
                             {"angles", t.angles},
                             {"relabeled", t.relabeled}});
  }
  r.text() << "chi_geometric = " << r.fmt(apex) << "\n";

  json main_vertices = json::array();
  for (auto v : main.vertices) main_vertices.push_back(v + 1);
  r.result()["angles"] = main.angles;
  r.result()["vertices"] = std::move(main_vertices);
  r.result()["relabeled"] = main.relabeled;
  r.result()["near_concyclic"] = main.near_concyclic;
  r.result()["canonical"] = main.canonical();
  r.result()["triangles"] = std::move(triangles);
  r.result()["chi_geometric"] = to_json(apex);
  r.tolerances()["concyclic"] = 1e-9;
  r.tolerances()["near_concyclic"] = 1e-6;

  if (opt.svg) {
    SvgOptions svg_opt;
    svg_opt.title = "Curvilinear triangles of four points";
    const std::string doc = shape_svg(pts, svg_opt);
    std::ofstream file(*opt.svg, std::ios::binary);
    if (!file || !(file << doc)) throw UsageError("cannot write SVG to '" + *opt.svg + "'");
    r.result()["svg"] = *opt.svg;
    r.text() << "svg written to " << *opt.svg << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, Report& r) {
  expect_args(opt, 1, 1, "a suite: branching, chain or hesse-phi");
  const std::string& suite = opt.positional[1];
  r.inputs()["suite"] = suite;
  bool passed = false;

  if (suite == "branching") {
    const BranchingReport report = branching_report(kJTol);
    json entries = json::array();
    for (const auto& e : report.entries) {
      r.text() << (e.passed ? "PASS " : "FAIL ") << r.fmt(e.critical_point) << " -> "
               << r.fmt(e.critical_value) << "  multiplicity " << e.multiplicity << "  slope "
               << format_real(e.measured_slope, 6) << "\n";
      entries.push_back(json{{"critical_point", to_json(e.critical_point)},
                             {"critical_value", to_json(e.critical_value)},
                             {"multiplicity", e.multiplicity},
                             {"measured_slope", e.measured_slope},
                             {"derivative", e.derivative},
                             {"passed", e.passed}});
    }
    json fibers = json::array();
    for (const auto& f : report.fibers) {
      r.text() << (f.degree_check ? "PASS " : "FAIL ") << "fiber over " << r.fmt(f.value)
               << "  multiplicity sum " << f.multiplicity_sum << "\n";
      fibers.push_back(json{{"value", to_json(f.value)},
                            {"multiplicity_sum", f.multiplicity_sum},
                            {"degree_check", f.degree_check}});
    }
    passed = report.all_passed();
    r.result()["entries"] = std::move(entries);
    r.result()["fibers"] = std::move(fibers);
    r.tolerances()["value_and_derivative"] = kJTol;
    r.tolerances()["slope"] = 0.1;
  } else if (suite == "chain" || suite == "hesse-phi") {
    const bool chain = suite == "chain";
    const std::size_t n = opt.samples.value_or(chain ? 1000 : 200);
    const SampledSuite s = chain ? check_chain(n) : check_hesse_phi(n);
    passed = s.passed();
    r.text() << (passed ? "PASS " : "FAIL ")
             << (chain ? "J factorization chain" : "Hesse closed form phi(k)") << "  samples "
             << s.samples << "  failures " << s.failures << "  max error "
             << format_real(s.max_error, 3) << "  (bound " << format_real(s.tolerance, 3)
             << ")\n";
    if (!passed) r.text() << "worst input " << r.fmt(s.worst_input) << "\n";
    r.inputs()["samples"] = n;
    r.inputs()["seed"] = kSelfCheckSeed;
    r.result()["samples"] = s.samples;
    r.result()["failures"] = s.failures;
    r.result()["max_error"] = s.max_error;
    r.result()["worst_input"] = to_json(s.worst_input);
    r.tolerances()["relative"] = s.tolerance;
  } else {
    throw UsageError("unknown verify suite '" + suite + "' (branching, chain, hesse-phi)");
  }
  r.result()["passed"] = passed;
  r.text() << (passed ? "all checks passed" : "verification FAILED") << "\n";
  return passed ? kExitOk : kExitVerification;
}

using Handler = int (*)(const Options&, Report&);

const std::map<std::string_view, Handler> kCommands{
    {"xratio", cmd_xratio}, {"orbit", cmd_orbit},   {"jinv", cmd_jinv},
    {"equiv", cmd_equiv},   {"convert", cmd_convert}, {"shape", cmd_shape},
    {"verify", cmd_verify},
};

}  // namespace

std::string usage() {
  return "usage: fourpoint <command> [args] [--json] [--digits N]\n"
         "\n"
         "commands:\n"
         "  xratio z1 z2 z3 z4 [--orbit]       cross ratio (and its orbit)\n"
         "  orbit lambda                        equivalent cross ratios\n"
         "  jinv lambda | --points z1 z2 z3 [z4] J-invariant\n"
         "  equiv FORM FORM                     isomorphism test via J\n"
         "  convert FORM --to KIND              convert between normal forms\n"
         "  shape z1 z2 z3 z4 [--svg FILE]      curvilinear-triangle angles\n"
         "  verify branching|chain|hesse-phi [--samples N]\n"
         "\n"
         "complex literals: 1.5+2i, -3e-2i, i, inf, rho, rho2\n"
         "forms: weierstrass:g2,g3 legendre:l jacobi:k edwards:a symmetric:a hesse:k\n"
         "       points:z1,z2,z3[,z4]\n"
         "exit codes: 0 ok, 2 usage/parse error, 3 domain error, 4 verification failure\n";
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const Options opt = parse_options(args);
    if (opt.help) {
      out << usage();
      return kExitOk;
    }
    if (opt.positional.empty()) {
      err << usage();
      return kExitUsage;
    }
    const auto it = kCommands.find(opt.positional[0]);
    if (it == kCommands.end()) {
      throw UsageError("unknown command '" + opt.positional[0] + "'");
    }
    Report report(opt.positional[0], opt);
    report.tolerances()["default"] = kDefaultTol;
    const int code = it->second(opt, report);
    report.flush(out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError: return kExitUsage;
      case Errc::VerificationFailure: return kExitVerification;
      default: return kExitDomain;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace fourpoint::cli
