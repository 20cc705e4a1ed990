// cremona-lab: exact-arithmetic analysis of plane birational maps, the
// characteristic-matrix catalog, and Salem/Weyl spectral data.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cremona/checks.hpp"
#include "cremona/families.hpp"
#include "cremona/picard.hpp"
#include "cremona/projmap.hpp"
#include "cremona/salem.hpp"
#include "cremona/weyl.hpp"

namespace {

using nlohmann::json;
using namespace cremona;
using GR = GaussianRational;

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kSchema = "cremona-lab/1";

int env_precision() {
  if (const char* v = std::getenv("CREMONA_LAB_PRECISION")) {
    int p = std::atoi(v);
    if (p >= 32 && p <= 1 << 20) return p;
  }
  return kDefaultPrecision;
}

// ---------------------------------------------------------------
// complex expression grammar: rationals, decimals, i, pi, sqrt, exp,
// + - * / and parentheses

struct ExprParser {
  const std::string& s;
  size_t pos = 0;
  explicit ExprParser(const std::string& text) : s(text) {}

  using CD = std::complex<double>;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool word(const char* w) {
    skip();
    size_t len = std::strlen(w);
    if (s.compare(pos, len, w) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  CD parse() {
    CD v = expr();
    skip();
    if (pos != s.size()) throw parse_error("trailing input in expression: " + s.substr(pos));
    return v;
  }

  CD expr() {
    CD v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  CD term() {
    CD v = factor();
    while (true) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }
  CD factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return atom();
  }
  CD atom() {
    skip();
    if (word("sqrt")) {
      if (!eat('(')) throw parse_error("expected '(' after sqrt");
      CD v = expr();
      if (!eat(')')) throw parse_error("expected ')'");
      return std::sqrt(v);
    }
    if (word("exp")) {
      if (!eat('(')) throw parse_error("expected '(' after exp");
      CD v = expr();
      if (!eat(')')) throw parse_error("expected ')'");
      return std::exp(v);
    }
    if (word("pi")) return {M_PI, 0};
    if (eat('(')) {
      CD v = expr();
      if (!eat(')')) throw parse_error("expected ')'");
      return v;
    }
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      return {0, 1};
    }
    skip();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == 'e' ||
            s[pos] == 'E' || ((s[pos] == '+' || s[pos] == '-') && pos > start &&
                              (s[pos - 1] == 'e' || s[pos - 1] == 'E'))))
      ++pos;
    if (start == pos) throw parse_error("bad expression atom at: " + s.substr(start));
    double v = std::stod(s.substr(start, pos - start));
    skip();
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      return {0, v};
    }
    return {v, 0};
  }
};

std::complex<double> parse_expr(const std::string& text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------
// report assembly

json check_to_json(const checks::CheckResult& r) {
  return json{{"id", r.id},
              {"source_ref", r.source_ref},
              {"status", checks::status_name(r.status)},
              {"computed", r.computed},
              {"expected", r.expected},
              {"tolerance", r.tolerance}};
}

void write_report(const std::string& path, const std::vector<checks::CheckResult>& results,
                  double seconds) {
  json checks_json = json::array();
  for (const auto& r : results) checks_json.push_back(check_to_json(r));
  json report{{"schema", kSchema},
              {"tool_version", kToolVersion},
              {"checks", checks_json},
              {"timing", {{"seconds", seconds}}}};
  std::ofstream out(path);
  out << report.dump(2) << "\n";
}

// ---------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string family;
  std::string a = "0", b = "0", alpha = "2", c = "0", delta = "0";
  std::string map_literal;
  int n = 3, k = 2;
  int iters = 12;
  long budget = 200;
  std::string json_path;
};

int cmd_analyze(const AnalyzeArgs& args) {
  using namespace cremona::projmap;
  std::vector<checks::CheckResult> report;
  auto note = [&](const std::string& id, checks::Status st, const std::string& computed,
                  const std::string& expected = "") {
    report.push_back({id, "", st, computed, expected, ""});
  };
  auto t0 = std::chrono::steady_clock::now();

  ExactMap map;
  families::FamilyId fid{};
  bool have_fid = false;
  try {
    if (args.family == "custom") {
      if (args.map_literal.empty()) throw parse_error("custom family needs --map");
      map = parse_map(args.map_literal);
    } else {
      fid = families::family_from_string(args.family);
      have_fid = true;
      families::FamilyParams p;
      p.a = GR::parse(args.a);
      p.b = GR::parse(args.b);
      p.alpha = GR::parse(args.alpha);
      p.c = GR::parse(args.c);
      p.delta = GR::parse(args.delta);
      p.n = args.n;
      p.k = args.k;
      auto made = families::make(fid, p);
      map = made.map;
      if (made.removed_content)
        note("analyze.degenerate_parameters", checks::Status::Pass,
             "removed common factor " + made.removed_content->str());
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << "map: " << map_to_string(map) << "\n";
  std::cout << "degree: " << map.degree << "\n";

  int fail = 0;
  auto seq = degree_sequence(map, std::max(args.iters, 8), args.budget);
  {
    std::ostringstream os;
    int shown = 0;
    for (long d : seq.degrees) {
      if (shown++ == args.iters) break;
      os << (shown > 1 ? " " : "") << d;
    }
    if (seq.truncated) os << " (truncated at budget " << args.budget << ")";
    std::cout << "degree sequence: " << os.str() << "\n";
    note("analyze.degree_sequence", checks::Status::Pass, os.str());
  }
  try {
    auto gc = growth_class(seq.degrees);
    const char* names[] = {"Bounded", "Linear", "Quadratic", "Exponential"};
    std::string line = names[static_cast<int>(gc.tag)];
    if (gc.rate) line += ", rate " + gc.rate->str(10);
    std::cout << "growth: " << line << "\n";
    note("analyze.growth", checks::Status::Pass, line);
  } catch (const error& e) {
    std::cout << "growth: inconclusive (" << e.what() << ")\n";
    note("analyze.growth", checks::Status::Fail, e.what(), "a stabilized growth class");
    ++fail;
  }
  {
    auto st = stability_probe(map, std::min(args.iters, 8));
    std::string line = st.violated_at
                           ? "violated at n = " + std::to_string(*st.violated_at)
                           : "stable through n = " + std::to_string(st.stable_up_to);
    std::cout << "algebraic stability: " << line << "\n";
    note("analyze.stability", checks::Status::Pass, line);
  }
  try {
    auto ind = indeterminacy_points(map);
    std::ostringstream os;
    for (const auto& p : ind.points)
      os << "(" << p.coords[0].str() << ":" << p.coords[1].str() << ":" << p.coords[2].str()
         << ") ";
    if (!ind.complete) os << "(incomplete)";
    std::cout << "indeterminacy points: " << (ind.points.empty() ? "none " : os.str()) << "\n";
    note("analyze.indeterminacy", checks::Status::Pass, os.str());
  } catch (const error& e) {
    note("analyze.indeterminacy", checks::Status::Fail, e.what());
    ++fail;
  }
  try {
    auto jd = jacobian_divisor(map);
    std::ostringstream os;
    for (const auto& [f, m] : jd.linear_factors) os << "(" << f.str() << ")^" << m << " ";
    if (!jd.fully_split) os << "* unfactored " << jd.remainder.str();
    std::cout << "jacobian factors: " << (jd.linear_factors.empty() ? "constant " : os.str())
              << "\n";
    note("analyze.jacobian", checks::Status::Pass, os.str());
  } catch (const zero_jacobian&) {
    std::cout << "jacobian: identically zero (map not dominant)\n";
    note("analyze.jacobian", checks::Status::Fail, "zero jacobian");
    ++fail;
  }
  if (have_fid && fid == families::FamilyId::BK_fab) {
    auto rec = families::vn_membership(GR::parse(args.a), GR::parse(args.b), args.iters);
    std::string line =
        rec.hit_index
            ? "V_" + std::to_string(*rec.hit_index) + " hit (orbit closes after " +
                  std::to_string(*rec.hit_index) + " steps)"
            : (rec.terminated_by == families::OrbitTermination::Indeterminate
                   ? "orbit hits the indeterminacy set"
                   : "no hit within " + std::to_string(args.iters) + " steps");
    std::cout << "orbit data: " << line << "\n";
    note("analyze.vn_membership", checks::Status::Pass, line);
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!args.json_path.empty()) write_report(args.json_path, report, secs);
  return fail ? 1 : 0;
}

// ---------------------------------------------------------------
// verify-catalog

int cmd_verify_catalog(const std::string& filter, const std::string& json_path, int precision,
                       unsigned instances) {
  auto t0 = std::chrono::steady_clock::now();
  checks::RunOptions opt;
  opt.filter = filter;
  opt.precision = precision;
  opt.property_instances = instances;
  auto results = checks::run_checks(opt);
  int fails = 0;
  for (const auto& r : results) {
    std::cout << r.id << ": " << checks::status_name(r.status);
    if (!r.computed.empty()) std::cout << "  [" << r.computed << "]";
    std::cout << "\n";
    if (r.status == checks::Status::Fail) ++fails;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (results.empty()) std::cout << "(no checks matched filter '" << filter << "')\n";
  std::cout << results.size() << " checks, " << fails << " failed ("
            << secs << " s)\n";
  if (!json_path.empty()) write_report(json_path, results, secs);
  return fails ? 1 : 0;
}

// ---------------------------------------------------------------
// orbit

int cmd_orbit(const std::string& alpha, const std::string& beta, const std::string& point,
              long N, const std::string& out_path) {
  std::complex<double> a, b, x0, y0;
  try {
    a = parse_expr(alpha);
    b = parse_expr(beta);
    auto comma = point.find(',');
    if (comma == std::string::npos) {
      x0 = y0 = parse_expr(point);
    } else {
      x0 = parse_expr(point.substr(0, comma));
      y0 = parse_expr(point.substr(comma + 1));
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  auto table = families::orbit_projection_samples(a, b, x0, y0, N);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << "\n";
    return 2;
  }
  out << "n,om1_a,om1_b,om1_c,om2_a,om2_b,om2_c\n";
  char buf[256];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", row.n,
                  row.om1[0], row.om1[1], row.om1[2], row.om2[0], row.om2[1], row.om2[2]);
    out << buf;
  }
  std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  std::cout << "|y| in [" << table.min_abs_y << ", " << table.max_abs_y << "]";
  if (table.overflow) std::cout << " (terminated: magnitude cap exceeded)";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cremona-lab: exact analysis of plane birational maps"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "analyze a map family");
  analyze->add_option("family", aa.family,
                      "family name (sigma, rho, tau, bk_fab, bk_FAB, bk_k, bk_rot, mcmullen, "
                      "dg_phi, dg_phi_alpha_phi, dg_conic, custom)")
      ->required();
  analyze->add_option("--a", aa.a, "parameter a as 'p/q+r/s*i'");
  analyze->add_option("--b", aa.b, "parameter b");
  analyze->add_option("--alpha", aa.alpha, "parameter alpha");
  analyze->add_option("--c", aa.c, "parameter c");
  analyze->add_option("--delta", aa.delta, "parameter delta");
  analyze->add_option("--n", aa.n, "family index n");
  analyze->add_option("--k", aa.k, "family index k");
  analyze->add_option("--iters", aa.iters, "iterations to report (classification uses >= 8)");
  analyze->add_option("--budget", aa.budget, "degree budget for iteration");
  analyze->add_option("--json", aa.json_path, "write a JSON report here");
  analyze->add_option("--map", aa.map_literal, "map literal '(yz:xz:xy)' for family 'custom'");

  std::string vc_filter, vc_json;
  unsigned vc_instances = 1000;
  auto* verify = app.add_subcommand("verify-catalog", "run the verification suite");
  verify->add_option("--filter", vc_filter, "glob over check ids, e.g. 'a0*' or '*weyl*'");
  verify->add_option("--json", vc_json, "write the JSON report here");
  verify->add_option("--instances", vc_instances, "randomized property instances");

  std::string ob_alpha, ob_beta, ob_point = "0,0", ob_out = "orbit.csv";
  long ob_n = 30000;
  auto* orbit = app.add_subcommand("orbit", "sample torus-family orbit projections to CSV");
  orbit->add_option("--alpha", ob_alpha, "alpha, e.g. 'exp(2*i*sqrt(3))'")->required();
  orbit->add_option("--beta", ob_beta, "beta, e.g. 'exp(2*i*sqrt(2))'")->required();
  orbit->add_option("--point", ob_point, "start point 'x,y' (defaults to the fixed point)");
  orbit->add_option("-N,--count", ob_n, "number of samples");
  orbit->add_option("--out", ob_out, "CSV output path");

  std::string cat_json;
  auto* cat = app.add_subcommand("catalog", "dump the characteristic-matrix catalog as JSON");
  cat->add_option("--json", cat_json, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int precision = env_precision();
  try {
    if (*analyze) return cmd_analyze(aa);
    if (*verify) return cmd_verify_catalog(vc_filter, vc_json, precision, vc_instances);
    if (*orbit) return cmd_orbit(ob_alpha, ob_beta, ob_point, ob_n, ob_out);
    if (*cat) {
      std::string dump = picard::catalog_to_json();
      if (cat_json.empty()) {
        std::cout << dump << "\n";
      } else {
        std::ofstream out(cat_json);
        out << dump << "\n";
      }
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
