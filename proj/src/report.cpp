#include "hermicert/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "hermicert/applications.hpp"
#include "hermicert/classes.hpp"
#include "hermicert/curves.hpp"
#include "hermicert/fixtures.hpp"
#include "hermicert/homogeneity.hpp"
#include "hermicert/io.hpp"
#include "hermicert/stabilization.hpp"

namespace hermicert {

namespace {

// ---- small input parsers ---------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  auto b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

gauss_rational parse_gauss(const std::string& tok) {
  const auto parts = split(tok, ',');
  if (parts.size() == 1) return gauss_rational(parse_rational(trim(parts[0])));
  if (parts.size() == 2)
    return gauss_rational(parse_rational(trim(parts[0])), parse_rational(trim(parts[1])));
  throw malformed_input("bad complex rational token: '" + tok + "'");
}

// Terms "coeff@e1,e2,..." separated by ';'. A bare "coeff" means the
// constant term.
exact_holo parse_exact_holo(const std::string& s, std::size_t n) {
  exact_holo h(n);
  for (const auto& raw : split(s, ';')) {
    const std::string term = trim(raw);
    if (term.empty()) continue;
    const auto at = term.find('@');
    gauss_rational coeff;
    multi_index idx(n);
    if (at == std::string::npos) {
      coeff = parse_gauss(term);
    } else {
      coeff = parse_gauss(trim(term.substr(0, at)));
      const auto exps = split(term.substr(at + 1), ',');
      if (exps.size() != n)
        throw malformed_input("holomorphic term '" + term + "': expected " + std::to_string(n) +
                              " exponents");
      for (std::size_t j = 0; j < n; ++j) {
        idx[j] = std::stoi(trim(exps[j]));
        if (idx[j] < 0) throw malformed_input("negative exponent in '" + term + "'");
      }
    }
    h.add_term(idx, coeff);
  }
  return h;
}

// Components separated by ';', each a space list of "re[,im]" coefficients in
// ascending degree. Also accepts a path to a "curve 1" text block.
curve parse_curve(const std::string& spec) {
  std::string body = spec;
  if (spec.find(';') == std::string::npos && spec.find('@') == std::string::npos) {
    std::ifstream f(spec);
    if (f) {
      std::string line;
      if (std::getline(f, line) && line == "curve 1") {
        long n = -1;
        if (!std::getline(f, line)) throw malformed_input("curve file: missing n line");
        {
          std::istringstream ls(line);
          std::string kw;
          ls >> kw >> n;
          if (kw != "n" || n < 1) throw malformed_input("curve file: bad n line");
        }
        curve c;
        while (std::getline(f, line)) {
          if (line.empty() || line[0] == '#') continue;
          std::istringstream ls(line);
          std::string kw;
          ls >> kw;
          if (kw != "comp") throw malformed_input("curve file: expected comp line");
          std::vector<gauss_rational> comp;
          std::string tok;
          while (ls >> tok) comp.push_back(parse_gauss(tok));
          c.comps.push_back(std::move(comp));
        }
        if (c.comps.size() != static_cast<std::size_t>(n))
          throw malformed_input("curve file: component count differs from n");
        return c;
      }
    }
  }
  curve c;
  for (const auto& raw : split(body, ';')) {
    std::istringstream ls(trim(raw));
    std::vector<gauss_rational> comp;
    std::string tok;
    while (ls >> tok) comp.push_back(parse_gauss(tok));
    c.comps.push_back(std::move(comp));
  }
  if (c.comps.empty()) throw malformed_input("empty curve spec");
  return c;
}

// "z1 z2 ... ; z1 z2 ..." with coordinates "re[,im]".
std::vector<std::vector<gauss_rational>> parse_points(const std::string& s, std::size_t n) {
  std::vector<std::vector<gauss_rational>> pts;
  for (const auto& raw : split(s, ';')) {
    std::istringstream ls(trim(raw));
    std::vector<gauss_rational> pt;
    std::string tok;
    while (ls >> tok) pt.push_back(parse_gauss(tok));
    if (pt.size() != n)
      throw malformed_input("point '" + trim(raw) + "': expected " + std::to_string(n) +
                            " coordinates");
    pts.push_back(std::move(pt));
  }
  return pts;
}

hermitian_poly load_input(const std::string& path) {
  if (is_fixture_path(path)) return load_fixture_path(path);
  return read_hpoly_file(path);
}

// ---- report assembly --------------------------------------------------------

struct report_builder {
  json machine;
  std::ostringstream human;

  report_builder(const std::vector<std::string>& args, std::uint64_t seed, int budget) {
    std::string cmd;
    for (const auto& a : args) {
      if (!cmd.empty()) cmd += ' ';
      cmd += a;
    }
    machine = {{"tool", "hermicert"},
               {"format", 1},
               {"command", cmd},
               {"seed", seed},
               {"budget", budget},
               {"basis", "graded-lex"},
               {"records", json::array()}};
  }

  void describe_input(const hermitian_poly& r) {
    const auto deg = r.degree_info();
    machine["input"] = {{"n", r.vars()},
                        {"terms", r.term_count()},
                        {"deg_z", deg.deg_z},
                        {"total_degree", deg.total_degree},
                        {"digest", hpoly_digest(r)}};
    human << "input: n=" << r.vars() << " deg_z=" << deg.deg_z
          << " total=" << deg.total_degree << " terms=" << r.term_count()
          << " digest=" << hpoly_digest(r) << "\n";
  }

  void add_record(const std::string& check, const class_verdict& v,
                  const std::string& note = "") {
    json rec = {{"check", check}, {"status", to_string(v.status)}};
    if (v.exponent >= 0) rec["exponent"] = v.exponent;
    if (v.tolerance > 0) rec["tolerance"] = format_double(v.tolerance);
    rec["evidence"] = v.evidence;
    machine["records"].push_back(rec);
    human << check << ": " << to_string(v.status);
    if (v.exponent >= 0) human << " (exponent " << v.exponent << ")";
    if (!note.empty()) human << " " << note;
    if (v.evidence.contains("kind")) human << " [" << v.evidence["kind"].get<std::string>() << "]";
    human << "\n";
  }

  void add_json_record(const std::string& check, json rec, const std::string& line) {
    rec["check"] = check;
    machine["records"].push_back(rec);
    human << line << "\n";
  }
};

json holo_map_json(const holo_map& m) {
  json comps = json::array();
  for (const auto& comp : m.comps) {
    json terms = json::array();
    for (const auto& [k, v] : comp.c)
      terms.push_back({{"monomial", k.str()},
                       {"re", format_double(v.real())},
                       {"im", format_double(v.imag())}});
    comps.push_back(terms);
  }
  return comps;
}

json tolerance_table() {
  return {{"p1_refute", "1e-12 * scale"},
          {"pk_refute", "1e-10 * scale"},
          {"cauchy_schwarz_refute", "1e-10 * scale^2"},
          {"log_psh_refute", "1e-9 * scale"},
          {"matrix_refute", "1e-8 * scale"},
          {"decompose_reconcile", "1e-10 * matrix max-norm"},
          {"factor_residual", "1e-8 relative"},
          {"sphere_residual", "1e-6 relative"},
          {"division_residual", "1e-9 relative"},
          {"scale", "max|coeff| * (1+|point|)^total_degree"}};
}

// ---- command implementations -------------------------------------------------

struct cli_options {
  std::uint64_t seed = 1;
  int budget = 2000;
  int dcap = 12;
  int ncap = 16;
  int ccap = 64;
  std::string json_path;
  bool tol_report = false;
};

sampler_config make_cfg(const cli_options& o) {
  sampler_config cfg;
  cfg.seed = o.seed;
  cfg.budget = o.budget;
  return cfg;
}

void cmd_signature(report_builder& rb, const hermitian_poly& r) {
  const signature_pair s = signature(r);
  json rec = {{"status", "CERTIFIED"},
              {"signature", {{"pos", s.pos}, {"neg", s.neg}}},
              {"rank", s.rank()},
              {"exact", true}};
  std::ostringstream line;
  line << "signature (" << s.pos << "," << s.neg << ") rank " << s.rank();
  rb.add_json_record("signature", rec, line.str());
}

void cmd_decompose(report_builder& rb, const hermitian_poly& r) {
  const holo_decomposition dec = decompose(r);
  const double resid = decomposition_residual(r, dec);
  json rec = {{"status", "CERTIFIED"},
              {"f_components", dec.f.comps.size()},
              {"g_components", dec.g.comps.size()},
              {"residual", format_double(resid)},
              {"tolerance", format_double(dec.tolerance)},
              {"f", holo_map_json(dec.f)},
              {"g", holo_map_json(dec.g)}};
  std::ostringstream line;
  line << "decompose: |f| = " << dec.f.comps.size() << " components, |g| = "
       << dec.g.comps.size() << " components, residual " << format_double(resid);
  rb.add_json_record("decompose", rec, line.str());
}

void cmd_classify(report_builder& rb, const hermitian_poly& r, const std::string& classes,
                  const cli_options& opt) {
  const sampler_config cfg = make_cfg(opt);
  for (const auto& raw : split(classes, ',')) {
    const std::string cls = trim(raw);
    if (cls.empty()) continue;
    if (cls == "p1") {
      rb.add_record("p1", test_p1(r, cfg));
    } else if (cls.size() >= 2 && cls[0] == 'p' && cls != "pinf" &&
               cls.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int k = std::stoi(cls.substr(1));
      rb.add_record(cls, test_pk(r, k, cfg));
    } else if (cls == "pinf") {
      const signature_pair s = signature(r);
      class_verdict v;
      v.status = s.neg == 0 ? verdict_status::certified : verdict_status::refuted;
      v.evidence = {{"kind", "exact-signature"},
                    {"signature", {{"pos", s.pos}, {"neg", s.neg}}},
                    {"exact", true}};
      rb.add_record("pinf", v, "(exact)");
    } else if (cls == "rad") {
      rb.add_record("rad", test_rad(r, opt.ncap, cfg));
    } else if (cls == "logpsh") {
      rb.add_record("logpsh", test_log_psh(r, cfg));
    } else if (cls == "cs") {
      rb.add_record("cs", test_cauchy_schwarz(r, cfg));
    } else if (cls == "q") {
      if (r.vars() == 1) {
        const q1_report q = q1_decide(r, cfg);
        class_verdict v;
        switch (q.verdict) {
          case q1_report::verdict_t::in_q:
          case q1_report::verdict_t::identically_zero:
            v.status = verdict_status::certified;
            break;
          default:
            v.status = verdict_status::refuted;
        }
        json zeros = json::array();
        for (const auto& z : q.zeros)
          zeros.push_back({{"point", z.point.str()},
                           {"multiplicity", z.multiplicity},
                           {"exact", z.exact}});
        v.evidence = {{"kind", "one-variable-decision"},
                      {"reason", q.reason},
                      {"zeros", zeros},
                      {"degree_condition", q.degree_condition},
                      {"q_prime", "same verdict"},
                      {"detail", q.detail}};
        rb.add_record("q", v);
      } else {
        rb.add_record("q", curve_refute_quotient(r, opt.budget, cfg),
                      "(curve search; refutation only)");
      }
    } else {
      throw malformed_input("unknown class token: '" + cls + "'");
    }
  }
}

void cmd_stabilize(report_builder& rb, const hermitian_poly& r, const cli_options& opt) {
  const stab_result res = multiplier_search(r, opt.dcap, make_cfg(opt));
  class_verdict v = res.verdict;
  if (res.certificate) {
    v.evidence["factor"] = holo_map_json(res.certificate->factor);
  }
  std::ostringstream note;
  if (res.verdict.status == verdict_status::certified)
    note << "d = " << res.certificate->d << " (psd-minimal d = " << res.psd_minimal_d
         << ", matrix dim " << res.certificate->matrix_dim << ")";
  else
    note << "(psd-minimal d = " << res.psd_minimal_d << ")";
  rb.add_record("stabilize", v, note.str());
}

void cmd_polya(report_builder& rb, const std::string& terms, const std::string& one_var_coeffs,
               std::size_t nvars, const cli_options& opt) {
  polya_result res;
  if (!one_var_coeffs.empty()) {
    real_poly p(1);
    std::istringstream ls(one_var_coeffs);
    std::string tok;
    int k = 0;
    while (ls >> tok) p.add_term(multi_index{k++}, parse_rational(tok));
    res = polya_one_var(p, opt.dcap);
  } else {
    if (terms.empty()) throw malformed_input("polya: provide --terms or --one-var-coeffs");
    real_poly R(nvars);
    for (const auto& raw : split(terms, ';')) {
      const std::string term = trim(raw);
      if (term.empty()) continue;
      const auto at = term.find('@');
      if (at == std::string::npos) throw malformed_input("polya term '" + term + "': missing '@'");
      const rational c = parse_rational(trim(term.substr(0, at)));
      const auto exps = split(term.substr(at + 1), ',');
      if (exps.size() != nvars)
        throw malformed_input("polya term '" + term + "': expected " + std::to_string(nvars) +
                              " exponents");
      multi_index idx(nvars);
      for (std::size_t j = 0; j < nvars; ++j) idx[j] = std::stoi(trim(exps[j]));
      R.add_term(idx, c);
    }
    res = polya_exponent(R, opt.dcap);
  }
  std::ostringstream note;
  if (res.verdict.status == verdict_status::certified) note << "d = " << res.d;
  rb.add_record("polya", res.verdict, note.str());
}

void cmd_sphere_norm(report_builder& rb, const hermitian_poly& r, const cli_options& opt) {
  const sphere_norm_result res = sphere_norm_agreement(r, opt.ccap, opt.dcap, make_cfg(opt));
  class_verdict v = res.verdict;
  if (res.verdict.status == verdict_status::certified) v.evidence["g"] = holo_map_json(res.g);
  std::ostringstream note;
  if (res.verdict.status == verdict_status::certified)
    note << "C = " << res.C << ", d = " << res.d << ", components " << res.g.comps.size()
         << ", sphere residual " << format_double(res.sphere_residual);
  rb.add_record("sphere-norm", v, note.str());
}

void emit_poly(report_builder& rb, const char* check, const hermitian_poly& out,
               const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw malformed_input("cannot write: " + out_path);
    write_hpoly(f, out);
    rb.add_json_record(check, {{"status", "CERTIFIED"}, {"written", out_path},
                               {"digest", hpoly_digest(out)}},
                       std::string(check) + ": written to " + out_path);
  } else {
    rb.human << hpoly_to_string(out);
    json rec = {{"status", "CERTIFIED"}, {"digest", hpoly_digest(out)},
                {"hpoly", hpoly_to_string(out)}};
    rec["check"] = check;
    rb.machine["records"].push_back(rec);
  }
}

}  // namespace

run_result run_command(const std::vector<std::string>& args) {
  run_result result;
  cli_options opt;

  CLI::App app{"exact certificates and searches for Hermitian positivity classes"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "deterministic sampling seed");
  app.add_option("--budget", opt.budget, "sampling budget (points / tuples / curves)");
  app.add_option("--dcap", opt.dcap, "multiplier degree cap");
  app.add_option("--ncap", opt.ncap, "power cap for the radical search");
  app.add_option("--ccap", opt.ccap, "correction constant cap");
  app.add_option("--json", opt.json_path, "write the machine report to this path");
  app.add_flag("--tol-report", opt.tol_report, "append the tolerance table to the report");

  std::string input, classes = "p1,p2,pinf,rad,logpsh,q", out_path;
  std::string curve_spec, holo_q, holo_g = "1", holo_p, points_spec, terms, one_var;
  std::size_t nvars = 1, slot = 0;
  long collapse_m = 3;
  std::string m0 = "1", smallc = "1/10";
  std::string fixture_name;
  std::vector<std::string> fixture_kv;
  bool list_fixtures = false;

  auto* c_sig = app.add_subcommand("signature", "exact signature pair and rank");
  c_sig->add_option("input", input)->required();
  auto* c_dec = app.add_subcommand("decompose", "holomorphic decomposition of r");
  c_dec->add_option("input", input)->required();
  auto* c_cls = app.add_subcommand("classify", "membership verdicts per class");
  c_cls->add_option("input", input)->required();
  c_cls->add_option("--classes", classes, "comma list: p1,p<k>,pinf,rad,logpsh,cs,q");
  auto* c_stab = app.add_subcommand("stabilize", "positive-definite multiplier search");
  c_stab->add_option("input", input)->required();
  auto* c_polya = app.add_subcommand("polya", "positive-coefficient multiplier exponent");
  c_polya->add_option("--terms", terms, "homogeneous terms: c@e1,e2,...; ...");
  c_polya->add_option("--n", nvars, "variable count for --terms");
  c_polya->add_option("--one-var-coeffs", one_var, "one-variable coefficients, ascending");
  auto* c_sn = app.add_subcommand("sphere-norm", "squared-norm agreement on the sphere");
  c_sn->add_option("input", input)->required();
  auto* c_bihom = app.add_subcommand("bihom", "bihomogenize (adds one variable)");
  c_bihom->add_option("input", input)->required();
  c_bihom->add_option("-o,--out", out_path);
  auto* c_dehom = app.add_subcommand("dehom", "substitute 1 into one variable slot");
  c_dehom->add_option("input", input)->required();
  c_dehom->add_option("--slot", slot)->required();
  c_dehom->add_option("-o,--out", out_path);
  auto* c_refl = app.add_subcommand("reflect", "one-variable reflection");
  c_refl->add_option("input", input)->required();
  c_refl->add_option("-o,--out", out_path);
  auto* c_pull = app.add_subcommand("pullback", "restrict along a polynomial curve");
  c_pull->add_option("input", input)->required();
  c_pull->add_option("--curve", curve_spec, "components 'c0 c1 ...; c0 c1 ...' or file")->required();
  c_pull->add_option("-o,--out", out_path);
  auto* c_pw = app.add_subcommand("propw", "even-order diagonal vanishing test");
  c_pw->add_option("input", input)->required();
  c_pw->add_option("--curve", curve_spec, "optional: pull back along this curve first");
  auto* c_q1 = app.add_subcommand("q1", "complete one-variable quotient decision");
  c_q1->add_option("input", input)->required();
  auto* c_pm = app.add_subcommand("propermap", "proper-map candidate from a denominator");
  c_pm->add_option("--q", holo_q, "denominator terms c@e1,...")->required();
  c_pm->add_option("--g", holo_g, "seed numerator component (default 1)");
  c_pm->add_option("--n", nvars, "variable count")->required();
  auto* c_ext = app.add_subcommand("extend", "extend a partial map to the sphere");
  c_ext->add_option("--p", holo_p, "components separated by '|' (may be empty)");
  c_ext->add_option("--n", nvars, "variable count")->required();
  auto* c_col = app.add_subcommand("collapse", "rank-collapse factor pair");
  c_col->add_option("--m", collapse_m, "factor parameter (>= 2)");
  auto* c_ps = app.add_subcommand("ps-check", "polarized-pair obstruction test");
  c_ps->add_option("--f", input, "Hermitian polynomial to test (default: built-in body)");
  c_ps->add_option("--points", points_spec, "points 're,im re,im; ...'");
  c_ps->add_option("--m0", m0, "built-in body constant");
  c_ps->add_option("--c", smallc, "built-in kernel constant");
  auto* c_fix = app.add_subcommand("fixture", "materialize a named example family");
  c_fix->add_option("name", fixture_name);
  c_fix->add_option("--p", fixture_kv, "parameter key=value (repeatable)");
  c_fix->add_option("-o,--out", out_path);
  c_fix->add_flag("--list", list_fixtures, "list the catalog");

  // Global flags may appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("hermicert");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {  // --help
        result.human = app.help();
        return result;
      }
      throw malformed_input(e.what());
    }

    report_builder rb(args, opt.seed, opt.budget);
    const sampler_config cfg = make_cfg(opt);

    if (c_sig->parsed()) {
      const hermitian_poly r = load_input(input);
      rb.describe_input(r);
      cmd_signature(rb, r);
    } else if (c_dec->parsed()) {
      const hermitian_poly r = load_input(input);
      rb.describe_input(r);
      cmd_decompose(rb, r);
    } else if (c_cls->parsed()) {
      const hermitian_poly r = load_input(input);
      rb.describe_input(r);
      cmd_classify(rb, r, classes, opt);
    } else if (c_stab->parsed()) {
      const hermitian_poly r = load_input(input);
      rb.describe_input(r);
      cmd_stabilize(rb, r, opt);
    } else if (c_polya->parsed()) {
      cmd_polya(rb, terms, one_var, nvars, opt);
    } else if (c_sn->parsed()) {
      const hermitian_poly r = load_input(input);
      rb.describe_input(r);
      cmd_sphere_norm(rb, r, opt);
    } else if (c_bihom->parsed()) {
      const hermitian_poly r = load_input(input);
      emit_poly(rb, "bihom", bihomogenize(r), out_path);
    } else if (c_dehom->parsed()) {
      const hermitian_poly r = load_input(input);
      emit_poly(rb, "dehom", dehomogenize(r, slot), out_path);
    } else if (c_refl->parsed()) {
      const hermitian_poly r = load_input(input);
      emit_poly(rb, "reflect", reflect(r), out_path);
    } else if (c_pull->parsed()) {
      const hermitian_poly r = load_input(input);
      emit_poly(rb, "pullback", pullback(r, parse_curve(curve_spec)), out_path);
    } else if (c_pw->parsed()) {
      hermitian_poly r = load_input(input);
      rb.describe_input(r);
      if (!curve_spec.empty()) r = pullback(r, parse_curve(curve_spec));
      const bool w = property_w(r);
      rb.add_json_record("propw",
                         {{"status", w ? "CERTIFIED" : "REFUTED"}, {"holds", w}, {"exact", true}},
                         std::string("property-w: ") + (w ? "holds" : "fails"));
    } else if (c_q1->parsed()) {
      const hermitian_poly r = load_input(input);
      rb.describe_input(r);
      const q1_report q = q1_decide(r, cfg);
      json zeros = json::array();
      for (const auto& z : q.zeros)
        zeros.push_back({{"point", z.point.str()},
                         {"multiplicity", z.multiplicity},
                         {"exact", z.exact},
                         {"residual", format_double(z.residual)}});
      const char* verdict = q.verdict == q1_report::verdict_t::in_q
                                ? "IN-QUOTIENT-CLASS"
                                : (q.verdict == q1_report::verdict_t::identically_zero
                                       ? "IDENTICALLY-ZERO"
                                       : "NOT-IN-QUOTIENT-CLASS");
      std::ostringstream line;
      line << "q1: " << verdict;
      if (!q.reason.empty()) line << " (" << q.reason << ")";
      line << "; zeros found: " << q.zeros.size()
           << "; divides-a-squared-norm verdict: same";
      rb.add_json_record("q1",
                         {{"status", verdict},
                          {"reason", q.reason},
                          {"zeros", zeros},
                          {"degree_condition", q.degree_condition},
                          {"max_division_residual", format_double(q.max_division_residual)},
                          {"quotient", hpoly_to_string(q.quotient)},
                          {"q_prime", "same verdict"},
                          {"detail", q.detail}},
                         line.str());
    } else if (c_pm->parsed()) {
      const exact_holo q = parse_exact_holo(holo_q, nvars);
      const exact_holo g = parse_exact_holo(holo_g, nvars);
      proper_map_budgets budgets;
      budgets.ccap = opt.ccap;
      budgets.dcap = opt.dcap;
      const proper_map_candidate cand = proper_map_from_denominator(q, g, budgets, cfg);
      class_verdict v = cand.verdict;
      v.evidence["numerator"] = holo_map_json(cand.numerator);
      v.evidence["detail"] = cand.detail;
      std::ostringstream note;
      note << "components " << cand.numerator.comps.size() << ", sphere residual "
           << format_double(cand.sphere_residual);
      rb.add_record("propermap", v, note.str());
    } else if (c_ext->parsed()) {
      holo_map partial;
      partial.n = nvars;
      for (const auto& comp : split(holo_p, '|')) {
        if (trim(comp).empty()) continue;
        exact_holo h = parse_exact_holo(comp, nvars);
        holo_poly hp;
        hp.n = nvars;
        for (const auto& [k, v] : h.c) hp.c[k] = v.to_complex();
        partial.comps.push_back(std::move(hp));
      }
      proper_map_budgets budgets;
      budgets.ccap = opt.ccap;
      budgets.dcap = opt.dcap;
      const proper_map_candidate cand = extend_to_proper(partial, budgets, cfg);
      class_verdict v = cand.verdict;
      v.evidence["map"] = holo_map_json(cand.numerator);
      std::ostringstream note;
      note << "components " << cand.numerator.comps.size() << ", sphere residual "
           << format_double(cand.sphere_residual);
      rb.add_record("extend", v, note.str());
    } else if (c_col->parsed()) {
      const collapse_pair_result res = collapse_pair(static_cast<int>(collapse_m));
      json qc = json::array();
      for (long double c : res.q) qc.push_back(format_double(static_cast<double>(c)));
      std::ostringstream line;
      line << "collapse: m=" << res.m << " factor coefficients " << res.q.size()
           << ", signatures (" << res.s1.pos << "," << res.s1.neg << ") ("
           << res.s2.pos << "," << res.s2.neg << ") -> (" << res.sprod.pos << ","
           << res.sprod.neg << "), product residual "
           << format_double(res.product_residual);
      rb.add_json_record("collapse",
                         {{"status", "CERTIFIED"},
                          {"m", res.m},
                          {"q", qc},
                          {"s1", {{"pos", res.s1.pos}, {"neg", res.s1.neg}}},
                          {"s2", {{"pos", res.s2.pos}, {"neg", res.s2.neg}}},
                          {"s_product", {{"pos", res.sprod.pos}, {"neg", res.sprod.neg}}},
                          {"product_residual", format_double(res.product_residual)}},
                         line.str());
    } else if (c_ps->parsed()) {
      hermitian_poly f(2);
      std::vector<std::vector<gauss_rational>> pts;
      json kernel_checks = json::array();
      if (!input.empty()) {
        f = load_input(input);
        if (points_spec.empty()) throw malformed_input("ps-check: --points required with --f");
        pts = parse_points(points_spec, f.vars());
      } else {
        const rational m0v = parse_rational(m0), cv = parse_rational(smallc);
        f = make_fixture("psbody", {{"m0", m0v}});
        const hermitian_poly kernel = make_fixture("pskernel", {{"c", cv}});
        pts = {{gauss_rational(rational(1)), gauss_rational(cv)},
               {gauss_rational(rational(-1)), gauss_rational(cv)}};
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            const gauss_rational kv = kernel.eval_exact(pts[i], pts[j]);
            kernel_checks.push_back({{"pair", {i, j}}, {"value", kv.str()},
                                     {"vanishes", kv.is_zero()}});
            if (!kv.is_zero())
              throw reconciliation_error("ps-check: built-in kernel fails to vanish");
          }
      }
      const ps_result res = ps_obstruction(f, pts);
      json mat = json::array();
      for (const auto& row : res.matrix) {
        json jrow = json::array();
        for (const auto& e : row) jrow.push_back(e.str());
        mat.push_back(jrow);
      }
      json rec = {{"status", res.obstructed ? "REFUTED" : "CERTIFIED"},
                  {"obstructed", res.obstructed},
                  {"signature", {{"pos", res.sig.pos}, {"neg", res.sig.neg}}},
                  {"matrix", mat},
                  {"exact", true}};
      if (res.det_valid) rec["determinant"] = format_rational(res.det);
      if (!kernel_checks.empty()) rec["kernel_vanishing"] = kernel_checks;
      std::ostringstream line;
      line << "ps-check: " << (res.obstructed ? "OBSTRUCTED" : "CONSISTENT");
      if (res.det_valid) line << " (determinant " << format_rational(res.det) << ")";
      rb.add_json_record("ps-check", rec, line.str());
    } else if (c_fix->parsed()) {
      if (list_fixtures) {
        json names = json::array();
        for (const auto& line : fixture_catalog()) {
          rb.human << line << "\n";
          names.push_back(line);
        }
        rb.machine["records"].push_back({{"check", "fixture-list"}, {"catalog", names}});
      } else {
        if (fixture_name.empty()) throw malformed_input("fixture: name required (or --list)");
        fixture_params params;
        for (const auto& kv : fixture_kv) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos)
            throw malformed_input("fixture parameter must be key=value: '" + kv + "'");
          params[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
        }
        emit_poly(rb, "fixture", make_fixture(fixture_name, params), out_path);
      }
    }

    if (opt.tol_report) {
      rb.machine["tolerances"] = tolerance_table();
      rb.human << "tolerances: see machine report\n";
    }
    result.machine = rb.machine;
    result.human = rb.human.str();
    if (!opt.json_path.empty()) {
      std::ofstream jf(opt.json_path);
      if (!jf) throw malformed_input("cannot write JSON report: " + opt.json_path);
      jf << rb.machine.dump(2) << "\n";
    }
    return result;
  } catch (const malformed_input& e) {
    result.exit_code = 2;
    result.human = std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const reconciliation_error& e) {
    result.exit_code = 3;
    result.human = std::string("reconciliation error: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.human = std::string("error: ") + e.what() + "\n";
    return result;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const run_result res = run_command(args);
  if (res.exit_code == 0)
    std::fputs(res.human.c_str(), stdout);
  else
    std::fputs(res.human.c_str(), stderr);
  return res.exit_code;
}

}  // namespace hermicert
