#include "padic_ell_cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "padic_ell/euler.hpp"
#include "padic_ell/exact.hpp"
#include "padic_ell/gamma_g.hpp"
#include "padic_ell/measures.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace padic_ell::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  u64 p = 3;
  int prec = 12;
  int guard = 2;
  std::string chi = "M=1;e=[]";
  std::string s = "0";
  int level = 6;
  std::string format = "json";
  std::string out_path;

  int max_n = -1;
  std::optional<u64> modulus;
  int n = 1;
  std::string x;
  int m = 0;
  bool limit = false;
  std::string domain = "X";
  bool have_s = false;
  std::string n_range;
  std::string k_range;
  int samples = 10;
  unsigned long long seed = 20240601;
  std::string suite;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  if (f == "pretty") return Format::pretty;
  throw UsageError("unknown format '" + f + "' (json, csv or pretty)");
}

void validate(const RunConfig& c) {
  if (c.p < 3 || !nt::is_prime(c.p)) throw UsageError("--p must be an odd prime");
  if (c.guard < 0) throw UsageError("--guard must be non-negative");
  if (c.prec < c.guard + 2) throw UsageError("--prec must be at least guard + 2");
  if (c.prec > nt::max_digits(c.p)) throw UsageError("--prec too large for p = " + std::to_string(c.p));
  if (c.level < 1) throw UsageError("--level must be positive");
}

DirichletChar parse_chi(const std::string& text) {
  DirichletChar chi = [&] {
    try {
      return DirichletChar::parse(text);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }();
  if (chi.modulus() % 2 == 0) throw UsageError("character modulus must be odd");
  return chi;
}

// Integer, rational "a/b", or "digits:d0,d1,..." (least significant first).
PadicElement parse_s(const std::string& text, u64 p, int prec) {
  if (text.rfind("digits:", 0) == 0) {
    std::vector<u64> digits;
    std::stringstream ss(text.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      u64 d = 0;
      try {
        size_t used = 0;
        d = std::stoull(item, &used);
        if (used != item.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw UsageError("malformed digit string '" + text + "'");
      }
      if (d >= p) throw UsageError("digit " + item + " out of range for p = " + std::to_string(p));
      digits.push_back(d);
    }
    if (digits.empty() || static_cast<int>(digits.size()) > prec)
      throw UsageError("digit string must have between 1 and N digits");
    u64 r = 0;
    for (size_t i = digits.size(); i-- > 0;) r = r * p + digits[i];
    return PadicElement::from_residue(p, prec, r);
  }
  BigRational q;
  try {
    q = BigRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("malformed s '" + text + "' (integer, a/b, or digits:d0,d1,...)");
  }
  if (!q.is_zero() && q.valuation(p) < 0) throw UsageError("s must lie in Z_p");
  return PadicElement::from_rational(p, prec, q);
}

BigRational parse_rational(const std::string& text, const std::string& what) {
  try {
    return BigRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + " '" + text + "'");
  }
}

Json header(const std::string& command, const RunConfig& c) {
  Json j;
  j["command"] = command;
  j["p"] = c.p;
  j["N"] = c.prec;
  j["guard"] = c.guard;
  return j;
}

// ---- persisted Euler tables ----

fs::path cache_file() {
  const char* dir = std::getenv("PADIC_ELL_CACHE");
  if (!dir || !*dir) return {};
  return fs::path(dir) / "euler.txt";
}

int load_cache(std::ostream& err) {
  fs::path f = cache_file();
  if (f.empty() || !fs::exists(f)) return -1;
  try {
    std::ifstream is(f);
    EulerTable t = load_euler_table(is);
    const int check = std::min(t.max_n(), 32);
    EulerTable ref = euler_numbers(check);
    for (int i = 0; i <= check; ++i)
      if (t[i] != ref[i]) throw std::runtime_error("value mismatch at n = " + std::to_string(i));
    const int n = t.max_n();
    default_euler_cache().seed(std::move(t));
    return n;
  } catch (const std::exception& e) {
    err << "warning: ignoring Euler cache " << f.string() << ": " << e.what() << '\n';
    return -1;
  }
}

void store_cache(int loaded_max, std::ostream& err) {
  fs::path f = cache_file();
  if (f.empty()) return;
  auto table = default_euler_cache().get(0);
  if (table->max_n() <= loaded_max) return;
  try {
    fs::create_directories(f.parent_path());
    fs::path tmp = f;
    tmp += ".tmp";
    {
      std::ofstream os(tmp);
      save_euler_table(os, *table);
      if (!os) throw std::runtime_error("write failed");
    }
    fs::rename(tmp, f);
  } catch (const std::exception& e) {
    err << "warning: could not write Euler cache " << f.string() << ": " << e.what() << '\n';
  }
}

// ---- commands ----

Output cmd_euler(const RunConfig& c) {
  if (c.max_n < 0) throw UsageError("--max must be >= 0");
  auto table = default_euler_cache().get(c.max_n);
  Output out;
  out.doc = {{"command", "euler"}, {"max", c.max_n}};
  out.table.header = {"n", "E_n"};
  Json rows = Json::array();
  for (int n = 0; n <= c.max_n; ++n) {
    std::string v = (*table)[n].to_string();
    rows.push_back({{"n", n}, {"value", v}});
    out.table.rows.push_back({std::to_string(n), v});
  }
  out.doc["rows"] = rows;
  out.title = "Euler numbers E_0..E_" + std::to_string(c.max_n);
  return out;
}

Output cmd_gen_euler(const RunConfig& c) {
  if (c.max_n < 0) throw UsageError("--max must be >= 0");
  DirichletChar chi = parse_chi(c.chi).primitivize();
  Output out;
  out.doc = {{"command", "gen-euler"}, {"chi", chi.to_string()}, {"conductor", chi.conductor()},
             {"order", chi.order()}, {"parity", chi.parity()}};
  if (c.modulus) out.doc["F"] = *c.modulus;
  out.table.header = {"n", "E_n_chi"};
  Json rows = Json::array();
  for (int n = 0; n <= c.max_n; ++n) {
    CycRational v = c.modulus ? generalized_euler_number_at_modulus(n, chi, *c.modulus)
                              : generalized_euler_number(n, chi);
    rows.push_back({{"n", n}, {"value", v.to_string()}});
    out.table.rows.push_back({std::to_string(n), v.to_string()});
  }
  out.doc["rows"] = rows;
  out.title = "Generalized Euler numbers for " + chi.to_string() + " (z = zeta_" + std::to_string(chi.order()) + ")";
  return out;
}

EllContext make_context(const RunConfig& c) {
  DirichletChar chi = parse_chi(c.chi);
  return EllContext(c.p, chi, c.prec, c.guard, c.modulus.value_or(0));
}

Output ell_output(const std::string& command, const RunConfig& c, const EllContext& ctx, const EllValue& v,
                  Json extra, std::vector<std::pair<std::string, std::string>> extra_cols) {
  Output out;
  out.doc = header(command, c);
  out.doc["chi"] = ctx.chi().to_string();
  out.doc["F"] = ctx.modulus();
  for (auto& [k, val] : extra.items()) out.doc[k] = val;
  out.doc["certified_precision"] = v.certified_precision;
  out.doc["ring"] = ring_json(*ctx.ring());
  // Only certified digits are rendered.
  const ExtElement value = v.certified();
  out.doc["value"] = value_json(value);
  out.doc["text"] = value.to_string();
  out.table.header = {"p", "N", "chi"};
  out.table.rows.push_back({std::to_string(c.p), std::to_string(c.prec), ctx.chi().to_string()});
  for (auto& [k, val] : extra_cols) {
    out.table.header.push_back(k);
    out.table.rows[0].push_back(val);
  }
  for (const char* h : {"certified_precision", "valuation", "relative_precision", "unit_digits"})
    out.table.header.push_back(h);
  out.table.rows[0].push_back(std::to_string(v.certified_precision));
  out.table.rows[0].push_back(valuation_string(value.valuation()));
  out.table.rows[0].push_back(std::to_string(value.relative_precision()));
  out.table.rows[0].push_back(digit_string(value));
  out.title = command + ": " + value.to_string();
  return out;
}

Output cmd_ell(const RunConfig& c) {
  EllContext ctx = make_context(c);
  PadicElement s = parse_s(c.s, c.p, c.prec);
  EllValue v = ell_p(s, ctx);
  return ell_output("ell", c, ctx, v, {{"s", c.s}, {"s_padic", s.to_string()}}, {{"s", c.s}});
}

Output cmd_ell_deriv(const RunConfig& c) {
  EllContext ctx = make_context(c);
  return ell_output("ell-deriv", c, ctx, ell_derivative_0(ctx), Json::object(), {});
}

Output cmd_ell_positive(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be >= 1");
  EllContext ctx = make_context(c);
  EllValue v = ell_at_positive(c.n, ctx);
  std::string twisted = twist_teichmuller(ctx.chi(), c.n - 1, c.p).to_string();
  return ell_output("ell-positive", c, ctx, v, {{"n", c.n}, {"value_character", twisted}},
                    {{"n", std::to_string(c.n)}, {"value_character", twisted}});
}

Output cmd_gamma_g(const RunConfig& c) {
  BigRational xq = parse_rational(c.x, "--x");
  if (xq.is_zero() || xq.valuation(c.p) > -1) throw UsageError("--x must satisfy v_p(x) <= -1");
  if (c.m == 1 || c.m < 0) throw UsageError("--m must be 0 (G itself) or >= 2");
  PadicElement x = PadicElement::from_rational(c.p, c.prec, xq);
  PadicElement v = c.m == 0 ? (c.limit ? G_limit_oracle(x, c.level, c.guard) : G(x, c.guard))
                            : (c.limit ? G_deriv_limit_oracle(c.m, x, c.level) : G_deriv(c.m, x, c.guard));
  Output out;
  out.doc = header("gamma-g", c);
  out.doc["x"] = xq.to_string();
  out.doc["derivative"] = c.m;
  out.doc["form"] = c.limit ? "limit" : "series";
  if (c.limit) out.doc["level"] = c.level;
  out.doc["value"] = value_json(v);
  out.doc["text"] = v.to_string();
  out.table.header = {"p", "N", "x", "derivative", "form", "valuation", "relative_precision", "unit_digits"};
  out.table.rows.push_back({std::to_string(c.p), std::to_string(c.prec), xq.to_string(), std::to_string(c.m),
                            c.limit ? "limit" : "series", valuation_string(v.valuation()),
                            std::to_string(v.relative_precision()), digit_string(v)});
  out.title = "gamma-g: " + v.to_string();
  return out;
}

Output cmd_measure(const RunConfig& c) {
  EllContext ctx = make_context(c);
  Domain domain = [&] {
    try {
      return parse_domain(c.domain);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }();
  std::string integrand;
  ExtElement v = ExtElement::zero(ctx.ring());
  if (c.have_s) {
    if (domain != Domain::Xstar) throw UsageError("--s integrates chi(x) <x>^{1-s} and needs --domain X*");
    PadicElement s = parse_s(c.s, c.p, c.prec);
    v = ell_p_measure(s, ctx, c.level);
    integrand = "chi(x) <x>^(1-s), s = " + c.s;
  } else {
    if (c.n < 0) throw UsageError("--n must be >= 0");
    v = char_integral(c.n, ctx.chi(), ctx.ring(), c.level, domain);
    integrand = "chi(x) x^" + std::to_string(c.n);
  }
  Output out;
  out.doc = header("measure", c);
  out.doc["chi"] = ctx.chi().to_string();
  out.doc["domain"] = to_string(domain);
  out.doc["d"] = ctx.chi().conductor();
  out.doc["level"] = c.level;
  out.doc["integrand"] = integrand;
  out.doc["ring"] = ring_json(*ctx.ring());
  out.doc["value"] = value_json(v);
  out.doc["text"] = v.to_string();
  out.table.header = {"p", "chi", "domain", "d", "level", "integrand", "valuation", "relative_precision",
                      "unit_digits"};
  out.table.rows.push_back({std::to_string(c.p), ctx.chi().to_string(), to_string(domain),
                            std::to_string(ctx.chi().conductor()), std::to_string(c.level), integrand,
                            valuation_string(v.valuation()), std::to_string(v.relative_precision()),
                            digit_string(v)});
  out.title = "measure: " + v.to_string();
  return out;
}

Output cmd_verify(const RunConfig& c, bool& all_pass) {
  VerifyConfig vc;
  vc.p = c.p;
  vc.prec = c.prec;
  vc.guard = c.guard;
  vc.chi = parse_chi(c.chi);
  vc.level = c.level;
  vc.samples = c.samples;
  vc.seed = c.seed;
  try {
    if (!c.n_range.empty()) vc.n = parse_range(c.n_range);
    if (!c.k_range.empty()) vc.k = parse_range(c.k_range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
    throw UsageError("unknown verify suite '" + c.suite + "'");
  VerifyReport rep = run_suite(c.suite, vc);
  all_pass = rep.failed() == 0;

  Output out;
  out.doc = header("verify", c);
  out.doc["suite"] = rep.suite;
  out.doc["chi"] = vc.chi.to_string();
  out.doc["cases"] = rep.records.size();
  out.doc["passed"] = rep.passed();
  out.doc["failed"] = rep.failed();
  out.doc["vacuous"] = rep.vacuous;
  Json recs = Json::array();
  out.table.header = {"claim", "parameters", "observed_valuation", "required_valuation", "pass"};
  for (const auto& r : rep.records) {
    recs.push_back(record_json(r));
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + v;
    out.table.rows.push_back({r.claim, params, valuation_string(r.observed_valuation),
                              std::to_string(r.required_valuation), r.pass ? "true" : "false"});
  }
  out.doc["records"] = recs;
  std::ostringstream t;
  t << "verify " << rep.suite << ": " << rep.records.size() << " cases, " << rep.passed() << " passed, "
    << rep.failed() << " failed" << (rep.vacuous ? " (vacuous)" : "");
  out.title = t.str();
  return out;
}

void add_precision(CLI::App* sc, RunConfig& c) {
  sc->add_option("--p", c.p, "Odd prime p")->capture_default_str();
  sc->add_option("--prec", c.prec, "Working precision N in p-adic digits")->capture_default_str();
  sc->add_option("--guard", c.guard, "Guard digits g")->capture_default_str();
}

void add_chi(CLI::App* sc, RunConfig& c) {
  sc->add_option("--chi", c.chi, "Character \"M=<modulus>;e=[exponents]\"")->capture_default_str();
}

void add_output(CLI::App* sc, RunConfig& c) {
  sc->add_option("--format", c.format, "json, csv or pretty")->capture_default_str();
  sc->add_option("--out", c.out_path, "Write the result to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic Euler l-functions: exact Euler numbers, l_{p,E}(s, chi) and congruence checks",
               "padic-ell"};
  app.require_subcommand(1);
  RunConfig c;

  auto* euler = app.add_subcommand("euler", "Table of Euler numbers E_0..E_max");
  euler->add_option("--max", c.max_n, "Largest index")->required();
  add_output(euler, c);

  auto* gen = app.add_subcommand("gen-euler", "Generalized Euler numbers E_{n,chi} for n <= max");
  gen->add_option("--max", c.max_n, "Largest index")->required();
  add_chi(gen, c);
  gen->add_option("--modulus", c.modulus, "Evaluate at an odd multiple F of the conductor");
  add_output(gen, c);

  auto* ell = app.add_subcommand("ell", "l_{p,E}(s, chi) for s in Z_p");
  add_precision(ell, c);
  add_chi(ell, c);
  ell->add_option("--s", c.s, "Integer, a/b with p !| b, or digits:d0,d1,...")->capture_default_str();
  ell->add_option("--modulus", c.modulus, "Odd multiple F of p and the conductor");
  add_output(ell, c);

  auto* deriv = app.add_subcommand("ell-deriv", "l'_{p,E}(0, chi)");
  add_precision(deriv, c);
  add_chi(deriv, c);
  deriv->add_option("--modulus", c.modulus, "Odd multiple F of p and the conductor");
  add_output(deriv, c);

  auto* pos = app.add_subcommand("ell-positive", "l_{p,E}(n, chi_{n-1}) via D^n G");
  add_precision(pos, c);
  add_chi(pos, c);
  pos->add_option("--n", c.n, "Positive integer n")->capture_default_str();
  add_output(pos, c);

  auto* gam = app.add_subcommand("gamma-g", "G_{p,E}(x) or its m-th derivative");
  add_precision(gam, c);
  gam->add_option("--x", c.x, "Rational argument with v_p(x) <= -1")->required();
  gam->add_option("--m", c.m, "Derivative order (0 or >= 2)")->capture_default_str();
  gam->add_flag("--limit", c.limit, "Use the level-M limit definition instead of the series");
  gam->add_option("--level", c.level, "Level M for --limit")->capture_default_str();
  add_output(gam, c);

  auto* meas = app.add_subcommand("measure", "Fermionic integral of chi(x) x^n, or of chi(x) <x>^{1-s} over X*");
  add_precision(meas, c);
  add_chi(meas, c);
  meas->add_option("--n", c.n, "Monomial degree")->capture_default_str();
  meas->add_option("--domain", c.domain, "X, pX or X*")->capture_default_str();
  meas->add_option("--level", c.level, "Level M")->capture_default_str();
  auto* s_opt = meas->add_option("--s", c.s, "Integrate chi(x) <x>^{1-s} over X* instead");
  add_output(meas, c);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", c.suite, "interpolation, kummer, reflection, gamma-functional-equations, measures, "
                                    "derivative")
      ->required();
  add_precision(ver, c);
  add_chi(ver, c);
  ver->add_option("--level", c.level, "Level M")->capture_default_str();
  ver->add_option("--n", c.n_range, "Range a..b of n");
  ver->add_option("--k", c.k_range, "Range a..b of k (kummer) or j (derivative)");
  ver->add_option("--samples", c.samples, "Random s values (reflection)")->capture_default_str();
  ver->add_option("--seed", c.seed, "Seed for random samples")->capture_default_str();
  add_output(ver, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const int cached = load_cache(err);
  int code = kOk;
  try {
    validate(c);
    Format format = parse_format(c.format);
    c.have_s = s_opt->count() > 0;
    bool pass = true;
    Output result;
    if (euler->parsed()) result = cmd_euler(c);
    else if (gen->parsed()) result = cmd_gen_euler(c);
    else if (ell->parsed()) result = cmd_ell(c);
    else if (deriv->parsed()) result = cmd_ell_deriv(c);
    else if (pos->parsed()) result = cmd_ell_positive(c);
    else if (gam->parsed()) result = cmd_gamma_g(c);
    else if (meas->parsed()) result = cmd_measure(c);
    else result = cmd_verify(c, pass);
    if (!pass) code = kVerifyFailed;
    if (c.out_path.empty()) {
      write_output(out, result, format);
    } else {
      std::ofstream f(c.out_path);
      if (!f) throw UsageError("cannot open --out file '" + c.out_path + "'");
      write_output(f, result, format);
    }
  } catch (const std::exception& e) {
    // Library precondition failures are reported as usage errors.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  store_cache(cached, err);
  return code;
}

}  // namespace padic_ell::cli
