#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cheblab/bv.hpp"
#include "cheblab/cheb_psi.hpp"
#include "cheblab/ellcurves.hpp"
#include "cheblab/errors.hpp"
#include "cheblab/galois.hpp"
#include "cheblab/modforms.hpp"
#include "cheblab/report.hpp"
#include "cheblab/sieve.hpp"
#include "cheblab/tuples.hpp"

namespace cheblab::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DomainError*>(&e)) return kDomain;
  if (dynamic_cast<const RangeError*>(&e)) return kRange;
  if (dynamic_cast<const std::out_of_range*>(&e)) return kRange;
  return kUsage;
}

std::uint64_t parse_count(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return ArgumentError("expected a non-negative integer, got '" + s + "'"); };
  if (s.empty()) throw bad();
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    const std::uint64_t base = parse_count(s.substr(0, caret));
    const std::uint64_t exp = parse_count(s.substr(caret + 1));
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (base != 0 && v > UINT64_MAX / base) throw RangeError("'" + s + "' overflows 64 bits");
      v *= base;
    }
    return v;
  }
  if (s.find_first_not_of("0123456789") == std::string::npos) {
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), nullptr, 10);
    if (errno == ERANGE) throw RangeError("'" + s + "' overflows 64 bits");
    return v;
  }
  // scientific notation, accepted only when it denotes an integer exactly
  char* end = nullptr;
  const long double v = std::strtold(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !(v >= 0) || v != std::floor(v)) throw bad();
  if (v >= 18446744073709551616.0L) throw RangeError("'" + s + "' overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

namespace {

double parse_real(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ArgumentError("--" + key + " expects a real number, got '" + s + "'");
  }
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.starts_with("--")) key.erase(0, 2);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool truthy(const std::string& v) { return v == "1" || v == "true" || v == "yes" || v == "on"; }

// Option values live here as strings; conversion and validation happen after parsing.
struct Values {
  std::map<std::string, std::string> text;
  std::map<std::string, bool> flag;
  std::map<std::string, CLI::Option*> opts;

  bool has(const std::string& k) const {
    const auto it = opts.find(k);
    return it != opts.end() && it->second->count() > 0;
  }
  const std::string& str(const std::string& k) const { return text.at(k); }
  std::uint64_t count(const std::string& k) const {
    if (!has(k)) throw ArgumentError("missing required --" + k);
    return parse_count(text.at(k));
  }
  std::uint64_t count_or(const std::string& k, std::uint64_t dflt) const { return has(k) ? count(k) : dflt; }
  double real(const std::string& k) const {
    if (!has(k)) throw ArgumentError("missing required --" + k);
    return parse_real(k, text.at(k));
  }
  double real_or(const std::string& k, double dflt) const { return has(k) ? real(k) : dflt; }
};

struct Sub {
  CLI::App* app;
  Values v;

  Sub& opt(const std::string& name, const std::string& desc) {
    v.opts[name] = app->add_option("--" + name, v.text[name], desc)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    return *this;
  }
  Sub& flag(const std::string& name, const std::string& desc) {
    v.flag[name] = false;
    v.opts[name] = app->add_flag("--" + name, v.flag[name], desc);
    return *this;
  }
};

std::uint64_t resolve_workers(const Values& v) {
  if (v.has("threads")) return v.count("threads");
  if (const char* env = std::getenv("CHEBLAB_THREADS"); env && *env) return parse_count(env);
  return 0;
}

galois::GaloisContext context_of(const Values& v) {
  return galois::GaloisContext::make(v.has("ctx") ? v.str("ctx") : "trivial");
}

galois::ClassId class_of(const galois::GaloisContext& ctx, const Values& v) {
  return v.has("class") ? ctx.class_by_id(v.str("class")) : ctx.identity_class();
}

// Window length from --h, else ceil(x^(1 - delta)).
std::uint64_t window_of(const Values& v, std::uint64_t x) {
  if (v.has("h")) return v.count("h");
  if (!v.has("delta")) throw ArgumentError("need --h or --delta");
  const double delta = v.real("delta");
  if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("--delta must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(x), 1.0 - delta)));
}

tuples::AdmissibleTuple tuple_of(const Values& v) {
  if (v.has("tuple")) return tuples::AdmissibleTuple::parse(v.str("tuple"));
  if (!v.has("k")) throw ArgumentError("need --tuple or --k");
  const std::string method = v.has("method") ? v.str("method") : "shifted-primes";
  tuples::GenMethod m;
  if (method == "shifted-primes") {
    m = tuples::GenMethod::ShiftedPrimes;
  } else if (method == "greedy") {
    m = tuples::GenMethod::Greedy;
  } else {
    throw ArgumentError("--method must be shifted-primes or greedy");
  }
  return tuples::gen_admissible(v.count("k"), m);
}

unsigned threshold_of(const Values& v, const tuples::AdmissibleTuple& t) {
  if (!v.has("T")) return tuples::default_threshold(t.k());
  const std::uint64_t T = v.count("T");
  if (T == 0 || T > t.k()) throw ArgumentError("--T must lie in [1, k]");
  return static_cast<unsigned>(T);
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string scalar(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const Values& v, const report::Report& r) const {
    const auto fmt = format_of(v);
    if (v.has("out")) {
      report::emit_report(r, fmt, v.str("out"));
      err_ << "wrote " << v.str("out") << "\n";
    } else {
      out_ << report::render(r, fmt);
    }
  }

  // Scalar results go to stdout unless --out asks for a report file.
  void emit_scalar(const Values& v, const std::string& kind, std::vector<std::pair<std::string, report::Cell>> params,
                   const std::string& name, double value) const {
    if (!v.has("out")) {
      out_ << scalar(value) << "\n";
      return;
    }
    report::Report r;
    r.kind = kind;
    r.params = std::move(params);
    r.tables.push_back({"result", {name}, {{value}}});
    emit(v, r);
  }

  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }

 private:
  static report::Format format_of(const Values& v) {
    if (v.has("format")) return v.str("format") == "json" ? report::Format::Json : report::Format::Csv;
    if (v.has("out") && v.str("out").ends_with(".json")) return report::Format::Json;
    return report::Format::Csv;
  }

  std::ostream& out_;
  std::ostream& err_;
};

void cmd_psi(const Runner& R, const Values& v, const Exec& exec) {
  const auto ctx = context_of(v);
  cheb::PsiQuery q{class_of(ctx, v), v.count("x"), v.count_or("q", 1), v.count_or("a", 1)};
  const double value = cheb::psi_C(ctx, q, exec);
  R.emit_scalar(v, "psi", {{"context", ctx.label()}, {"class", ctx.info(q.cls).id}, {"x", q.x}, {"q", q.q}, {"a", q.a}},
                "psi", value);
}

void cmd_cdt(const Runner& R, const Values& v, const Exec& exec) {
  const auto ctx = context_of(v);
  const auto cls = class_of(ctx, v);
  const std::uint64_t x = v.count("x");
  const std::uint64_t h = window_of(v, x);
  const std::uint64_t q = v.count_or("q", 1), a = v.count_or("a", 1);
  const auto w = v.flag.at("primes-only") ? cheb::Weights::PrimesOnly : cheb::Weights::PrimePowers;
  const double ratio = cheb::cdt_ratio(ctx, cls, x, h, q, a, exec, w);
  R.emit_scalar(v, "cdt", {{"context", ctx.label()}, {"class", ctx.info(cls).id}, {"x", x}, {"h", h}, {"q", q}, {"a", a}},
                "ratio", ratio);
}

bv::BVParams bv_params(const Values& v) {
  auto ctx = context_of(v);
  const auto cls = class_of(ctx, v);
  bv::BVParams p{std::move(ctx), cls, 0, 0.0, 0.0, 1.0, {}, {}, {}, true};
  p.x = v.count("x");
  p.delta = v.real("delta");
  p.theta = v.real("theta");
  p.D = v.real_or("D", 1.0);
  if (v.has("h")) p.h = v.count("h");
  if (v.has("Q")) p.Q = v.count("Q");
  p.grid.n_N = v.count_or("grid-N", p.grid.n_N);
  p.grid.n_y = v.count_or("grid-y", p.grid.n_y);
  p.strict = !v.flag.at("no-strict");
  if (p.strict) {
    const auto check = bv::validate_params(p.ctx.info(cls).n_E, p.delta, p.theta);
    if (!check.ok) throw ConfigError(check.violation);
  }
  return p;
}

void cmd_bv(const Runner& R, const Values& v, const Exec& exec) {
  const auto p = bv_params(v);
  if (v.has("plot")) R.err() << "warning: --plot applies to scan only; ignored\n";
  R.emit(v, report::from_bv(bv::bv_error_sum(p, exec)));
}

void cmd_scan(const Runner& R, const Values& v, const Exec& exec) {
  const auto p = bv_params(v);
  const std::uint64_t x_min = v.count_or("x-min", 10'000);
  const auto reps = bv::dyadic_scan(p, x_min, p.x, exec);
  R.emit(v, report::from_bv_scan(reps));
  if (v.has("plot")) {
    std::vector<double> xs, ys;
    for (const auto& r : reps) {
      xs.push_back(std::log2(static_cast<double>(r.params.x)));
      ys.push_back(r.normalized_ratio);
    }
    report::write_atomic(v.str("plot"), report::render_svg(xs, ys, p.ctx.label() + " / " + p.ctx.info(p.cls).id,
                                                           "log2 x", "normalized ratio"));
    R.err() << "wrote " << v.str("plot") << "\n";
  }
}

void cmd_admissible(const Runner& R, const Values& v, const Exec&) {
  if (v.has("tuple") && !v.has("k")) {
    std::vector<std::uint64_t> offsets;
    std::stringstream ss(v.str("tuple"));
    for (std::string tok; std::getline(ss, tok, ',');) offsets.push_back(parse_count(trim(tok)));
    const auto adm = tuples::is_admissible(offsets);
    if (adm.admissible) {
      R.out() << "admissible\n";
    } else {
      R.out() << "not admissible: covers every residue mod " << *adm.covering_prime << "\n";
    }
    return;
  }
  R.out() << join(tuple_of(v).offsets) << "\n";
}

void cmd_sseries(const Runner& R, const Values& v, const Exec&) {
  const auto t = tuple_of(v);
  const std::uint64_t P = v.count_or("P", 100'000);
  R.emit_scalar(v, "sseries", {{"offsets", join(t.offsets)}, {"P", P}}, "singular_series",
                tuples::singular_series(t.offsets, P));
}

void cmd_clusters(const Runner& R, const Values& v, const Exec& exec) {
  const auto ctx = context_of(v);
  const auto cls = class_of(ctx, v);
  const auto t = tuple_of(v);
  const std::uint64_t x = v.count("x");
  R.emit(v, report::from_clusters(tuples::scan_clusters(ctx, cls, t, x, window_of(v, x), threshold_of(v, t), exec)));
}

void cmd_hypothesis(const Runner& R, const Values& v, const Exec& exec) {
  auto ctx = context_of(v);
  const auto cls = class_of(ctx, v);
  tuples::HypothesisConfig cfg{std::move(ctx), cls, tuple_of(v), 0, 0, 0.0, {}};
  cfg.x = v.count("x");
  cfg.h = window_of(v, cfg.x);
  cfg.theta = v.real("theta");
  if (v.has("B")) cfg.B = v.count("B");
  R.emit(v, report::from_hypothesis(tuples::verify_hypothesis(cfg, exec)));
}

modforms::QExpansion form_of(const Values& v, std::size_t N, const Exec& exec) {
  if (!v.has("form")) throw ArgumentError("need --form (eta:... or theta:a,b,c)");
  return modforms::expansion_from_spec(v.str("form"), N, exec);
}

void cmd_coeffs(const Runner& R, const Values& v, const Exec& exec) {
  const std::uint64_t N = v.count("N");
  const auto f = form_of(v, N, exec);
  report::Report r;
  r.kind = "coeffs";
  r.params = {{"form", f.provenance}, {"N", N}};
  report::Table t{"coefficients", {"n", "coefficient"}, {}};
  for (std::uint64_t n = 0; n <= N; ++n) t.rows.push_back({n, f[n].get_str()});
  r.tables.push_back(std::move(t));
  R.emit(v, r);
}

void cmd_gaps(const Runner& R, const Values& v, const Exec& exec) {
  const std::uint64_t N = v.count("N");
  const std::uint64_t n_max = v.count_or("x", N / 2);
  const auto f = form_of(v, N, exec);
  const auto g = modforms::gap_stats(f, n_max);
  report::Report r;
  r.kind = "gaps";
  r.params = {{"form", f.provenance}, {"N", N}, {"n_max", n_max}};
  report::Table t{"records", {"n", "gap"}, {}};
  for (const auto& [n, gap] : g.records) t.rows.push_back({n, gap});
  r.tables.push_back(std::move(t));
  r.summary = report::Summary{"total", "#TOTAL", {"max_gap"}, {g.max_gap}};
  R.emit(v, r);
}

void cmd_discs(const Runner& R, const Values& v, const Exec& exec) {
  const auto t = tuple_of(v);
  const std::uint64_t x = v.count("x");
  const auto rep = ell::rank_zero_twist_labels(modforms::congruent_number_rule(), t, v.count_or("a", 1),
                                               v.count_or("q", 1), x, window_of(v, x), threshold_of(v, t),
                                               !v.flag.at("no-coprime-filter"), exec);
  R.emit(v, report::from_disc(rep));
}

void cmd_ectrace(const Runner& R, const Values& v, const Exec&) {
  const auto E = ell::EllipticCurve::parse(v.str("curve"));
  ell::ApOptions opts;
  opts.max_prime = v.count_or("cap", opts.max_prime);
  if (v.has("p")) {
    const auto a = ell::ap(E, v.count("p"), opts);
    if (!a) throw DomainError("bad reduction at p = " + v.str("p"));
    R.out() << *a << "\n";
    return;
  }
  const std::uint64_t x = v.count("x");
  report::Report r;
  r.kind = "ectrace";
  r.params = {{"curve", E.label()}, {"x", x}};
  report::Table t{"traces", {"p", "a_p"}, {}};
  for (const auto p : sieve::primes_in(sieve::Interval::make(1, x))) {
    if (const auto a = ell::ap(E, p, opts)) t.rows.push_back({p, *a});
  }
  r.tables.push_back(std::move(t));
  R.emit(v, r);
}

void cmd_ecclusters(const Runner& R, const Values& v, const Exec& exec) {
  const auto E = ell::EllipticCurve::parse(v.str("curve"));
  const auto t = tuple_of(v);
  const std::uint64_t m = v.count("m"), i = v.count("i");
  const std::uint64_t x = v.count("x");
  const std::uint64_t h = window_of(v, x);
  ell::ApOptions opts;
  opts.max_prime = v.count_or("cap", opts.max_prime);
  const std::uint64_t bound = std::max<std::uint64_t>(1000, std::min<std::uint64_t>(x + h, 100'000));
  if (!ell::good_residue_exists(E, m, i, bound, opts)) {
    R.err() << "warning: no good prime p <= " << bound << " has a_p = " << i << " mod " << m
            << "; the residue class may be empty\n";
  }
  R.emit(v, report::from_clusters(ell::ap_mod_clusters(E, m, i, t, x, h, threshold_of(v, t), exec, opts)));
}

using Handler = void (*)(const Runner&, const Values&, const Exec&);

struct Command {
  const char* name;
  const char* help;
  Handler run;
  std::vector<const char*> options;
  std::vector<const char*> flags;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> cmds = {
      {"psi", "Chebotarev psi over [1, x] in a residue class", cmd_psi, {"ctx", "class", "x", "q", "a"}, {}},
      {"cdt", "short-interval ratio psi_C(x + h) - psi_C(x) over its main term", cmd_cdt,
       {"ctx", "class", "x", "h", "delta", "q", "a"}, {"primes-only"}},
      {"bv", "short-interval Bombieri-Vinogradov error sum", cmd_bv,
       {"ctx", "class", "x", "delta", "theta", "D", "h", "Q", "grid-N", "grid-y"}, {"no-strict"}},
      {"scan", "error sum at dyadic x in [x-min, x]", cmd_scan,
       {"ctx", "class", "x", "x-min", "delta", "theta", "D", "Q", "grid-N", "grid-y"}, {"no-strict"}},
      {"admissible", "generate (--k) or check (--tuple) an admissible tuple", cmd_admissible,
       {"k", "method", "tuple"}, {}},
      {"sseries", "singular series of a tuple", cmd_sseries, {"k", "method", "tuple", "P"}, {}},
      {"clusters", "Chebotarev prime clusters along a tuple", cmd_clusters,
       {"ctx", "class", "k", "method", "tuple", "x", "h", "delta", "T"}, {}},
      {"hypothesis", "evaluate the distribution-hypothesis terms", cmd_hypothesis,
       {"ctx", "class", "k", "method", "tuple", "x", "h", "delta", "theta", "B"}, {}},
      {"coeffs", "q-expansion coefficients", cmd_coeffs, {"form", "N"}, {}},
      {"gaps", "record gaps between nonzero coefficients", cmd_gaps, {"form", "N", "x"}, {}},
      {"discs", "fundamental discriminant clusters with the twist proxy", cmd_discs,
       {"k", "method", "tuple", "x", "h", "delta", "T", "q", "a"}, {"no-coprime-filter"}},
      {"ectrace", "Frobenius traces a_p of a curve", cmd_ectrace, {"curve", "x", "p", "cap"}, {}},
      {"ecclusters", "clusters of primes with a_p = i mod m", cmd_ecclusters,
       {"curve", "m", "i", "k", "method", "tuple", "x", "h", "delta", "T", "cap"}, {}},
  };
  return cmds;
}

const char* describe(const std::string& name) {
  static const std::map<std::string, const char*> d = {
      {"ctx", "Galois context: trivial, quadratic:d, cyclotomic:m, cubic-s3:a,b"},
      {"class", "conjugacy class id (default: identity)"},
      {"x", "base point x"},
      {"x-min", "smallest dyadic point (default 10000)"},
      {"h", "window length"},
      {"delta", "window exponent, h = ceil(x^(1 - delta))"},
      {"theta", "level exponent, Q = floor(x^theta)"},
      {"Q", "explicit level Q"},
      {"D", "log power in the normalized ratio (default 1)"},
      {"q", "modulus (default 1)"},
      {"a", "residue (default 1)"},
      {"grid-N", "sampled N values (default 8)"},
      {"grid-y", "sampled y values (default 8)"},
      {"k", "tuple size"},
      {"method", "shifted-primes or greedy"},
      {"tuple", "offsets, e.g. 0,2,6"},
      {"T", "cluster threshold (default ceil(k/2))"},
      {"P", "prime cutoff for the singular series product (default 100000)"},
      {"B", "cutoff B (default |d_L|)"},
      {"form", "eta:(1^2)(11^2) or theta:a,b,c"},
      {"N", "truncation order"},
      {"curve", "ec:A,B for y^2 = x^3 + A x + B"},
      {"p", "single prime"},
      {"m", "modulus for a_p"},
      {"i", "residue for a_p"},
      {"cap", "largest prime for a_p (default 1e7)"},
      {"primes-only", "weight primes only, dropping higher prime powers"},
      {"no-strict", "skip parameter-range validation"},
      {"no-coprime-filter", "keep d sharing a factor with 4N"},
  };
  const auto it = d.find(name);
  return it == d.end() ? "" : it->second;
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"cheblab: short-interval primes in Chebotarev sets"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");  // frees -h; --h is the window length

  std::vector<std::unique_ptr<Sub>> subs;
  for (const auto& c : commands()) {
    auto s = std::make_unique<Sub>();
    s->app = app.add_subcommand(c.name, c.help);
    for (const char* o : c.options) s->opt(o, describe(o));
    for (const char* f : c.flags) s->flag(f, describe(f));
    s->opt("out", "output path (default: stdout)");
    s->opt("format", "csv or json (default: from --out extension, else csv)");
    s->v.opts["format"]->check(CLI::IsMember({"csv", "json"}));
    s->opt("threads", "worker count (default: $CHEBLAB_THREADS, else all cores)");
    s->opt("config", "key = value file; flags override");
    if (std::string(c.name) == "scan" || std::string(c.name) == "bv") s->opt("plot", "SVG path for the ratio plot");
    subs.push_back(std::move(s));
  }

  std::vector<std::string> args = args_in;
  try {
    // Splice config entries in right after the subcommand so later flags win.
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
      if (args[i].starts_with("--config=")) config_path = args[i].substr(9);
    }
    if (!config_path.empty()) {
      std::size_t at = args.size();
      Sub* target = nullptr;
      for (std::size_t i = 0; i < args.size() && !target; ++i) {
        for (auto& s : subs) {
          if (s->app->get_name() == args[i]) target = s.get(), at = i + 1;
        }
      }
      if (!target) throw ArgumentError("--config needs a subcommand");
      std::vector<std::string> extra;
      for (const auto& [key, value] : read_config(config_path)) {
        if (key == "config") continue;
        if (!target->v.opts.count(key)) {
          err << "warning: config key '" << key << "' does not apply to " << target->app->get_name() << "\n";
          continue;
        }
        if (target->v.flag.count(key)) {
          if (truthy(value)) extra.push_back("--" + key);
        } else {
          extra.push_back("--" + key + "=" + value);
        }
      }
      args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const Runner runner(out, err);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->app->parsed()) continue;
    const Values& v = subs[i]->v;
    try {
      Exec exec;
      exec.workers = static_cast<int>(resolve_workers(v));
      commands()[i].run(runner, v, exec);
      return kOk;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return exit_code_for(e);
    }
  }
  return kUsage;
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr); }

}  // namespace cheblab::cli
