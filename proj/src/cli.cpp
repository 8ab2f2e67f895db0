#include "beattylab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "beattylab/arith.hpp"
#include "beattylab/beatty.hpp"
#include "beattylab/bounds.hpp"
#include "beattylab/continued_fraction.hpp"
#include "beattylab/errors.hpp"
#include "beattylab/explicit_checks.hpp"
#include "beattylab/report.hpp"
#include "beattylab/suites.hpp"
#include "beattylab/vaughan.hpp"

namespace beattylab::cli {

using json = nlohmann::ordered_json;
using reals::BeattyParams;
using reals::RealSpec;

unsigned default_workers() {
  if (const char* v = std::getenv("BEATTYLAB_WORKERS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n > 0 && n <= 1024)
      return static_cast<unsigned>(n);
  }
  return 1;
}

namespace {

const std::map<std::string, std::string>& explanations() {
  static const std::map<std::string, std::string> text = {
      {"bound", "bound: upper bound L^(35-16eps) alpha^(2(1-eps)) B p_{m+ell}^(1+eps) for the least prime in "
                "B(alpha,beta), with p_m <= L^16 alpha^2 < p_{m+1}, L = log(2 alpha B), B = max(1, beta), "
                "ell large enough that the minor-arc inequality holds; reported in log space"},
      {"least-prime", "least-prime: the least prime floor(n alpha + beta) by direct enumeration"},
      {"members", "members: rows n, floor(n alpha + beta), primality"},
      {"cf", "cf: partial quotients a_n and convergents p_n/q_n, p_{n+1} = a_{n+1} p_n + p_{n-1}"},
      {"rational", "rational: B(a/q, beta) as the union over b = 1..q of floor(ab/q + beta) + a N_0; a class with "
                   "gcd(offset, a) > 1 holds at most one prime"},
      {"expsum", "expsum: sum over n <= N of Lambda(n) e(h a n)"},
      {"verify", "verify: vaughan (identity, min-sums, bilinear, dyadic, sh, chi-sum, sandwich, "
                 "partial-summation), explicit (divisor, d3sq, dsq, rs), beatty (bridge, rayleigh), "
                 "bound (minor-arc inequality and prime certificate)"},
      {"report", "report: the default battery of every verify family with fixed sizes"},
  };
  return text;
}

BeattyParams beatty_params(const std::string& alpha, const std::string& beta) {
  return BeattyParams(RealSpec::parse(alpha), RealSpec::parse(beta));
}

std::string csv_cell(const json& v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v)
      s += (s.empty() ? "" : " ") + csv_cell(x);
    return s;
  }
  if (v.is_null())
    return "";
  return v.dump();
}

// Single objects default to JSON; a CSV rendering is one header plus one row.
void emit_object(const json& obj, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format.value_or("json") == "json") {
    os << obj.dump(2) << '\n';
    return;
  }
  std::string head, row;
  for (const auto& [k, v] : obj.items()) {
    head += (head.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + csv_cell(v);
  }
  os << head << '\n' << row << '\n';
}

// Sweeps default to CSV; JSON is an array of row objects.
void emit_rows(const std::vector<std::string>& cols, const std::vector<std::vector<json>>& rows, const RunConfig& cfg,
               std::ostream& os) {
  if (cfg.format.value_or("csv") == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t i = 0; i < cols.size(); ++i)
        o[cols[i]] = r[i];
      arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < cols.size(); ++i)
    os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      os << (i ? "," : "") << csv_cell(r[i]);
    os << '\n';
  }
}

int emit_records(const std::vector<VerificationRecord>& records, const RunConfig& cfg, std::ostream& os) {
  report::emit_report(records, report::parse_format(cfg.format.value_or("csv")), os);
  return report::all_pass(records) ? exit_ok : exit_failed_check;
}

void require_below_sieve(std::uint64_t x, const RunConfig& cfg, const char* what) {
  if (x > cfg.sieve_limit)
    fail(errc::range_too_large, std::string(what) + " exceeds --sieve-limit");
}

struct Options {
  RunConfig cfg;
  std::string alpha, beta = "rat:0/1";
  double eps = 0.02;
  double suite_eps = 0.1; // the exponential-sum suites keep M_eps finite
  std::optional<std::uint64_t> ell;
  std::optional<double> log_eta;
  std::string mode = "auto";
  std::uint64_t limit = 1000000, count = 20, terms = 20, n = 5000, xmax = 100000;
  std::int64_t a = 0, q = 0, h = 1;
  unsigned cases = 10;
  std::string suite, check;
};

int do_bound(const Options& o, std::ostream& os) {
  const auto params = beatty_params(o.alpha, o.beta);
  const auto r = bounds::headline_log_bound(params, o.eps, o.ell, bounds::parse_bound_mode(o.mode),
                                            o.cfg.enumeration_cap, o.cfg.precision_digits);
  json j;
  j["alpha"] = params.alpha.to_string();
  j["beta"] = params.beta.to_string();
  j["epsilon"] = r.epsilon;
  j["m"] = r.m;
  j["threshold"] = r.threshold;
  j["L"] = r.L;
  j["ell"] = r.ell;
  j["ell_exact_integer"] = r.ell_exact_integer;
  j["ell_overridden"] = r.ell_overridden;
  j["log_p_m_ell"] = r.log_p_m_ell;
  j["log_bound"] = r.log_bound;
  j["log10_bound"] = r.log10_bound;
  j["provenance"] = bounds::to_string(r.provenance);
  emit_object(j, o.cfg, os);
  return exit_ok;
}

int do_least_prime(const Options& o, std::ostream& os) {
  require_below_sieve(o.limit, o.cfg, "--limit");
  const auto r = seq::least_prime(beatty_params(o.alpha, o.beta), o.limit);
  json j;
  j["prime"] = r.prime ? json(*r.prime) : json(nullptr);
  j["n"] = r.index_n ? json(*r.index_n) : json(nullptr);
  j["scanned_up_to"] = r.scanned_up_to;
  emit_object(j, o.cfg, os);
  return exit_ok;
}

int do_members(const Options& o, std::ostream& os) {
  require(o.count <= 10000000, errc::range_too_large, "--count too large");
  const seq::FloorEvaluator f(beatty_params(o.alpha, o.beta));
  std::vector<std::vector<json>> rows;
  for (std::uint64_t n = 1; n <= o.count; ++n) {
    const std::int64_t e = f(n);
    rows.push_back({n, e, e > 1 && arith::is_prime(static_cast<std::uint64_t>(e))});
  }
  emit_rows({"n", "element", "is_prime"}, rows, o.cfg, os);
  return exit_ok;
}

int do_cf(const Options& o, std::ostream& os) {
  require(o.terms <= o.cfg.enumeration_cap, errc::range_too_large, "--terms exceeds --cap");
  const auto alpha = RealSpec::parse(o.alpha);
  const auto cf = cf::expand(alpha, o.terms);
  std::size_t upto = std::min<std::size_t>(o.terms, std::min(cf.quotients.size(), cf.certified_terms));
  std::vector<std::vector<json>> rows;
  if (upto > 0) {
    const auto conv = cf::convergents(cf, upto - 1);
    for (std::size_t i = 1; i < conv.size(); ++i)
      rows.push_back({conv[i].n, cf.quotient(i - 1).get_str(), conv[i].p.get_str(), conv[i].q.get_str()});
  }
  emit_rows({"n", "a_n", "p_n", "q_n"}, rows, o.cfg, os);
  return exit_ok;
}

int do_rational(const Options& o, std::ostream& os) {
  const auto d = seq::rational_decompose(o.a, o.q, RealSpec::parse(o.beta));
  json j;
  j["modulus"] = d.modulus;
  j["q"] = d.q;
  json offsets = json::array(), classes = json::array();
  for (const auto& c : d.classes) {
    offsets.push_back(c.offset);
    classes.push_back({{"b", c.b}, {"offset", c.offset}, {"gcd", c.gcd_with_modulus},
                       {"prime_class", c.is_prime_class}, {"contains_prime", c.contains_prime}});
  }
  j["offsets"] = offsets;
  j["prime_class"] = d.any_prime_class;
  j["contains_prime"] = d.contains_prime;
  j["inverse_b"] = d.inverse_b;
  j["classes"] = classes;
  emit_object(j, o.cfg, os);
  return exit_ok;
}

int do_expsum(const Options& o, std::ostream& os) {
  require_below_sieve(o.n, o.cfg, "--n");
  const auto a = RealSpec::parse(o.alpha);
  const auto s = vaughan::exp_sum_lambda(a, o.n, o.h);
  json j;
  j["a"] = a.to_string();
  j["N"] = o.n;
  j["h"] = o.h;
  j["re"] = static_cast<double>(s.real());
  j["im"] = static_cast<double>(s.imag());
  j["abs"] = static_cast<double>(std::abs(s));
  emit_object(j, o.cfg, os);
  return exit_ok;
}

int do_verify_vaughan(const Options& o, std::ostream& os) {
  require_below_sieve(o.n, o.cfg, "--n");
  suites::SuiteConfig sc;
  sc.seed = o.cfg.seed;
  sc.n = o.n;
  sc.cases = o.cases;
  sc.workers = o.cfg.workers;
  sc.epsilon = o.suite_eps;
  std::vector<VerificationRecord> records;
  if (o.suite == "all") {
    for (const auto& name : suites::vaughan_suite_names()) {
      auto part = suites::vaughan_suite(name, sc);
      records.insert(records.end(), part.begin(), part.end());
    }
  } else {
    records = suites::vaughan_suite(o.suite, sc);
  }
  return emit_records(records, o.cfg, os);
}

int do_verify_explicit(const Options& o, std::ostream& os) {
  require_below_sieve(o.xmax, o.cfg, "--xmax");
  checks::InequalityCheckConfig ic;
  ic.x_max = o.xmax;
  return emit_records(checks::run_check(o.check, ic), o.cfg, os);
}

int do_verify_beatty(const Options& o, std::ostream& os) {
  require_below_sieve(o.n, o.cfg, "--n");
  const auto params = beatty_params(o.alpha, o.beta);
  std::vector<VerificationRecord> records;
  if (o.check == "bridge")
    records.push_back(seq::chi_membership_bridge(params, o.n));
  else if (o.check == "rayleigh")
    records.push_back(seq::rayleigh_partition_check(params.alpha, o.n));
  else
    fail(errc::parse_error, "unknown beatty check '" + o.check + "'");
  return emit_records(records, o.cfg, os);
}

int do_verify_bound(const Options& o, std::ostream& os) {
  const auto params = beatty_params(o.alpha, o.beta);
  const double log_eta = o.log_eta ? *o.log_eta : bounds::eta0_sufficient(o.eps).log_eta0;
  const auto an = bounds::ansatz(params, o.eps, log_eta);
  return emit_records({bounds::check_eta_inequality(params, o.eps, log_eta),
                       bounds::certify_prime_below_log(params, an.log_N, an.log_q, o.eps)},
                      o.cfg, os);
}

int do_report(const Options& o, std::ostream& os) {
  suites::SuiteConfig sc;
  sc.seed = o.cfg.seed;
  sc.n = o.n;
  sc.cases = o.cases;
  sc.workers = o.cfg.workers;
  return emit_records(suites::full_report(sc), o.cfg, os);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.cfg.workers = default_workers();
  std::string out_path, format;

  CLI::App app{"Beatty sequence prime bounds and verification suites", "beattylab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", out_path, "write output to FILE");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--explain", o.cfg.explain, "describe the selected subcommand and exit");
  app.add_option("--seed", o.cfg.seed, "seed for randomized suites");
  app.add_option("--workers", o.cfg.workers, "worker threads (default BEATTYLAB_WORKERS or 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--precision-digits", o.cfg.precision_digits, "guard digits for certified comparisons")
      ->check(CLI::Range(10u, 100000u));
  app.add_option("--cap", o.cfg.enumeration_cap, "continued-fraction enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--sieve-limit", o.cfg.sieve_limit, "largest sieve range")->check(CLI::PositiveNumber);

  auto beatty_opts = [&](CLI::App* s, bool need_alpha) {
    auto* opt = s->add_option("--alpha", o.alpha, "RealSpec, e.g. surd:(1+sqrt(5))/2");
    if (need_alpha)
      opt->required();
    s->add_option("--beta", o.beta, "RealSpec, default rat:0/1");
  };

  auto* bound = app.add_subcommand("bound", "least-prime upper bound in log space");
  beatty_opts(bound, true);
  bound->add_option("--eps", o.eps, "epsilon")->required();
  bound->add_option("--ell", o.ell, "override ell");
  bound->add_option("--mode", o.mode, "auto, exact or estimate")
      ->check(CLI::IsMember({"auto", "exact", "estimate"}));

  auto* least = app.add_subcommand("least-prime", "least prime member by enumeration");
  beatty_opts(least, true);
  least->add_option("--limit", o.limit, "largest index n scanned");

  auto* members = app.add_subcommand("members", "first members and their primality");
  beatty_opts(members, true);
  members->add_option("--count", o.count, "number of members");

  auto* cfc = app.add_subcommand("cf", "partial quotients and convergents");
  cfc->add_option("--alpha", o.alpha, "RealSpec")->required();
  cfc->add_option("--terms", o.terms, "number of terms");

  auto* rational = app.add_subcommand("rational", "residue-class decomposition of B(a/q, beta)");
  rational->add_option("--a", o.a, "numerator")->required();
  rational->add_option("--q", o.q, "denominator")->required();
  rational->add_option("--beta", o.beta, "RealSpec, default rat:0/1");

  auto* expsum = app.add_subcommand("expsum", "exponential sum over prime powers");
  expsum->add_option("--alpha", o.alpha, "the frequency a, a RealSpec")->required();
  expsum->add_option("--n", o.n, "upper limit N");
  expsum->add_option("--mult", o.h, "multiplier h");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* vv = verify->add_subcommand("vaughan", "exponential-sum machinery");
  vv->add_option("--suite", o.suite, "suite name or all")->required();
  vv->add_option("--n", o.n, "largest N");
  vv->add_option("--cases", o.cases, "random cases");
  vv->add_option("--eps", o.suite_eps, "epsilon in the divisor-bound constant");
  auto* ve = verify->add_subcommand("explicit", "explicit inequalities");
  ve->add_option("--check", o.check, "divisor, d3sq, dsq or rs")
      ->required()
      ->check(CLI::IsMember({"divisor", "d3sq", "dsq", "rs"}));
  ve->add_option("--xmax", o.xmax, "upper end of the range");
  auto* vb = verify->add_subcommand("beatty", "membership criterion and complementary partition");
  beatty_opts(vb, true);
  vb->add_option("--check", o.check, "bridge or rayleigh")->required()->check(CLI::IsMember({"bridge", "rayleigh"}));
  vb->add_option("--n", o.n, "upper limit N");
  auto* vbound = verify->add_subcommand("bound", "minor-arc inequality and prime certificate");
  beatty_opts(vbound, true);
  vbound->add_option("--eps", o.eps, "epsilon")->required();
  vbound->add_option("--log-eta", o.log_eta, "log eta (default: the sufficient eta_0)");

  auto* report_cmd = app.add_subcommand("report", "default battery of every check");
  report_cmd->add_option("--n", o.n, "largest N in the exponential-sum suites");
  report_cmd->add_option("--cases", o.cases, "random cases per suite");

  // --explain must work without the subcommand's required options.
  for (int i = 1; i < argc; ++i)
    if (std::string_view(argv[i]) == "--explain")
      for (int k = 1; k < argc; ++k)
        if (const auto it = explanations().find(argv[k]); it != explanations().end()) {
          out << it->second << '\n';
          return exit_ok;
        }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (!out_path.empty())
    o.cfg.out_path = out_path;
  if (!format.empty())
    o.cfg.format = format;
  const auto* sub = app.get_subcommands().front();
  o.cfg.subcommand = sub->get_name();

  std::ofstream file;
  std::ostream* os = &out;
  if (o.cfg.out_path) {
    file.open(*o.cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *o.cfg.out_path << '\n';
      return exit_usage;
    }
    os = &file;
  }

  if (o.cfg.explain) {
    *os << explanations().at(o.cfg.subcommand) << '\n';
    return exit_ok;
  }

  try {
    int code = exit_ok;
    if (sub == bound)
      code = do_bound(o, *os);
    else if (sub == least)
      code = do_least_prime(o, *os);
    else if (sub == members)
      code = do_members(o, *os);
    else if (sub == cfc)
      code = do_cf(o, *os);
    else if (sub == rational)
      code = do_rational(o, *os);
    else if (sub == expsum)
      code = do_expsum(o, *os);
    else if (sub == report_cmd)
      code = do_report(o, *os);
    else if (vv->parsed())
      code = do_verify_vaughan(o, *os);
    else if (ve->parsed())
      code = do_verify_explicit(o, *os);
    else if (vb->parsed())
      code = do_verify_beatty(o, *os);
    else
      code = do_verify_bound(o, *os);
    os->flush();
    if (!*os)
      throw std::ios_base::failure("write failed");
    return code;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace beattylab::cli
