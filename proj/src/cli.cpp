#include "gwmast/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gwmast/agreement.hpp"
#include "gwmast/error.hpp"
#include "gwmast/exact_formulas.hpp"
#include "gwmast/power_series.hpp"
#include "gwmast/verify.hpp"

namespace gwmast::cli {

// ---------------------------------------------------------------- manifest

Json ExperimentManifest::to_json() const {
  return Json{{"command", command}, {"distribution", distribution}, {"parameters", parameters}, {"version", version}};
}

ExperimentManifest ExperimentManifest::from_json(const Json& j) {
  ExperimentManifest m;
  m.command = j.at("command").get<std::string>();
  m.distribution = j.at("distribution");
  m.parameters = j.at("parameters");
  m.version = j.at("version").get<std::string>();
  return m;
}

// ------------------------------------------------------------ distributions

std::vector<std::string> builtin_distribution_names() { return {"binary", "d2test", "ternary"}; }

OffspringDistribution named_distribution(const std::string& name) {
  if (name == "binary") return OffspringDistribution::binary();
  if (name == "d2test") {
    return OffspringDistribution::validate({{0, Rational(7, 12)}, {2, Rational(1, 4)}, {3, Rational(1, 6)}});
  }
  if (name == "ternary") return OffspringDistribution::validate({{0, Rational(2, 3)}, {3, Rational(1, 3)}});
  throw Error(ErrorCode::DomainError, "unknown distribution '" + name + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

Degree parse_degree(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError(offset, "empty degree key");
  Degree d = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(offset, "degree key must be a non-negative integer");
    d = d * 10 + static_cast<Degree>(c - '0');
    if (d > 1'000'000) throw ParseError(offset, "degree key too large");
  }
  return d;
}

void insert_entry(std::map<Degree, Rational>& out, Degree d, const Rational& p, std::size_t offset) {
  if (!out.emplace(d, p).second) throw ParseError(offset, "degree " + std::to_string(d) + " given twice");
}

}  // namespace

std::map<Degree, Rational> parse_distribution_config(std::string_view text) {
  std::map<Degree, Rational> out;
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ParseError(e.byte, "invalid JSON");
    }
    if (!j.is_object()) throw ParseError(0, "distribution JSON must be an object");
    for (const auto& [key, value] : j.items()) {
      Rational p;
      if (value.is_string()) {
        p = parse_rational(value.get<std::string>());
      } else if (value.is_number_integer()) {
        p = Rational(value.get<long>());
      } else {
        throw ParseError(0, "probability for degree " + key + " must be a rational string");
      }
      insert_entry(out, parse_degree(key, 0), p, 0);
    }
    return out;
  }
  std::size_t offset = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    offset = pos;
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(offset, "expected key = \"p/q\"");
    const Degree d = parse_degree(unquote(trim(line.substr(0, eq))), offset);
    insert_entry(out, d, parse_rational(unquote(trim(line.substr(eq + 1)))), offset);
  }
  return out;
}

Json distribution_json(const std::string& name, const OffspringDistribution& dist) {
  Json p = Json::object();
  for (const auto& [d, q] : dist.probabilities()) p[std::to_string(d)] = to_fraction_string(q);
  return Json{{"name", name}, {"p", p}};
}

// ------------------------------------------------------------------- output

Json rational_json(const Rational& q) { return to_fraction_string(q); }

Json exact_json(const Rational& q) { return Json{{"exact", to_fraction_string(q)}, {"decimal", to_decimal12(q)}}; }

Json report_json(const McReport& r) {
  return Json{{"estimate", r.estimate}, {"stderr", r.std_error}, {"trials", r.trials}, {"seed", r.seed}};
}

std::string render_json(const ExperimentManifest& manifest, const Json& results) {
  Json doc{{kManifestKey, manifest.to_json()}, {"results", results}};
  return doc.dump(2) + "\n";
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string decimal12(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

}  // namespace

std::string render_csv(const ExperimentManifest& manifest, const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "# " << kManifestKey << ": " << manifest.to_json().dump() << "\n";
  os << "n,a,value,stderr\n";
  for (const auto& r : rows) {
    os << r.n << ',';
    if (r.a) os << *r.a;
    os << ',' << r.value << ',';
    if (r.std_error) os << format_double(*r.std_error);
    os << '\n';
  }
  return os.str();
}

ExperimentManifest manifest_from_output(std::string_view text) {
  const std::string prefix = std::string("# ") + kManifestKey + ": ";
  if (text.starts_with(prefix)) {
    const auto eol = text.find('\n');
    return ExperimentManifest::from_json(Json::parse(text.substr(prefix.size(), eol - prefix.size())));
  }
  return ExperimentManifest::from_json(Json::parse(text).at(kManifestKey));
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  f << contents;
  f.close();
  if (!f) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// --------------------------------------------------------------- commands

namespace {

struct DistOptions {
  std::string name = "binary";
  std::string file;

  OffspringDistribution load() const {
    if (!file.empty()) return OffspringDistribution::validate(parse_distribution_config(read_file(file)));
    return named_distribution(name);
  }
  std::string label() const { return file.empty() ? name : file; }
};

struct OutputOptions {
  std::string json_path;
  std::string csv_path;
};

void add_dist(CLI::App* sub, DistOptions& d) {
  auto* named = sub->add_option("--dist", d.name, "Built-in distribution: binary, d2test, ternary")
                    ->capture_default_str();
  sub->add_option("--dist-file", d.file, "Distribution config (JSON or TOML)")->excludes(named);
}

void add_output(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--json", o.json_path, "Write results as JSON");
  sub->add_option("--csv", o.csv_path, "Write results as CSV");
}

void emit(const OutputOptions& o, const ExperimentManifest& m, const Json& results, const std::vector<CsvRow>& rows) {
  if (!o.json_path.empty()) write_file(o.json_path, render_json(m, results));
  if (!o.csv_path.empty()) write_file(o.csv_path, render_csv(m, rows));
}

std::string exact_line(const Rational& q) { return to_fraction_string(q) + " (" + decimal12(q) + ")"; }

ComparisonMode parse_mode(const std::string& s) {
  return s == "unordered" ? ComparisonMode::Unordered : ComparisonMode::Ordered;
}

unsigned thread_option(unsigned requested) { return requested == 0 ? default_thread_count() : requested; }

// gf --------------------------------------------------------------------
struct GfCmd {
  DistOptions dist;
  OutputOptions output;
  unsigned order = 10;

  int operator()(std::ostream& out) const {
    const auto d = dist.load();
    const PowerSeries phi = solve_leaf_gf(d, order);
    const PowerSeries p1 = phi1(d, phi);
    Json results{{"phi", Json::array()}, {"phi1", Json::array()}};
    std::vector<CsvRow> rows;
    out << "k\t[y^k]Phi\t[y^k]Phi1\n";
    for (unsigned k = 0; k <= order; ++k) {
      out << k << '\t' << to_fraction_string(phi[k]) << '\t' << to_fraction_string(p1[k]) << '\n';
      results["phi"].push_back(exact_json(phi[k]));
      results["phi1"].push_back(exact_json(p1[k]));
      rows.push_back({k, std::nullopt, to_fraction_string(phi[k]), std::nullopt});
    }
    ExperimentManifest m{"gf", distribution_json(dist.label(), d), Json{{"order", order}}};
    emit(output, m, results, rows);
    return kOk;
  }
};

// prob ------------------------------------------------------------------
struct ProbCmd {
  DistOptions dist;
  OutputOptions output;
  std::string shape;
  unsigned n = 0;
  bool unordered = false;
  std::size_t mc_trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  int operator()(std::ostream& out) const {
    const auto d = dist.load();
    const LabelledTree t = parse_tree(shape);
    Json params{{"shape", serialize(t)}, {"n", n}, {"mode", unordered ? "unordered" : "ordered"}};
    Json results;
    Rational conditional;
    if (unordered) {
      conditional = unordered_induced_probability(d, t, n);
      results["conditional"] = exact_json(conditional);
      out << "P(S induces " << serialize(t) << " unordered | n=" << n << ") = " << exact_line(conditional) << '\n';
    } else {
      const InducedProbability p = induced_probability(d, t.shape(), n);
      conditional = p.conditional;
      results["joint"] = exact_json(p.joint);
      results["leaf_prob"] = exact_json(p.leaf_prob);
      results["conditional"] = exact_json(p.conditional);
      out << "P(A_n(T)) = " << exact_line(p.joint) << '\n';
      out << "P(A_n) = " << exact_line(p.leaf_prob) << '\n';
      out << "P(A_n(T) | A_n) = " << exact_line(p.conditional) << '\n';
    }
    std::vector<CsvRow> rows{{n, static_cast<unsigned>(t.leaf_count()), to_fraction_string(conditional), std::nullopt}};
    if (mc_trials > 0) {
      if (unordered) throw Error(ErrorCode::DomainError, "--mc-trials needs ordered comparison");
      SamplerConfig cfg;
      cfg.dist = d;
      cfg.seed = seed;
      const McReport rep = mc_induced_probability(cfg, t, n, mc_trials, thread_option(threads));
      params["trials"] = mc_trials;
      params["seed"] = seed;
      results["monte_carlo"] = report_json(rep);
      out << "Monte Carlo: " << format_double(rep.estimate) << " +- " << format_double(rep.std_error) << " ("
          << rep.trials << " trials, seed " << rep.seed << ")\n";
      rows.push_back({n, static_cast<unsigned>(t.leaf_count()), format_double(rep.estimate), rep.std_error});
    }
    ExperimentManifest m{"prob", distribution_json(dist.label(), d), params};
    emit(output, m, results, rows);
    return kOk;
  }
};

// expect ----------------------------------------------------------------
struct ExpectCmd {
  DistOptions dist;
  OutputOptions output;
  unsigned n = 0;
  std::optional<unsigned> a;
  unsigned a_min = 1;
  std::optional<unsigned> a_max;
  std::string model = "gw";
  std::string mode = "ordered";
  std::size_t mc_trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  int operator()(std::ostream& out) const {
    const bool unrooted = model == "unrooted";
    const unsigned lo = a ? *a : (unrooted ? std::max(a_min, 2u) : a_min);
    const unsigned hi = a ? *a : a_max.value_or(unrooted ? n - 1 : std::min(n, 5u));
    const auto d = unrooted ? OffspringDistribution::binary() : dist.load();
    Json params{{"n", n}, {"a_min", lo}, {"a_max", hi}, {"model", model}};
    Json results = Json::array();
    std::vector<CsvRow> rows;
    for (unsigned k = lo; k <= hi; ++k) {
      const Rational e = unrooted ? expected_common_unrooted(n, k) : expected_common_gw(d, n, k);
      Json row{{"n", n}, {"a", k}, {"value", exact_json(e)}};
      out << "E[X_{" << n << "," << k << "}] = " << exact_line(e) << '\n';
      rows.push_back({n, k, to_fraction_string(e), std::nullopt});
      if (mc_trials > 0 && !unrooted) {
        SamplerConfig cfg;
        cfg.dist = d;
        cfg.seed = seed;
        const McReport rep = mc_expected_common(cfg, n, k, mc_trials, parse_mode(mode), thread_option(threads));
        row["monte_carlo"] = report_json(rep);
        out << "  Monte Carlo: " << format_double(rep.estimate) << " +- " << format_double(rep.std_error) << '\n';
        rows.push_back({n, k, format_double(rep.estimate), rep.std_error});
      }
      results.push_back(std::move(row));
    }
    if (mc_trials > 0 && !unrooted) {
      params["trials"] = mc_trials;
      params["seed"] = seed;
      params["mode"] = mode;
    }
    ExperimentManifest m{"expect", unrooted ? Json{{"name", "uniform-unrooted"}} : distribution_json(dist.label(), d),
                         params};
    emit(output, m, results, rows);
    return kOk;
  }
};

// sample ----------------------------------------------------------------
struct SampleCmd {
  DistOptions dist;
  OutputOptions output;
  unsigned n = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::size_t cap = SamplerConfig{}.size_cap;
  std::size_t max_attempts = SamplerConfig{}.max_attempts;

  int operator()(std::ostream& out) const {
    SamplerConfig cfg;
    cfg.dist = dist.load();
    cfg.seed = seed;
    cfg.size_cap = cap;
    cfg.max_attempts = max_attempts;
    Json results = Json::array();
    std::vector<CsvRow> rows;
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = make_stream(seed, i);
      const ConditionedSample s = sample_conditioned(cfg, n, rng);
      const std::string text = serialize(s.tree);
      out << text << '\n';
      results.push_back(Json{{"tree", text}, {"attempts", s.attempts}});
      rows.push_back({n, std::nullopt, text, std::nullopt});
    }
    ExperimentManifest m{"sample", distribution_json(dist.label(), cfg.dist),
                         Json{{"n", n}, {"count", count}, {"seed", seed}, {"cap", cap}, {"max_attempts", max_attempts}}};
    emit(output, m, results, rows);
    return kOk;
  }
};

// mast ------------------------------------------------------------------
struct MastCmd {
  OutputOptions output;
  std::string t1, t2;
  bool brute = false;
  std::string mode = "unordered";

  int operator()(std::ostream& out) const {
    const LabelledTree a = parse_tree(t1);
    const LabelledTree b = parse_tree(t2);
    const std::size_t dp = mast_binary(a, b);
    out << "mast = " << dp << '\n';
    Json results{{"mast", dp}};
    std::vector<CsvRow> rows{{static_cast<unsigned>(a.leaf_count()), static_cast<unsigned>(dp), std::to_string(dp),
                              std::nullopt}};
    if (brute) {
      const std::size_t bf = mast_brute_force(a, b, parse_mode(mode));
      out << "brute force (" << mode << ") = " << bf << '\n';
      results["brute_force"] = bf;
    }
    ExperimentManifest m{"mast", Json::object(),
                         Json{{"t1", serialize(a)}, {"t2", serialize(b)}, {"brute", brute}, {"mode", mode}}};
    emit(output, m, results, rows);
    return kOk;
  }
};

// bounds ----------------------------------------------------------------
struct BoundsCmd {
  DistOptions dist;
  OutputOptions output;
  std::optional<unsigned> n;
  double eps = 0.5;

  int operator()(std::ostream& out) const {
    const auto d = dist.load();
    const BoundConstants bc = bound_constants(d);
    auto fixed = [](double x) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(6) << x;
      return s.str();
    };
    out << "sigma2 = " << to_fraction_string(bc.sigma2) << '\n';
    out << "gamma = " << fixed(bc.gamma) << '\n';
    out << "chi = " << fixed(bc.chi) << '\n';
    out << "lambda = " << fixed(bc.lambda) << '\n';
    Json q = Json::object();
    for (const auto& [j, v] : bc.q) {
      out << "q" << j << " = " << to_fraction_string(v) << '\n';
      q[std::to_string(j)] = to_fraction_string(v);
    }
    out << "rho = " << fixed(bc.rho) << '\n';
    out << "m = " << fixed(bc.m) << '\n';
    out << "c = " << fixed(bc.c) << '\n';
    out << "stationarity residual = " << format_double(bc.stationarity_residual) << '\n';
    Json results{{"sigma2", rational_json(bc.sigma2)},
                 {"gamma", bc.gamma},
                 {"chi", bc.chi},
                 {"lambda", bc.lambda},
                 {"q", q},
                 {"rho", bc.rho},
                 {"m", bc.m},
                 {"c", bc.c},
                 {"stationarity_residual", bc.stationarity_residual}};
    Json params{{"eps", eps}};
    std::vector<CsvRow> rows;
    if (n) {
      const TailThreshold tt = tail_threshold(bc, *n, eps);
      out << "a* = " << tt.a_star << " (n = " << *n << ", eps = " << eps << ")\n";
      out << "tail bound = " << format_double(tt.probability_bound) << '\n';
      results["tail"] = Json{{"a_star", tt.a_star}, {"probability_bound", tt.probability_bound}};
      params["n"] = *n;
      rows.push_back({*n, static_cast<unsigned>(tt.a_star), format_double(tt.probability_bound), std::nullopt});
    }
    ExperimentManifest m{"bounds", distribution_json(dist.label(), d), params};
    emit(output, m, results, rows);
    return kOk;
  }
};

// verify ----------------------------------------------------------------
struct VerifyCmd {
  OutputOptions output;
  std::string suite = "all";
  verify::SuiteOptions opt;

  int operator()(std::ostream& out) const {
    verify::SuiteOptions o = opt;
    o.threads = thread_option(o.threads);
    const auto results = verify::run(suite, o);
    bool ok = true;
    Json j = Json::array();
    std::vector<CsvRow> rows;
    for (const auto& r : results) {
      out << r.name << ": " << r.checks << " checks, " << r.mismatches.size() << " mismatches -> "
          << (r.passed() ? "PASS" : "FAIL") << '\n';
      Json mm = Json::array();
      for (const auto& m : r.mismatches) {
        out << "  - " << m.what << "\n      expected " << m.expected << "\n      actual   " << m.actual << '\n';
        mm.push_back(Json{{"what", m.what}, {"expected", m.expected}, {"actual", m.actual}});
      }
      j.push_back(Json{{"suite", r.name}, {"checks", r.checks}, {"mismatches", mm}});
      ok = ok && r.passed();
    }
    ExperimentManifest m{"verify", Json::object(),
                         Json{{"suite", suite}, {"n", opt.max_n}, {"trials", opt.trials}, {"seed", opt.seed}}};
    emit(output, m, j, rows);
    return ok ? kOk : kMismatch;
  }
};

std::vector<char*> to_argv(std::vector<std::string>& storage) {
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return argv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated agreement-subtree statistics for random trees", "gwmast"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GfCmd gf;
  auto* gf_sub = app.add_subcommand("gf", "Coefficients of Phi and Phi1");
  add_dist(gf_sub, gf.dist);
  add_output(gf_sub, gf.output);
  gf_sub->add_option("--order", gf.order, "Truncation order")->capture_default_str()->check(CLI::Range(1u, 5000u));

  ProbCmd prob;
  auto* prob_sub = app.add_subcommand("prob", "Induced-subtree probability");
  add_dist(prob_sub, prob.dist);
  add_output(prob_sub, prob.output);
  prob_sub->add_option("--shape", prob.shape, "Shape in tree grammar, e.g. (1,(2,3))")->required();
  prob_sub->add_option("--n", prob.n, "Leaf count of the host")->required()->check(CLI::Range(1u, 5000u));
  prob_sub->add_flag("--unordered", prob.unordered, "Compare without child order");
  prob_sub->add_option("--mc-trials", prob.mc_trials, "Monte Carlo trials");
  prob_sub->add_option("--seed", prob.seed, "Monte Carlo seed")->capture_default_str();
  prob_sub->add_option("--threads", prob.threads, "Worker threads (0: GWMAST_THREADS or hardware)");

  ExpectCmd expect;
  auto* ex_sub = app.add_subcommand("expect", "Expected number of common induced subtrees");
  add_dist(ex_sub, expect.dist);
  add_output(ex_sub, expect.output);
  ex_sub->add_option("--n", expect.n, "Leaf count")->required()->check(CLI::Range(1u, 5000u));
  auto* a_opt = ex_sub->add_option("--a", expect.a, "Subset size");
  ex_sub->add_option("--a-min", expect.a_min, "Smallest subset size")->excludes(a_opt);
  ex_sub->add_option("--a-max", expect.a_max, "Largest subset size")->excludes(a_opt);
  ex_sub->add_option("--model", expect.model, "gw or unrooted")
      ->capture_default_str()
      ->check(CLI::IsMember({"gw", "unrooted"}));
  ex_sub->add_option("--mode", expect.mode, "Comparison for Monte Carlo: ordered or unordered")
      ->capture_default_str()
      ->check(CLI::IsMember({"ordered", "unordered"}));
  ex_sub->add_option("--mc-trials", expect.mc_trials, "Monte Carlo trials per a");
  ex_sub->add_option("--seed", expect.seed, "Monte Carlo seed")->capture_default_str();
  ex_sub->add_option("--threads", expect.threads, "Worker threads (0: GWMAST_THREADS or hardware)");

  SampleCmd sample;
  auto* sa_sub = app.add_subcommand("sample", "Draw conditioned trees");
  add_dist(sa_sub, sample.dist);
  add_output(sa_sub, sample.output);
  sa_sub->add_option("--n", sample.n, "Leaf count")->required()->check(CLI::Range(1u, 100000u));
  sa_sub->add_option("--count", sample.count, "Number of trees")->capture_default_str();
  sa_sub->add_option("--seed", sample.seed, "Seed")->capture_default_str();
  sa_sub->add_option("--cap", sample.cap, "Vertex cap per attempt")->capture_default_str();
  sa_sub->add_option("--max-attempts", sample.max_attempts, "Attempts per tree")->capture_default_str();

  MastCmd mast;
  auto* ma_sub = app.add_subcommand("mast", "Maximum agreement subtree of two rooted binary trees");
  add_output(ma_sub, mast.output);
  ma_sub->add_option("--t1", mast.t1, "First tree")->required();
  ma_sub->add_option("--t2", mast.t2, "Second tree")->required();
  ma_sub->add_flag("--brute", mast.brute, "Also run the exhaustive search");
  ma_sub->add_option("--mode", mast.mode, "Brute-force comparison: ordered or unordered")
      ->capture_default_str()
      ->check(CLI::IsMember({"ordered", "unordered"}));

  BoundsCmd bounds;
  auto* bo_sub = app.add_subcommand("bounds", "Tail-bound constants");
  add_dist(bo_sub, bounds.dist);
  add_output(bo_sub, bounds.output);
  bo_sub->add_option("--n", bounds.n, "Leaf count for the tail threshold");
  bo_sub->add_option("--eps", bounds.eps, "Epsilon in (0, 1/2]")->capture_default_str();

  VerifyCmd ver;
  auto* ve_sub = app.add_subcommand("verify", "Oracle-versus-formula suites");
  add_output(ve_sub, ver.output);
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  ve_sub->add_option("--suite", ver.suite, "Suite name")->capture_default_str()->check(CLI::IsMember(suites));
  ve_sub->add_option("--n", ver.opt.max_n, "Largest host for lemma1")
      ->capture_default_str()
      ->check(CLI::Range(3u, 8u));
  ve_sub->add_option("--trials", ver.opt.trials, "Monte Carlo trials")->capture_default_str();
  ve_sub->add_option("--seed", ver.opt.seed, "Monte Carlo seed")->capture_default_str();
  ve_sub->add_option("--threads", ver.opt.threads, "Worker threads (0: GWMAST_THREADS or hardware)");

  std::vector<std::string> storage{"gwmast"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv = to_argv(storage);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gf_sub) return gf(out);
    if (*prob_sub) return prob(out);
    if (*ex_sub) return expect(out);
    if (*sa_sub) return sample(out);
    if (*ma_sub) return mast(out);
    if (*bo_sub) return bounds(out);
    if (*ve_sub) return ver(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? kIo : kUsage;
  }
  return kUsage;
}

}  // namespace gwmast::cli
