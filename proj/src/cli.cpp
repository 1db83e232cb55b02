#include "hilbertia/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <optional>
#include <regex>
#include <sstream>

#include "hilbertia/factorize.hpp"
#include "hilbertia/galois.hpp"
#include "hilbertia/hilbert.hpp"
#include "hilbertia/kronecker.hpp"
#include "hilbertia/resultant.hpp"
#include "hilbertia/series.hpp"
#include "hilbertia/text.hpp"

namespace hilbertia {

using nlohmann::json;

std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  int budget = 100;
  std::uint64_t seed = 1;
  double timeout_seconds = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool should_stop() const {
    if (interrupt_flag().load()) return true;
    if (timeout_seconds <= 0) return false;
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() >= timeout_seconds;
  }
};

struct Report {
  std::string command;
  json input = json::object();
  json result;
  json stats = nullptr;
  std::string text;
};

std::string q(const Rational& r) { return to_string(r); }

Rational rational_arg(const std::string& text, const std::string& option) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw UsageError(option + ": not a rational number: " + text);
  }
}

std::vector<Rational> rational_list(const std::vector<std::string>& items, const std::string& option) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(rational_arg(s, option));
  return out;
}

std::string join_values(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + q(values[i]);
  return s;
}

json json_values(const std::vector<Rational>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(q(v));
  return a;
}

std::vector<std::string> poly_inputs(const std::string& poly, const std::string& file) {
  if (!poly.empty() && !file.empty()) throw UsageError("give either --poly or --file, not both");
  if (!file.empty()) return read_poly_file(file);
  if (poly.empty()) throw UsageError("--poly or --file is required");
  return {poly};
}

std::string require_poly(const std::string& poly) {
  if (poly.empty()) throw UsageError("--poly is required");
  return poly;
}

std::vector<std::string> vars_or_inferred(const std::vector<std::string>& given, const std::string& text,
                                          std::size_t fallback) {
  if (!given.empty()) return given;
  auto ids = identifiers_in(text);
  if (ids.empty()) {
    if (fallback == 1) return {"X"};
    return {"X", "Y"};
  }
  std::vector<std::string> order{"X", "Y"};
  if (ids.size() <= 2 && std::all_of(ids.begin(), ids.end(), [](const std::string& s) { return s == "X" || s == "Y"; }))
    return fallback == 1 && ids.size() == 1 ? ids : order;
  return ids;
}

std::size_t indexed_variable_count(const std::string& text) {
  static const std::regex name("^X([1-9][0-9]*)$");
  std::size_t k = 0;
  for (const auto& id : identifiers_in(text)) {
    std::smatch m;
    if (!std::regex_match(id, m, name)) throw UsageError("variables must be named X1, X2, ...: " + id);
    k = std::max<std::size_t>(k, std::stoul(m[1].str()));
  }
  return k;
}

json factorization_json(const Factorization& f, const std::string& var) {
  json facs = json::array();
  for (const auto& fac : f.factors) facs.push_back({{"poly", format(fac.poly, var)}, {"multiplicity", fac.multiplicity}});
  return {{"unit", q(f.unit)}, {"factors", facs}, {"text", format(f, var)}};
}

void cmd_factor(const Globals&, Report& r, const std::string& poly, const std::string& file,
                const std::vector<std::string>& given_vars) {
  json results = json::array();
  std::vector<std::string> lines;
  for (const auto& text : poly_inputs(poly, file)) {
    auto vars = vars_or_inferred(given_vars, text, 1);
    if (vars.size() == 1) {
      Factorization f = factor_unipoly(parse_unipoly(text, vars[0]));
      results.push_back(factorization_json(f, vars[0]));
      lines.push_back(format(f, vars[0]));
    } else if (vars.size() == 2) {
      BiFactorization f = factor_bipoly_small(parse_bipoly(text, vars[0], vars[1]));
      json facs = json::array();
      for (const auto& g : f.factors) facs.push_back(format(g, vars[0], vars[1]));
      std::string t = format(f, vars[0], vars[1]);
      results.push_back({{"x_part", format(f.x_part, vars[0])}, {"factors", facs}, {"text", t}});
      lines.push_back(t);
    } else {
      throw UsageError("factor supports one or two variables");
    }
  }
  r.input = {{"poly", poly}, {"file", file}};
  r.result = results.size() == 1 ? results[0] : results;
  for (std::size_t i = 0; i < lines.size(); ++i) r.text += (i ? "\n" : "") + lines[i];
}

void cmd_irred(const Globals& g, Report& r, const std::string& poly, const std::string& file,
               const std::vector<std::string>& given_vars) {
  json results = json::array();
  std::vector<std::string> lines;
  for (const auto& text : poly_inputs(poly, file)) {
    auto vars = vars_or_inferred(given_vars, text, 1);
    if (vars.size() == 1) {
      bool irr = is_irreducible_uni(parse_unipoly(text, vars[0]));
      results.push_back({{"kind", "uni"}, {"irreducible", irr}});
      lines.push_back(irr ? "irreducible" : "reducible");
    } else if (vars.size() == 2) {
      BiIrredCertificate c = is_irreducible_bi(parse_bipoly(text, vars[0], vars[1]), g.budget);
      json j = {{"kind", "bi"}, {"content_ok", c.content_ok}};
      if (c.verdict == BiVerdict::Irreducible) {
        j["verdict"] = "irreducible";
        j["witness_b"] = c.witness_b ? json(q(*c.witness_b)) : json(nullptr);
        lines.push_back(c.witness_b ? "irreducible witness b=" + q(*c.witness_b) : "irreducible");
      } else if (c.verdict == BiVerdict::Reducible) {
        j["verdict"] = "reducible";
        std::string w;
        if (c.reducible_witness) {
          w = "(" + format(c.reducible_witness->first, vars[0], vars[1]) + ")(" +
              format(c.reducible_witness->second, vars[0], vars[1]) + ")";
          j["witness"] = w;
        }
        lines.push_back(w.empty() ? "reducible" : "reducible " + w);
      } else {
        j["verdict"] = "not_applicable";
        lines.push_back("not applicable");
      }
      results.push_back(j);
    } else {
      MultiPoly f = parse_poly(text, vars);
      bool ok = certify_irreducible_multi(f, g.budget);
      results.push_back({{"kind", "multi"}, {"certified_irreducible", ok}});
      lines.push_back(ok ? "irreducible" : "not certified");
    }
  }
  r.input = {{"poly", poly}, {"file", file}, {"budget", g.budget}};
  r.result = results.size() == 1 ? results[0] : results;
  for (std::size_t i = 0; i < lines.size(); ++i) r.text += (i ? "\n" : "") + lines[i];
}

struct HilbertOptions {
  std::string poly;
  std::vector<std::string> vars;
  int count = 10;
  std::vector<long> range;
  bool tsearch = false;
  std::string strategy = "integers";
  std::string s0 = "0";
  long tmax = 100;
};

void cmd_hilbert(const Globals& g, Report& r, const HilbertOptions& o, bool count_given) {
  std::string text = require_poly(o.poly);
  auto vars = o.vars.empty() ? std::vector<std::string>{"X", "Y"} : o.vars;
  if (vars.size() != 2) throw UsageError("hilbert needs exactly two variables");
  BiPoly f = parse_bipoly(text, vars[0], vars[1]);
  Rational s0 = rational_arg(o.s0, "--s0");
  int modes = (o.tsearch ? 1 : 0) + (o.range.empty() ? 0 : 1) + (count_given ? 1 : 0);
  if (modes > 1) throw UsageError("choose one of --count, --range, --tsearch");
  r.input = {{"poly", text}, {"vars", vars}};

  if (o.tsearch) {
    r.command = "hilbert.tsearch";
    r.input["s0"] = q(s0);
    r.input["tmax"] = o.tmax;
    const UniPoly disc = discriminant_y(f);
    if (!is_regular_value(f, disc, s0).is_regular) throw DomainError("s0 is not a regular value");
    json rows = json::array();
    long t_done = 0;
    bool interrupted = false;
    for (long t = 1; t <= o.tmax; ++t) {
      if (g.should_stop()) {
        interrupted = true;
        break;
      }
      Rational b = s0 + make_rational(1, t);
      bool irr = specializes_irreducibly(f, disc, b);
      rows.push_back({{"t", t}, {"b", q(b)}, {"irreducible", irr}});
      r.text += (t > 1 ? "\n" : "") + std::to_string(t) + " " + q(b) + " " + (irr ? "irreducible" : "reducible");
      t_done = t;
    }
    r.result = rows;
    r.stats = {{"tested", t_done}, {"partial", interrupted}};
    return;
  }

  if (!o.range.empty()) {
    if (o.range.size() != 2) throw UsageError("--range takes LO,HI");
    r.command = "hilbert.count";
    r.input["range"] = o.range;
    HilbertStats s = hilbert_count(f, o.range[0], o.range[1], [&g] { return g.should_stop(); });
    r.result = {{"tested", s.tested},
                {"irreducible", s.irreducible_count},
                {"nonregular", s.nonregular_count},
                {"examples", json_values(s.examples)}};
    r.stats = {{"partial", s.interrupted}};
    r.text = "tested=" + std::to_string(s.tested) + " irreducible=" + std::to_string(s.irreducible_count) +
             " nonregular=" + std::to_string(s.nonregular_count);
    return;
  }

  r.command = "hilbert.stream";
  SearchStrategy strat;
  strat.budget = g.budget;
  strat.s0 = s0;
  if (o.strategy == "integers")
    strat.kind = StrategyKind::IntegersByHeight;
  else if (o.strategy == "rationals")
    strat.kind = StrategyKind::RationalsByHeight;
  else if (o.strategy == "shifted")
    strat.kind = StrategyKind::ShiftedReciprocal;
  else
    throw UsageError("unknown strategy: " + o.strategy);
  if (o.count < 1) throw UsageError("--count must be positive");
  r.input["count"] = o.count;
  r.input["strategy"] = o.strategy;
  r.input["budget"] = g.budget;
  HilbertStream stream(f, strat);
  std::vector<Rational> values;
  bool interrupted = false;
  while (static_cast<int>(values.size()) < o.count) {
    if (g.should_stop()) {
      interrupted = true;
      break;
    }
    auto b = stream.next();
    if (!b) break;
    values.push_back(*b);
  }
  r.result = json_values(values);
  r.stats = {{"tested", stream.tested()},
             {"yielded", stream.yielded()},
             {"nonregular", stream.nonregular()},
             {"partial", interrupted || static_cast<int>(values.size()) < o.count}};
  r.text = join_values(values);
}

struct KronOptions {
  bool forward = false, inverse = false, specialize = false, full = false;
  std::string poly, p;
  unsigned d = 0;
  std::size_t k = 0;
};

void cmd_kron(const Globals& g, Report& r, const KronOptions& o) {
  int modes = o.forward + o.inverse + o.specialize + o.full;
  if (modes != 1) throw UsageError("choose exactly one of --forward, --inverse, --specialize, --full");
  std::string text = require_poly(o.poly);
  r.input = {{"poly", text}};
  if (o.inverse) {
    r.command = "kron.inverse";
    if (o.d == 0 || o.k == 0) throw UsageError("--inverse needs --d and --k");
    KroneckerParams params(o.d, o.k);
    MultiPoly f = kronecker_inverse(parse_bipoly(text), params);
    r.input["d"] = o.d;
    r.input["k"] = o.k;
    r.result = format(f);
    r.text = format(f);
    return;
  }
  std::size_t k = std::max(o.k, indexed_variable_count(text));
  if (o.forward) {
    r.command = "kron.forward";
    k = std::max<std::size_t>(k, 3);
    MultiPoly f = parse_poly(text, default_variable_names(k));
    unsigned d = o.d ? o.d : static_cast<unsigned>(std::max(1, f.max_variable_degree() + 1));
    d = std::max(d, 2u);
    KroneckerParams params(d, k);
    if (!in_Vd(f, params)) throw DomainError("polynomial is not in V_d for d=" + std::to_string(d));
    BiPoly img = kronecker_forward(f, params);
    r.input["d"] = d;
    r.input["k"] = k;
    r.result = format(img);
    r.text = format(img);
    return;
  }
  if (k < 2) throw UsageError("need at least two variables X1, X2");
  MultiPoly f = parse_poly(text, default_variable_names(k));
  r.input["k"] = k;
  r.input["budget"] = g.budget;
  if (o.specialize) {
    r.command = "kron.specialize";
    std::optional<unsigned> d;
    if (o.d) d = o.d;
    FirstVarSpecialization s = specialize_first_var_irreducible(f, g.budget, d);
    r.result = json_values(s.values);
    r.stats = {{"d", s.d},
               {"image", format(s.image)},
               {"factorization", format(s.factorization)},
               {"tested", s.tested},
               {"rejected_x_part", s.rejected_x_part},
               {"rejected_factor", s.rejected_factor},
               {"rejected_certificate", s.rejected_certificate}};
    r.text = join_values(s.values);
    return;
  }
  r.command = "kron.full";
  std::string ptext = o.p.empty() ? "1" : o.p;
  MultiPoly p = parse_poly(ptext, default_variable_names(k - 1));
  r.input["p"] = ptext;
  auto values = full_specialization(f, p, g.budget);
  r.result = json_values(values);
  r.text = join_values(values);
}

struct SeriesOptions {
  bool root = false, majorant = false, check = false;
  std::string poly;
  std::vector<std::string> vars;
  std::string b = "0", y0 = "0", A;
  std::optional<double> y0_im;
  int order = 12;
};

std::string complex_text(const Complex& c) {
  std::ostringstream s;
  s.precision(12);
  s << c;
  return s.str();
}

void cmd_series(const Globals&, Report& r, const SeriesOptions& o) {
  int modes = o.root + o.majorant + o.check;
  if (modes != 1) throw UsageError("choose exactly one of --root, --majorant, --check");
  if (o.order < 1) throw UsageError("--order must be positive");
  r.input = {{"order", o.order}};

  if (o.majorant && !o.A.empty()) {
    r.command = "series.majorant";
    Rational a = rational_arg(o.A, "--A");
    if (!is_integer(a) || a < 1) throw UsageError("--A must be a positive integer");
    TruncSeries<Rational> v = majorant_series(a.get_num(), o.order);
    std::vector<Rational> coeffs(v.coefficients.begin() + 1, v.coefficients.end());
    r.input["A"] = q(a);
    r.result = json_values(coeffs);
    r.text = join_values(coeffs);
    return;
  }

  std::string text = require_poly(o.poly);
  auto vars = o.vars.empty() ? std::vector<std::string>{"X", "Y"} : o.vars;
  if (vars.size() != 2) throw UsageError("series needs exactly two variables");
  BiPoly f = parse_bipoly(text, vars[0], vars[1]);
  Rational b = rational_arg(o.b, "--b");
  r.input["poly"] = text;
  r.input["b"] = q(b);

  if (o.y0_im) {
    Complex y0(rational_arg(o.y0, "--y0").get_d(), *o.y0_im);
    r.input["y0"] = {y0.real(), y0.imag()};
    if (o.root) {
      r.command = "series.root";
      auto u = root_series(f, b, y0, o.order);
      json arr = json::array();
      for (int k = 1; k <= u.order(); ++k) {
        arr.push_back({u[k].real(), u[k].imag()});
        r.text += (k > 1 ? " " : "") + complex_text(u[k]);
      }
      r.result = arr;
    } else if (o.majorant) {
      r.command = "series.majorant";
      auto lf = local_form(f, b, y0);
      auto v = majorant_series(lf.A, o.order);
      std::vector<Rational> coeffs(v.coefficients.begin() + 1, v.coefficients.end());
      r.result = json_values(coeffs);
      r.stats = {{"A", to_string(lf.A)}};
      r.text = join_values(coeffs);
    } else {
      r.command = "series.check";
      bool dom = majorant_dominates(f, b, y0, o.order);
      auto u = root_series(f, b, y0, o.order);
      auto res = series_residual(f, b, y0, u);
      double worst = 0;
      for (const auto& c : res.coefficients) worst = std::max(worst, std::abs(c));
      r.result = {{"dominates", dom}, {"max_residual", worst}};
      std::ostringstream s;
      s.precision(3);
      s << "dominates=" << (dom ? "true" : "false") << " max_residual=" << worst;
      r.text = s.str();
    }
    return;
  }

  Rational y0 = rational_arg(o.y0, "--y0");
  r.input["y0"] = q(y0);
  if (o.root) {
    r.command = "series.root";
    auto u = root_series(f, b, y0, o.order);
    std::vector<Rational> coeffs(u.coefficients.begin() + 1, u.coefficients.end());
    r.result = json_values(coeffs);
    r.text = join_values(coeffs);
  } else if (o.majorant) {
    r.command = "series.majorant";
    auto lf = local_form(f, b, y0);
    auto v = majorant_series(lf.A, o.order);
    std::vector<Rational> coeffs(v.coefficients.begin() + 1, v.coefficients.end());
    r.result = json_values(coeffs);
    r.stats = {{"A", to_string(lf.A)}};
    r.text = join_values(coeffs);
  } else {
    r.command = "series.check";
    auto u = root_series(f, b, y0, o.order);
    int val = valuation(series_residual(f, b, y0, u));
    bool dom = majorant_dominates(f, b, y0, o.order);
    auto lf = local_form(f, b, y0);
    int mval = valuation(majorant_residual(lf.A, majorant_series(lf.A, o.order)));
    r.result = {{"residual_valuation", val}, {"dominates", dom}, {"majorant_residual_valuation", mval}};
    r.text = "valuation=" + std::to_string(val) + " dominates=" + (dom ? "true" : "false") +
             " majorant_valuation=" + std::to_string(mval);
  }
}

void cmd_interp(Report& r, bool leading_only, const std::vector<std::string>& nodes,
                const std::vector<std::string>& values) {
  auto t = rational_list(nodes, "--nodes");
  auto v = rational_list(values, "--values");
  if (t.empty() || t.size() != v.size()) throw UsageError("--nodes and --values need the same nonzero length");
  r.input = {{"nodes", json_values(t)}, {"values", json_values(v)}};
  if (leading_only) {
    Rational ratio = divided_difference_ratio(t, v);
    r.result = q(ratio);
    r.text = q(ratio);
  } else {
    UniPoly p = interpolate_rational(t, v);
    r.result = format(p);
    r.text = format(p);
  }
}

struct GaloisOptions {
  bool classify = false, experiment = false;
  std::string poly, file;
  int degree = 3;
  long box = 20;
  long samples = 2000;
};

void cmd_galois(const Globals& g, Report& r, const GaloisOptions& o) {
  if (o.classify == o.experiment) throw UsageError("choose exactly one of --classify, --experiment");
  if (o.classify) {
    r.command = "galois.classify";
    json results = json::array();
    std::vector<std::string> lines;
    for (const auto& text : poly_inputs(o.poly, o.file)) {
      auto vars = vars_or_inferred({}, text, 1);
      if (vars.size() != 1) throw UsageError("galois --classify needs a univariate polynomial");
      GroupLabel label = galois_group_deg_le4(parse_unipoly(text, vars[0]));
      results.push_back({{"group", to_string(label.name)}, {"order", label.order}});
      lines.push_back(to_string(label.name));
    }
    r.input = {{"poly", o.poly}, {"file", o.file}};
    r.result = results.size() == 1 ? results[0] : results;
    for (std::size_t i = 0; i < lines.size(); ++i) r.text += (i ? "\n" : "") + lines[i];
    return;
  }
  r.command = "galois.experiment";
  r.input = {{"degree", o.degree}, {"box", o.box}, {"samples", o.samples}, {"seed", g.seed}};
  ExperimentTable t =
      specialization_group_experiment(o.degree, o.box, o.samples, g.seed, [&g] { return g.should_stop(); });
  json counts = json::object();
  std::string line = "samples=" + std::to_string(t.samples) + " discarded=" + std::to_string(t.discarded);
  for (const auto& [label, n] : t.counts) {
    counts[to_string(label.name)] = n;
    line += " " + to_string(label.name) + "=" + std::to_string(n);
  }
  r.result = {{"counts", counts}, {"discarded", t.discarded}, {"samples", t.samples}};
  r.stats = {{"partial", t.interrupted}};
  r.text = line;
}

void cmd_disc(Report& r, const std::string& poly, const std::vector<std::string>& given_vars,
              const std::string& b_text) {
  std::string text = require_poly(poly);
  auto vars = given_vars.empty() ? std::vector<std::string>{"X", "Y"} : given_vars;
  if (vars.size() != 2) throw UsageError("disc needs exactly two variables");
  BiPoly f = parse_bipoly(text, vars[0], vars[1]);
  UniPoly d = discriminant_y(f);
  r.input = {{"poly", text}, {"vars", vars}};
  r.result = {{"discriminant", format(d, vars[0])}};
  r.text = "disc=" + format(d, vars[0]);
  if (!d.is_zero()) {
    int bound = nonregular_count_bound(f);
    r.result["nonregular_bound"] = bound;
    r.text += " bound=" + std::to_string(bound);
  }
  if (!b_text.empty()) {
    Rational b = rational_arg(b_text, "--b");
    RegularityReport rep = is_regular_value(f, d, b);
    r.input["b"] = q(b);
    r.result["regular"] = rep.is_regular;
    r.result["leading_value"] = q(rep.leading_coeff_value);
    r.result["discriminant_value"] = q(rep.discriminant_value);
    r.text += std::string(" regular=") + (rep.is_regular ? "true" : "false");
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert irreducibility toolkit", "hilbertia"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_option("--budget", g.budget, "Candidate budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized experiments");
  app.add_option("--timeout-seconds", g.timeout_seconds, "Stop enumerations after this long (0 = never)")
      ->check(CLI::NonNegativeNumber);
  app.set_version_flag("--version", kVersion);

  std::string poly, file;
  std::vector<std::string> vars;

  auto* factor = app.add_subcommand("factor", "Factor over Q (one or two variables)");
  factor->add_option("--poly", poly);
  factor->add_option("--file", file);
  factor->add_option("--vars", vars)->delimiter(',');

  auto* irred = app.add_subcommand("irred", "Irreducibility test");
  irred->add_option("--poly", poly);
  irred->add_option("--file", file);
  irred->add_option("--vars", vars)->delimiter(',');

  HilbertOptions ho;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert-set enumeration");
  hilbert->add_option("--poly", ho.poly);
  hilbert->add_option("--vars", ho.vars)->delimiter(',');
  auto* count_opt = hilbert->add_option("--count", ho.count, "Stream this many values");
  hilbert->add_option("--range", ho.range, "Count over integers LO,HI")->delimiter(',');
  hilbert->add_flag("--tsearch", ho.tsearch, "Test b = s0 + 1/t for t = 1..tmax");
  hilbert->add_option("--strategy", ho.strategy)->check(CLI::IsMember({"integers", "rationals", "shifted"}));
  hilbert->add_option("--s0", ho.s0);
  hilbert->add_option("--tmax", ho.tmax)->check(CLI::PositiveNumber);

  KronOptions ko;
  auto* kron = app.add_subcommand("kron", "Kronecker specialization");
  kron->add_flag("--forward", ko.forward);
  kron->add_flag("--inverse", ko.inverse);
  kron->add_flag("--specialize", ko.specialize);
  kron->add_flag("--full", ko.full);
  kron->add_option("--poly", ko.poly);
  kron->add_option("--p", ko.p, "Polynomial that must stay nonzero (--full)");
  kron->add_option("--d", ko.d)->check(CLI::Range(2u, 64u));
  kron->add_option("--k", ko.k)->check(CLI::Range(std::size_t{2}, std::size_t{16}));

  SeriesOptions so;
  auto* series = app.add_subcommand("series", "Analytic root series and majorants");
  series->add_flag("--root", so.root);
  series->add_flag("--majorant", so.majorant);
  series->add_flag("--check", so.check);
  series->add_option("--poly", so.poly);
  series->add_option("--vars", so.vars)->delimiter(',');
  series->add_option("--b", so.b);
  series->add_option("--y0", so.y0, "Root of f(b, Y) (real part in numeric mode)");
  series->add_option("--y0-im", so.y0_im, "Imaginary part; selects numeric mode");
  series->add_option("--A", so.A, "Majorant constant (skips --poly)");
  series->add_option("--order", so.order);

  std::vector<std::string> nodes, values;
  auto* divdiff = app.add_subcommand("divdiff", "Leading coefficient as W_m/V_m");
  divdiff->add_option("--nodes", nodes)->delimiter(',')->required();
  divdiff->add_option("--values", values)->delimiter(',')->required();
  auto* interp = app.add_subcommand("interp", "Interpolating polynomial");
  interp->add_option("--nodes", nodes)->delimiter(',')->required();
  interp->add_option("--values", values)->delimiter(',')->required();

  GaloisOptions go;
  auto* galois = app.add_subcommand("galois", "Galois groups of degree <= 4");
  galois->add_flag("--classify", go.classify);
  galois->add_flag("--experiment", go.experiment);
  galois->add_option("--poly", go.poly);
  galois->add_option("--file", go.file);
  galois->add_option("--degree", go.degree)->check(CLI::Range(1, 4));
  galois->add_option("--box", go.box)->check(CLI::NonNegativeNumber);
  galois->add_option("--samples", go.samples)->check(CLI::PositiveNumber);

  std::string b_text;
  auto* disc = app.add_subcommand("disc", "Discriminant in Y and regularity");
  disc->add_option("--poly", poly);
  disc->add_option("--vars", vars)->delimiter(',');
  disc->add_option("--b", b_text);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Report r;
  try {
    if (factor->parsed()) {
      r.command = "factor";
      cmd_factor(g, r, poly, file, vars);
    } else if (irred->parsed()) {
      r.command = "irred";
      cmd_irred(g, r, poly, file, vars);
    } else if (hilbert->parsed()) {
      cmd_hilbert(g, r, ho, count_opt->count() > 0);
    } else if (kron->parsed()) {
      cmd_kron(g, r, ko);
    } else if (series->parsed()) {
      cmd_series(g, r, so);
    } else if (divdiff->parsed()) {
      r.command = "divdiff";
      cmd_interp(r, true, nodes, values);
    } else if (interp->parsed()) {
      r.command = "interp";
      cmd_interp(r, false, nodes, values);
    } else if (galois->parsed()) {
      cmd_galois(g, r, go);
    } else if (disc->parsed()) {
      r.command = "disc";
      cmd_disc(r, poly, vars, b_text);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (g.json) {
    json report = {{"command", r.command},
                   {"input", r.input},
                   {"result", r.result},
                   {"stats", r.stats},
                   {"version", kVersion}};
    out << report.dump() << "\n";
  } else {
    out << r.text << "\n";
  }
  if (r.stats.is_object() && r.stats.value("partial", false)) err << "note: partial result\n";
  return 0;
}

}  // namespace hilbertia
