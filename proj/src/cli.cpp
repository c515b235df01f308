#include "urn/cli.hpp"

#include "urn/enumerate.hpp"
#include "urn/parser.hpp"
#include "urn/poly.hpp"
#include "urn/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

namespace urn::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv };

struct Options {
  std::string format;
  std::string expr;
  unsigned steps = 1;
  std::string initial = "0";
  bool oracle = false;
  std::string scale;
  std::uint64_t budget = kDefaultSearchBudget;
  unsigned order = 6;
  unsigned dx = 10;
  unsigned dy = 10;
  bool check_pde = false;
  std::string coupling = "1";
};

// Reported with exit code kParseError.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Carries a finished record whose verification failed.
struct Mismatch {
  json record;
};

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

Range parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    unsigned v = parse_unsigned(s, "initial ball count");
    return {v, v};
  }
  Range r{parse_unsigned(std::string_view(s).substr(0, colon), "range start"),
          parse_unsigned(std::string_view(s).substr(colon + 1), "range end")};
  if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
  return r;
}

Rational parse_rational_arg(const std::string& s, std::string_view what) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid " + std::string(what) + ": '" + s + "'");
  }
}

std::string read_expr(const std::string& expr, std::istream& in) {
  if (expr != "-") return expr;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json normal_form_json(const NormalForm& nf) {
  json terms = json::array();
  for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
    terms.push_back({{"k", it->first.x}, {"l", it->first.y}, {"coeff", to_string(it->second)}});
  }
  return terms;
}

json bipoly_json(const BiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"x", it->first.x}, {"y", it->first.y}, {"coeff", to_string(it->second)}});
  }
  return terms;
}

json row_json(const CountRow& row, const char* value_key) {
  json counts = json::array();
  for (const auto& [k, c] : row) counts.push_back({{"k", k}, {value_key, to_string(c)}});
  return counts;
}

json record(const std::string& name, const json& command, json result) {
  json echo{{"name", name}};
  for (const auto& [k, v] : command.items()) echo[k] = v;
  json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = std::move(echo);
  rec["result"] = std::move(result);
  return rec;
}

class Dispatcher {
 public:
  Dispatcher(const Options& o, std::istream& in, std::ostream& out)
      : o_(o), in_(in), out_(out), format_(o.format == "csv" ? Format::Csv : Format::Json) {}

  Process process() const { return parse(read_expr(o_.expr, in_)); }

  json command(const Process& p) const { return {{"expr", pretty(p)}}; }

  void emit(const json& rec) { out_ << rec.dump(2) << '\n'; }

  void normal_order_cmd() {
    const Process p = process();
    const NormalForm nf = normal_order(p);
    if (format_ == Format::Csv) {
      out_ << "k,l,coeff\n";
      for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
        out_ << it->first.x << ',' << it->first.y << ',' << to_string(it->second) << '\n';
      }
      return;
    }
    emit(record("normal-order", command(p), {{"terms", normal_form_json(nf)}}));
  }

  void histories_cmd() {
    const Process p = process();
    const Range range = parse_range(o_.initial);
    const HistoryTable table = history_table(p, o_.steps, range.lo, range.hi);

    json cmd = command(p);
    cmd["n"] = o_.steps;
    cmd["l_min"] = range.lo;
    cmd["l_max"] = range.hi;
    cmd["oracle"] = o_.oracle;

    json rows = json::array();
    for (const auto& [l, row] : table.rows) rows.push_back({{"l", l}, {"counts", row_json(row, "count")}});
    json result{{"n", o_.steps}, {"rows", std::move(rows)}};

    bool agreement = true;
    if (o_.oracle) {
      const Integer scale = o_.scale.empty() ? weight_denominator_lcm(p)
                                             : Integer(parse_rational_arg(o_.scale, "scale").get_num());
      if (scale <= 0) throw UsageError("scale must be a positive integer");
      Integer factor;
      mpz_pow_ui(factor.get_mpz_t(), scale.get_mpz_t(), o_.steps);
      for (unsigned l = range.lo; l <= range.hi; ++l) {
        CountRow expected;
        auto it = table.rows.find(l);
        if (it != table.rows.end()) {
          for (const auto& [k, c] : it->second) expected.emplace(k, c * factor);
        }
        if (count_by_search(p, o_.steps, l, scale, o_.budget) != expected) agreement = false;
      }
      result["oracle"] = {{"scale", to_string(scale)}, {"agreement", agreement}};
    }

    if (format_ == Format::Csv) {
      out_ << "l,k,count\n";
      for (const auto& [l, row] : table.rows) {
        for (const auto& [k, c] : row) out_ << l << ',' << k << ',' << to_string(c) << '\n';
      }
      if (!agreement) throw Mismatch{};
      return;
    }
    json rec = record("histories", std::move(cmd), std::move(result));
    if (!agreement) throw Mismatch{std::move(rec)};
    emit(rec);
  }

  void probabilities_cmd() {
    const Process p = process();
    const unsigned l = parse_unsigned(o_.initial, "initial ball count");
    const ProbabilityRow row = probabilities(history_table(p, o_.steps, l, l), l);
    if (format_ == Format::Csv) {
      out_ << "k,p\n";
      for (const auto& [k, q] : row.probs) out_ << k << ',' << to_string(q) << '\n';
      return;
    }
    json cmd = command(p);
    cmd["n"] = o_.steps;
    cmd["l"] = l;
    emit(record("probabilities", std::move(cmd),
                {{"n", row.n}, {"l", row.l}, {"probs", row_json(row.probs, "p")}}));
  }

  void series_cmd() {
    const Process p = process();
    const LambdaSeries b = b_series(p, o_.order);
    std::optional<bool> residual_zero;
    if (o_.check_pde) residual_zero = o_.order == 0 || pde_residual(p, b).is_zero();

    if (format_ == Format::Csv) {
      out_ << "n,x,y,coeff\n";
      for (unsigned n = 0; n <= b.order; ++n) {
        for (auto it = b.terms[n].terms().rbegin(); it != b.terms[n].terms().rend(); ++it) {
          out_ << n << ',' << it->first.x << ',' << it->first.y << ',' << to_string(it->second) << '\n';
        }
      }
      if (residual_zero == false) throw Mismatch{};
      return;
    }

    json terms = json::array();
    for (unsigned n = 0; n <= b.order; ++n) {
      terms.push_back({{"n", n}, {"poly", to_string(b.terms[n])}, {"terms", bipoly_json(b.terms[n])}});
    }
    json g = json::array();
    const TriSeries gs = g_series(p, o_.order, o_.dx, o_.dy);
    for (const auto& [i, c] : gs.coeffs()) {
      g.push_back({{"k", i.x}, {"l", i.y}, {"n", i.lambda}, {"coeff", to_string(c)}});
    }
    json cmd = command(p);
    cmd["N"] = o_.order;
    cmd["dx"] = o_.dx;
    cmd["dy"] = o_.dy;
    cmd["check_pde"] = o_.check_pde;
    json result{{"order", b.order}, {"B", std::move(terms)}, {"G", std::move(g)}};
    if (residual_zero) result["residual_zero"] = *residual_zero;
    json rec = record("series", std::move(cmd), std::move(result));
    if (residual_zero == false) throw Mismatch{std::move(rec)};
    emit(rec);
  }

  void oscillator_cmd() {
    if (format_ == Format::Csv) throw UsageError("oscillator output is JSON only");
    const Rational g = parse_rational_arg(o_.coupling, "coupling g");
    const TriSeries closed = driven_oscillator_closed_form(g, o_.order, o_.dx, o_.dy);
    const TriSeries series = g_series(driven_oscillator(g), o_.order, o_.dx, o_.dy);
    const auto diff = first_mismatch(closed, series);

    json cmd{{"g", to_string(g)}, {"N", o_.order}, {"dx", o_.dx}, {"dy", o_.dy}};
    json result{{"process", pretty(driven_oscillator(g))},
                {"compared", (o_.order + 1) * (o_.dx + 1) * (o_.dy + 1)},
                {"match", !diff.has_value()}};
    if (diff) {
      result["first_mismatch"] = {{"k", diff->index.x},
                                  {"l", diff->index.y},
                                  {"n", diff->index.lambda},
                                  {"closed_form", to_string(diff->lhs)},
                                  {"series", to_string(diff->rhs)}};
      throw Mismatch{record("oscillator", std::move(cmd), std::move(result))};
    }
    result["first_mismatch"] = nullptr;
    emit(record("oscillator", std::move(cmd), std::move(result)));
  }

  bool json_output() const { return format_ == Format::Json; }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  Format format_;
};

std::string default_format() {
  const char* env = std::getenv("URN_FORMAT");
  return env && std::string(env) == "csv" ? "csv" : "json";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  o.format = default_format();

  CLI::App app{"Normal ordering and urn history enumeration over the Heisenberg-Weyl algebra",
               "urn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format (env URN_FORMAT sets the default)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("expr", o.expr, "Process expression, or - to read stdin")->required();
  };

  auto* normal = app.add_subcommand("normal-order", "Normal form sum h_kl X^k D^l");
  add_expr(normal);

  auto* hist = app.add_subcommand("histories", "History counts G^(n)_{l->k}");
  add_expr(hist);
  hist->add_option("-n,--steps", o.steps, "Number of steps")->required();
  hist->add_option("-l,--initial", o.initial, "Initial ball count l or range lo:hi")->required();
  hist->add_flag("--oracle", o.oracle, "Cross-check with labelled-ball search");
  hist->add_option("--scale", o.scale, "Weight scale for the search (default: lcm of denominators)");
  hist->add_option("--budget", o.budget, "Search node budget");

  auto* prob = app.add_subcommand("probabilities", "Transition probabilities P^(n)_{l->k}");
  add_expr(prob);
  prob->add_option("-n,--steps", o.steps, "Number of steps")->required();
  prob->add_option("-l,--initial", o.initial, "Initial ball count")->required();

  auto* series = app.add_subcommand("series", "Polynomials B_n and series G(x,y,lambda)");
  add_expr(series);
  series->add_option("-N,--order", o.order, "Truncation order in lambda");
  series->add_option("--dx", o.dx, "Maximum x-degree of G");
  series->add_option("--dy", o.dy, "Maximum y-degree of G");
  series->add_flag("--check-pde", o.check_pde, "Verify the lambda-evolution equation");

  auto* osc = app.add_subcommand("oscillator", "Closed form vs series for XD + gX + gD");
  osc->add_option("-g,--coupling", o.coupling, "Rational coupling g");
  osc->add_option("-N,--order", o.order, "Truncation order in lambda");
  osc->add_option("--dx", o.dx, "Maximum x-degree");
  osc->add_option("--dy", o.dy, "Maximum y-degree");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  Dispatcher d(o, in, out);
  auto fail = [&](int code, const std::string& kind, const std::string& message,
                  json extra = json::object()) {
    err << "urn: " << message << '\n';
    if (d.json_output()) {
      json e{{"kind", kind}, {"message", message}};
      for (auto& [k, v] : extra.items()) e[k] = v;
      json rec;
      rec["schema_version"] = kSchemaVersion;
      rec["command"] = {{"name", app.get_subcommands().front()->get_name()}};
      rec["error"] = std::move(e);
      out << rec.dump(2) << '\n';
    }
    return code;
  };

  try {
    if (*normal) d.normal_order_cmd();
    else if (*hist) d.histories_cmd();
    else if (*prob) d.probabilities_cmd();
    else if (*series) d.series_cmd();
    else if (*osc) d.oscillator_cmd();
  } catch (const ParseError& e) {
    const bool negative = dynamic_cast<const NegativeCoefficient*>(&e) != nullptr;
    return fail(kParseError, negative ? "negative_coefficient" : "syntax", e.what(),
                {{"position", e.position()}});
  } catch (const UsageError& e) {
    return fail(kParseError, "usage", e.what());
  } catch (const UndefinedRow& e) {
    return fail(kDomainError, "undefined_row", e.what());
  } catch (const NonIntegerWeight& e) {
    return fail(kDomainError, "non_integer_weight", e.what());
  } catch (const SearchBudgetExceeded& e) {
    return fail(kBudgetExceeded, "budget_exceeded", e.what(), {{"budget", e.budget()}});
  } catch (Mismatch& m) {
    if (!m.record.is_null()) d.emit(m.record);
    err << "urn: verification mismatch\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace urn::cli
