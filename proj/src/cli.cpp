// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boxlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "boxlab/box_json.hpp"
#include "boxlab/families.hpp"
#include "boxlab/quantum.hpp"
#include "boxlab/vertices.hpp"
#include "boxlab/witnesses.hpp"

namespace boxlab {

namespace {

// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string family, state, observables = "peres", w, label, output;
  bool raw = false;
  long max_den = 4096;
  double tol = 1e-9;
};

struct AnalyzeArgs {
  std::string input = "-", format = "json";
  bool skip_dims = false, strict_sign = false;
};

struct SweepArgs {
  std::string family, state, observables = "peres", from = "0", to = "1", format = "csv", output;
  int steps = 11;
  long max_den = 4096;
  double tol = 1e-9;
  bool skip_dims = false;
};

struct VerticesArgs {
  bool list = false, bell = false;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const RationalError&) {
    throw UsageError(flag + " expects an exact rational like 1/3, got '" + text + "'");
  }
}

// Writes to the -o file when given, else to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
}

Box named_family(const std::string& family, const std::optional<Rational>& w) {
  if (family == "noisy-peres") {
    if (!w) throw UsageError("--family noisy-peres needs --W");
    if (w->sign() < 0 || *w > Rational(1)) throw UsageError("--W must lie in [0, 1]");
    return noisy_peres(*w);
  }
  if (w) throw UsageError("--W only applies to noisy-peres and the werner state");
  if (family == "peres") return peres_box();
  if (family == "noise") return noise_box();
  if (family == "uniform") return uniform_box();
  throw UsageError("unknown family '" + family + "'");
}

RawBox quantum_raw(const std::string& state, const std::string& observables, const std::optional<Rational>& w) {
  StateFamily fam;
  ObservableSetName set;
  try {
    fam = parse_state_family(state);
    set = parse_observable_set(observables);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (fam == StateFamily::Werner && !w) throw UsageError("--state werner needs --W");
  if (fam != StateFamily::Werner && w) throw UsageError("--W only applies to noisy-peres and the werner state");
  try {
    return box_from_state(make_state(fam, w ? w->to_double() : 1.0), make_observables(set));
  } catch (const ParameterOutOfRange& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json raw_json(const RawBox& raw) {
  nlohmann::json contexts = nlohmann::json::object();
  for (ContextId c : kAllContexts) {
    const std::size_t ci = static_cast<std::size_t>(c);
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < kContextSize[ci]; ++k) arr.push_back(raw.p[kContextOffset[ci] + k]);
    contexts[to_string(c)] = arr;
  }
  return {{"raw", contexts},
          {"d_is_product", raw.d_is_product},
          {"e_is_product", raw.e_is_product},
          {"c1_follows_product_rule", raw.c1_follows_product_rule},
          {"c2_follows_product_rule", raw.c2_follows_product_rule}};
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.family.empty() == a.state.empty()) throw UsageError("give exactly one of --family or --state");
  if (a.max_den < 1) throw UsageError("--max-den must be at least 1");
  std::optional<Rational> w;
  if (!a.w.empty()) w = parse_rational_flag("--W", a.w);

  std::string text;
  if (!a.family.empty()) {
    if (a.raw) throw UsageError("--raw applies to --state only");
    text = dump_box(named_family(a.family, w).with_label(a.label));
  } else {
    const RawBox raw = quantum_raw(a.state, a.observables, w);
    if (a.raw) {
      text = raw_json(raw).dump();
    } else {
      text = dump_box(rationalize_box(raw.p, a.max_den, a.tol, a.label));
    }
  }
  emit(a.output, text + "\n", out);
  return kExitOk;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  const Box box = box_from_string(read_input(a.input));
  ClassifyOptions opt;
  opt.skip_dims = a.skip_dims;
  opt.sign = a.strict_sign ? CovarianceSign::StrictlyPositive : CovarianceSign::NonZero;
  const Report r = classify(box, opt);
  if (a.format == "json") {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << report_csv_header() << "\r\n" << report_csv_row(r) << "\r\n";
  }
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.family.empty() == a.state.empty()) throw UsageError("give exactly one of --family or --state");
  if (!a.family.empty() && a.family != "noisy-peres") throw UsageError("only noisy-peres has a sweep parameter");
  if (!a.state.empty() && a.state != "werner") throw UsageError("only the werner state has a sweep parameter");
  if (a.format != "csv" && a.format != "json-lines") throw UsageError("--format must be csv or json-lines");
  if (a.steps < 2) throw UsageError("--steps must be at least 2");
  const Rational from = parse_rational_flag("--from", a.from), to = parse_rational_flag("--to", a.to);
  if (!(from < to)) throw UsageError("--from must be below --to");
  if (from.sign() < 0 || to > Rational(1)) throw UsageError("the sweep range must lie in [0, 1]");

  ClassifyOptions opt;
  opt.skip_dims = a.skip_dims;
  std::ostringstream os;
  static const std::array<const char*, 6> kRationalCols{"W", "ineq_lhs", "cost", "Q", "cov_DE", "peres_strength"};
  if (a.format == "csv") {
    os << "W,W_decimal,ineq_lhs,ineq_lhs_decimal,contextual,cost,cost_decimal,Q,Q_decimal,cov_DE,cov_DE_decimal,"
          "peres_strength,peres_strength_decimal,sdi_contextual,min_nc_dim\r\n";
  }
  const Rational step = (to - from) / Rational(a.steps - 1);
  for (int i = 0; i < a.steps; ++i) {
    const Rational w = from + step * Rational(i);
    const Box box = a.family.empty() ? rationalize_box(quantum_raw(a.state, a.observables, w).p, a.max_den, a.tol)
                                     : noisy_peres(w);
    const Report r = classify(box, opt);
    std::optional<std::size_t> dim;
    if (r.min_nc_dim && r.min_nc_dim->status == SearchStatus::Exact) dim = r.min_nc_dim->d;
    const std::array<std::optional<Rational>, 6> vals{w, r.inequality_lhs, r.cost, r.q, r.cov_de, r.peres_strength};
    if (a.format == "csv") {
      const auto pair = [&](const std::optional<Rational>& v) {
        return v ? v->str() + "," + decimal12(*v) : std::string(",");
      };
      os << pair(vals[0]) << ',' << pair(vals[1]) << ',' << (r.contextual ? "true" : "false") << ',' << pair(vals[2])
         << ',' << pair(vals[3]) << ',' << pair(vals[4]) << ',' << pair(vals[5]) << ','
         << (r.sdi.value ? "true" : "false") << ',' << (dim ? std::to_string(*dim) : "") << "\r\n";
    } else {
      nlohmann::json j;
      for (std::size_t c = 0; c < kRationalCols.size(); ++c) {
        j[kRationalCols[c]] = vals[c] ? nlohmann::json(vals[c]->str()) : nlohmann::json(nullptr);
        j[std::string(kRationalCols[c]) + "_decimal"] =
            vals[c] ? nlohmann::json(decimal12(*vals[c])) : nlohmann::json(nullptr);
      }
      j["contextual"] = r.contextual;
      j["sdi_contextual"] = r.sdi.value;
      j["min_nc_dim"] = dim ? nlohmann::json(*dim) : nlohmann::json(nullptr);
      os << j.dump() << "\n";
    }
  }
  emit(a.output, os.str(), out);
  return kExitOk;
}

int cmd_vertices(const VerticesArgs& a, std::ostream& out) {
  if (a.bell) {
    for (const auto& [id, m] : enumerate_local_vertices()) out << bell_marginal_to_json(m, id.label()).dump() << "\n";
  } else {
    for (const auto& [id, box] : enumerate_nc_vertices()) out << dump_box(box) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of boxes in the five-context Peres scenario", "boxlab"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a box as JSON");
  g->add_option("--family", gen.family, "noisy-peres | peres | noise | uniform");
  g->add_option("--state", gen.state, "max_entangled | werner | cc | rank2 | rank3_rho | rank3_sigma");
  g->add_option("--observables", gen.observables, "peres | product | rotated")->capture_default_str();
  g->add_option("--W", gen.w, "mixing parameter, exact rational");
  g->add_flag("--raw", gen.raw, "emit the floating-point box before rationalization");
  g->add_option("--max-den", gen.max_den, "largest denominator when rationalizing")->capture_default_str();
  g->add_option("--tol", gen.tol, "per-entry rationalization tolerance")->capture_default_str();
  g->add_option("--label", gen.label, "label stored in the box");
  g->add_option("-o,--output", gen.output, "output file (default stdout)");

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Classify a box read from a JSON file");
  a->add_option("input", an.input, "box JSON file, or - for stdin")->capture_default_str();
  a->add_flag("--skip-dims", an.skip_dims, "skip the minimal-dimension searches");
  a->add_option("--format", an.format, "json | csv")->capture_default_str();
  a->add_flag("--strict-sign", an.strict_sign, "require cov(D,E) > 0 instead of != 0");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Classify a one-parameter family over a grid");
  s->add_option("--family", sw.family, "noisy-peres");
  s->add_option("--state", sw.state, "werner");
  s->add_option("--observables", sw.observables, "peres | product | rotated")->capture_default_str();
  s->add_option("--from", sw.from, "first parameter value")->capture_default_str();
  s->add_option("--to", sw.to, "last parameter value")->capture_default_str();
  s->add_option("--steps", sw.steps, "number of grid points, >= 2")->capture_default_str();
  s->add_option("--format", sw.format, "csv | json-lines")->capture_default_str();
  s->add_option("--max-den", sw.max_den, "largest denominator when rationalizing")->capture_default_str();
  s->add_option("--tol", sw.tol, "per-entry rationalization tolerance")->capture_default_str();
  s->add_flag("--skip-dims", sw.skip_dims, "skip the minimal-dimension searches");
  s->add_option("-o,--output", sw.output, "output file (default stdout)");

  VerticesArgs vx;
  auto* v = app.add_subcommand("vertices", "Dump the deterministic vertices, one JSON line each");
  v->add_flag("--list", vx.list, "list every vertex (the default)");
  v->add_flag("--bell-marginal", vx.bell, "the 16 local vertices of the Bell marginal instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "boxlab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (a->parsed()) return cmd_analyze(an, out);
    if (s->parsed()) return cmd_sweep(sw, out);
    if (v->parsed()) return cmd_vertices(vx, out);
  } catch (const UsageError& e) {
    err << "boxlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "boxlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoExactRationalization& e) {
    err << "boxlab: " << e.what() << "\n";
    return kExitRationalize;
  } catch (const ValidationError& e) {
    err << "boxlab: invalid box: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "boxlab: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace boxlab
