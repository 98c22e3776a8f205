// zerocycle: command-line front end. Every command prints one JSON report (or a plain table with --table).
// Exit status: 0 result computed, 1 usage or parse error, 2 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zerocycle/zerocycle.hpp"

using namespace zerocycle;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse error tagged with the flag it came from.
struct InputError {
  std::string flag, message, input;
  size_t position;
};

struct Inputs {
  std::string f, g, q, h, g0, kappa, cycle;
  int K = 12;
  int order = 0;
  double tol = 1e-8;
  long long cap = 1000000;
  int samples = 20;
  int m = 0;
  std::vector<double> ts;
  bool table = false;
};

Poly poly_flag(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError("missing required option --" + flag);
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw InputError{flag, e.what(), text, e.position()};
  }
}

LaurentPoly laurent_flag(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError("missing required option --" + flag);
  try {
    return parse_laurent(text);
  } catch (const ParseError& e) {
    throw InputError{flag, e.what(), text, e.position()};
  }
}

// "1,-1,0" or "@path" naming a JSON file holding an array or {"cycle": [...]}.
ZeroCycle cycle_flag(const std::string& text) {
  if (text.empty()) throw UsageError("missing required option --cycle");
  if (text[0] != '@') {
    try {
      return parse_cycle(text);
    } catch (const ParseError& e) {
      throw InputError{"cycle", e.what(), text, e.position()};
    }
  }
  std::ifstream in(text.substr(1));
  if (!in) throw UsageError("cannot open cycle file " + text.substr(1));
  json j;
  try {
    j = json::parse(in);
    if (j.is_object()) j = j.at("cycle");
    return ZeroCycle(j.get<std::vector<long>>());
  } catch (const json::exception& e) {
    throw UsageError("bad cycle file " + text.substr(1) + ": " + e.what());
  }
}

VanishingOptions vanishing_options(const Inputs& in) {
  VanishingOptions v;
  v.samples = in.samples;
  v.tolerance = in.tol;
  v.order = in.order;
  return v;
}

json cmd_roots(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  if (f.degree() < 1) throw UsageError("--f must have degree at least 1");
  return {{"f", to_json(f)}, {"result", to_json(roots_of(f))}};
}

json cmd_monodromy(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  const MonodromyData d = monodromy_data(f);
  json r = to_json(d);
  r["generator_product_is_tau_infinity"] = d.generator_product() == d.tau_infinity;
  return r;
}

json cmd_blocks(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  const MonodromyData d = monodromy_data(f);
  json systems = json::array();
  for (const BlockSystem& bs : block_systems(d)) {
    json j = to_json(bs);
    if (bs.block_size > 1 && bs.block_size < d.degree()) j["decomposition"] = to_json(block_to_decomposition(f, bs, d));
    systems.push_back(j);
  }
  return {{"f", to_json(f)}, {"tau_infinity", d.tau_infinity.to_string()}, {"block_systems", systems}};
}

json cmd_classify(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  const ZeroCycle c = cycle_flag(in.cycle);
  ClassifyOptions opt;
  opt.cap = in.cap;
  json r = to_json(is_totally_unbalanced(f, c, monodromy_data(f), opt));
  r["f"] = to_json(f);
  r["cycle"] = to_json(c);
  return r;
}

json cmd_solve(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  const Poly g = poly_flag("g", in.g);
  const ZeroCycle c = cycle_flag(in.cycle);
  SolveOptions opt;
  opt.vanishing = vanishing_options(in);
  opt.classify.cap = in.cap;
  json r = to_json(solve_tangential(f, c, g, opt));
  r["f"] = to_json(f);
  r["g"] = to_json(g);
  r["cycle"] = to_json(c);
  return r;
}

json cmd_zm(const Inputs& in) {
  int m = in.m;
  if (!in.f.empty()) {
    const Poly f = poly_flag("f", in.f);
    if (!is_zm_form(f)) throw UsageError("--f must have the form a*z^m + b");
    if (m && m != f.degree()) throw UsageError("--m disagrees with deg f");
    m = f.degree();
  }
  if (m < 1) throw UsageError("give --m or --f");
  const ZeroCycle c = cycle_flag(in.cycle);
  if (c.m() != m) throw UsageError("cycle has " + std::to_string(c.m()) + " weights, expected " + std::to_string(m));
  json r = to_json(zm_solutions(m, c));
  r["cycle"] = to_json(c);
  return r;
}

json cmd_moment(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  const Poly q = poly_flag("q", in.q);
  if (in.K < 1) throw UsageError("--K must be at least 1");
  const std::vector<Rational> moments = moment_oracle(f, q, in.K);
  ClassifyOptions copt;
  copt.cap = in.cap;
  const MomentCycleReport rep = moment_cycle(f, copt);
  const VanishingEvidence ev = is_identically_zero(f, q.antiderivative(), rep.cycle, vanishing_options(in));
  std::optional<int> first_nonzero;
  json ms = json::array();
  for (int k = 0; k < in.K; k++) {
    ms.push_back(to_json(moments[k]));
    if (!first_nonzero && moments[k] != 0) first_nonzero = k;
  }
  if (first_nonzero && ev.pass)
    throw InconsistentEvidence("moment " + std::to_string(*first_nonzero) + " is nonzero but the cycle test passed");
  json r = {{"f", to_json(f)},
            {"q", to_json(q)},
            {"K", in.K},
            {"moments", ms},
            {"moments_all_zero", !first_nonzero},
            {"cycle", to_json(rep.cycle)},
            {"n0", rep.n0},
            {"n1", rep.n1},
            {"totally_unbalanced", rep.totally_unbalanced},
            {"cycle_test", to_json(ev)},
            {"verdict", ev.pass ? "Vanishes" : "Does-Not-Vanish"}};
  if (first_nonzero) r["first_nonzero_moment"] = *first_nonzero;
  return r;
}

json cmd_laurent_moment(const Inputs& in) {
  const LaurentPoly f = laurent_flag("f", in.f);
  const LaurentPoly g = laurent_flag("g", in.g);
  if (in.K < 1) throw UsageError("--K must be at least 1");
  const std::vector<Rational> moments = laurent_moment_oracle(f, g, in.K);
  const LaurentCycleReport rep = laurent_moment_cycle(f);
  const VanishingEvidence ev = laurent_cycle_evidence(f, g, rep, vanishing_options(in));
  std::optional<int> first_nonzero;
  json ms = json::array();
  for (int k = 0; k < in.K; k++) {
    ms.push_back(to_json(moments[k]));
    if (!first_nonzero && moments[k] != 0) first_nonzero = k;
  }
  if (first_nonzero && ev.pass)
    throw InconsistentEvidence("moment " + std::to_string(*first_nonzero) + " is nonzero but the cycle test passed");
  json r = {{"f", to_json(f)},
            {"g", to_json(g)},
            {"K", in.K},
            {"moments", ms},
            {"moments_all_zero", !first_nonzero},
            {"cycle", to_json(rep.cycle)},
            {"n", rep.n},
            {"m", rep.m},
            {"reference_t", to_json(rep.reference_t)},
            {"cycle_test", to_json(ev)},
            {"verdict", ev.pass ? "Vanishes" : "Does-Not-Vanish"}};
  if (first_nonzero) r["first_nonzero_moment"] = *first_nonzero;
  return r;
}

json cmd_hyperelliptic(const Inputs& in) {
  const ZeroCycle c = cycle_flag(in.cycle);
  const int m = in.m ? in.m : c.m();
  if (c.m() != m) throw UsageError("cycle has " + std::to_string(c.m()) + " weights, expected " + std::to_string(m));
  const Poly kappa = poly_flag("kappa", in.kappa);
  const HyperellipticReport rep = hyperelliptic_check(m, c, kappa, vanishing_options(in));
  if (rep.condition != rep.numeric_vanishes)
    throw InconsistentEvidence("exponent rule and sampled integrals disagree");
  return {{"m", m},
          {"cycle", to_json(c)},
          {"one_cycle", hyperelliptic_phi_inverse(c).basis_coeffs},
          {"kappa", to_json(kappa)},
          {"allowed_residues", zm_solutions(m, c).allowed},
          {"condition", rep.condition},
          {"numeric_vanishes", rep.numeric_vanishes},
          {"worst_residual", rep.worst_residual},
          {"samples", rep.samples}};
}

json cmd_slowfast(const Inputs& in) {
  const Poly f = poly_flag("f", in.f);
  const Poly h = poly_flag("h", in.h);
  const Poly g0 = poly_flag("g0", in.g0);
  const RationalFunction G = slow_fast_gbar(f, h, g0);
  std::vector<double> ts = in.ts;
  if (ts.empty()) ts = {1e-3, 2e-3, 5e-3};
  const std::vector<double> I = slow_fast_I(f, G, ts);
  json vals = json::array();
  double worst = 0;
  for (size_t i = 0; i < ts.size(); i++) {
    vals.push_back({{"t", ts[i]}, {"I", I[i]}});
    worst = std::max(worst, std::abs(I[i]));
  }
  return {{"f", to_json(f)},
          {"h", to_json(h)},
          {"g0", to_json(g0)},
          {"gbar", {{"text", G.to_string()}, {"num", to_json(G.num)}, {"den", to_json(G.den)}}},
          {"integrals", vals},
          {"vanishes", worst < in.tol}};
}

// Plain text: one "path: value" line per leaf, arrays of scalars on one line.
void flatten(const json& j, const std::string& path, std::ostream& out) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && !v.is_structured();
    if (flat) {
      out << path << ":";
      for (const auto& v : j) out << " " << scalar(v);
      out << "\n";
    } else {
      for (size_t i = 0; i < j.size(); i++) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << ": " << scalar(j) << "\n";
  }
}

void print_table(const json& r, std::ostream& out) {
  if (r.contains("moments")) {
    out << "k\tmoment\n";
    for (size_t k = 0; k < r["moments"].size(); k++) out << k << "\t" << r["moments"][k].get<std::string>() << "\n";
    out << "verdict\t" << r["verdict"].get<std::string>() << "\n\n";
    json rest = r;
    rest.erase("moments");
    flatten(rest, "", out);
    return;
  }
  flatten(r, "", out);
}

json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  return report(command, {{"error", {{"kind", kind}, {"message", message}}}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vanishing of zero-dimensional Abelian integrals"};
  app.require_subcommand(1);
  Inputs in;
  using Handler = json (*)(const Inputs&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->set_help_flag("--help", "print this help");  // keeps -h free for --h
    auto* fmt = sub->add_flag("--json", "JSON output (default)");
    sub->add_flag("--table", in.table, "plain text output")->excludes(fmt);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* roots = add("roots", "complex roots of f", cmd_roots);
  roots->add_option("--f", in.f, "polynomial");

  auto* mono = add("monodromy", "generators and tau_infinity at the basepoint", cmd_monodromy);
  mono->add_option("--f", in.f, "polynomial");

  auto* blocks = add("blocks", "block systems and the matching decompositions", cmd_blocks);
  blocks->add_option("--f", in.f, "polynomial");

  auto* classify = add("classify", "balanced / totally unbalanced classification of a cycle", cmd_classify);
  classify->add_option("--f", in.f, "polynomial");
  classify->add_option("--cycle", in.cycle, "weights in tau_infinity labels, or @file");
  classify->add_option("--cap", in.cap, "conjugacy class size cap");

  auto* solve = add("solve", "decide vanishing of the integral of g over the cycle", cmd_solve);
  solve->add_option("--f", in.f, "polynomial");
  solve->add_option("--g", in.g, "polynomial");
  solve->add_option("--cycle", in.cycle, "weights in tau_infinity labels, or @file");
  solve->add_option("--order", in.order, "Puiseux order (0: automatic)");
  solve->add_option("--tol", in.tol, "numeric residual threshold");
  solve->add_option("--cap", in.cap, "conjugacy class size cap");
  solve->add_option("--samples", in.samples, "sample points");

  auto* zm = add("zm", "allowed residues for f = z^m", cmd_zm);
  zm->add_option("--f", in.f, "polynomial a*z^m + b");
  zm->add_option("--m", in.m, "degree");
  zm->add_option("--cycle", in.cycle, "weights in tau_infinity labels, or @file");

  auto* moment = add("moment", "moments of q against powers of f on [0, 1]", cmd_moment);
  moment->add_option("--f", in.f, "polynomial with f(0) = f(1)");
  moment->add_option("--q", in.q, "polynomial");
  moment->add_option("--K", in.K, "number of moments");
  moment->add_option("--tol", in.tol, "numeric residual threshold");
  moment->add_option("--cap", in.cap, "conjugacy class size cap");
  moment->add_option("--samples", in.samples, "sample points");

  auto* lmoment = add("laurent-moment", "residue moments of g against powers of a Laurent f", cmd_laurent_moment);
  lmoment->add_option("--f", in.f, "Laurent polynomial");
  lmoment->add_option("--g", in.g, "Laurent polynomial");
  lmoment->add_option("--K", in.K, "number of moments");
  lmoment->add_option("--tol", in.tol, "numeric residual threshold");
  lmoment->add_option("--samples", in.samples, "sample points");

  auto* hyper = add("hyperelliptic", "kappa(x) y dx on y^2 + x^m = t", cmd_hyperelliptic);
  hyper->add_option("--m", in.m, "even degree (default: cycle length)");
  hyper->add_option("--cycle", in.cycle, "balanced zero-cycle of z^m, or @file");
  hyper->add_option("--kappa", in.kappa, "polynomial in z");
  hyper->add_option("--tol", in.tol, "numeric residual threshold");
  hyper->add_option("--samples", in.samples, "sample points");

  auto* slow = add("slowfast", "slow-fast integrand G and the integral I(t)", cmd_slowfast);
  slow->add_option("--f", in.f, "polynomial z^2/2 + O(z^3)");
  slow->add_option("--h", in.h, "inner factor of f");
  slow->add_option("--g0", in.g0, "polynomial");
  slow->add_option("--t", in.ts, "positive levels");
  slow->add_option("--tol", in.tol, "threshold on |I(t)|");

  std::string command;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_report("", "usage", e.what()).dump(2) << "\n";
    return 1;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    command = sub->get_name();
    json out;
    int code = 0;
    try {
      out = report(command, fn(in));
    } catch (const InputError& e) {
      out = report(command, {{"error",
                              {{"kind", "parse"},
                               {"flag", e.flag},
                               {"input", e.input},
                               {"position", e.position},
                               {"message", e.message}}}});
      code = 1;
    } catch (const UsageError& e) {
      out = error_report(command, "usage", e.what());
      code = 1;
    } catch (const CapExceeded& e) {
      out = error_report(command, "cap-exceeded", e.what());
      out["error"]["cap"] = e.cap();
      code = 2;
    } catch (const NumericalFailure& e) {
      out = error_report(command, "numerical", e.what());
      code = 2;
    } catch (const InconsistentEvidence& e) {
      out = error_report(command, "inconsistent-evidence", e.what());
      code = 2;
    } catch (const std::invalid_argument& e) {
      out = error_report(command, "invalid-input", e.what());
      code = 1;
    } catch (const std::domain_error& e) {
      out = error_report(command, "invalid-input", e.what());
      code = 1;
    } catch (const std::exception& e) {
      out = error_report(command, "numerical", e.what());
      code = 2;
    }
    if (in.table && code == 0)
      print_table(out, std::cout);
    else
      std::cout << out.dump(2) << "\n";
    return code;
  }
  return 1;
}
