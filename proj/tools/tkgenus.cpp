// tkgenus: exact signature / upsilon / four-genus calculator for integer
// linear combinations of torus knots.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 verification failure,
// 3 internal assertion.  Failures emit a one-line JSON error object on
// stderr.  All outputs are byte-deterministic: JSON keys are sorted and
// every rational prints exactly ("num" or "num/den").

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tkg/cache.hpp"
#include "tkg/errors.hpp"
#include "tkg/expr.hpp"
#include "tkg/genus.hpp"
#include "tkg/serialize.hpp"
#include "tkg/stable.hpp"
#include "tkg/upsilon.hpp"
#include "tkg/verify.hpp"

namespace {

using nlohmann::json;
using namespace tkg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string knot;
  std::string k1, k2;
  long long p = 0, q = 0;
  long long a = 0, b = 0, k = 0, l = 0;
  std::string format = "json";
  std::string out;
  std::string cache_dir = default_cache_dir();
  std::string sweep;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
  f << payload;
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

[[noreturn]] void reject_format(const std::string& cmd, const std::string& fmt) {
  throw CLI::ValidationError("--format", fmt + " output is not defined for `" + cmd + "`");
}

// Per-knot exact data flows through the cache when a directory is set and is
// recomputed otherwise; both paths rebuild identical objects, so the emitted
// bytes never depend on cache state.
KnotData knot_data(const Options& opt, const TorusKnot& k) {
  return load_or_compute(k.p, k.q, opt.cache_dir);
}

StepFunction sig_of(const Options& opt, const TorusCombination& K) {
  std::vector<std::pair<long long, StepFunction>> parts;
  for (const auto& [c, k] : K.terms()) parts.emplace_back(c, knot_data(opt, k).sig);
  return step_combine(parts);
}

PiecewiseLinear upsilon_of(const Options& opt, const TorusCombination& K) {
  std::vector<std::pair<Rational, PiecewiseLinear>> parts;
  for (const auto& [c, k] : K.terms()) parts.emplace_back(Rational(c), knot_data(opt, k).upsilon);
  return pl_combine(parts);
}

TorusCombination parse_flag(const std::string& flag, const std::string& text) {
  if (text.empty()) throw CLI::RequiredError(flag);
  return parse_combination(text);
}

int cmd_sig(const Options& opt) {
  const TorusCombination K = parse_flag("--knot", opt.knot);
  const StepFunction f = sig_of(opt, K);
  if (opt.format == "csv") {
    emit(opt, csv_step(f));
  } else if (opt.format == "svg") {
    emit(opt, svg_step(f));
  } else {
    const StepMax m = max_abs_over_t(f);
    json j = step_json(f);
    j["expression"] = print_combination(K);
    j["max_abs"] = m.value;
    j["max_abs_at"] = rational_json(m.witness);
    emit_json(opt, j);
  }
  return kExitOk;
}

int cmd_upsilon(const Options& opt) {
  const TorusCombination K = parse_flag("--knot", opt.knot);
  const PiecewiseLinear f = upsilon_of(opt, K);
  if (opt.format == "csv") {
    emit(opt, csv_pl(f));
  } else if (opt.format == "svg") {
    emit(opt, svg_pl(f));
  } else {
    const RatioMax m = max_abs_ratio(f);
    json j = pl_json(f);
    j["expression"] = print_combination(K);
    j["max_abs_ratio"] = rational_json(m.value);
    j["max_abs_ratio_at"] = rational_json(m.witness);
    emit_json(opt, j);
  }
  return kExitOk;
}

int cmd_staircase(const Options& opt) {
  const TorusKnot k(opt.p, opt.q);
  const KnotData data = knot_data(opt, k);
  if (opt.format == "csv") {
    emit(opt, csv_staircase(data.staircase));
  } else if (opt.format == "svg") {
    emit(opt, svg_staircase(data.staircase));
  } else {
    json j;
    j["knot"] = k.name();
    j["semigroup"] = semigroup_json(data.semigroup);
    j["staircase"] = staircase_json(data.staircase);
    j["upsilon"] = pl_json(data.upsilon);
    emit_json(opt, j);
  }
  return kExitOk;
}

int cmd_invariants(const Options& opt) {
  const TorusCombination K = parse_flag("--knot", opt.knot);
  const StepFunction sig = sig_of(opt, K);
  const PiecewiseLinear ups = upsilon_of(opt, K);
  const StepMax sm = max_abs_over_t(sig);
  const RatioMax rm = max_abs_ratio(ups);
  std::vector<std::pair<std::string, Rational>> rows{
      {"seifert_genus", seifert_genus(K)},
      {"tau", tau(K)},
      {"upsilon_1", ups.final_value()},
      {"sigma_1", Rational(sig.evaluate(Rational(1)))},
      {"max_abs_sigma_half", Rational(sm.value, 2)},
      {"max_abs_upsilon_ratio", rm.value},
  };
  if (opt.format == "csv") {
    std::string out = "invariant,value\n";
    for (const auto& [name, v] : rows) out += name + "," + v.str() + "\n";
    emit(opt, out);
  } else if (opt.format == "svg") {
    reject_format("invariants", opt.format);
  } else {
    json j;
    j["expression"] = print_combination(K);
    for (const auto& [name, v] : rows) j[name] = rational_json(v);
    emit_json(opt, j);
  }
  return kExitOk;
}

int cmd_bounds(const Options& opt) {
  const TorusCombination K = parse_flag("--knot", opt.knot);
  const BoundReport rep = g4_exact(K);
  if (opt.format == "csv") {
    std::string out = "field,value\n";
    out += "expression," + print_combination(K) + "\n";
    out += "g3," + rep.g3.str() + "\n";
    out += "lower," + rep.lower.value.str() + "\n";
    out += "upper," + rep.upper.value.str() + "\n";
    out += "exact," + std::string(rep.exact ? "true" : "false") + "\n";
    out += "method," + rep.upper.method + "\n";
    emit(opt, out);
  } else if (opt.format == "svg") {
    reject_format("bounds", opt.format);
  } else {
    emit_json(opt, report_json(rep));
  }
  return kExitOk;
}

json genus_row(const BoundReport& rep) {
  json j;
  j["expression"] = print_combination(rep.K);
  j["g3"] = rational_json(rep.g3);
  j["lower"] = rational_json(rep.lower.value);
  j["upper"] = rational_json(rep.upper.value);
  j["exact"] = rep.exact;
  if (rep.exact) j["g4"] = rational_json(rep.lower.value);
  return j;
}

struct SweepRange {
  long long a1, a2, b1, b2;
};

SweepRange parse_sweep(const std::string& text) {
  // a1..a2,b1..b2
  const auto bad = [&] {
    return CLI::ValidationError("--sweep", "expected a1..a2,b1..b2, got \"" + text + "\"");
  };
  const auto range = [&](const std::string& part) -> std::pair<long long, long long> {
    const auto dots = part.find("..");
    if (dots == std::string::npos) throw bad();
    try {
      const long long lo = std::stoll(part.substr(0, dots));
      const long long hi = std::stoll(part.substr(dots + 2));
      if (lo > hi) throw bad();
      return {lo, hi};
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw bad();
  const auto [a1, a2] = range(text.substr(0, comma));
  const auto [b1, b2] = range(text.substr(comma + 1));
  return {a1, a2, b1, b2};
}

int cmd_genus(const Options& opt) {
  if (opt.format == "svg") reject_format("genus", opt.format);
  if (opt.sweep.empty()) {
    const TorusCombination K = parse_flag("--knot", opt.knot);
    const BoundReport rep = g4_exact(K);
    if (opt.format == "csv") {
      std::string out = "expression,g3,lower,upper,exact\n";
      out += print_combination(K) + "," + rep.g3.str() + "," + rep.lower.value.str() + "," +
             rep.upper.value.str() + "," + (rep.exact ? "true" : "false") + "\n";
      emit(opt, out);
    } else {
      emit_json(opt, genus_row(rep));
    }
    return kExitOk;
  }

  const SweepRange r = parse_sweep(opt.sweep);
  const TorusCombination K1 = parse_flag("--k1", opt.k1);
  const TorusCombination K2 = parse_flag("--k2", opt.k2);
  const long long na = r.a2 - r.a1 + 1, nb = r.b2 - r.b1 + 1;
  std::vector<BoundReport> results(static_cast<std::size_t>(na * nb));
  const auto work = [&](long long idx) {
    const long long a = r.a1 + idx / nb, b = r.b1 + idx % nb;
    results[static_cast<std::size_t>(idx)] = g4_exact(K1.scaled(a) + K2.scaled(b));
  };
  const long long total = na * nb;
  const unsigned threads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                              static_cast<unsigned>(total));
  if (threads > 1) {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (long long idx = w; idx < total; idx += threads) work(idx);
      });
    for (auto& t : pool) t.join();
  } else {
    for (long long idx = 0; idx < total; ++idx) work(idx);
  }

  if (opt.format == "csv") {
    std::string out = "a,b,expression,lower,upper,exact\n";
    for (long long idx = 0; idx < total; ++idx) {
      const auto& rep = results[static_cast<std::size_t>(idx)];
      out += std::to_string(r.a1 + idx / nb) + "," + std::to_string(r.b1 + idx % nb) + "," +
             print_combination(rep.K) + "," + rep.lower.value.str() + "," +
             rep.upper.value.str() + "," + (rep.exact ? "true" : "false") + "\n";
    }
    emit(opt, out);
  } else {
    json rows = json::array();
    for (long long idx = 0; idx < total; ++idx) {
      json row = genus_row(results[static_cast<std::size_t>(idx)]);
      row["a"] = r.a1 + idx / nb;
      row["b"] = r.b1 + idx % nb;
      rows.push_back(std::move(row));
    }
    emit_json(opt, rows);
  }
  return kExitOk;
}

int cmd_litherland(const Options& opt) {
  const LitherlandParams P(opt.a, opt.k, opt.b, opt.l);
  const long long g4 = litherland_g4(P);
  if (opt.format == "svg") reject_format("litherland", opt.format);
  if (opt.format == "csv") {
    std::string out = "a,k,b,l,mu,g4\n";
    out += std::to_string(opt.a) + "," + std::to_string(opt.k) + "," + std::to_string(opt.b) +
           "," + std::to_string(opt.l) + "," + std::to_string(2 * g4) + "," +
           std::to_string(g4) + "\n";
    emit(opt, out);
  } else {
    json j;
    j["a"] = opt.a;
    j["k"] = opt.k;
    j["b"] = opt.b;
    j["l"] = opt.l;
    j["mu"] = 2 * g4;
    j["g4"] = g4;
    emit_json(opt, j);
  }
  return kExitOk;
}

int cmd_profile(const Options& opt) {
  const TorusCombination K1 = parse_flag("--k1", opt.k1);
  const TorusCombination K2 = parse_flag("--k2", opt.k2);
  const StableProfile prof = stable_profile(K1, K2);
  if (opt.format == "csv") {
    emit(opt, csv_profile(prof));
  } else if (opt.format == "svg") {
    emit(opt, svg_profile(prof));
  } else {
    emit_json(opt, profile_json(prof));
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const std::vector<CriterionResult> results = run_all_criteria();
  bool all_pass = true;
  if (opt.format == "csv") {
    std::string out = "id,name,pass,detail\n";
    for (const auto& r : results) {
      out += std::to_string(r.id) + ",\"" + r.name + "\"," + (r.pass ? "true" : "false") +
             ",\"" + r.detail + "\"\n";
      all_pass = all_pass && r.pass;
    }
    emit(opt, out);
  } else if (opt.format == "svg") {
    reject_format("verify", opt.format);
  } else {
    json rows = json::array();
    for (const auto& r : results) {
      json row;
      row["id"] = r.id;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      rows.push_back(std::move(row));
      all_pass = all_pass && r.pass;
    }
    emit_json(opt, rows);
  }
  for (const auto& r : results)
    std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << "\n";
  return all_pass ? kExitOk : kExitVerification;
}

json error_object(const std::string& kind, const std::string& message) {
  json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact concordance invariants of torus-knot combinations"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "svg"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "Write output to a file instead of stdout");
    sub->add_option("--cache-dir", opt.cache_dir,
                    "Per-knot result cache directory (env TKGENUS_CACHE)");
    return sub;
  };
  const auto add_knot = [&](CLI::App* sub) {
    sub->add_option("--knot", opt.knot, "Combination such as \"2*T(3,4) - T(3,8)\"");
    return sub;
  };
  const auto set = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&, fn] { handler = fn; });
  };

  set(add_knot(add_common(app.add_subcommand(
          "sig", "Tristram-Levine signature step function on [0,1]"))),
      cmd_sig);
  set(add_knot(add_common(app.add_subcommand(
          "upsilon", "Upsilon as an exact piecewise-linear function on [0,1]"))),
      cmd_upsilon);
  {
    CLI::App* sub = add_common(app.add_subcommand(
        "staircase", "Semigroup staircase and upsilon data of one torus knot"));
    sub->add_option("-p", opt.p, "First torus parameter")->required();
    sub->add_option("-q", opt.q, "Second torus parameter")->required();
    set(sub, cmd_staircase);
  }
  set(add_knot(add_common(app.add_subcommand(
          "invariants", "Summary invariants: genus, tau, upsilon(1), signature extrema"))),
      cmd_invariants);
  set(add_knot(add_common(app.add_subcommand(
          "bounds", "Detailed four-genus lower/upper bound certificates"))),
      cmd_bounds);
  {
    CLI::App* sub = add_knot(add_common(
        app.add_subcommand("genus", "Certified four-genus (single knot or sweep)")));
    sub->add_option("--sweep", opt.sweep, "Weight grid a1..a2,b1..b2");
    sub->add_option("--k1", opt.k1, "First combination for sweeps");
    sub->add_option("--k2", opt.k2, "Second combination for sweeps");
    set(sub, cmd_genus);
  }
  {
    CLI::App* sub = add_common(app.add_subcommand(
        "litherland", "Four-genus of a*T(2,k) # -b*T(2,l) via the signature recursion"));
    sub->add_option("-a", opt.a, "Weight of T(2,k)")->required();
    sub->add_option("-k", opt.k, "Odd parameter k")->required();
    sub->add_option("-b", opt.b, "Weight of -T(2,l)")->required();
    sub->add_option("-l", opt.l, "Odd parameter l")->required();
    set(sub, cmd_litherland);
  }
  {
    CLI::App* sub = add_common(app.add_subcommand(
        "profile", "Stable four-genus profiles of x*K1 + (1-x)*K2 mixtures"));
    sub->add_option("--k1", opt.k1, "First combination")->required();
    sub->add_option("--k2", opt.k2, "Second combination")->required();
    set(sub, cmd_profile);
  }
  set(add_common(app.add_subcommand(
          "verify", "Run the full acceptance suite; nonzero exit on any failure")),
      cmd_verify);

  try {
    app.parse(argc, argv);
    return handler(opt);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_object("usage", e.what()).dump() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    json j = error_object("parse", e.what());
    j["error"]["position"] = e.position();
    std::cerr << j.dump() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_object("invalid-input", e.what()).dump() << "\n";
    return kExitUsage;
  } catch (const near_singular_error& e) {
    std::cerr << error_object("verification", e.what()).dump() << "\n";
    return kExitVerification;
  } catch (const std::logic_error& e) {
    std::cerr << error_object("internal", e.what()).dump() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << error_object("internal", e.what()).dump() << "\n";
    return kExitInternal;
  }
}
