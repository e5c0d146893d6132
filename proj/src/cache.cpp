#include "tkg/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <json.hpp>

#include "tkg/serialize.hpp"
#include "tkg/torus_knot.hpp"

namespace tkg {

namespace fs = std::filesystem;
using nlohmann::json;

KnotData compute_knot_data(long long p, long long q) {
  const TorusKnot k(p, q);
  const SemigroupSequence s = semigroup(k.p, k.q);
  return KnotData{k.p, k.q, s, staircase(s), upsilon_torus(k.p, k.q), sig_torus(k.p, k.q)};
}

namespace {

fs::path cache_file(const std::string& dir, long long p, long long q) {
  return fs::path(dir) / ("T_" + std::to_string(p) + "_" + std::to_string(q) + ".json");
}

std::optional<KnotData> load(const fs::path& file, long long p, long long q) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("p").get<long long>() != p || j.at("q").get<long long>() != q) return std::nullopt;

    SemigroupSequence sg(j.at("semigroup").get<std::vector<long long>>());

    Staircase st;
    for (const auto& pt : j.at("staircase").at("points"))
      st.points.emplace_back(pt.at("x").get<long long>(),
                             Rational::parse(pt.at("y").get<std::string>()));

    std::vector<Rational> ts, ys;
    for (const auto& pt : j.at("upsilon").at("points")) {
      ts.push_back(Rational::parse(pt.at("t").get<std::string>()));
      ys.push_back(Rational::parse(pt.at("y").get<std::string>()));
    }
    PiecewiseLinear ups = PiecewiseLinear::from_knots(std::move(ts), std::move(ys));

    std::vector<std::pair<Rational, long long>> jumps;
    for (const auto& jm : j.at("sig").at("jumps"))
      jumps.emplace_back(Rational::parse(jm.at("t").get<std::string>()),
                         jm.at("delta").get<long long>());
    StepFunction sig =
        StepFunction::from_jumps(j.at("sig").at("initial").get<long long>(), std::move(jumps));

    return KnotData{p, q, std::move(sg), std::move(st), std::move(ups), std::move(sig)};
  } catch (...) {
    return std::nullopt;
  }
}

void store(const fs::path& file, const KnotData& d) {
  try {
    fs::create_directories(file.parent_path());
    json j{{"p", d.p},
           {"q", d.q},
           {"semigroup", semigroup_json(d.semigroup)},
           {"staircase", staircase_json(d.staircase)},
           {"upsilon", pl_json(d.upsilon)},
           {"sig", step_json(d.sig)}};
    const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      out << j.dump(2) << "\n";
      if (!out) {
        fs::remove(tmp);
        return;
      }
    }
    fs::rename(tmp, file);  // atomic publish
  } catch (...) {
    // a cold cache is always acceptable
  }
}

}  // namespace

KnotData load_or_compute(long long p, long long q, const std::string& cache_dir) {
  const TorusKnot k(p, q);
  if (cache_dir.empty()) return compute_knot_data(k.p, k.q);
  const fs::path file = cache_file(cache_dir, k.p, k.q);
  if (auto hit = load(file, k.p, k.q)) return std::move(*hit);
  KnotData fresh = compute_knot_data(k.p, k.q);
  store(file, fresh);
  return fresh;
}

std::string default_cache_dir() {
  const char* env = std::getenv("TKGENUS_CACHE");
  return env ? std::string(env) : std::string();
}

}  // namespace tkg
