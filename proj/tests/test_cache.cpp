#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "tkg/cache.hpp"
#include "tkg/serialize.hpp"

using namespace tkg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tkg-cache-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

std::string knot_fingerprint(const KnotData& d) {
  return semigroup_json(d.semigroup).dump() + staircase_json(d.staircase).dump() +
         pl_json(d.upsilon).dump() + step_json(d.sig).dump();
}

}  // namespace

TEST_CASE("cache round-trips exactly and hits on the second read") {
  TempDir dir;
  const KnotData fresh = load_or_compute(3, 11, dir.path.string());
  const fs::path file = dir.path / "T_3_11.json";
  REQUIRE(fs::exists(file));
  const KnotData cached = load_or_compute(3, 11, dir.path.string());
  CHECK(knot_fingerprint(fresh) == knot_fingerprint(cached));
  CHECK(knot_fingerprint(fresh) == knot_fingerprint(compute_knot_data(3, 11)));
}

TEST_CASE("cache misses recompute without touching correctness") {
  TempDir dir;
  const std::string with_cache = knot_fingerprint(load_or_compute(5, 6, dir.path.string()));
  const std::string without = knot_fingerprint(load_or_compute(5, 6, ""));
  CHECK(with_cache == without);
}

TEST_CASE("corrupted cache entries are recomputed, not trusted") {
  TempDir dir;
  load_or_compute(3, 4, dir.path.string());
  const fs::path file = dir.path / "T_3_4.json";
  REQUIRE(fs::exists(file));

  auto corrupt_with = [&](const std::string& text) {
    std::ofstream(file, std::ios::trunc) << text;
    const KnotData d = load_or_compute(3, 4, dir.path.string());
    CHECK(knot_fingerprint(d) == knot_fingerprint(compute_knot_data(3, 4)));
  };
  corrupt_with("this is not json");
  corrupt_with("{\"p\": 3}");
  corrupt_with("{\"p\": 5, \"q\": 6}");  // wrong knot in the right shape
  corrupt_with("");
}

TEST_CASE("the cache file itself is byte-stable across rewrites") {
  TempDir dir;
  load_or_compute(2, 7, dir.path.string());
  const fs::path file = dir.path / "T_2_7.json";
  std::ifstream in1(file, std::ios::binary);
  const std::string first((std::istreambuf_iterator<char>(in1)), {});
  fs::remove(file);
  load_or_compute(2, 7, dir.path.string());
  std::ifstream in2(file, std::ios::binary);
  const std::string second((std::istreambuf_iterator<char>(in2)), {});
  CHECK(first == second);
  CHECK(!first.empty());
  CHECK(first.back() == '\n');
}

TEST_CASE("parameter order does not split cache entries") {
  TempDir dir;
  load_or_compute(7, 2, dir.path.string());
  CHECK(fs::exists(dir.path / "T_2_7.json"));
  CHECK(!fs::exists(dir.path / "T_7_2.json"));
}
