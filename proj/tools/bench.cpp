#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hitsets/arena.hpp"
#include "hitsets/disc.hpp"

using namespace hitsets;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<RatPoint> bench_disc_points(int n) {
  std::mt19937_64 rng(7);
  std::set<std::pair<long long, long long>> grid;
  while (static_cast<int>(grid.size()) < n)
    grid.insert({static_cast<long long>(rng() % 32), static_cast<long long>(rng() % 32)});
  std::vector<RatPoint> pts;
  for (const auto& [gx, gy] : grid) pts.push_back(RatPoint{Rational(gx, 8), Rational(gy, 8)});
  return pts;
}

bool same_instance(const DiscInstance& a, const DiscInstance& b) {
  if (a.offset_x != b.offset_x || a.offset_y != b.offset_y) return false;
  if (a.tiles.size() != b.tiles.size()) return false;
  for (auto ia = a.tiles.begin(), ib = b.tiles.begin(); ia != a.tiles.end(); ++ia, ++ib) {
    if (ia->first.i != ib->first.i || ia->first.j != ib->first.j) return false;
    if (ia->second.sites != ib->second.sites) return false;
    for (int tau = 0; tau < 4; ++tau) {
      const TileTypeData& ta = ia->second.types[static_cast<size_t>(tau)];
      const TileTypeData& tb = ib->second.types[static_cast<size_t>(tau)];
      if (ta.extreme != tb.extreme || ta.ranking.colors != tb.ranking.colors) return false;
    }
  }
  return true;
}

struct Row {
  std::string name;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool match = false;
};

void print_row(const Row& r) {
  std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", r.name.c_str(), r.serial_ms,
              r.parallel_ms, r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
              r.match ? "match" : "MISMATCH");
}

Row bench_disc_preprocess() {
  std::vector<RatPoint> pts = bench_disc_points(48);
  auto t0 = std::chrono::steady_clock::now();
  DiscInstance serial = DiscInstance::make(pts, ExecMode::serial);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  DiscInstance parallel = DiscInstance::make(pts, ExecMode::parallel);
  double t_parallel = ms_since(t0);
  return Row{"disc preprocessing n=48", t_serial, t_parallel, same_instance(serial, parallel)};
}

Row bench_sandwich() {
  auto t0 = std::chrono::steady_clock::now();
  SandwichResult serial = theorem_sandwich_sweep(4, ExecMode::serial);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  SandwichResult parallel = theorem_sandwich_sweep(4, ExecMode::parallel);
  double t_parallel = ms_since(t0);
  bool match = serial.instances == parallel.instances &&
               serial.separable == parallel.separable && serial.ok == parallel.ok;
  return Row{"sandwich sweep n<=4", t_serial, t_parallel, match};
}

Row bench_embedding() {
  auto t0 = std::chrono::steady_clock::now();
  bool serial = parabola_embedding_check(64, ExecMode::serial);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  bool parallel = parabola_embedding_check(64, ExecMode::parallel);
  double t_parallel = ms_since(t0);
  return Row{"parabola embedding n=64", t_serial, t_parallel, serial == parallel && serial};
}

Row bench_halfplane_corpus() {
  const size_t cases = 40;
  auto run_case = [](size_t i) {
    HalfPlaneCase c = random_halfplane_case(100 + i, 60, 40);
    HalfPlaneEngine engine(c.instance);
    FixedSource<HalfPlaneQuery> source(c.queries);
    Transcript<HalfPlaneQuery> t = run_game(engine, source);
    RatioReport rep = ratio_report(t, static_cast<int>(c.instance.points.size()));
    return std::pair<int, int>{rep.alg_size, rep.opt_size};
  };
  std::vector<std::pair<int, int>> serial(cases), parallel(cases);
  auto t0 = std::chrono::steady_clock::now();
  for (size_t i = 0; i < cases; ++i) serial[i] = run_case(i);
  double t_serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  for_each_index(cases, ExecMode::parallel, [&](size_t i) { parallel[i] = run_case(i); });
  double t_parallel = ms_since(t0);
  return Row{"half-plane corpus k=40", t_serial, t_parallel, serial == parallel};
}

}  // namespace

int main() {
  std::printf("%-28s %13s %13s %7s   %s\n", "kernel", "serial", "parallel", "speedup",
              "result");
  Row rows[] = {bench_disc_preprocess(), bench_sandwich(), bench_embedding(),
                bench_halfplane_corpus()};
  bool ok = true;
  for (const Row& r : rows) {
    print_row(r);
    ok = ok && r.match;
  }
  if (!ok) {
    std::printf("serial and parallel kernels disagree\n");
    return 1;
  }
  return 0;
}
