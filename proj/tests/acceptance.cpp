// Acceptance run: one PASS/FAIL line per criterion, thresholds fixed below.
//
//   acceptance [--known-red N,...]
//
// Exit status is 0 when every failing criterion is listed in --known-red.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace alexinv;
using testsupport::P;
using testsupport::phi1;
using testsupport::phi2;

namespace {

constexpr double kExampleSeconds = 1.0;     // criterion 1
constexpr double kTableSeconds = 10.0;      // criterion 2
constexpr std::size_t kMinSmallKnots = 20;  // criterion 5
constexpr double kMinKnotsPerSecond = 50.0; // criterion 8
constexpr double kMinSpeedup = 10.0;        // criterion 8
constexpr int kUnimodularTrials = 100;      // criterion 9

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass;
  std::string detail;
};

IntPoly lin(long a, long b) { return P({b, a}); }  // a t + b
IntPoly quart(long a, long b, long c) { return P({a, b, c, b, a}); }

/// Delta_1 and Delta_2 as printed in the table of prime knots with nontrivial Delta_2.
std::vector<std::tuple<std::string, IntPoly, IntPoly>> printed_table() {
  const IntPoly f = phi1(), g = phi2(), f2 = f * f;
  const IntPoly q3 = quart(1, -3, 3), q5 = quart(1, -3, 5);
  const IntPoly h = P({2, -3, 2});
  return {
      {"8_18", g * f2, f},
      {"9_40", f * g * g, g},
      {"10_98", lin(1, -2) * lin(2, -1) * f2, f},
      {"10_99", f2 * f2, f2},
      {"10_123", q3 * q3, q3},
      {"11a_43", P({4, -7, 4}) * f2, f},
      {"11a_44", f2 * q5, f},
      {"11a_47", f2 * q5, f},
      {"11a_57", f2 * q3, f},
      {"11a_231", f2 * q3, f},
      {"11a_263", f2 * quart(2, -2, 1), f},
      {"11a_297", h * g * g, g},
      {"11a_332", f2 * quart(1, -5, 9), f},
      {"11n_71", h * f2, f},
      {"11n_72", lin(1, -2) * lin(2, -1) * f2, f},
      {"11n_73", f2, f},
      {"11n_74", f2, f},
      {"11n_75", h * f2, f},
      {"11n_76", f2 * quart(1, -1, 1), f},
      {"11n_77", f2 * quart(1, 1, -3), f},
      {"11n_78", f2 * quart(1, -1, 1), f},
      {"11n_81", f2 * quart(1, -1, -1), f},
      {"11n_164", g * f2, f},
  };
}

Verdict criterion1() {
  const PDCode pd = testsupport::pd_of("table1.csv", "8_18");
  const auto t0 = Clock::now();
  const auto inv = compute_invariants(pd);
  const double s = seconds_since(t0);
  const bool ok = inv.Delta(1) == normalize_delta(phi1() * phi1() * phi2()) && inv.Delta(2) == phi1() &&
                  inv.Delta(3) == P({1});
  std::ostringstream os;
  os << "8_18 Delta_1 = " << to_factored(inv.Delta(1)) << ", Delta_2 = " << to_factored(inv.Delta(2)) << ", " << s
     << " s (limit " << kExampleSeconds << " s)";
  return {ok && s < kExampleSeconds, os.str()};
}

Verdict criterion2() {
  const auto pds = testsupport::load_map("table1.csv");
  const auto t0 = Clock::now();
  std::size_t matched = 0;
  std::string bad;
  const auto table = printed_table();
  for (const auto& [name, d1, d2] : table) {
    const auto it = pds.find(name);
    if (it == pds.end()) {
      bad += " " + name + "(missing)";
      continue;
    }
    const auto inv = compute_invariants(parse_pd(it->second));
    if (inv.Delta(1) == normalize_delta(d1) && inv.Delta(2) == normalize_delta(d2) && inv.Delta(3) == P({1})) ++matched;
    else bad += " " + name;
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << matched << "/" << table.size() << " knots match, " << s << " s (limit " << kTableSeconds << " s)";
  if (!bad.empty()) os << "; mismatched:" << bad;
  return {matched == table.size() && table.size() == 23 && s < kTableSeconds, os.str()};
}

Verdict criterion3() {
  const auto pds = testsupport::load_map("exceptions.csv");
  bool ok = true;
  std::ostringstream os;
  const std::vector<std::pair<std::string, IntPoly>> want = {
      {"10_99", phi1() * phi1()}, {"12n_508", phi1()}, {"12n_604", phi1()}, {"12n_666", phi1()}};
  for (const auto& [name, d2] : want) {
    const auto inv = compute_invariants(parse_pd(pds.at(name)), Policy::fast);
    const bool good = inv.Delta(2) == d2 && inv.method == Method::fast && inv.ambiguous_phis.empty();
    ok = ok && good;
    os << name << ": Delta_2 = " << to_factored(inv.Delta(2)) << (good ? "" : " (wrong)") << "; ";
  }
  os << "policy fast, no Smith form";
  return {ok, os.str()};
}

Verdict criterion4() {
  const auto inv = compute_invariants(testsupport::pd_of("k14a1975.csv", "14a_1975"));
  const bool ok = inv.Delta(1) == P({5, -9, 5}) * pow(phi1(), 3) && inv.Delta(2) == phi1() * phi1() &&
                  inv.Delta(3) == phi1() && inv.Delta(4) == P({1});
  std::ostringstream os;
  os << "Delta_1 = " << to_factored(inv.Delta(1)) << ", Delta_2 = " << to_factored(inv.Delta(2))
     << ", Delta_3 = " << to_factored(inv.Delta(3));
  return {ok, os.str()};
}

Verdict criterion5() {
  std::size_t n = 0, differ = 0;
  for (const char* file : {"le10.csv", "table1.csv", "exceptions.csv"}) {
    for (const auto& row : testsupport::load(file)) {
      const PDCode pd = parse_pd(row.pd);
      if (pd.size() > 10) continue;
      const auto a = alexander_matrix(pd);
      const auto fast = compute_invariants(a, Policy::fast_with_fallback);
      const auto oracle = compute_invariants(a, Policy::oracle_only);
      ++n;
      if (fast.delta != oracle.delta || fast.higher != oracle.higher) ++differ;
    }
  }
  std::ostringstream os;
  os << n << " knots with <= 10 crossings, " << differ << " differ";
  return {differ == 0 && n >= kMinSmallKnots, os.str()};
}

Verdict criterion6() {
  std::size_t knots = 0, violations = 0;
  std::string first;
  for (const char* file : {"le10.csv", "table1.csv", "exceptions.csv", "k14a1975.csv", "c12.csv", "mixed.csv"}) {
    for (const auto& row : testsupport::load(file)) {
      ++knots;
      const auto a = alexander_matrix(parse_pd(row.pd));
      const auto inv = compute_invariants(a);
      const IntPoly delta = normalize_delta(det_poly(a.matrix));
      bool ok = true;
      IntPoly prod = P({1});
      for (std::size_t i = 0; i < inv.r(); ++i) {
        prod *= inv.delta[i];
        if (i + 1 < inv.r() && !exact_divide(inv.delta[i], inv.delta[i + 1])) ok = false;
        for (const IntPoly* p : {&inv.delta[i], &inv.higher[i]})
          if (abs(p->eval(Integer(1))) != 1 || !is_symmetric(*p)) ok = false;
      }
      if (normalize_delta(prod) != delta) ok = false;
      for (const auto& pp : inv.partitions) {
        unsigned sum = 0;
        for (unsigned d : pp.parts) sum += d;
        if (sum != multiplicity(delta, pp.phi)) ok = false;
        if (pp.parts.size() != nullity_over_field(reduce_matrix(a.matrix, make_number_field(pp.phi)))) ok = false;
      }
      if (!ok) {
        ++violations;
        if (first.empty()) first = row.name;
      }
    }
  }
  std::ostringstream os;
  os << knots << " knots checked, " << violations << " with violations";
  if (!first.empty()) os << " (first: " << first << ")";
  return {violations == 0, os.str()};
}

Verdict criterion7() {
  std::size_t pairs = 0, non_unique = 0;
  for (unsigned r = 1; r <= 6; ++r)
    for (unsigned d1 = 1; d1 <= 6; ++d1) {
      const auto parts = partitions_with(6, r, d1);
      if (parts.empty()) continue;
      ++pairs;
      if (parts.size() != 1) ++non_unique;
    }
  std::size_t total = 0;
  for (unsigned r = 1; r <= 6; ++r) total += partitions_with(6, r).size();
  const bool amb = std::holds_alternative<Ambiguous>(resolve_partition({phi1(), 7, 3, 3U}));
  std::ostringstream os;
  os << total << " partitions of 6, " << pairs << " feasible (r, d1) pairs, " << non_unique
     << " non-unique; (7, 3, 3) " << (amb ? "ambiguous" : "resolved");
  return {non_unique == 0 && total == 11 && amb, os.str()};
}

Verdict criterion8() {
  const auto c12 = testsupport::load("c12.csv");
  auto time_all = [&](Policy p) {
    const auto t0 = Clock::now();
    for (const auto& row : c12) compute_invariants(parse_pd(row.pd), p);
    return seconds_since(t0);
  };
  time_all(Policy::fast);  // warm-up
  const double fast = time_all(Policy::fast);
  const double oracle = time_all(Policy::oracle_only);
  const double rate = static_cast<double>(c12.size()) / fast;
  const double speedup = oracle / fast;
  const auto rep = run_bench(testsupport::load("mixed.csv"), Policy::fast, false, 5);
  std::ostringstream os;
  os.precision(3);
  os << "c12: " << rate << " knots/s (min " << kMinKnotsPerSecond << "), speedup over oracle " << speedup << "x (min "
     << kMinSpeedup << "x); mixed per-knot time by crossings:";
  for (const auto& g : rep.groups) os << " " << g.crossings << ":" << g.fast_avg * 1e6 << "us";
  os << (rep.monotone ? " increasing" : " not increasing");
  return {rate >= kMinKnotsPerSecond && speedup >= kMinSpeedup && rep.monotone, os.str()};
}

Verdict criterion9() {
  std::mt19937_64 rng(20240);
  std::vector<std::pair<std::string, PolyMatrix>> small;
  for (const auto& row : testsupport::load("le10.csv")) {
    const PDCode pd = parse_pd(row.pd);
    if (pd.size() >= 3 && pd.size() <= 8) small.emplace_back(row.name, alexander_matrix(pd).matrix);
  }
  small.emplace_back("8_18", alexander_matrix(testsupport::pd_of("table1.csv", "8_18")).matrix);
  int checked = 0, changed = 0;
  for (int k = 0; k < kUnimodularTrials; ++k) {
    const auto& [name, m] = small[k % 2 == 0 ? small.size() - 1 : rng() % small.size()];
    const IntPoly delta = normalize_delta(det_poly(m));
    const auto fz = factor(delta);
    const auto u = testsupport::random_unimodular(rng, m.rows(), 6);
    const auto v = testsupport::random_unimodular(rng, m.rows(), 6);
    const PolyMatrix x = testsupport::mul(testsupport::mul(u, m), v);
    for (const auto& fp : fz.factors) {
      ++checked;
      if (inv_denominator_multiplicity(m, fp.factor, fp.exponent) != inv_denominator_multiplicity(x, fp.factor, fp.exponent))
        ++changed;
    }
  }
  std::ostringstream os;
  os << kUnimodularTrials << " transforms, " << checked << " (matrix, phi) pairs, " << changed << " changed";
  return {changed == 0 && checked >= kUnimodularTrials, os.str()};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--known-red") known_red = parse_list(argv[i + 1]);

  const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Verdict v{false, {}};
    try {
      v = criteria[i]();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    const bool tolerated = !v.pass && known_red.count(id);
    std::printf("criterion %d: %s  %s%s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                tolerated ? "  [known red]" : "");
    std::fflush(stdout);
    if (!v.pass && !tolerated) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
