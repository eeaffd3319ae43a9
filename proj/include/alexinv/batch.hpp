#pragma once

// Census processing: reading knot tables, running them through a worker pool,
// writing result tables, and grouping timings by crossing number.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "alexinv/invariants.hpp"
#include "alexinv/knotdiag.hpp"
#include "alexinv/serialize.hpp"

namespace alexinv {

struct KnotRow {
  std::string name;
  std::string pd;
};

struct BatchRecord {
  std::string name;
  std::string pd;
  std::optional<AlexanderInvariants> result;
  std::string error;  // empty on success
  double elapsed = 0.0;

  bool ok() const noexcept { return result.has_value(); }
};

struct BatchSummary {
  std::size_t count = 0;
  std::size_t failures = 0;
  std::size_t ambiguous = 0;
  double total_seconds = 0.0;

  double knots_per_second() const { return total_seconds > 0 ? static_cast<double>(count) / total_seconds : 0.0; }
};

/// Unreadable or structurally broken input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// CSV (RFC 4180)

/// Records of a CSV stream. Quoted fields may contain commas, doubled quotes and newlines.
inline std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char ch;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
    any = false;
  };
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"') quoted = true;
    else if (ch == ',') end_field();
    else if (ch == '\n') end_row();
    else if (ch != '\r') field.push_back(ch);
  }
  if (quoted) throw InputError("unterminated quoted CSV field");
  if (any) end_row();
  return rows;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline bool is_jsonl_path(const std::string& path) {
  return has_suffix(path, ".jsonl") || has_suffix(path, ".ndjson") || has_suffix(path, ".json");
}

inline std::vector<KnotRow> read_knots_csv(std::istream& in) {
  auto rows = read_csv(in);
  if (rows.empty()) throw InputError("CSV input has no header row");
  const auto& header = rows.front();
  auto column = [&](const std::string& key) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), key);
    if (it == header.end()) throw InputError("CSV header lacks a '" + key + "' column");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t ni = column("name"), pi = column("pd");
  std::vector<KnotRow> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    KnotRow k;
    if (ni < row.size()) k.name = row[ni];
    if (pi < row.size()) k.pd = row[pi];
    out.push_back(std::move(k));
  }
  return out;
}

/// One object per line with string keys "name" and "pd" (pd may also be a JSON array).
inline std::vector<KnotRow> read_knots_jsonl(std::istream& in) {
  std::vector<KnotRow> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json v;
    try {
      v = json::parse(line);
    } catch (const json::exception& ex) {
      throw InputError("line " + std::to_string(lineno) + ": " + ex.what());
    }
    if (!v.is_object() || !v.contains("pd")) throw InputError("line " + std::to_string(lineno) + ": expected an object with a 'pd' key");
    KnotRow k;
    if (v.contains("name") && v["name"].is_string()) k.name = v["name"].get<std::string>();
    k.pd = v["pd"].is_string() ? v["pd"].get<std::string>() : v["pd"].dump();
    out.push_back(std::move(k));
  }
  return out;
}

/// CSV unless the extension is .jsonl, .ndjson or .json.
inline std::vector<KnotRow> read_knots(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return is_jsonl_path(path) ? read_knots_jsonl(in) : read_knots_csv(in);
}

// ---------------------------------------------------------------------------
// Processing

inline BatchRecord process_knot(const KnotRow& row, Policy policy) {
  BatchRecord rec{row.name, row.pd, std::nullopt, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.result = compute_invariants(parse_pd(row.pd), policy);
  } catch (const std::exception& ex) {
    rec.error = ex.what();
  }
  rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

inline unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Records in input order regardless of `jobs`.
inline std::vector<BatchRecord> run_batch(const std::vector<KnotRow>& rows, Policy policy, unsigned jobs = default_jobs()) {
  std::vector<BatchRecord> out(rows.size());
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) out[i] = process_knot(rows[i], policy);
  };
  if (jobs == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

inline BatchSummary summarize(const std::vector<BatchRecord>& records, double wall_seconds) {
  BatchSummary s;
  s.count = records.size();
  s.total_seconds = wall_seconds;
  for (const auto& r : records) {
    if (!r.ok()) ++s.failures;
    else if (!r.result->ambiguous_phis.empty()) ++s.ambiguous;
  }
  return s;
}

inline std::string summary_line(const BatchSummary& s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << "knots: " << s.count << ", failures: " << s.failures
     << ", ambiguous: " << s.ambiguous << ", total: " << s.total_seconds << " s, rate: " << std::setprecision(1)
     << s.knots_per_second() << " knots/s";
  return os.str();
}

inline std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::setprecision(6) << s;
  return os.str();
}

// ---------------------------------------------------------------------------
// Output

inline const char* batch_csv_header() { return "name,delta,Delta,ambiguous,method,elapsed,error"; }

inline void write_batch_csv(const std::vector<BatchRecord>& records, std::ostream& out) {
  out << batch_csv_header() << '\n';
  for (const auto& r : records) {
    out << csv_field(r.name) << ',';
    if (r.ok()) {
      out << csv_field(to_json(r.result->delta)) << ',' << csv_field(to_json(r.result->higher)) << ','
          << csv_field(to_json(r.result->ambiguous_phis)) << ',' << to_string(r.result->method);
    } else {
      out << ",,,";
    }
    out << ',' << format_seconds(r.elapsed) << ',' << csv_field(r.error) << '\n';
  }
}

/// {"name":...,"delta":...,"Delta":...,"ambiguous":...,"method":...,"elapsed":...,"error":...}
inline void write_batch_jsonl(const std::vector<BatchRecord>& records, std::ostream& out) {
  for (const auto& r : records) {
    out << "{\"name\":" << json(r.name).dump();
    if (r.ok()) {
      out << ",\"delta\":" << to_json(r.result->delta) << ",\"Delta\":" << to_json(r.result->higher)
          << ",\"ambiguous\":" << to_json(r.result->ambiguous_phis) << ",\"method\":\"" << to_string(r.result->method)
          << "\"";
    } else {
      out << ",\"delta\":null,\"Delta\":null,\"ambiguous\":null,\"method\":null";
    }
    out << ",\"elapsed\":" << format_seconds(r.elapsed) << ",\"error\":" << (r.ok() ? "null" : json(r.error).dump())
        << "}\n";
  }
}

inline void write_batch(const std::vector<BatchRecord>& records, std::ostream& out, bool jsonl) {
  if (jsonl) write_batch_jsonl(records, out);
  else write_batch_csv(records, out);
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchGroup {
  std::size_t crossings = 0;
  std::size_t knots = 0;
  std::size_t failures = 0;
  double fast_avg = 0.0;                 // seconds per knot
  std::optional<double> oracle_avg;      // with --compare
  std::optional<double> speedup() const {
    if (!oracle_avg || fast_avg <= 0) return std::nullopt;
    return *oracle_avg / fast_avg;
  }
};

struct BenchReport {
  Policy policy = Policy::fast;
  std::vector<BenchGroup> groups;  // ascending crossing number
  /// Per-knot time of `policy` increases with crossing number across groups.
  bool monotone = true;
};

/// Crossing count of a PD string without validating it; nullopt if unparseable.
inline std::optional<std::size_t> crossing_count(const std::string& pd) {
  try {
    return detail::PDScanner(pd).parse().size();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace detail {

inline double average_elapsed(const std::vector<BatchRecord>& recs) {
  if (recs.empty()) return 0.0;
  double total = 0;
  for (const auto& r : recs) total += r.elapsed;
  return total / static_cast<double>(recs.size());
}

}  // namespace detail

/// Rows are grouped by crossing number and timed sequentially so that per-knot
/// times are not distorted by contention. The whole table is run `repeats`
/// times in rounds and each knot keeps its fastest run, so a burst of
/// background load does not land on a single group.
inline BenchReport run_bench(const std::vector<KnotRow>& rows, Policy policy, bool compare, unsigned repeats = 3) {
  std::map<std::size_t, std::vector<KnotRow>> groups;
  for (const auto& r : rows) {
    const auto c = crossing_count(r.pd);
    groups[c.value_or(0)].push_back(r);
  }
  auto best_of = [&](Policy p) {
    std::map<std::size_t, std::vector<BatchRecord>> best;
    for (unsigned k = 0; k < std::max(repeats, 1U); ++k)
      for (const auto& [c, members] : groups) {
        auto recs = run_batch(members, p, 1);
        auto [it, fresh] = best.try_emplace(c, std::move(recs));
        if (fresh) continue;
        for (std::size_t i = 0; i < recs.size(); ++i) it->second[i].elapsed = std::min(it->second[i].elapsed, recs[i].elapsed);
      }
    return best;
  };
  const auto fast = best_of(policy);
  std::map<std::size_t, std::vector<BatchRecord>> oracle;
  if (compare) oracle = best_of(Policy::oracle_only);

  BenchReport rep;
  rep.policy = policy;
  for (const auto& [c, recs] : fast) {
    BenchGroup g;
    g.crossings = c;
    g.knots = recs.size();
    for (const auto& r : recs) g.failures += r.ok() ? 0 : 1;
    g.fast_avg = detail::average_elapsed(recs);
    if (compare) g.oracle_avg = detail::average_elapsed(oracle.at(c));
    rep.groups.push_back(g);
  }
  for (std::size_t i = 1; i < rep.groups.size(); ++i)
    if (rep.groups[i].fast_avg <= rep.groups[i - 1].fast_avg) rep.monotone = false;
  return rep;
}

inline std::string render_bench(const BenchReport& rep) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "crossings" << std::setw(8) << "knots" << std::setw(10) << "failures"
     << std::setw(16) << "avg s/knot" << std::setw(12) << "knots/s";
  const bool compare = std::any_of(rep.groups.begin(), rep.groups.end(), [](const BenchGroup& g) { return g.oracle_avg.has_value(); });
  if (compare) os << std::setw(16) << "oracle s/knot" << "speedup";
  os << '\n';
  for (const auto& g : rep.groups) {
    os << std::left << std::setw(10) << g.crossings << std::setw(8) << g.knots << std::setw(10) << g.failures
       << std::setw(16) << format_seconds(g.fast_avg) << std::setw(12)
       << (g.fast_avg > 0 ? format_seconds(1.0 / g.fast_avg) : std::string("-"));
    if (compare) {
      os << std::setw(16) << (g.oracle_avg ? format_seconds(*g.oracle_avg) : std::string("-"));
      const auto s = g.speedup();
      os << (s ? format_seconds(*s) + "x" : std::string("-"));
    }
    os << '\n';
  }
  os << "policy: " << to_string(rep.policy) << '\n';
  os << "monotone: " << (rep.monotone ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace alexinv
