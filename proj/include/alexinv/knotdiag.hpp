#pragma once

// Planar-diagram codes, their Wirtinger presentation, and the Alexander
// matrix obtained from it by Fox calculus.
//
// A PD crossing (a, b, c, d) lists the four incident edge labels
// counterclockwise starting from the incoming under-strand, so the
// under-strand runs a -> c and the over-strand joins b and d.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alexinv/exactla.hpp"
#include "alexinv/polyring.hpp"

namespace alexinv {

class PDError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PDCode {
  std::vector<std::array<long, 4>> crossings;

  std::size_t size() const noexcept { return crossings.size(); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

struct WirtingerRelation {
  std::size_t over;      // j
  std::size_t under_in;  // i
  std::size_t under_out; // k
  int sign;              // +1 or -1
  friend bool operator==(const WirtingerRelation&, const WirtingerRelation&) = default;
};

struct WirtingerData {
  std::size_t generators = 0;
  std::vector<WirtingerRelation> relations;
};

struct AlexanderMatrix {
  PolyMatrix matrix;
  std::size_t deleted_row = 0;
  std::size_t deleted_col = 0;
};

namespace detail {

inline std::string join_labels(const std::vector<long>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(labels[i]);
  }
  return out;
}

class PDScanner {
 public:
  explicit PDScanner(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  PDCode parse() {
    PDCode pd;
    bool mathematica = false;
    if (s_.rfind("PD", 0) == 0) {
      pos_ = 2;
      mathematica = true;
    }
    expect('[');
    if (peek() == ']') {
      ++pos_;
      finish();
      return pd;
    }
    while (true) {
      if (mathematica) expect('X');
      const char open = next();
      if (open != '[' && open != '(') fail("expected '[' or '(' to open a crossing tuple");
      const char close = open == '[' ? ']' : ')';
      std::vector<long> tuple;
      while (true) {
        tuple.push_back(integer());
        const char ch = next();
        if (ch == close) break;
        if (ch != ',') fail("expected ',' or closing bracket inside crossing tuple");
      }
      if (tuple.size() != 4)
        throw PDError("crossing " + std::to_string(pd.size() + 1) + " has " + std::to_string(tuple.size()) +
                      " labels; PD tuples must have exactly 4");
      pd.crossings.push_back({tuple[0], tuple[1], tuple[2], tuple[3]});
      const char ch = next();
      if (ch == ']') break;
      if (ch != ',') fail("expected ',' or ']' between crossing tuples");
    }
    finish();
    return pd;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char next() {
    if (pos_ >= s_.size()) fail("unexpected end of PD code");
    return s_[pos_++];
  }
  void expect(char ch) {
    if (next() != ch) fail(std::string("expected '") + ch + "'");
  }
  void finish() {
    if (pos_ != s_.size()) fail("trailing characters after PD code");
  }
  long integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      fail("expected an integer label");
    return std::stol(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PDError("malformed PD code at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

/// Orientation of each crossing's over-strand: true when it runs d -> b.
/// Walks the diagram from the outgoing under-strand of the first crossing.
/// Labels must already be known to lie in 1..2c and appear exactly twice.
inline std::vector<bool> over_runs_d_to_b(const PDCode& pd) {
  const std::size_t c = pd.size();
  // Both (crossing, slot) ends of each label.
  std::vector<std::array<std::pair<std::size_t, int>, 2>> where(2 * c + 1);
  std::vector<int> seen(2 * c + 1, 0);
  for (std::size_t x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) {
      const auto label = static_cast<std::size_t>(pd.crossings[x][static_cast<std::size_t>(s)]);
      where[label][static_cast<std::size_t>(seen[label]++)] = {x, s};
    }

  std::vector<int> over_entry(c, -1);
  std::size_t x = 0;
  int exit_slot = 2;
  std::size_t visited = 0;
  do {
    const long label = pd.crossings[x][static_cast<std::size_t>(exit_slot)];
    const auto& occ = where[static_cast<std::size_t>(label)];
    // The other end of this edge; for a kink both ends sit on one crossing.
    const auto other = (occ[0].first == x && occ[0].second == exit_slot) ? occ[1] : occ[0];
    x = other.first;
    const int entry = other.second;
    ++visited;
    if (entry == 2)
      throw PDError("inconsistent orientation: crossing " + std::to_string(x + 1) +
                    " is entered through its outgoing under-strand (label " + std::to_string(label) + ")");
    if (entry == 1 || entry == 3) {
      if (over_entry[x] != -1 && over_entry[x] != entry)
        throw PDError("inconsistent orientation of the over-strand at crossing " + std::to_string(x + 1));
      over_entry[x] = entry;
    }
    exit_slot = (entry + 2) % 4;
  } while (!(x == 0 && exit_slot == 2) && visited <= 2 * c);

  if (visited != 2 * c)
    throw PDError("PD code describes a link with more than one component (" + std::to_string(visited) + " of " +
                  std::to_string(2 * c) + " edges on the first component)");
  std::vector<bool> out(c);
  for (std::size_t i = 0; i < c; ++i) out[i] = over_entry[i] == 3;
  return out;
}

/// Label checks, then the orientation walk.
inline std::vector<bool> checked_orientation(const PDCode& pd) {
  const std::size_t c = pd.size();
  const long top = static_cast<long>(2 * c);
  std::vector<int> count(2 * c + 1, 0);
  bool in_range = true;
  for (const auto& x : pd.crossings)
    for (long l : x) {
      if (l < 1 || l > top) in_range = false;
      else ++count[static_cast<std::size_t>(l)];
    }
  if (!in_range || std::any_of(count.begin() + 1, count.end(), [](int n) { return n != 2; })) {
    std::map<long, int> all;
    for (const auto& x : pd.crossings)
      for (long l : x) ++all[l];
    std::vector<long> out_of_range, once, many;
    for (const auto& [label, n] : all) {
      if (label < 1 || label > top) out_of_range.push_back(label);
      if (n == 1) once.push_back(label);
      if (n > 2) many.push_back(label);
    }
    if (!once.empty()) throw PDError("labels " + join_labels(once) + " appear once; every label must appear exactly twice");
    if (!many.empty()) throw PDError("labels " + join_labels(many) + " appear more than twice");
    if (!out_of_range.empty())
      throw PDError("labels " + join_labels(out_of_range) + " fall outside 1.." + std::to_string(2 * c));
    throw PDError("some labels in 1.." + std::to_string(2 * c) + " are missing");
  }
  if (c == 0) return {};
  return over_runs_d_to_b(pd);
}

}  // namespace detail

/// Validates labels and connectivity. Throws PDError naming the offending labels or tuple.
inline void validate_pd(const PDCode& pd) { (void)detail::checked_orientation(pd); }

/// Accepts "[[a,b,c,d],...]" (tuples may also use parentheses) and
/// "PD[X(a,b,c,d),...]" / "PD[X[a,b,c,d],...]". Whitespace is ignored.
inline PDCode parse_pd(std::string_view text) {
  PDCode pd = detail::PDScanner(text).parse();
  validate_pd(pd);
  return pd;
}

inline std::string to_string(const PDCode& pd) {
  std::string out = "[";
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t s = 0; s < 4; ++s) {
      if (s) out += ",";
      out += std::to_string(pd.crossings[i][s]);
    }
    out += "]";
  }
  return out + "]";
}

/// One generator per over-arc, one relation per crossing. Arcs are numbered
/// by their smallest edge label.
inline WirtingerData wirtinger(const PDCode& pd) {
  const auto d_to_b = detail::checked_orientation(pd);
  const std::size_t c = pd.size();
  WirtingerData w;
  if (c == 0) return w;

  // Union-find over edge labels 1..2c; the over-strand edges b, d share an arc.
  std::vector<std::size_t> parent(2 * c + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& x : pd.crossings) {
    const std::size_t a = find(static_cast<std::size_t>(x[1])), b = find(static_cast<std::size_t>(x[3]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::size_t> arc_index;
  for (std::size_t l = 1; l <= 2 * c; ++l) {
    const std::size_t r = find(l);
    if (!arc_index.count(r)) arc_index.emplace(r, arc_index.size());
  }
  auto arc = [&](long label) { return arc_index.at(find(static_cast<std::size_t>(label))); };

  w.generators = arc_index.size();
  for (std::size_t i = 0; i < c; ++i) {
    const auto& x = pd.crossings[i];
    w.relations.push_back({arc(x[1]), arc(x[0]), arc(x[2]), d_to_b[i] ? +1 : -1});
  }
  return w;
}

/// Relation rows of the Fox Jacobian (crossings x arcs), before any deletion.
/// Positive crossing x_k = x_j x_i x_j^-1 gives (i: t, j: 1-t, k: -1);
/// negative crossing x_k = x_j^-1 x_i x_j gives, after scaling by t, (i: 1, j: t-1, k: -t).
inline PolyMatrix fox_matrix(const WirtingerData& w) {
  PolyMatrix m(w.relations.size(), w.generators, IntPoly{});
  const IntPoly t{Integer(0), Integer(1)}, one{Integer(1)};
  const IntPoly one_minus_t = one - t, t_minus_one = t - one, minus_one = -one, minus_t = -t;
  auto put = [&](std::size_t r, std::size_t c, const IntPoly& v) {
    if (m(r, c).is_zero()) m(r, c) = v;
    else m(r, c) += v;
  };
  for (std::size_t r = 0; r < w.relations.size(); ++r) {
    const auto& rel = w.relations[r];
    if (rel.sign > 0) {
      put(r, rel.under_in, t);
      put(r, rel.over, one_minus_t);
      put(r, rel.under_out, minus_one);
    } else {
      put(r, rel.under_in, one);
      put(r, rel.over, t_minus_one);
      put(r, rel.under_out, minus_t);
    }
  }
  return m;
}

/// Square Alexander matrix with the given relation row and generator column removed
/// (defaults: the last of each). The unknot diagram yields the 0x0 matrix.
inline AlexanderMatrix alexander_matrix(const PDCode& pd, std::optional<std::size_t> drop_row = std::nullopt,
                                        std::optional<std::size_t> drop_col = std::nullopt) {
  const WirtingerData w = wirtinger(pd);
  if (w.generators == 0) return {PolyMatrix(0, 0, IntPoly{}), 0, 0};
  const PolyMatrix full = fox_matrix(w);
  const std::size_t r = drop_row.value_or(full.rows() - 1);
  const std::size_t c = drop_col.value_or(full.cols() - 1);
  if (r >= full.rows() || c >= full.cols()) throw std::out_of_range("deleted row/column out of range");
  if (full.rows() != full.cols()) throw PDError("diagram has a different number of arcs and crossings");
  return {full.minor(r, c), r, c};
}

}  // namespace alexinv
