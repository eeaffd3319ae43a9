#pragma once

// JSON and human-readable renderings of polynomials, matrices and results.
//
// Coefficients are arbitrary-precision, so JSON numbers are read through a SAX
// handler that keeps the literal digits of integers too large for int64.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alexinv/factorint.hpp"
#include "alexinv/invariants.hpp"
#include "alexinv/polyring.hpp"

namespace alexinv {

using json = nlohmann::json;

namespace detail {

// Builds a json DOM; integer literals outside the int64/uint64 range are stored as strings.
class ExactJsonBuilder {
 public:
  json root;

  bool null() { return add(nullptr); }
  bool boolean(bool v) { return add(v); }
  bool number_integer(json::number_integer_t v) { return add(v); }
  bool number_unsigned(json::number_unsigned_t v) { return add(v); }
  bool number_float(json::number_float_t v, const json::string_t& text) {
    const bool integral = !text.empty() && text.find_first_of(".eE") == std::string::npos;
    return integral ? add(text) : add(v);
  }
  bool string(json::string_t& v) { return add(v); }
  bool binary(json::binary_t&) { return false; }
  bool start_object(std::size_t) {
    stack_.push_back(slot(json::object()));
    return true;
  }
  bool key(json::string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(slot(json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    throw std::invalid_argument(std::string("invalid JSON: ") + ex.what());
  }

 private:
  template <class V>
  bool add(V&& v) {
    slot(json(std::forward<V>(v)));
    return true;
  }
  json* slot(json v) {
    if (stack_.empty()) {
      root = std::move(v);
      return &root;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    json& s = top[key_];
    s = std::move(v);
    return &s;
  }

  std::vector<json*> stack_;
  std::string key_;
};

}  // namespace detail

/// Parses JSON keeping big integers exact (as digit strings).
inline json parse_exact_json(std::string_view text) {
  detail::ExactJsonBuilder b;
  json::sax_parse(text, &b);
  return std::move(b.root);
}

inline Integer integer_from_json(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
    return out;
  }
  throw std::invalid_argument("expected an integer coefficient, got " + v.dump());
}

/// [c0, c1, ...] ascending.
inline IntPoly poly_from_json(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("polynomial must be a JSON array of integers");
  std::vector<Integer> c;
  for (const auto& x : v) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

/// Array of rows, each an array of coefficient arrays.
inline PolyMatrix matrix_from_json(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  const std::size_t n = v.size();
  PolyMatrix m(n, n, IntPoly{});
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n)
      throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = poly_from_json(v[i][j]);
  }
  return m;
}

inline std::string to_json(const std::vector<IntPoly>& polys) {
  std::string out = "[";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ",";
    out += to_json(polys[i]);
  }
  return out + "]";
}

/// {"delta":[...],"Delta":[...],"ambiguous":[...],"method":"..."}
inline std::string to_json(const AlexanderInvariants& inv) {
  return std::string("{\"delta\":") + to_json(inv.delta) + ",\"Delta\":" + to_json(inv.higher) +
         ",\"ambiguous\":" + to_json(inv.ambiguous_phis) + ",\"method\":\"" + to_string(inv.method) + "\"}";
}

inline Method method_from_string(const std::string& s) {
  if (s == "fast") return Method::fast;
  if (s == "fallback") return Method::fallback;
  if (s == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method: " + s);
}

inline Policy policy_from_string(const std::string& s) {
  if (s == "fast") return Policy::fast;
  if (s == "fast-with-fallback" || s == "fast_with_fallback") return Policy::fast_with_fallback;
  if (s == "oracle-only" || s == "oracle_only" || s == "oracle") return Policy::oracle_only;
  throw std::invalid_argument("unknown policy: " + s);
}

inline AlexanderInvariants invariants_from_json(const json& v) {
  AlexanderInvariants inv;
  for (const auto& p : v.at("delta")) inv.delta.push_back(poly_from_json(p));
  for (const auto& p : v.at("Delta")) inv.higher.push_back(poly_from_json(p));
  for (const auto& p : v.at("ambiguous")) inv.ambiguous_phis.push_back(poly_from_json(p));
  inv.method = method_from_string(v.at("method").get<std::string>());
  return inv;
}

inline AlexanderInvariants parse_invariants(std::string_view text) { return invariants_from_json(parse_exact_json(text)); }

/// "(t^2 - t + 1)^2*(t^2 - 3*t + 1)"; units print as "1".
inline std::string to_factored(const IntPoly& f) {
  if (f.degree() < 1) return to_pretty(f);
  const Factorization fz = factor(f);
  std::string out = fz.unit_sign < 0 ? "-" : "";
  const Integer c = content(f);
  if (c != 1) out += c.get_str() + "*";
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    if (i) out += "*";
    const auto& fp = fz.factors[i];
    const bool wrap = fz.factors.size() > 1 || fp.exponent > 1;
    out += wrap ? "(" + to_pretty(fp.factor) + ")" : to_pretty(fp.factor);
    if (fp.exponent > 1) out += "^" + std::to_string(fp.exponent);
  }
  return out;
}

/// Multi-line human form. Lists delta_i and Delta_i for i = 1..r, then Delta_{r+1} = 1.
inline std::string to_pretty(const AlexanderInvariants& inv) {
  std::string out;
  auto line = [&](const std::string& label, const IntPoly& f) {
    out += label + " = " + to_pretty(f);
    if (f.degree() >= 2) {
      const std::string fac = to_factored(f);
      if (fac != to_pretty(f) && fac != "(" + to_pretty(f) + ")") out += "  =  " + fac;
    }
    out += "\n";
  };
  for (std::size_t i = 0; i < inv.delta.size(); ++i) line("delta_" + std::to_string(i + 1), inv.delta[i]);
  for (std::size_t i = 0; i < inv.higher.size(); ++i) line("Delta_" + std::to_string(i + 1), inv.higher[i]);
  line("Delta_" + std::to_string(inv.higher.size() + 1), IntPoly{Integer(1)});
  for (const auto& phi : inv.ambiguous_phis) out += "unresolved primary part for " + to_pretty(phi) + "\n";
  out += std::string("method: ") + to_string(inv.method) + "\n";
  return out;
}

}  // namespace alexinv
