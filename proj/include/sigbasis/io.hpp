#pragma once

// Text format for ideals:
//
//   line 1   characteristic p
//   line 2   number of variables n
//   line 3   term order: "grevlex", "lex" or "elim <k>"
//   rest     one polynomial per non-empty line, e.g. "3*x1^2*x2 - x3 + 5"
//
// Lines starting with '#' are ignored. Printing is canonical: terms in
// decreasing order, coefficients in the symmetric range, unit coefficients
// omitted, so print(parse(t)) is a fixed point.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigbasis/polynomial.hpp"

namespace sigbasis {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text, std::size_t line)
      : ring_(ring), s_(text), line_(line) {}

  Polynomial parse() {
    std::vector<Term> raw;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = ring_.field().neg(t.coeff);
      raw.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return poly_normalize(ring_, std::move(raw));
  }

 private:
  Term parse_term() {
    const PrimeField& k = ring_.field();
    Coeff c = 1;
    std::vector<Exponent> exps(ring_.num_vars(), 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = k.mul(c, read_number_mod());
      } else if (peek() == 'x') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        const std::uint64_t v = read_number();
        if (v < 1 || v > ring_.num_vars()) fail("variable index out of range: x" + std::to_string(v));
        std::uint64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = read_number();
        }
        const std::uint64_t total = exps[v - 1] + e;
        if (total > UINT32_MAX) fail("exponent too large");
        exps[v - 1] = static_cast<Exponent>(total);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {c, Monomial(std::span<const Exponent>(exps))};
  }

  std::uint64_t read_number() {
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (UINT64_MAX - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  Coeff read_number_mod() {
    const std::uint64_t p = ring_.characteristic();
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
      ++pos_;
    }
    return static_cast<Coeff>(v);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1));
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  const Ring& ring_;
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace detail

inline Polynomial parse_polynomial(const Ring& ring, std::string_view text, std::size_t line = 1) {
  return detail::PolyParser(ring, text, line).parse();
}

inline RingOrder parse_order(const std::string& spec, std::size_t line = 3) {
  std::istringstream in(spec);
  std::string word;
  in >> word;
  RingOrder order;
  if (word == "grevlex") {
    order = RingOrder::grevlex();
  } else if (word == "lex") {
    order = RingOrder::lex();
  } else if (word == "elim") {
    long long k = 0;
    if (!(in >> k) || k < 1) throw ParseError(line, "elim needs a positive block size");
    order = RingOrder::elimination(static_cast<std::size_t>(k));
  } else {
    throw ParseError(line, "unknown term order '" + spec + "'");
  }
  std::string rest;
  if (in >> rest) throw ParseError(line, "trailing text after term order");
  return order;
}

inline Ideal parse_ideal(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string l = detail::trim(text.substr(start, end - start));
    if (!l.empty() && l[0] != '#') lines.emplace_back(lineno, std::move(l));
    start = end + 1;
  }
  if (lines.size() < 3) throw ParseError(lineno, "missing header (characteristic, variables, order)");

  auto read_int = [](const std::pair<std::size_t, std::string>& l, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(l.second, &used);
    } catch (const std::exception&) {
      throw ParseError(l.first, std::string("expected ") + what);
    }
    if (used != l.second.size() || v < 0) throw ParseError(l.first, std::string("expected ") + what);
    return static_cast<std::uint64_t>(v);
  };

  const std::uint64_t p = read_int(lines[0], "characteristic");
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) throw ParseError(lines[0].first, "characteristic not prime");
  const std::uint64_t n = read_int(lines[1], "number of variables");
  if (n == 0) throw ParseError(lines[1].first, "need at least one variable");
  const RingOrder order = parse_order(lines[2].second, lines[2].first);
  if (order.kind == OrderKind::Elimination && order.elim_block >= n)
    throw ParseError(lines[2].first, "elimination block must be smaller than the number of variables");

  Ideal ideal{Ring(static_cast<Coeff>(p), static_cast<std::size_t>(n), order), {}};
  for (std::size_t i = 3; i < lines.size(); ++i)
    ideal.gens.push_back(parse_polynomial(ideal.ring, lines[i].second, lines[i].first));
  return ideal;
}

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_polynomial(const Ring& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f) {
    const std::int64_t c = ring.field().to_symmetric(t.coeff);
    const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += format_monomial(t.mono);
    }
  }
  return out;
}

inline std::string format_ideal(const Ideal& ideal) {
  std::string out = std::to_string(ideal.ring.characteristic()) + '\n' + std::to_string(ideal.ring.num_vars()) +
                    '\n' + ideal.ring.order().to_string() + '\n';
  for (const auto& g : ideal.gens) out += format_polynomial(ideal.ring, g) + '\n';
  return out;
}

}  // namespace sigbasis
