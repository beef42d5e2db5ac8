#pragma once

// Rings, terms and sparse polynomials with terms kept strictly decreasing in
// the ring order.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigbasis/field.hpp"
#include "sigbasis/monomial.hpp"

namespace sigbasis {

class Ring {
 public:
  Ring(Coeff characteristic, std::size_t num_vars, RingOrder order = RingOrder::grevlex())
      : field_(characteristic), num_vars_(num_vars), order_(order) {
    if (num_vars == 0) throw std::invalid_argument("ring needs at least one variable");
    if (order.kind == OrderKind::Elimination && (order.elim_block < 1 || order.elim_block >= num_vars))
      throw std::invalid_argument("elimination block must satisfy 1 <= k < num_vars");
  }

  const PrimeField& field() const { return field_; }
  Coeff characteristic() const { return field_.characteristic(); }
  std::size_t num_vars() const { return num_vars_; }
  const RingOrder& order() const { return order_; }

  Monomial one() const { return Monomial(num_vars_); }
  Monomial var(std::size_t i, Exponent e = 1) const {
    return Monomial::generate(num_vars_, [&](std::size_t k) { return k == i ? e : 0; });
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::size_t num_vars_;
  RingOrder order_;
};

struct Term {
  Coeff coeff = 0;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;

  /// Adopts terms that are already sorted, combined and free of zeros.
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial f;
    f.terms_ = std::move(terms);
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_mono() const { return terms_.front().mono; }
  Coeff lead_coeff() const { return terms_.front().coeff; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Sorts terms decreasingly, combines like terms mod p and drops zeros.
inline Polynomial poly_normalize(const Ring& ring, std::vector<Term> raw) {
  const PrimeField& k = ring.field();
  std::sort(raw.begin(), raw.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    const Coeff c = t.coeff % ring.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, std::move(t.mono)});
    }
  }
  return Polynomial::from_sorted(std::move(out));
}

/// Checks the Polynomial invariant (sorted strictly decreasing, no zeros).
inline bool is_normalized(const Ring& ring, const Polynomial& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].coeff == 0 || f[i].coeff >= ring.characteristic()) return false;
    if (f[i].mono.num_vars() != ring.num_vars()) return false;
    if (i > 0 && ring.compare(f[i - 1].mono, f[i].mono) <= 0) return false;
  }
  return true;
}

inline Polynomial poly_scale(const Ring& ring, const Polynomial& f, Coeff c) {
  if (c % ring.characteristic() == 0) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back({ring.field().mul(t.coeff, c), t.mono});
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial poly_monic(const Ring& ring, const Polynomial& f) {
  if (f.is_zero() || f.lead_coeff() == 1) return f;
  return poly_scale(ring, f, ring.field().inv(f.lead_coeff()));
}

/// t * f for a term t; multiplication by a monomial preserves the order.
inline Polynomial poly_mul_term(const Ring& ring, const Polynomial& f, const Term& t) {
  if (t.coeff % ring.characteristic() == 0) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& s : f) out.push_back({ring.field().mul(s.coeff, t.coeff), mono_mul(s.mono, t.mono)});
  return Polynomial::from_sorted(std::move(out));
}

/// f + g by merging.
inline Polynomial poly_add(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size() || (i < f.size() && ring.compare(f[i].mono, g[j].mono) > 0)) {
      out.push_back(f[i++]);
    } else if (i == f.size() || ring.compare(f[i].mono, g[j].mono) < 0) {
      out.push_back(g[j++]);
    } else {
      const Coeff c = ring.field().add(f[i].coeff, g[j].coeff);
      if (c != 0) out.push_back({c, f[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial poly_sub(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  return poly_add(ring, f, poly_scale(ring, g, ring.field().neg(1)));
}

/// Naive product; used by tests and the input generators.
inline Polynomial poly_mul(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> raw;
  raw.reserve(f.size() * g.size());
  for (const auto& a : f)
    for (const auto& b : g) raw.push_back({ring.field().mul(a.coeff, b.coeff), mono_mul(a.mono, b.mono)});
  return poly_normalize(ring, std::move(raw));
}

/// Classic S-polynomial of monic-or-not f and g: (l/hd f) f - (l/hd g) g
/// scaled so that lead terms cancel.
inline Polynomial s_polynomial(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  const Monomial l = mono_lcm(f.lead_mono(), g.lead_mono());
  const PrimeField& k = ring.field();
  const Polynomial a = poly_mul_term(ring, f, {k.inv(f.lead_coeff()), mono_div(l, f.lead_mono())});
  const Polynomial b = poly_mul_term(ring, g, {k.inv(g.lead_coeff()), mono_div(l, g.lead_mono())});
  return poly_sub(ring, a, b);
}

inline std::size_t total_terms(const std::vector<Polynomial>& polys) {
  std::size_t n = 0;
  for (const auto& f : polys) n += f.size();
  return n;
}

}  // namespace sigbasis
