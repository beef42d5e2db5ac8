#pragma once

// Independent oracles for the signature layer: S-pair signatures computed
// from both candidate module terms, and randomized checks of the two base
// divisor theorems.

#include <optional>
#include <random>

#include "sigbasis/signature_basis.hpp"
#include "test_support.hpp"

namespace sigbasis::testing {

inline SigBasisEntry make_entry(const ModuleOrder& order, Monomial sig_mono, std::uint32_t comp, Monomial lead) {
  SigBasisEntry e;
  e.sig = order.make(std::move(sig_mono), comp);
  e.poly = Polynomial::from_sorted({Term{1, lead}});
  e.ratio = order.ratio(e.sig, lead);
  return e;
}

/// Assigns ratio ids to a set of entries through a fresh table.
inline void assign_ids(const ModuleOrder& order, std::initializer_list<SigBasisEntry*> entries) {
  RatioIds ids(order);
  for (auto* e : entries) ids.assign(e->ratio);
  for (auto* e : entries) e->ratio_id = ids.id_of(e->ratio);
}

/// max((hd b / g) sig a, (hd a / g) sig b) by direct module comparison;
/// nullopt when both candidates coincide.
inline std::optional<Signature> direct_spair_signature(const ModuleOrder& order, const SigBasisEntry& a,
                                                       const SigBasisEntry& b) {
  const Monomial g = mono_gcd(a.lead(), b.lead());
  Signature ca = order.times(mono_div(b.lead(), g), a.sig);
  Signature cb = order.times(mono_div(a.lead(), g), b.sig);
  const auto c = order.compare(ca, cb);
  if (c == 0) return std::nullopt;
  return c > 0 ? ca : cb;
}

inline bool sig_divides(const Signature& a, const Signature& b) {
  return a.comp == b.comp && mono_divides(a.mono, b.mono);
}

struct TheoremTally {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t positive = 0;  // instances where the divisibility holds
};

/// Random world: 3 variables, two module components weighted by random
/// monomials, Schreyer order with the given tie-break.
struct SigWorld {
  Ring ring{101, 3};
  std::mt19937_64 rng;
  ModuleOrder order;

  SigWorld(std::uint64_t seed, SchreyerTiebreak tb)
      : rng(seed),
        order(ring, {random_monomial(rng, 3, 2), random_monomial(rng, 3, 2)}, ModuleOrderKind::Schreyer, tb) {}

  Monomial mono(Exponent max_exp = 3) { return random_monomial(rng, 3, max_exp); }
  std::uint32_t comp() { return static_cast<std::uint32_t>(rng() % 2); }
};

/// hd a | hd b and ratio g above both: sig S(a,g) | sig S(b,g).
inline TheoremTally check_high_ratio_theorem(std::uint64_t seed, std::size_t instances) {
  TheoremTally t;
  SigWorld w(seed, seed % 2 ? SchreyerTiebreak::LowGreater : SchreyerTiebreak::HighGreater);
  while (t.instances < instances) {
    SigBasisEntry a = make_entry(w.order, w.mono(), w.comp(), w.mono());
    SigBasisEntry b = make_entry(w.order, w.mono(), w.comp(), mono_mul(a.lead(), w.mono(2)));
    SigBasisEntry g = make_entry(w.order, w.mono(), w.comp(), w.mono());
    if (!(w.order.compare(g.ratio, a.ratio) > 0 && w.order.compare(g.ratio, b.ratio) > 0)) continue;
    assign_ids(w.order, {&a, &b, &g});
    ++t.instances;
    const auto sag = direct_spair_signature(w.order, a, g), sbg = direct_spair_signature(w.order, b, g);
    const bool ok = sag && sbg && spair_signature(w.order, a, g) == sag && spair_signature(w.order, b, g) == sbg &&
                    sig_divides(*sag, *sbg) && high_base_divisor_eliminates(a, b, g, true);
    if (!ok) ++t.violations;
    else ++t.positive;
  }
  return t;
}

/// sig a | sig b and ratio g below both: sig S(a,g) | sig S(b,g) exactly
/// when hd g | x^v.
inline TheoremTally check_low_ratio_theorem(std::uint64_t seed, std::size_t instances) {
  TheoremTally t;
  SigWorld w(seed, seed % 2 ? SchreyerTiebreak::LowGreater : SchreyerTiebreak::HighGreater);
  while (t.instances < instances) {
    const auto c = w.comp();
    SigBasisEntry a = make_entry(w.order, w.mono(), c, w.mono());
    SigBasisEntry b = make_entry(w.order, mono_mul(a.sig.mono, w.mono(2)), c, w.mono());
    SigBasisEntry g = make_entry(w.order, w.mono(), w.comp(), w.mono());
    if (!(w.order.compare(g.ratio, a.ratio) < 0 && w.order.compare(g.ratio, b.ratio) < 0)) continue;
    assign_ids(w.order, {&a, &b, &g});
    ++t.instances;
    const auto sag = direct_spair_signature(w.order, a, g), sbg = direct_spair_signature(w.order, b, g);
    if (!sag || !sbg || spair_signature(w.order, a, g) != sag || spair_signature(w.order, b, g) != sbg) {
      ++t.violations;
      continue;
    }
    const bool divides = sig_divides(*sag, *sbg);
    if (divides != low_base_divisor_bound(a, b).admits(g.lead())) ++t.violations;
    if (divides) ++t.positive;
  }
  return t;
}

}  // namespace sigbasis::testing
