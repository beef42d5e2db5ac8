#pragma once

// Plain-text statistics reports, one "name: value" line per counter.

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "sigbasis/buchberger.hpp"
#include "sigbasis/signature_basis.hpp"

namespace sigbasis {

namespace detail {

inline void stat_line(std::ostream& os, const std::string& name, std::uint64_t v) { os << name << ": " << v << '\n'; }

inline void percent_line(std::ostream& os, const std::string& name, double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << 100.0 * v << '%';
  os << name << ": " << s.str() << '\n';
}

}  // namespace detail

inline void write_divmask_stats(std::ostream& os, const DivmaskStats& d) {
  detail::stat_line(os, "# divmask hits", d.hits);
  detail::stat_line(os, "# divmask misses", d.misses);
  detail::stat_line(os, "# divisibilities", d.divisibilities);
  detail::percent_line(os, "hit rate", d.hit_rate());
  detail::percent_line(os, "effective hit rate", d.effective_hit_rate());
}

inline void write_sb_stats(std::ostream& os, const SigBasisStats& s, std::size_t gb_size) {
  using detail::stat_line;
  os << "algorithm: sb\n";
  stat_line(os, "#spairs", s.spairs);
  stat_line(os, "elim via non-regular criterion", s.non_regular);
  stat_line(os, "elim via base divisor criterion", s.base_divisor);
  stat_line(os, "elim via signature criterion", s.signature_early);
  stat_line(os, "elim via singular criterion(early)", s.singular_early);
  stat_line(os, "#spairs queued", s.queued);
  stat_line(os, "elim via duplicate signature", s.duplicate);
  stat_line(os, "elim via signature criterion(late)", s.signature_late);
  stat_line(os, "elim via Koszul criterion", s.koszul);
  stat_line(os, "elim via rel. prime criterion", s.rel_prime);
  stat_line(os, "elim via singular criterion(late)", s.singular_late);
  stat_line(os, "#spairs which need reduction", s.need_reduction);
  stat_line(os, "reduce to SB elements", s.to_sb);
  stat_line(os, "reduce to new syzygy signatures", s.to_syzygy);
  if (s.singular_discarded) stat_line(os, "reduce to singular remainders", s.singular_discarded);
  stat_line(os, "#SB", s.basis_size);
  stat_line(os, "#monomials", s.basis_monomials);
  stat_line(os, "#syzygy signatures", s.syzygies);
  stat_line(os, "#basis", gb_size);
  write_divmask_stats(os, s.divmask);
}

inline void write_classic_stats(std::ostream& os, const BuchbergerStats& s, std::size_t gb_size,
                                std::uint64_t gb_monomials) {
  using detail::stat_line;
  os << "algorithm: classic\n";
  stat_line(os, "#S-pairs", s.spairs);
  stat_line(os, "rel prime", s.rel_prime);
  stat_line(os, "lcm cache hits", s.lcm_cache_hits);
  stat_line(os, "lcm simple hits", s.lcm_simple_hits);
  stat_line(os, "lcm graph hits", s.lcm_graph_hits);
  stat_line(os, "#reductions", s.reductions);
  stat_line(os, "0-reductions", s.zero_reductions);
  stat_line(os, "#basis", gb_size);
  stat_line(os, "#monomials", gb_monomials);
  write_divmask_stats(os, s.divmask);
}

}  // namespace sigbasis
