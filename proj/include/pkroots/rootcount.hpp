#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pkroots/splitideal.hpp"

namespace pkroots {

struct CountStats {
  std::uint64_t pops = 0;
  std::uint64_t splits = 0;
  std::uint64_t dead_ends = 0;
  std::uint64_t max_ideal_degree = 0;
  /// Pops where the popped ideal had length > k or content valuation <= length - 1.
  std::uint64_t stack_invariant_violations = 0;
};

struct CountReport {
  std::vector<MaximalSplitIdeal> msis;
  Int root_count;
  CountStats stats;
  unsigned galois_degree = 1;
  int degree = 0;  // degree of the input after reduction mod p^k
};

/// Observer invoked on every pop, after the content valuation is known.
struct PopEvent {
  const StackEntry& entry;
  unsigned alpha;
  const std::vector<StackEntry>& stack;  // entries still waiting
};

struct CountOptions {
  /// Count roots in the Galois ring of degree b (Frobenius x^q - x with q = p^b).
  unsigned galois_degree = 1;
  /// Multiply f by lc(f)^{-1} before counting.
  bool normalize = true;
  SplitRefresh refresh = SplitRefresh::recompute;
  std::function<void(const PopEvent&)> on_pop;
};

/// f reduced mod p^k and, when requested, made monic. Throws NotMonicModP when
/// p divides the leading coefficient.
UPoly normalize_input(const UPoly& f, const Modulus& mod, bool normalize);

/// Immediate report when f is zero or a nonzero constant mod p^k.
std::optional<CountReport> count_all_residue_roots_shortcut(const UPoly& f, const Modulus& mod,
                                                            unsigned galois_degree = 1);

/// Number of roots of f in Z/p^k (or in the degree-b Galois ring), together
/// with the list of maximal split ideals that represent them.
CountReport count_roots(const UPoly& f, const Modulus& mod, const CountOptions& opts = {});

}  // namespace pkroots
