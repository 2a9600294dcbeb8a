#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pkroots/multipoly.hpp"
#include "pkroots/oracle.hpp"

namespace pkroots {

/// The data a split ideal is split with respect to: the (normalized) input
/// polynomial, the modulus, and the Frobenius degree b (roots live in F_{p^b}).
struct SplitContext {
  UPoly f;
  Modulus mod;
  unsigned galois_degree = 1;
};

/// A triangular ideal over F_p together with the context it is split for.
/// The split conditions hold by construction in the root counter; they are
/// checked by enumeration only in tests and verification runs.
class SplitIdeal {
 public:
  SplitIdeal(TriangularIdeal base, std::shared_ptr<const SplitContext> ctx)
      : base_(std::move(base)), ctx_(std::move(ctx)) {}

  const TriangularIdeal& base() const { return base_; }
  const SplitContext& context() const { return *ctx_; }
  const std::shared_ptr<const SplitContext>& context_ptr() const { return ctx_; }
  std::size_t length() const { return base_.length(); }
  std::uint64_t degree() const { return base_.degree(); }

 private:
  TriangularIdeal base_;
  std::shared_ptr<const SplitContext> ctx_;
};

/// A split ideal U with its tagged polynomial f_U(x_0..x_{L-1}, x), the
/// reduced form of f(x_0 + p x_1 + ... + p^{L-1} x_{L-1} + p^L x) modulo the
/// lift of U over Z/p^k.
struct StackEntry {
  SplitIdeal ideal;
  MultiPoly fU;
};

struct MaximalSplitIdeal {
  SplitIdeal ideal;
  std::size_t length = 0;
  std::uint64_t degree = 0;
};

/// How the tagged polynomial of a child is produced when a generator splits.
enum class SplitRefresh {
  /// Rebuild f_{U_j} from f by successive Taylor shifts modulo the child's lift.
  recompute,
  /// Reduce the parent's f_U modulo the child's lift.
  reduce_only,
};

/// f(x_0 + p x_1 + ... + p^{L-1} x_{L-1} + p^L x) reduced modulo the lift of U.
MultiPoly tagged_polynomial(const UPoly& f, const TriangularIdeal& U, const Modulus& m);

/// Replace generator i of the entry's ideal by each factor in turn, re-reduce
/// the later generators, and produce one entry per factor.
std::vector<StackEntry> split_entry(const StackEntry& entry, std::size_t gen_index,
                                    std::span<const MultiPoly> factors,
                                    SplitRefresh refresh = SplitRefresh::recompute);

/// D * q^{k - L} with q = p^b.
Int represented_root_count(const MaximalSplitIdeal& M, const Modulus& mod, unsigned galois_degree = 1);

// ---------------------------------------------------------------------------
// Enumeration support (tests and verification runs)

using ZeroTuple = std::vector<oracle::FiniteField::Elem>;

/// Exact zeroset over F_q by depth-first evaluation. Throws CapExceeded when
/// more than `cap` candidate evaluations would be needed.
std::vector<ZeroTuple> enumerate_zeroset(const TriangularIdeal& I, const oracle::FiniteField& F,
                                         std::uint64_t cap = oracle::kDefaultCap);

/// Zeros of the lift of I over Z/p^k: the unique Hensel lifts of the F_p-zeros
/// (every generator has simple roots at the zeros of a split ideal).
std::vector<std::vector<Int>> lifted_zeroset(const TriangularIdeal& I, const Modulus& mod,
                                             std::uint64_t cap = oracle::kDefaultCap);

/// Residues r mod p^k represented by a maximal split ideal (b = 1): for every
/// lifted zero a, all r = a_0 + p a_1 + ... + p^{L-1} a_{L-1} + p^L t.
std::vector<Int> represented_roots(const MaximalSplitIdeal& M, const Modulus& mod,
                                   std::uint64_t cap = oracle::kDefaultCap);

struct SplitCheck {
  bool zero_count_matches = false;  // |Z(I)| = deg(I)
  bool prefixes_vanish = false;     // f(sum a_i p^i) = 0 mod p^L at lifted zeros (b = 1 only)
  bool ok() const { return zero_count_matches && prefixes_vanish; }
};

SplitCheck verify_split_ideal(const SplitIdeal& I, std::uint64_t cap = oracle::kDefaultCap);

/// No zero of one ideal is a coordinatewise prefix of a zero of the other.
bool prefix_free(const TriangularIdeal& a, const TriangularIdeal& b, const oracle::FiniteField& F,
                 std::uint64_t cap = oracle::kDefaultCap);

}  // namespace pkroots
