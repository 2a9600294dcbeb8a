#pragma once

#include <cstdint>
#include <vector>

#include "pkroots/exec.hpp"
#include "pkroots/modring.hpp"
#include "pkroots/upoly.hpp"

// Brute-force verifiers. Everything here uses its own machine-word arithmetic
// and never calls into the root-counting engine, so it can serve as ground
// truth. All enumerations are exponential and guarded by caps.
namespace pkroots::oracle {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

using pkroots::Exec;

/// F_q = F_p[y]/phi(y). Elements are encoded as integers sum c_j p^j with
/// digits c_j the coefficients of the residue polynomial in y.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  FiniteField(std::uint64_t p, unsigned b);

  std::uint64_t p() const { return p_; }
  unsigned b() const { return b_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::uint64_t>& modulus_poly() const { return phi_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& a) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;

 private:
  std::vector<std::uint64_t> digits(Elem a) const;
  Elem pack(const std::vector<std::uint64_t>& d) const;

  std::uint64_t p_;
  unsigned b_;
  std::uint64_t q_;
  std::vector<std::uint64_t> phi_;  // monic, ascending, degree b
};

/// G(p^k, b) = (Z/p^k)[y]/phi(y) with phi monic of degree b, irreducible mod p.
class GaloisRing {
 public:
  using Elem = std::vector<std::uint64_t>;  // b coefficients in y

  GaloisRing(std::uint64_t p, unsigned k, unsigned b);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned b() const { return b_; }
  std::uint64_t pk() const { return pk_; }
  const std::vector<std::uint64_t>& phi() const { return phi_; }
  /// Number of elements p^{kb}; throws CapExceeded if it overflows 64 bits.
  std::uint64_t size() const;

  Elem element(std::uint64_t index) const;
  Elem constant(std::uint64_t c) const;
  Elem y() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(const Elem& a) const;
  bool is_unit(const Elem& a) const;
  Elem inverse(const Elem& a) const;
  Elem eval(const std::vector<std::uint64_t>& f, const Elem& x) const;
  /// Roots of phi in G: the Hensel lifts of y^{p^i} mod p, i = 0..b-1.
  std::vector<Elem> phi_roots() const;
  /// r(y) with y replaced by the element s.
  Elem substitute(const Elem& r, const Elem& s) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  unsigned b_;
  std::uint64_t pk_;
  std::vector<std::uint64_t> phi_;
};

/// Exact zeroset of f in Z/p^k, sorted.
std::vector<Int> brute_force_roots(const UPoly& f, const Modulus& mod, std::uint64_t cap = kDefaultCap,
                                   Exec exec = Exec::parallel);

/// First monic degree-b irreducible over F_p in lexicographic order of the
/// coefficient vector read from the top.
UPoly find_irreducible(const Int& p, unsigned b);

/// Number of roots of f in the Galois ring.
std::uint64_t brute_force_galois_roots(const UPoly& f, const GaloisRing& G, std::uint64_t cap = kDefaultCap,
                                       Exec exec = Exec::parallel);
std::vector<GaloisRing::Elem> galois_roots(const UPoly& f, const GaloisRing& G, std::uint64_t cap = kDefaultCap);

/// Number of monic degree-b g over Z/p^k, irreducible mod p, with g | f mod p^k.
std::uint64_t brute_force_basic_irreducible(const UPoly& f, const Modulus& mod, unsigned b,
                                            std::uint64_t cap = kDefaultCap, Exec exec = Exec::parallel);

/// Irreducibility over F_p by trial division by every monic polynomial of
/// degree <= deg/2 (independent of the Frobenius test used elsewhere).
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

std::vector<std::uint64_t> to_words(const UPoly& f, std::uint64_t m);

}  // namespace pkroots::oracle
