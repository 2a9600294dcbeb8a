#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace pkroots {

using Int = mpz_class;

/// The coefficient ring Z/p^k. Construction checks that p is prime; p below
/// 2^40 is certified by trial division, larger p by a strong probable-prime
/// test (deterministic below 2^64).
class Modulus {
 public:
  Modulus(Int p, unsigned k);

  const Int& p() const { return p_; }
  unsigned k() const { return k_; }
  const Int& pk() const { return pk_; }

  /// Residue field F_p as a modulus with k = 1.
  Modulus field() const { return Modulus(p_, 1, Trusted{}); }
  /// Same prime, different exponent.
  Modulus with_exponent(unsigned k) const { return Modulus(p_, k, Trusted{}); }

  Int reduce(const Int& a) const;
  void reduce_inplace(Int& a) const;
  Int pow_p(unsigned e) const;

  bool operator==(const Modulus& o) const { return k_ == o.k_ && p_ == o.p_; }

 private:
  struct Trusted {};
  Modulus(Int p, unsigned k, Trusted);

  Int p_;
  unsigned k_;
  Int pk_;
};

bool is_prime(const Int& n);

/// An element of Z/p^k in canonical form. Holds a pointer to its modulus,
/// which must outlive it.
class RElem {
 public:
  RElem(const Int& value, const Modulus& mod) : value_(mod.reduce(value)), mod_(&mod) {}

  const Int& value() const { return value_; }
  const Modulus& modulus() const { return *mod_; }

  friend RElem operator+(const RElem& a, const RElem& b) { return RElem(a.value_ + b.value_, *a.mod_); }
  friend RElem operator-(const RElem& a, const RElem& b) { return RElem(a.value_ - b.value_, *a.mod_); }
  friend RElem operator*(const RElem& a, const RElem& b) { return RElem(a.value_ * b.value_, *a.mod_); }
  friend bool operator==(const RElem& a, const RElem& b) { return a.value_ == b.value_ && *a.mod_ == *b.mod_; }

 private:
  Int value_;
  const Modulus* mod_;
};

struct Valuation {
  unsigned v;
  Int unit;
};

/// a = p^v * u with p not dividing u; zero maps to (k, 1).
Valuation padic_valuation(const Int& a, const Modulus& mod);
std::pair<unsigned, RElem> padic_valuation(const RElem& a);

/// Inverse modulo p^k. Throws NotAUnit when p | a.
Int inverse(const Int& a, const Modulus& mod);
RElem inv(const RElem& a);

/// Exact p-adic valuation of a nonzero integer (no clamping).
unsigned long valuation_of(const Int& a, const Int& p);

Int ipow(const Int& base, unsigned long e);

std::string to_string(const Int& a);

}  // namespace pkroots
