#include "pkroots/modring.hpp"

#include "pkroots/errors.hpp"

namespace pkroots {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 40) {
    const auto v = n.get_ui();
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= v; d += 2)
      if (v % d == 0) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

Modulus::Modulus(Int p, unsigned k) : p_(std::move(p)), k_(k) {
  if (k_ == 0) throw InvalidModulus("exponent k must be positive");
  if (!is_prime(p_)) throw InvalidModulus("modulus base " + p_.get_str() + " is not prime");
  mpz_pow_ui(pk_.get_mpz_t(), p_.get_mpz_t(), k_);
}

Modulus::Modulus(Int p, unsigned k, Trusted) : p_(std::move(p)), k_(k) {
  mpz_pow_ui(pk_.get_mpz_t(), p_.get_mpz_t(), k_);
}

Int Modulus::reduce(const Int& a) const {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), pk_.get_mpz_t());
  return r;
}

void Modulus::reduce_inplace(Int& a) const {
  if (sgn(a) >= 0 && a < pk_) return;
  mpz_mod(a.get_mpz_t(), a.get_mpz_t(), pk_.get_mpz_t());
}

Int Modulus::pow_p(unsigned e) const { return ipow(p_, e); }

Valuation padic_valuation(const Int& a, const Modulus& mod) {
  Int r = mod.reduce(a);
  if (r == 0) return {mod.k(), Int(1)};
  unsigned v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), mod.p().get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), mod.p().get_mpz_t());
    ++v;
  }
  return {v, r};
}

std::pair<unsigned, RElem> padic_valuation(const RElem& a) {
  auto [v, u] = padic_valuation(a.value(), a.modulus());
  return {v, RElem(u, a.modulus())};
}

Int inverse(const Int& a, const Modulus& mod) {
  Int r = mod.reduce(a);
  Int out;
  if (mpz_divisible_p(r.get_mpz_t(), mod.p().get_mpz_t()) ||
      mpz_invert(out.get_mpz_t(), r.get_mpz_t(), mod.pk().get_mpz_t()) == 0)
    throw NotAUnit(r.get_str() + " is not a unit modulo " + mod.pk().get_str());
  return out;
}

RElem inv(const RElem& a) { return RElem(inverse(a.value(), a.modulus()), a.modulus()); }

unsigned long valuation_of(const Int& a, const Int& p) {
  if (a == 0) return 0;
  Int r = abs(a);
  unsigned long v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace pkroots
