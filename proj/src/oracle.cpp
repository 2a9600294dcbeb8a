#include "pkroots/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

#include "pkroots/errors.hpp"

namespace pkroots::oracle {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Words = std::vector<u64>;

u64 mulm(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 addm(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
u64 subm(u64 a, u64 b, u64 m) { return a >= b ? a - b : m - (b - a); }

u64 powm(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulm(r, a, m);
    a = mulm(a, a, m);
    e >>= 1;
  }
  return r;
}

// a^{-1} mod a prime p
u64 invp(u64 a, u64 p) { return powm(a, p - 2, p); }

u64 checked_pow(u64 base, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<u64>::max() / base / 2) throw CapExceeded("enumeration size exceeds 64 bits");
    r *= base;
  }
  return r;
}

u64 to_u64(const Int& a) {
  if (a < 0 || !a.fits_ulong_p()) throw CapExceeded("value does not fit a machine word");
  return a.get_ui();
}

void wtrim(Words& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomials over F_p in machine words (ascending).
Words wmul(const Words& a, const Words& b, u64 m) {
  if (a.empty() || b.empty()) return {};
  Words r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], m), m);
  wtrim(r);
  return r;
}

// Remainder modulo b whose leading coefficient is a unit mod m.
Words wrem(Words a, const Words& b, u64 m, u64 lc_inv) {
  wtrim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const u64 c = mulm(a.back(), lc_inv, m);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = subm(a[shift + j], mulm(c, b[j], m), m);
    wtrim(a);
  }
  return a;
}

Words wgcd(Words a, Words b, u64 p) {
  wtrim(a);
  wtrim(b);
  while (!b.empty()) {
    Words r = wrem(a, b, p, invp(b.back(), p));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 li = invp(a.back(), p);
    for (auto& c : a) c = mulm(c, li, p);
  }
  return a;
}

Words wpowmod_x(u64 e_base, unsigned times, const Words& mod, u64 p) {
  // x^{e_base^times} mod (mod, p), by repeated e_base-th powering.
  Words r{0, 1};
  r = wrem(r, mod, p, invp(mod.back(), p));
  for (unsigned t = 0; t < times; ++t) {
    Words acc{1};
    Words base = r;
    u64 e = e_base;
    while (e) {
      if (e & 1) acc = wrem(wmul(acc, base, p), mod, p, invp(mod.back(), p));
      base = wrem(wmul(base, base, p), mod, p, invp(mod.back(), p));
      e >>= 1;
    }
    r = std::move(acc);
  }
  return r;
}

// Frobenius-gcd irreducibility test for a monic f over F_p.
bool frobenius_irreducible(const Words& f, u64 p) {
  const std::size_t b = f.size() - 1;
  if (b == 1) return true;
  for (std::size_t i = 1; i < b; ++i) {
    Words xp = wpowmod_x(p, static_cast<unsigned>(i), f, p);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = subm(xp[1], 1, p);
    wtrim(xp);
    if (wgcd(f, xp, p).size() != 1) return false;
  }
  Words xq = wpowmod_x(p, static_cast<unsigned>(b), f, p);
  return xq == Words{0, 1};
}

Words find_irreducible_words(u64 p, unsigned b) {
  const u64 total = checked_pow(p, b);
  for (u64 idx = 0; idx < total; ++idx) {
    Words f(b + 1, 0);
    u64 t = idx;
    for (unsigned j = 0; j < b; ++j) {
      f[j] = t % p;
      t /= p;
    }
    f[b] = 1;
    if (frobenius_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

u64 eval_words(const Words& f, u64 x, u64 m) {
  u64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = addm(mulm(acc, x, m), *it, m);
  return acc;
}

}  // namespace

std::vector<std::uint64_t> to_words(const UPoly& f, std::uint64_t m) {
  Words w;
  w.reserve(f.size());
  const Int M(static_cast<unsigned long>(m));
  for (const auto& c : f) {
    Int r = c % M;
    if (r < 0) r += M;
    w.push_back(r.get_ui());
  }
  wtrim(w);
  return w;
}

// ---------------------------------------------------------------------------
// FiniteField

FiniteField::FiniteField(std::uint64_t p, unsigned b) : p_(p), b_(b), q_(checked_pow(p, b)) {
  if (b == 0) throw InvalidModulus("extension degree must be positive");
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw InvalidModulus("p must be prime");
  phi_ = find_irreducible_words(p, b);
}

std::vector<std::uint64_t> FiniteField::digits(Elem a) const {
  Words d(b_, 0);
  for (unsigned j = 0; j < b_; ++j) {
    d[j] = a % p_;
    a /= p_;
  }
  return d;
}

FiniteField::Elem FiniteField::pack(const std::vector<std::uint64_t>& d) const {
  Elem r = 0;
  for (std::size_t j = d.size(); j-- > 0;) r = r * p_ + d[j];
  return r;
}

FiniteField::Elem FiniteField::from_int(const Int& a) const {
  Int r = a % Int(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (b_ == 1) return addm(a, b, p_);
  auto x = digits(a), y = digits(b);
  for (unsigned j = 0; j < b_; ++j) x[j] = addm(x[j], y[j], p_);
  return pack(x);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  if (b_ == 1) return subm(a, b, p_);
  auto x = digits(a), y = digits(b);
  for (unsigned j = 0; j < b_; ++j) x[j] = subm(x[j], y[j], p_);
  return pack(x);
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (b_ == 1) return mulm(a, b, p_);
  Words r = wrem(wmul(digits(a), digits(b), p_), phi_, p_, 1);
  r.resize(b_, 0);
  return pack(r);
}

// ---------------------------------------------------------------------------
// GaloisRing

GaloisRing::GaloisRing(std::uint64_t p, unsigned k, unsigned b) : p_(p), k_(k), b_(b) {
  if (k == 0 || b == 0) throw InvalidModulus("k and b must be positive");
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw InvalidModulus("p must be prime");
  pk_ = checked_pow(p, k);
  phi_ = find_irreducible_words(p, b);
}

std::uint64_t GaloisRing::size() const { return checked_pow(pk_, b_); }

GaloisRing::Elem GaloisRing::element(std::uint64_t index) const {
  Elem e(b_, 0);
  for (unsigned j = 0; j < b_; ++j) {
    e[j] = index % pk_;
    index /= pk_;
  }
  return e;
}

GaloisRing::Elem GaloisRing::constant(std::uint64_t c) const {
  Elem e(b_, 0);
  e[0] = c % pk_;
  return e;
}

GaloisRing::Elem GaloisRing::y() const {
  if (b_ == 1) return constant((pk_ - phi_[0] % pk_) % pk_);  // root of x + c0
  Elem e(b_, 0);
  e[1] = 1;
  return e;
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const {
  Elem r(b_);
  for (unsigned j = 0; j < b_; ++j) r[j] = addm(a[j], b[j], pk_);
  return r;
}

GaloisRing::Elem GaloisRing::sub(const Elem& a, const Elem& b) const {
  Elem r(b_);
  for (unsigned j = 0; j < b_; ++j) r[j] = subm(a[j], b[j], pk_);
  return r;
}

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const {
  Words prod(2 * b_ - 1, 0);
  for (unsigned i = 0; i < b_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < b_; ++j) prod[i + j] = addm(prod[i + j], mulm(a[i], b[j], pk_), pk_);
  }
  // phi is monic: reduce from the top
  for (std::size_t t = prod.size(); t-- > b_;) {
    const u64 c = prod[t];
    if (c == 0) continue;
    prod[t] = 0;
    for (unsigned j = 0; j < b_; ++j) prod[t - b_ + j] = subm(prod[t - b_ + j], mulm(c, phi_[j], pk_), pk_);
  }
  prod.resize(b_);
  return prod;
}

GaloisRing::Elem GaloisRing::pow(Elem a, std::uint64_t e) const {
  Elem r = constant(1);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool GaloisRing::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

bool GaloisRing::is_unit(const Elem& a) const {
  return std::any_of(a.begin(), a.end(), [this](u64 c) { return c % p_ != 0; });
}

GaloisRing::Elem GaloisRing::inverse(const Elem& a) const {
  if (!is_unit(a)) throw NotAUnit("element of the Galois ring is not a unit");
  // a^{q-2} inverts a modulo p; Newton steps x <- x(2 - a x) lift it.
  const u64 q = checked_pow(p_, b_);
  Elem x = pow(a, q - 2);
  for (unsigned i = 0; i < k_; ++i) x = mul(x, sub(constant(2), mul(a, x)));
  return x;
}

GaloisRing::Elem GaloisRing::eval(const std::vector<std::uint64_t>& f, const Elem& x) const {
  Elem acc(b_, 0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = mul(acc, x);
    acc[0] = addm(acc[0], *it % pk_, pk_);
  }
  return acc;
}

std::vector<GaloisRing::Elem> GaloisRing::phi_roots() const {
  Words dphi;
  for (std::size_t i = 1; i < phi_.size(); ++i) dphi.push_back(mulm(phi_[i], i % pk_, pk_));
  std::vector<Elem> roots;
  Elem r = y();
  for (unsigned i = 0; i < b_; ++i) {
    Elem z = r;
    for (unsigned it = 0; it < k_; ++it) z = sub(z, mul(eval(phi_, z), inverse(eval(dphi, z))));
    roots.push_back(z);
    r = pow(r, p_);
  }
  return roots;
}

GaloisRing::Elem GaloisRing::substitute(const Elem& r, const Elem& s) const {
  Elem acc(b_, 0);
  for (std::size_t j = r.size(); j-- > 0;) {
    acc = mul(acc, s);
    acc[0] = addm(acc[0], r[j], pk_);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Enumerations

std::vector<Int> brute_force_roots(const UPoly& f, const Modulus& mod, std::uint64_t cap, Exec exec) {
  if (mod.pk() > Int(static_cast<unsigned long>(cap))) throw CapExceeded("p^k exceeds the enumeration cap");
  const u64 pk = to_u64(mod.pk());
  const Words w = to_words(f, pk);
  std::vector<u64> found;
  if (exec == Exec::serial) {
    for (u64 r = 0; r < pk; ++r)
      if (eval_words(w, r, pk) == 0) found.push_back(r);
  } else {
#pragma omp parallel
    {
      std::vector<u64> local;
#pragma omp for schedule(static) nowait
      for (long long r = 0; r < static_cast<long long>(pk); ++r)
        if (eval_words(w, static_cast<u64>(r), pk) == 0) local.push_back(static_cast<u64>(r));
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end());
  }
  std::vector<Int> out;
  out.reserve(found.size());
  for (u64 r : found) out.emplace_back(static_cast<unsigned long>(r));
  return out;
}

UPoly find_irreducible(const Int& p, unsigned b) {
  if (b == 0) throw InvalidModulus("extension degree must be positive");
  const Words w = find_irreducible_words(to_u64(p), b);
  UPoly out;
  for (u64 c : w) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

std::uint64_t brute_force_galois_roots(const UPoly& f, const GaloisRing& G, std::uint64_t cap, Exec exec) {
  const u64 n = G.size();
  if (n > cap) throw CapExceeded("Galois ring exceeds the enumeration cap");
  const Words w = to_words(f, G.pk());
  u64 count = 0;
  if (exec == Exec::serial) {
    for (u64 i = 0; i < n; ++i) count += G.is_zero(G.eval(w, G.element(i))) ? 1 : 0;
  } else {
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      count += G.is_zero(G.eval(w, G.element(static_cast<u64>(i)))) ? 1 : 0;
  }
  return count;
}

std::vector<GaloisRing::Elem> galois_roots(const UPoly& f, const GaloisRing& G, std::uint64_t cap) {
  const u64 n = G.size();
  if (n > cap) throw CapExceeded("Galois ring exceeds the enumeration cap");
  const Words w = to_words(f, G.pk());
  std::vector<GaloisRing::Elem> out;
  for (u64 i = 0; i < n; ++i) {
    auto e = G.element(i);
    if (G.is_zero(G.eval(w, e))) out.push_back(std::move(e));
  }
  return out;
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f_in, std::uint64_t p) {
  Words f = f_in;
  for (auto& c : f) c %= p;
  wtrim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    const u64 total = checked_pow(p, static_cast<unsigned>(d));
    for (u64 idx = 0; idx < total; ++idx) {
      Words g(d + 1, 0);
      u64 t = idx;
      for (std::size_t j = 0; j < d; ++j) {
        g[j] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (wrem(f, g, p, 1).empty()) return false;
    }
  }
  return true;
}

std::uint64_t brute_force_basic_irreducible(const UPoly& f, const Modulus& mod, unsigned b, std::uint64_t cap,
                                            Exec exec) {
  if (b == 0) throw InvalidModulus("degree must be positive");
  const u64 pk = to_u64(mod.pk());
  const u64 p = to_u64(mod.p());
  const u64 n = checked_pow(pk, b);
  if (n > cap) throw CapExceeded("candidate divisor count exceeds the enumeration cap");
  const Words w = to_words(f, pk);

  auto test = [&](u64 idx) -> bool {
    Words g(b + 1, 0);
    for (unsigned j = 0; j < b; ++j) {
      g[j] = idx % pk;
      idx /= pk;
    }
    g[b] = 1;
    if (!is_irreducible_mod_p(g, p)) return false;
    return wrem(w, g, pk, 1).empty();
  };

  u64 count = 0;
  if (exec == Exec::serial) {
    for (u64 i = 0; i < n; ++i) count += test(i) ? 1 : 0;
  } else {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : count)
    for (long long i = 0; i < static_cast<long long>(n); ++i) count += test(static_cast<u64>(i)) ? 1 : 0;
  }
  return count;
}

}  // namespace pkroots::oracle
