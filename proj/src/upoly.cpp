#include "pkroots/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "pkroots/errors.hpp"

namespace pkroots::upoly {

namespace {

void mod_inplace(Int& a, const Int& m) {
  if (sgn(a) >= 0 && a < m) return;
  mpz_mod(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotAUnit(a.get_str() + " is not invertible modulo " + m.get_str());
  return r;
}

}  // namespace

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

UPoly reduce(const UPoly& a, const Int& m) {
  UPoly r(a);
  for (auto& c : r) mod_inplace(c, m);
  trim(r);
  return r;
}

UPoly add(const UPoly& a, const UPoly& b, const Int& m) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
    mod_inplace(r[i], m);
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b, const Int& m) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
    mod_inplace(r[i], m);
  }
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) mod_inplace(c, m);
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Int& c, const Int& m) {
  UPoly r(a);
  for (auto& x : r) {
    x *= c;
    mod_inplace(x, m);
  }
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b, const Int& m) {
  UPoly r = reduce(a, m);
  UPoly d = reduce(b, m);
  const int db = degree(d);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  const Int lead_inv = inverse_mod(d[db], m);
  int dr = degree(r);
  if (dr < db) return {UPoly{}, r};
  UPoly q(dr - db + 1);
  for (; dr >= db; dr = degree(r)) {
    Int c = r[dr] * lead_inv;
    mod_inplace(c, m);
    const int shift = dr - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) {
      r[shift + j] -= c * d[j];
      mod_inplace(r[shift + j], m);
    }
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly rem(const UPoly& a, const UPoly& b, const Int& m) { return divrem(a, b, m).second; }

UPoly monic(const UPoly& a, const Int& m) {
  UPoly r = reduce(a, m);
  if (r.empty()) return r;
  return scale(r, inverse_mod(r.back(), m), m);
}

UPoly gcd(UPoly a, UPoly b, const Int& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    UPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

XGcd xgcd(const UPoly& a, const UPoly& b, const Int& p) {
  UPoly r0 = reduce(a, p), r1 = reduce(b, p);
  UPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    UPoly s2 = sub(s0, mul(q, s1, p), p);
    UPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const Int li = inverse_mod(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

UPoly powmod(const UPoly& base, const Int& e, const UPoly& modulus, const Int& m) {
  UPoly result = rem(UPoly{Int(1)}, modulus, m);
  UPoly b = rem(base, modulus, m);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long i = static_cast<long>(bits) - 1; i >= 0; --i) {
    result = rem(mul(result, result, m), modulus, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = rem(mul(result, b, m), modulus, m);
  }
  return result;
}

UPoly derivative(const UPoly& a, const Int& m) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = a[i] * static_cast<unsigned long>(i);
    mod_inplace(r[i - 1], m);
  }
  trim(r);
  return r;
}

UPoly pth_root(const UPoly& a, const Int& p) {
  const auto step = p.get_ui();
  UPoly r;
  for (std::size_t i = 0; i < a.size(); i += step) r.push_back(a[i]);
  trim(r);
  return r;
}

Int eval(const UPoly& a, const Int& x, const Int& m) {
  Int acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * x + *it;
    mod_inplace(acc, m);
  }
  return acc;
}

UPoly mul_z(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly add_z(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

UPoly derivative_z(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

UPoly x_power(unsigned e) {
  UPoly r(e + 1);
  r[e] = 1;
  return r;
}

std::string to_string(const UPoly& a, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    const Int& c = a[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace pkroots::upoly
