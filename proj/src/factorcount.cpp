#include "pkroots/factorcount.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

#include "pkroots/errors.hpp"

namespace pkroots {
namespace {

using namespace upoly;

bool is_one(const UPoly& a) { return a.size() == 1 && a[0] == 1; }

UPoly exact_div(const UPoly& a, const UPoly& b, const Int& m) { return divrem(a, b, m).first; }

UPoly power(const UPoly& a, unsigned e, const Int& m) {
  UPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = mul(r, a, m);
  return r;
}

// One quadratic step: f = g h mod M0 with s g + t h = 1 mod M0, h monic,
// lifted to modulus M1 <= M0^2.
void hensel_step(const UPoly& f, UPoly& g, UPoly& h, UPoly& s, UPoly& t, const Int& M1) {
  const UPoly e = sub(f, mul(g, h, M1), M1);
  auto [q, r] = divrem(mul(s, e, M1), h, M1);
  UPoly g1 = add(g, add(mul(t, e, M1), mul(q, g, M1), M1), M1);
  UPoly h1 = add(h, r, M1);
  const UPoly b = sub(add(mul(s, g1, M1), mul(t, h1, M1), M1), UPoly{1}, M1);
  auto [c, d] = divrem(mul(s, b, M1), h1, M1);
  s = sub(s, d, M1);
  t = sub(t, add(mul(t, b, M1), mul(c, g1, M1), M1), M1);
  g = std::move(g1);
  h = std::move(h1);
}

std::vector<UPoly> lift_tree(const UPoly& f, const std::vector<UPoly>& fs, std::size_t lo, std::size_t hi,
                             const Modulus& mod) {
  if (hi - lo == 1) return {reduce(f, mod.pk())};
  const std::size_t mid = lo + (hi - lo) / 2;
  const Int& p = mod.p();
  UPoly G{1}, H{1};
  for (std::size_t i = lo; i < mid; ++i) G = mul(G, fs[i], p);
  for (std::size_t i = mid; i < hi; ++i) H = mul(H, fs[i], p);
  LiftedPair pr = hensel_lift_coprime(f, G, H, mod);
  auto left = lift_tree(pr.g, fs, lo, mid, mod);
  auto right = lift_tree(pr.h, fs, mid, hi, mod);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

LiftedPair hensel_lift_coprime(const UPoly& f_in, const UPoly& g_in, const UPoly& h_in, const Modulus& mod) {
  const Int& p = mod.p();
  const UPoly g0 = reduce(g_in, p), h0 = reduce(h_in, p);
  if (degree(g0) < 0 || degree(h0) < 0 || g0.back() != 1) throw InvalidFactorization("g must be monic mod p");
  if (sub(reduce(f_in, p), mul(g0, h0, p), p).size() != 0) throw InvalidFactorization("f is not g h mod p");
  const XGcd x = xgcd(h0, g0, p);  // s h + t g = gcd
  if (!is_one(x.g)) throw NotCoprimeModP("factors share a common factor mod p");

  // Roles follow the standard step, where the monic factor is the second one.
  UPoly a = h0, m = g0;
  // Bezout with deg s < deg m, deg t < deg a.
  auto [qq, s] = divrem(x.s, m, p);
  UPoly t = add(x.t, mul(qq, a, p), p);

  unsigned prec = 1;
  while (prec < mod.k()) {
    const unsigned next = std::min(2 * prec, mod.k());
    const Int M1 = mod.pow_p(next);
    hensel_step(reduce(f_in, M1), a, m, s, t, M1);
    prec = next;
  }
  return LiftedPair{reduce(m, mod.pk()), reduce(a, mod.pk())};
}

std::vector<UPoly> hensel_lift_multi(const UPoly& f, const std::vector<UPoly>& factors, const Modulus& mod) {
  if (factors.empty()) return {};
  return lift_tree(f, factors, 0, factors.size(), mod);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UPoly& f_in, const Int& p) {
  std::vector<SquarefreeFactor> out;
  UPoly f = monic(reduce(f_in, p), p);
  if (degree(f) < 1) return out;
  const unsigned long pe = p.fits_ulong_p() ? p.get_ui() : 0;

  UPoly c = gcd(f, derivative(f, p), p);
  UPoly w = exact_div(f, c, p);
  unsigned i = 1;
  while (!is_one(w)) {
    UPoly y = gcd(w, c, p);
    UPoly z = exact_div(w, y, p);
    if (degree(z) > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = exact_div(c, y, p);
  }
  if (!is_one(c)) {
    // c is a p-th power; p-th roots of F_p coefficients are the identity.
    if (pe == 0) throw Error("p-th root extraction needs p to fit a machine word");
    for (auto& sf : squarefree_decomposition(pth_root(c, p), p)) out.push_back({sf.a, sf.e * static_cast<unsigned>(pe)});
  }
  // Merge equal exponents (coprime parts) and order by exponent.
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.e < y.e; });
  std::vector<SquarefreeFactor> merged;
  for (auto& sf : out) {
    if (!merged.empty() && merged.back().e == sf.e)
      merged.back().a = mul(merged.back().a, sf.a, p);
    else
      merged.push_back(sf);
  }
  return merged;
}

std::vector<DegreeFactor> distinct_degree_factorization(const UPoly& f_in, const Int& p) {
  std::vector<DegreeFactor> out;
  UPoly a = monic(reduce(f_in, p), p);
  const UPoly x = x_power(1);
  UPoly h = rem(x, a, p);
  unsigned i = 1;
  while (degree(a) >= 2 * static_cast<int>(i)) {
    h = powmod(h, p, a, p);
    UPoly g = gcd(a, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.push_back({g, i});
      a = exact_div(a, g, p);
      h = rem(h, a, p);
    }
    ++i;
  }
  if (degree(a) > 0) out.push_back({a, static_cast<unsigned>(degree(a))});
  return out;
}

std::vector<Component> decompose(const UPoly& f_in, const Modulus& mod) {
  const UPoly f = normalize_input(f_in, mod, true);
  std::vector<Component> comps;
  if (degree(f) < 1) return comps;
  const Int& p = mod.p();

  std::vector<std::pair<Component, UPoly>> classes;  // component shape and its residue mod p
  for (const auto& sf : squarefree_decomposition(f, p)) {
    for (const auto& df : distinct_degree_factorization(sf.a, p)) {
      Component c;
      c.b = df.b;
      c.e = sf.e;
      c.t = static_cast<unsigned>(degree(df.g)) / df.b;
      classes.emplace_back(c, power(df.g, sf.e, p));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return std::pair(x.first.b, x.first.e) < std::pair(y.first.b, y.first.e); });

  std::vector<UPoly> residues;
  for (const auto& c : classes) residues.push_back(c.second);
  const auto lifted = hensel_lift_multi(f, residues, mod);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Component c = classes[i].first;
    c.g = lifted[i];
    comps.push_back(std::move(c));
  }
  return comps;
}

FactorReport count_basic_irreducible(const UPoly& f, const Modulus& mod, Exec exec) {
  const auto comps = decompose(f, mod);
  std::vector<ComponentCount> results(comps.size());
  std::vector<std::exception_ptr> errors(comps.size());

  auto work = [&](std::size_t i) {
    try {
      CountOptions opts;
      opts.galois_degree = comps[i].b;
      CountReport rep = count_roots(comps[i].g, mod, opts);
      const Int b(comps[i].b);
      if (rep.root_count % b != 0)
        throw DivisibilityViolation("Galois-ring root count " + to_string(rep.root_count) +
                                    " is not divisible by b = " + std::to_string(comps[i].b));
      results[i] = ComponentCount{comps[i], rep.root_count, rep.root_count / b, rep.stats};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < comps.size(); ++i) work(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(comps.size()); ++i) work(static_cast<std::size_t>(i));
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  FactorReport rep;
  rep.total = 0;
  for (auto& r : results) {
    rep.total += r.count;
    rep.per_degree[r.component.b] += r.count;
  }
  rep.components = std::move(results);
  return rep;
}

}  // namespace pkroots
