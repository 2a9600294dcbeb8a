#pragma once

// Random instance generators shared by the unit and acceptance tests.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pkroots/multipoly.hpp"
#include "pkroots/oracle.hpp"
#include "pkroots/splitideal.hpp"

namespace testsupport {

using namespace pkroots;

inline Int uniform(std::mt19937_64& rng, const Int& bound) {
  // bound fits in 63 bits for every test instance
  return Int(static_cast<unsigned long>(rng() % bound.get_ui()));
}

inline UPoly random_monic(std::mt19937_64& rng, int d, const Int& bound) {
  UPoly f(d + 1);
  for (int i = 0; i < d; ++i) f[i] = uniform(rng, bound);
  f[d] = 1;
  return f;
}

/// Products of linear factors whose roots often collide mod p, so that
/// repeated roots, clusters and splits all occur.
inline UPoly clustered(std::mt19937_64& rng, int d, const Modulus& mod) {
  UPoly f{1};
  std::vector<Int> roots;
  for (int i = 0; i < d; ++i) {
    Int r;
    if (!roots.empty() && rng() % 2)
      r = roots[rng() % roots.size()] + mod.p() * uniform(rng, mod.pk());
    else
      r = uniform(rng, mod.pk());
    roots.push_back(r);
    f = upoly::mul_z(f, UPoly{Int(-r), Int(1)});
  }
  return upoly::reduce(f, mod.pk());
}

struct Instance {
  UPoly f;
  unsigned p;
  unsigned k;
};

/// Deterministic corpus of monic polynomials with deg <= 6, p in {2,3,5},
/// k <= 5, mixing uniform coefficients with clustered roots.
inline std::vector<Instance> root_corpus(std::size_t n, std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  const unsigned primes[] = {2, 3, 5};
  while (out.size() < n) {
    const unsigned p = primes[rng() % 3];
    const unsigned k = 1 + static_cast<unsigned>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % 6);
    const Modulus mod(p, k);
    UPoly f;
    switch (rng() % 3) {
      case 0: f = random_monic(rng, d, mod.pk()); break;
      case 1: f = clustered(rng, d, mod); break;
      default: {
        // product of a clustered part and a random monic part
        const int d1 = 1 + static_cast<int>(rng() % d);
        f = upoly::mul_z(clustered(rng, d1, mod), random_monic(rng, d - d1, mod.pk()));
        f = upoly::reduce(f, mod.pk());
      }
    }
    out.push_back({f, p, k});
  }
  return out;
}

/// Random polynomial in `nvars` variables, reduced modulo the first nvars
/// (or nvars - 1, leaving the top variable free) generators of I, with top
/// degree below `top_degree` when the top variable is free.
inline MultiPoly random_reduced(std::mt19937_64& rng, const TriangularIdeal& I, int nvars, int top_degree,
                                const Modulus& fp) {
  if (nvars == 0) return MultiPoly::constant(uniform(rng, fp.p()), 0);
  const int bound = nvars - 1 < static_cast<int>(I.length()) ? I[nvars - 1].degree() : top_degree;
  std::vector<MultiPoly> c;
  for (int j = 0; j < bound; ++j) c.push_back(random_reduced(rng, I, nvars - 1, top_degree, fp));
  return MultiPoly::from_coeffs(nvars, std::move(c));
}

/// Random triangular ideal over F_p whose generators split into distinct
/// linear factors at every zero (so |Z(I)| = deg I). Zeros are enumerable.
inline TriangularIdeal random_split_ideal(std::mt19937_64& rng, const Modulus& fp, int length, int max_deg) {
  const oracle::FiniteField F(fp.p().get_ui(), 1);
  for (;;) {
    std::vector<MultiPoly> gens;
    bool ok = true;
    for (int i = 0; i < length && ok; ++i) {
      const TriangularIdeal lower(gens);
      const int d = 1 + static_cast<int>(rng() % std::min<unsigned long>(max_deg, fp.p().get_ui()));
      MultiPoly h = MultiPoly::constant(1, i + 1);
      for (int j = 0; j < d; ++j) {
        const MultiPoly r = random_reduced(rng, lower, i, 1, fp).lift(i + 1);
        const MultiPoly lin = sub(MultiPoly::variable(i, i + 1), r, fp);
        h = reduce(mul(h, lin, fp), lower, fp);
      }
      gens.push_back(h);
      const TriangularIdeal cand(gens);
      ok = enumerate_zeroset(cand, F).size() == cand.degree();
    }
    if (ok) return TriangularIdeal(gens);
  }
}

/// Values of the coefficients of `a` (free top variable) at a zero: a univariate polynomial over F_p.
inline UPoly project(const MultiPoly& a, const ZeroTuple& z, const oracle::FiniteField& F) {
  UPoly u;
  for (const auto& c : a.coeffs())
    u.push_back(Int(static_cast<unsigned long>(evaluate(c, std::span<const oracle::FiniteField::Elem>(z), F))));
  upoly::trim(u);
  return u;
}

}  // namespace testsupport
