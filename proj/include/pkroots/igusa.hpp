#pragma once

#include <optional>
#include <vector>

#include "pkroots/exec.hpp"
#include "pkroots/rootcount.hpp"

namespace pkroots {

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), computed exactly from the
/// Sylvester determinant.
Int discriminant(const UPoly& f);

/// v_p(disc f); nullopt when the discriminant is zero.
std::optional<unsigned long> discriminant_valuation(const UPoly& f, const Int& p);

struct SeriesPrefix {
  Int p;
  UPoly f;
  std::vector<Int> coefficients;  // N_0 = 1, N_i = roots of f mod p^i
  std::optional<unsigned long> disc_valuation;
};

SeriesPrefix poincare_prefix(const UPoly& f, const Int& p, unsigned K, Exec exec = Exec::parallel,
                             bool normalize = true);

struct PadicCount {
  Int count;
  unsigned ell;
};

/// Number of roots of f in Z_p, read off the maximal split ideals at
/// precision ell = v_p(disc f) + 1 + extra_precision as the sum of their
/// degrees. Throws NotSquarefree when the discriminant vanishes.
PadicCount count_padic_roots(const UPoly& f, const Int& p, unsigned extra_precision = 0);

}  // namespace pkroots
