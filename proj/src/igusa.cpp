#include "pkroots/igusa.hpp"

#include <omp.h>

#include <exception>
#include <utility>

#include "pkroots/errors.hpp"

namespace pkroots {
namespace {

// Fraction-free Gaussian elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Int resultant(const UPoly& f, const UPoly& g) {
  const int m = upoly::degree(f), n = upoly::degree(g);
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Int>> S(N, std::vector<Int>(N, 0));
  // Rows hold coefficients from the top degree down.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) S[r][r + j] = f[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) S[n + r][r + j] = g[n - j];
  return bareiss_determinant(std::move(S));
}

}  // namespace

Int discriminant(const UPoly& f_in) {
  UPoly f = f_in;
  upoly::trim(f);
  const int n = upoly::degree(f);
  if (n < 1) throw InvalidModulus("discriminant needs degree >= 1");
  UPoly df = upoly::derivative_z(f);
  upoly::trim(df);
  Int r = resultant(f, df);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.back().get_mpz_t());
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

std::optional<unsigned long> discriminant_valuation(const UPoly& f, const Int& p) {
  const Int d = discriminant(f);
  if (d == 0) return std::nullopt;
  return valuation_of(d, p);
}

SeriesPrefix poincare_prefix(const UPoly& f, const Int& p, unsigned K, Exec exec, bool normalize) {
  const Modulus base(p, 1);
  SeriesPrefix out;
  out.p = p;
  out.f = f;
  out.coefficients.assign(K + 1, Int(0));
  out.coefficients[0] = 1;
  UPoly ft = f;
  upoly::trim(ft);
  if (upoly::degree(ft) >= 1) out.disc_valuation = discriminant_valuation(ft, p);

  std::vector<std::exception_ptr> errors(K + 1);
  auto work = [&](unsigned i) {
    try {
      CountOptions opts;
      opts.normalize = normalize;
      out.coefficients[i] = count_roots(f, base.with_exponent(i), opts).root_count;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Exec::serial) {
    for (unsigned i = 1; i <= K; ++i) work(i);
  } else {
    // Higher precisions cost more; dynamic scheduling from the top evens out the load.
#pragma omp parallel for schedule(dynamic, 1)
    for (long long j = 0; j < static_cast<long long>(K); ++j) work(K - static_cast<unsigned>(j));
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

PadicCount count_padic_roots(const UPoly& f, const Int& p, unsigned extra_precision) {
  const auto v = discriminant_valuation(f, p);
  if (!v) throw NotSquarefree("discriminant is zero");
  const unsigned ell = static_cast<unsigned>(*v) + 1 + extra_precision;
  const CountReport rep = count_roots(f, Modulus(p, ell));
  PadicCount out{0, ell};
  for (const auto& m : rep.msis) out.count += static_cast<unsigned long>(m.degree);
  return out;
}

}  // namespace pkroots
