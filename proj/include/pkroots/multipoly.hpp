#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pkroots/modring.hpp"
#include "pkroots/upoly.hpp"

namespace pkroots {

/// Dense recursive polynomial in variables x_0..x_{n-1}: a polynomial in the
/// top variable x_{n-1} whose coefficients are polynomials in x_0..x_{n-2}.
/// With n = 0 it is a scalar. Trailing zero coefficients are never stored, so
/// zero (for n > 0) has an empty coefficient list.
///
/// The object carries no modulus; every arithmetic routine takes one.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(const Int& c, int nvars);
  static MultiPoly variable(int var, int nvars);
  static MultiPoly from_coeffs(int nvars, std::vector<MultiPoly> coeffs);
  /// Polynomial in the top variable with scalar coefficients.
  static MultiPoly from_univariate(const UPoly& coeffs, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return nvars_ == 0 ? scalar_ == 0 : terms_.empty(); }
  /// Degree in the top variable; -1 for zero, 0 for a nonzero scalar.
  int degree() const;
  int degree_in(int var) const;

  const Int& scalar() const { return scalar_; }
  std::span<const MultiPoly> coeffs() const { return terms_; }
  /// Leading coefficient in the top variable (a polynomial in one fewer variable).
  MultiPoly lead() const;
  MultiPoly coeff(int i) const;
  bool is_one() const;

  /// Embed into a ring with more variables (constant in the new ones).
  MultiPoly lift(int nvars) const;
  /// View a polynomial with scalar coefficients in its top variable as univariate.
  UPoly to_univariate() const;

  std::vector<MultiPoly>& mutable_terms() { return terms_; }
  Int& mutable_scalar() { return scalar_; }
  void trim();

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  int nvars_ = 0;
  Int scalar_;
  std::vector<MultiPoly> terms_;
};

/// Total order used to sort factor lists deterministically: by variable count,
/// then degree, then coefficients from the lowest power up.
int compare(const MultiPoly& a, const MultiPoly& b);

MultiPoly add(const MultiPoly& a, const MultiPoly& b, const Modulus& m);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b, const Modulus& m);
MultiPoly neg(const MultiPoly& a, const Modulus& m);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Modulus& m);
MultiPoly scale(const MultiPoly& a, const Int& c, const Modulus& m);
/// Reduce every scalar to canonical form modulo m (e.g. to pass from Z/p^k to F_p).
MultiPoly reduce_scalars(const MultiPoly& a, const Modulus& m);

/// Evaluate at a point of F^n for a field type exposing zero(), one(),
/// from_int(Int), add(a,b) and mul(a,b).
template <class Field>
typename Field::Elem evaluate(const MultiPoly& a, std::span<const typename Field::Elem> point,
                              const Field& F) {
  if (a.nvars() == 0) return F.from_int(a.scalar());
  const auto& t = point[a.nvars() - 1];
  auto acc = F.zero();
  const auto cs = a.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = F.add(F.mul(acc, t), evaluate(*it, point, F));
  return acc;
}

/// Ordered generators h_0(x_0), h_1(x_0,x_1), ..., each monic in its top
/// variable, of degree >= 1, and reduced modulo the earlier generators.
/// The generators have coefficients in [0, p); the same generators read over
/// Z/p^k form the lift used by the root counter.
class TriangularIdeal {
 public:
  TriangularIdeal() = default;
  explicit TriangularIdeal(std::vector<MultiPoly> generators);

  std::size_t length() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  std::span<const MultiPoly> generators() const { return gens_; }
  const MultiPoly& operator[](std::size_t i) const { return gens_[i]; }

  TriangularIdeal prefix(std::size_t n) const;
  TriangularIdeal extended(MultiPoly h) const;
  std::vector<int> degrees() const;
  /// Product of generator degrees in their top variables.
  std::uint64_t degree() const;

  friend bool operator==(const TriangularIdeal& a, const TriangularIdeal& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<MultiPoly> gens_;
};

/// Nontrivial factorization h_index = factors[0] * ... * factors[m-1] modulo
/// the generators before index, every factor monic in x_index.
struct Factorization {
  std::size_t index = 0;
  std::vector<MultiPoly> factors;
};

struct ZeroDivTest {
  bool is_zero_divisor = false;
  std::optional<Factorization> evidence;
};

/// Either a monic gcd or the generator factorization met on the way.
using GcdOutcome = std::variant<MultiPoly, Factorization>;

struct ContentValuation {
  unsigned alpha;
  MultiPoly g;
};

/// Reduced form of a modulo J. The variable just above J's top variable (the
/// free variable x) is never reduced; only its coefficients are.
MultiPoly reduce(const MultiPoly& a, const TriangularIdeal& J, const Modulus& m);
/// Reduced product of two reduced polynomials.
MultiPoly mul_mod(const MultiPoly& a, const MultiPoly& b, const TriangularIdeal& J, const Modulus& m);
/// Inverse modulo J by solving the deg(J)-dimensional linear system for the
/// coefficients of the inverse. Throws NotInvertible when it is singular.
MultiPoly invert_mod(const MultiPoly& a, const TriangularIdeal& J, const Modulus& m);
/// Quotient and remainder of a by the monic (in the top variable) b, both
/// with coefficients reduced modulo J.
std::pair<MultiPoly, MultiPoly> divrem_monic(const MultiPoly& a, const MultiPoly& b,
                                             const TriangularIdeal& J, const Modulus& m);

/// Zerodivisor test over F_p. On a positive answer, evidence factors one
/// generator. Zero and units both report false.
ZeroDivTest test_zero_div(const MultiPoly& a, const TriangularIdeal& I, const Modulus& fp);
/// Monic gcd in the free variable modulo I over F_p.
GcdOutcome gcd_mod(const MultiPoly& a, const MultiPoly& b, const TriangularIdeal& I, const Modulus& fp);

/// fI = p^alpha * g with alpha the minimum coefficient valuation (k for zero).
ContentValuation content_valuation(const MultiPoly& fI, const Modulus& m);
/// f_J(x_0..x_{l+1}, x) = f_I(x_0..x_l, x_{l+1} + p x) reduced modulo the
/// lift of J, where J extends f_I's ideal by one generator.
MultiPoly taylor_shift_reduce(const MultiPoly& fI, const TriangularIdeal& J, const Modulus& m);
/// x^q - x reduced modulo I + <gtilde>, gtilde monic in the free variable.
MultiPoly frobenius_reduce(const Int& q, const TriangularIdeal& I, const MultiPoly& gtilde, const Modulus& m);

namespace detail {

MultiPoly reduce_span(const MultiPoly& a, std::span<const MultiPoly> gens, const Modulus& m);
MultiPoly mulmod_span(const MultiPoly& a, const MultiPoly& b, std::span<const MultiPoly> gens, const Modulus& m);
MultiPoly invert_span(const MultiPoly& a, std::span<const MultiPoly> gens, const Modulus& m);
std::optional<Factorization> find_zero_divisor(const MultiPoly& a, std::span<const MultiPoly> gens,
                                               const Modulus& fp);
GcdOutcome gcd_span(MultiPoly a, MultiPoly b, std::span<const MultiPoly> gens, const Modulus& fp);

}  // namespace detail
}  // namespace pkroots
