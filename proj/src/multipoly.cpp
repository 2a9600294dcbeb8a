#include "pkroots/multipoly.hpp"

#include <algorithm>
#include <cassert>

#include "pkroots/errors.hpp"

namespace pkroots {

// ---------------------------------------------------------------------------
// MultiPoly basics

MultiPoly MultiPoly::constant(const Int& c, int nvars) {
  MultiPoly s;
  s.scalar_ = c;
  return s.lift(nvars);
}

MultiPoly MultiPoly::variable(int var, int nvars) {
  std::vector<MultiPoly> t{MultiPoly(var), constant(Int(1), var)};
  return from_coeffs(var + 1, std::move(t)).lift(nvars);
}

MultiPoly MultiPoly::from_coeffs(int nvars, std::vector<MultiPoly> coeffs) {
  MultiPoly r(nvars);
  for (auto& c : coeffs)
    if (c.nvars() != nvars - 1) c = c.lift(nvars - 1);
  r.terms_ = std::move(coeffs);
  r.trim();
  return r;
}

MultiPoly MultiPoly::from_univariate(const UPoly& coeffs, int nvars) {
  std::vector<MultiPoly> t;
  t.reserve(coeffs.size());
  for (const auto& c : coeffs) t.push_back(constant(c, nvars - 1));
  return from_coeffs(nvars, std::move(t));
}

int MultiPoly::degree() const {
  if (nvars_ == 0) return scalar_ == 0 ? -1 : 0;
  return static_cast<int>(terms_.size()) - 1;
}

int MultiPoly::degree_in(int var) const {
  if (is_zero()) return -1;
  if (var >= nvars_) return 0;
  if (var == nvars_ - 1) return degree();
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.degree_in(var));
  return d;
}

MultiPoly MultiPoly::lead() const {
  if (nvars_ == 0) return *this;
  if (terms_.empty()) return MultiPoly(nvars_ - 1);
  return terms_.back();
}

MultiPoly MultiPoly::coeff(int i) const {
  if (i >= 0 && i < static_cast<int>(terms_.size())) return terms_[i];
  return MultiPoly(nvars_ - 1);
}

bool MultiPoly::is_one() const {
  if (nvars_ == 0) return scalar_ == 1;
  return terms_.size() == 1 && terms_[0].is_one();
}

MultiPoly MultiPoly::lift(int nvars) const {
  MultiPoly r = *this;
  while (r.nvars_ < nvars) {
    MultiPoly w(r.nvars_ + 1);
    if (!r.is_zero()) w.terms_.push_back(std::move(r));
    r = std::move(w);
  }
  return r;
}

namespace {

// Scalar value of a polynomial of degree <= 0 in every variable.
Int constant_value(const MultiPoly& a) {
  if (a.nvars() == 0) return a.scalar();
  if (a.is_zero()) return Int(0);
  if (a.degree() > 0) throw VariableMismatch("polynomial is not constant in its lower variables");
  return constant_value(a.coeffs()[0]);
}

}  // namespace

UPoly MultiPoly::to_univariate() const {
  if (nvars_ == 0) return is_zero() ? UPoly{} : UPoly{scalar_};
  UPoly r;
  r.reserve(terms_.size());
  for (const auto& t : terms_) r.push_back(constant_value(t));
  return r;
}

void MultiPoly::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.nvars_ == 0) return a.scalar_ == b.scalar_;
  return a.terms_ == b.terms_;
}

int compare(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars() ? -1 : 1;
  if (a.nvars() == 0) return a.scalar() < b.scalar() ? -1 : (a.scalar() == b.scalar() ? 0 : 1);
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (int c = compare(a.coeffs()[i], b.coeffs()[i]); c != 0) return c;
  return 0;
}

// ---------------------------------------------------------------------------
// Plain arithmetic

namespace {

template <class Op>
MultiPoly combine(const MultiPoly& a0, const MultiPoly& b0, const Modulus& m, Op op) {
  const int n = std::max(a0.nvars(), b0.nvars());
  const MultiPoly& a = a0.nvars() == n ? a0 : a0.lift(n);
  const MultiPoly& b = b0.nvars() == n ? b0 : b0.lift(n);
  if (n == 0) {
    MultiPoly r;
    r.mutable_scalar() = op(a.scalar(), b.scalar());
    m.reduce_inplace(r.mutable_scalar());
    return r;
  }
  const auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<MultiPoly> t(std::max(ac.size(), bc.size()), MultiPoly(n - 1));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const MultiPoly& x = i < ac.size() ? ac[i] : t[i];
    const MultiPoly& y = i < bc.size() ? bc[i] : t[i];
    t[i] = combine(x, y, m, op);
  }
  return MultiPoly::from_coeffs(n, std::move(t));
}

}  // namespace

MultiPoly add(const MultiPoly& a, const MultiPoly& b, const Modulus& m) {
  return combine(a, b, m, [](const Int& x, const Int& y) { return Int(x + y); });
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b, const Modulus& m) {
  return combine(a, b, m, [](const Int& x, const Int& y) { return Int(x - y); });
}

MultiPoly neg(const MultiPoly& a, const Modulus& m) { return sub(MultiPoly(a.nvars()), a, m); }

MultiPoly mul(const MultiPoly& a0, const MultiPoly& b0, const Modulus& m) {
  const int n = std::max(a0.nvars(), b0.nvars());
  const MultiPoly a = a0.lift(n), b = b0.lift(n);
  if (n == 0) {
    MultiPoly r;
    r.mutable_scalar() = a.scalar() * b.scalar();
    m.reduce_inplace(r.mutable_scalar());
    return r;
  }
  if (a.is_zero() || b.is_zero()) return MultiPoly(n);
  const auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<MultiPoly> t(ac.size() + bc.size() - 1, MultiPoly(n - 1));
  for (std::size_t i = 0; i < ac.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j) t[i + j] = add(t[i + j], mul(ac[i], bc[j], m), m);
  return MultiPoly::from_coeffs(n, std::move(t));
}

MultiPoly scale(const MultiPoly& a, const Int& c, const Modulus& m) {
  if (a.nvars() == 0) {
    MultiPoly r;
    r.mutable_scalar() = a.scalar() * c;
    m.reduce_inplace(r.mutable_scalar());
    return r;
  }
  std::vector<MultiPoly> t;
  t.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) t.push_back(scale(x, c, m));
  return MultiPoly::from_coeffs(a.nvars(), std::move(t));
}

MultiPoly reduce_scalars(const MultiPoly& a, const Modulus& m) {
  if (a.nvars() == 0) return MultiPoly::constant(m.reduce(a.scalar()), 0);
  std::vector<MultiPoly> t;
  t.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) t.push_back(reduce_scalars(x, m));
  return MultiPoly::from_coeffs(a.nvars(), std::move(t));
}

// ---------------------------------------------------------------------------
// Triangular ideals

TriangularIdeal::TriangularIdeal(std::vector<MultiPoly> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& h = gens_[i];
    if (h.nvars() != static_cast<int>(i + 1))
      throw InvalidIdeal("generator " + std::to_string(i) + " must have top variable x_" + std::to_string(i));
    if (h.degree() < 1) throw InvalidIdeal("generator " + std::to_string(i) + " has degree < 1");
    if (!h.lead().is_one()) throw InvalidIdeal("generator " + std::to_string(i) + " is not monic");
  }
}

TriangularIdeal TriangularIdeal::prefix(std::size_t n) const {
  TriangularIdeal r;
  r.gens_.assign(gens_.begin(), gens_.begin() + std::min(n, gens_.size()));
  return r;
}

TriangularIdeal TriangularIdeal::extended(MultiPoly h) const {
  std::vector<MultiPoly> g = gens_;
  g.push_back(std::move(h));
  return TriangularIdeal(std::move(g));
}

std::vector<int> TriangularIdeal::degrees() const {
  std::vector<int> d;
  d.reserve(gens_.size());
  for (const auto& h : gens_) d.push_back(h.degree());
  return d;
}

std::uint64_t TriangularIdeal::degree() const {
  std::uint64_t d = 1;
  for (const auto& h : gens_) d *= static_cast<std::uint64_t>(h.degree());
  return d;
}

// ---------------------------------------------------------------------------
// Reduction machinery

namespace detail {
namespace {

std::span<const MultiPoly> clip(std::span<const MultiPoly> gens, int n) {
  return gens.first(std::min<std::size_t>(gens.size(), static_cast<std::size_t>(std::max(n, 0))));
}

// Long division of r (coefficients reduced modulo `lower`) by b, monic in the
// top variable. Returns the quotient if requested.
void rem_monic_inplace(MultiPoly& r, const MultiPoly& b, std::span<const MultiPoly> lower, const Modulus& m,
                       std::vector<MultiPoly>* quotient) {
  const int db = b.degree();
  assert(db >= 0 && b.lead().is_one());
  auto& t = r.mutable_terms();
  const auto bc = b.coeffs();
  if (quotient) {
    quotient->assign(t.size() > static_cast<std::size_t>(db) ? t.size() - db : 0, MultiPoly(r.nvars() - 1));
  }
  while (static_cast<int>(t.size()) - 1 >= db) {
    MultiPoly lead = std::move(t.back());
    const std::size_t shift = t.size() - 1 - db;
    for (int j = 0; j < db; ++j) t[shift + j] = sub(t[shift + j], mulmod_span(lead, bc[j], lower, m), m);
    if (quotient) (*quotient)[shift] = std::move(lead);
    t.pop_back();
    r.trim();
  }
}

}  // namespace

MultiPoly reduce_span(const MultiPoly& a, std::span<const MultiPoly> gens, const Modulus& m) {
  const int n = a.nvars();
  if (n == 0) return MultiPoly::constant(m.reduce(a.scalar()), 0);
  const auto g = clip(gens, n);
  const auto lower = clip(g, n - 1);
  std::vector<MultiPoly> t;
  t.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) t.push_back(reduce_span(c, lower, m));
  MultiPoly r = MultiPoly::from_coeffs(n, std::move(t));
  if (static_cast<int>(g.size()) == n) rem_monic_inplace(r, g[n - 1], lower, m, nullptr);
  return r;
}

MultiPoly mulmod_span(const MultiPoly& a0, const MultiPoly& b0, std::span<const MultiPoly> gens,
                      const Modulus& m) {
  const int n = std::max(a0.nvars(), b0.nvars());
  if (n == 0) {
    MultiPoly r;
    r.mutable_scalar() = a0.scalar() * b0.scalar();
    m.reduce_inplace(r.mutable_scalar());
    return r;
  }
  const MultiPoly& a = a0.nvars() == n ? a0 : a0.lift(n);
  const MultiPoly& b = b0.nvars() == n ? b0 : b0.lift(n);
  if (a.is_zero() || b.is_zero()) return MultiPoly(n);
  const auto g = clip(gens, n);
  const auto lower = clip(g, n - 1);
  const auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<MultiPoly> t(ac.size() + bc.size() - 1, MultiPoly(n - 1));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j].is_zero()) continue;
      t[i + j] = add(t[i + j], mulmod_span(ac[i], bc[j], lower, m), m);
    }
  }
  MultiPoly r = MultiPoly::from_coeffs(n, std::move(t));
  if (static_cast<int>(g.size()) == n) rem_monic_inplace(r, g[n - 1], lower, m, nullptr);
  return r;
}

namespace {

std::vector<std::size_t> strides_for(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size() + 1, 1);
  for (std::size_t i = 0; i < dims.size(); ++i) s[i + 1] = s[i] * static_cast<std::size_t>(dims[i]);
  return s;
}

void flatten(const MultiPoly& a, const std::vector<std::size_t>& stride, std::vector<Int>& out,
             std::size_t offset) {
  if (a.nvars() == 0) {
    out[offset] = a.scalar();
    return;
  }
  const auto cs = a.coeffs();
  for (std::size_t t = 0; t < cs.size(); ++t) flatten(cs[t], stride, out, offset + t * stride[a.nvars() - 1]);
}

MultiPoly unflatten(const std::vector<Int>& v, const std::vector<int>& dims, const std::vector<std::size_t>& stride,
                    int n, std::size_t offset) {
  if (n == 0) return MultiPoly::constant(v[offset], 0);
  std::vector<MultiPoly> t;
  t.reserve(dims[n - 1]);
  for (int i = 0; i < dims[n - 1]; ++i) t.push_back(unflatten(v, dims, stride, n - 1, offset + i * stride[n - 1]));
  return MultiPoly::from_coeffs(n, std::move(t));
}

MultiPoly monomial(const std::vector<int>& exps, int n) {
  if (n == 0) return MultiPoly::constant(Int(1), 0);
  std::vector<MultiPoly> t(exps[n - 1] + 1, MultiPoly(n - 1));
  t.back() = monomial(exps, n - 1);
  return MultiPoly::from_coeffs(n, std::move(t));
}

bool is_unit(const Int& a, const Modulus& m) { return !mpz_divisible_p(a.get_mpz_t(), m.p().get_mpz_t()); }

}  // namespace

MultiPoly invert_span(const MultiPoly& a, std::span<const MultiPoly> gens, const Modulus& m) {
  const int n = a.nvars();
  if (n == 0) {
    Int r = m.reduce(a.scalar());
    if (!is_unit(r, m)) throw NotInvertible("scalar " + r.get_str() + " is not a unit");
    return MultiPoly::constant(inverse(r, m), 0);
  }
  const auto g = clip(gens, n);
  if (static_cast<int>(g.size()) != n) throw VariableMismatch("invert_mod needs every variable bound by the ideal");

  std::vector<int> dims;
  for (const auto& h : g) dims.push_back(h.degree());
  const auto stride = strides_for(dims);
  const std::size_t N = stride.back();
  const MultiPoly ar = reduce_span(a, g, m);
  if (ar.is_zero()) throw NotInvertible("zero is not invertible");
  // Constant in the top variable: the system is block diagonal, one block per
  // power of x_{n-1}, each a copy of the system one level down.
  if (ar.degree() == 0) return MultiPoly::from_coeffs(n, {invert_span(ar.coeff(0), g.first(n - 1), m)});

  // Column j of M holds the coefficients of a * (basis monomial j).
  std::vector<std::vector<Int>> M(N, std::vector<Int>(N + 1));
  std::vector<int> exps(n);
  std::vector<Int> col(N);
  for (std::size_t j = 0; j < N; ++j) {
    for (int i = 0; i < n; ++i) exps[i] = static_cast<int>((j / stride[i]) % dims[i]);
    std::fill(col.begin(), col.end(), Int(0));
    flatten(mulmod_span(ar, monomial(exps, n), g, m), stride, col, 0);
    for (std::size_t r = 0; r < N; ++r) M[r][j] = col[r];
  }
  M[0][N] = 1;

  // Gauss-Jordan over Z/p^k with unit pivots.
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && !is_unit(M[piv][c], m)) ++piv;
    if (piv == N) throw NotInvertible("element is a zerodivisor modulo the ideal");
    std::swap(M[piv], M[c]);
    const Int inv = inverse(M[c][c], m);
    for (std::size_t k = c; k <= N; ++k) {
      M[c][k] *= inv;
      m.reduce_inplace(M[c][k]);
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || M[r][c] == 0) continue;
      const Int f = M[r][c];
      for (std::size_t k = c; k <= N; ++k) {
        M[r][k] -= f * M[c][k];
        m.reduce_inplace(M[r][k]);
      }
    }
  }
  std::vector<Int> u(N);
  for (std::size_t r = 0; r < N; ++r) u[r] = M[r][N];
  return unflatten(u, dims, stride, n, 0);
}

namespace {

// b * u with u a polynomial in the lower variables, coefficientwise.
MultiPoly scale_by(const MultiPoly& b, const MultiPoly& u, std::span<const MultiPoly> lower, const Modulus& m) {
  std::vector<MultiPoly> t;
  t.reserve(b.coeffs().size());
  for (const auto& c : b.coeffs()) t.push_back(mulmod_span(c, u, lower, m));
  return MultiPoly::from_coeffs(b.nvars(), std::move(t));
}

void sort_factors(std::vector<MultiPoly>& f) {
  std::sort(f.begin(), f.end(), [](const MultiPoly& a, const MultiPoly& b) { return compare(a, b) < 0; });
}

}  // namespace

std::optional<Factorization> find_zero_divisor(const MultiPoly& a, std::span<const MultiPoly> gens,
                                               const Modulus& fp) {
  const int n = a.nvars();
  if (n == 0 || a.is_zero()) return std::nullopt;
  const auto g = clip(gens, n);
  if (static_cast<int>(g.size()) != n) throw VariableMismatch("zerodivisor test needs every variable bound");
  const auto lower = clip(g, n - 1);
  // Constant in x_{n-1}: the quotient is free over the lower ring, so the
  // question is decided one level down.
  if (a.degree() == 0) return find_zero_divisor(a.coeff(0), lower, fp);
  // The first Euclid step of the gcd below tests lc(a) itself, so a separate
  // check on the leading coefficient would double the recursion per level.
  auto outcome = gcd_span(g[n - 1], a, lower, fp);
  if (auto* f = std::get_if<Factorization>(&outcome)) return std::move(*f);
  MultiPoly& d = std::get<MultiPoly>(outcome);
  if (d.degree() < 1) return std::nullopt;

  MultiPoly r = g[n - 1];
  std::vector<MultiPoly> q;
  rem_monic_inplace(r, d, lower, fp, &q);
  assert(r.is_zero());
  Factorization ev{static_cast<std::size_t>(n - 1), {d, MultiPoly::from_coeffs(n, std::move(q))}};
  sort_factors(ev.factors);
  return ev;
}

GcdOutcome gcd_span(MultiPoly a, MultiPoly b, std::span<const MultiPoly> gens, const Modulus& fp) {
  const int n = static_cast<int>(gens.size()) + 1;
  a = a.lift(n);
  b = b.lift(n);
  if (a.nvars() != n || b.nvars() != n) throw VariableMismatch("gcd operands use variables above the free variable");
  for (;;) {
    if (b.is_zero()) {
      if (a.is_zero()) return a;
      std::swap(a, b);
    }
    const MultiPoly lc = b.lead();
    if (auto e = find_zero_divisor(lc, gens, fp)) return std::move(*e);
    MultiPoly bm = scale_by(b, invert_span(lc, gens, fp), gens, fp);
    MultiPoly c = std::move(a);
    rem_monic_inplace(c, bm, gens, fp, nullptr);
    if (c.is_zero()) return bm;
    a = std::move(bm);
    b = std::move(c);
  }
}

namespace {

enum class ZdStatus { zero, unit, zero_divisor };

// Exact classification of a reduced a. A split met in a lower generator does
// not by itself decide the question, so each branch is classified separately.
ZdStatus classify(const MultiPoly& a, std::span<const MultiPoly> gens, const Modulus& fp) {
  if (a.is_zero()) return ZdStatus::zero;
  const int n = a.nvars();
  if (n == 0) return ZdStatus::unit;
  const auto g = clip(gens, n);
  const auto lower = clip(g, n - 1);
  if (a.degree() == 0) return classify(a.coeff(0), lower, fp);
  auto outcome = gcd_span(g[n - 1], a, lower, fp);
  if (auto* d = std::get_if<MultiPoly>(&outcome))
    return d->degree() >= 1 ? ZdStatus::zero_divisor : ZdStatus::unit;
  const auto& ev = std::get<Factorization>(outcome);
  bool any_zero = false, any_nonzero = false;
  for (const auto& factor : ev.factors) {
    std::vector<MultiPoly> branch(g.begin(), g.end());
    branch[ev.index] = factor;
    for (std::size_t i = ev.index + 1; i < branch.size(); ++i)
      branch[i] = reduce_span(branch[i], std::span<const MultiPoly>(branch).first(i), fp);
    const ZdStatus s = classify(reduce_span(a, branch, fp), branch, fp);
    if (s == ZdStatus::zero_divisor) return s;
    (s == ZdStatus::zero ? any_zero : any_nonzero) = true;
  }
  if (any_zero && any_nonzero) return ZdStatus::zero_divisor;
  return any_zero ? ZdStatus::zero : ZdStatus::unit;
}

}  // namespace

}  // namespace detail

// ---------------------------------------------------------------------------
// Public entry points

MultiPoly reduce(const MultiPoly& a, const TriangularIdeal& J, const Modulus& m) {
  if (a.nvars() > static_cast<int>(J.length()) + 1)
    throw VariableMismatch("polynomial uses a variable above the ideal's free variable");
  return detail::reduce_span(a, J.generators(), m);
}

MultiPoly mul_mod(const MultiPoly& a, const MultiPoly& b, const TriangularIdeal& J, const Modulus& m) {
  if (std::max(a.nvars(), b.nvars()) > static_cast<int>(J.length()) + 1)
    throw VariableMismatch("polynomial uses a variable above the ideal's free variable");
  return detail::mulmod_span(a, b, J.generators(), m);
}

MultiPoly invert_mod(const MultiPoly& a, const TriangularIdeal& J, const Modulus& m) {
  if (a.nvars() > static_cast<int>(J.length())) throw VariableMismatch("invert_mod operand uses an unbound variable");
  return detail::invert_span(a, J.generators(), m);
}

std::pair<MultiPoly, MultiPoly> divrem_monic(const MultiPoly& a, const MultiPoly& b, const TriangularIdeal& J,
                                             const Modulus& m) {
  const int n = std::max(a.nvars(), b.nvars());
  if (n == 0 || n > static_cast<int>(J.length()) + 1) throw VariableMismatch("divrem_monic: bad variable count");
  if (b.lift(n).degree() < 0 || !b.lift(n).lead().is_one()) throw InvalidIdeal("divisor is not monic");
  const auto lower = J.generators().first(std::min<std::size_t>(J.length(), n - 1));
  MultiPoly r = detail::reduce_span(a.lift(n), lower, m);
  std::vector<MultiPoly> q;
  detail::rem_monic_inplace(r, b.lift(n), lower, m, &q);
  return {MultiPoly::from_coeffs(n, std::move(q)), std::move(r)};
}

ZeroDivTest test_zero_div(const MultiPoly& a, const TriangularIdeal& I, const Modulus& fp) {
  if (a.nvars() > static_cast<int>(I.length())) throw VariableMismatch("zerodivisor test operand uses an unbound variable");
  const MultiPoly ar = detail::reduce_span(a, I.generators(), fp);
  ZeroDivTest out;
  if (detail::classify(ar, I.generators(), fp) != detail::ZdStatus::zero_divisor) return out;
  out.is_zero_divisor = true;
  out.evidence = detail::find_zero_divisor(ar, I.generators(), fp);
  assert(out.evidence);
  return out;
}

GcdOutcome gcd_mod(const MultiPoly& a, const MultiPoly& b, const TriangularIdeal& I, const Modulus& fp) {
  const int n = static_cast<int>(I.length()) + 1;
  if (a.nvars() > n || b.nvars() > n) throw VariableMismatch("gcd operands use variables above the free variable");
  return detail::gcd_span(detail::reduce_span(a.lift(n), I.generators(), fp),
                          detail::reduce_span(b.lift(n), I.generators(), fp), I.generators(), fp);
}

namespace {

unsigned min_valuation(const MultiPoly& a, const Modulus& m, unsigned best) {
  if (a.nvars() == 0) {
    if (a.scalar() == 0) return best;
    return std::min(best, padic_valuation(a.scalar(), m).v);
  }
  for (const auto& c : a.coeffs()) {
    best = min_valuation(c, m, best);
    if (best == 0) break;
  }
  return best;
}

MultiPoly divide_scalars(const MultiPoly& a, const Int& d) {
  if (a.nvars() == 0) {
    MultiPoly r;
    mpz_divexact(r.mutable_scalar().get_mpz_t(), a.scalar().get_mpz_t(), d.get_mpz_t());
    return r;
  }
  std::vector<MultiPoly> t;
  t.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) t.push_back(divide_scalars(c, d));
  return MultiPoly::from_coeffs(a.nvars(), std::move(t));
}

}  // namespace

ContentValuation content_valuation(const MultiPoly& fI, const Modulus& m) {
  const MultiPoly r = reduce_scalars(fI, m);
  const unsigned alpha = min_valuation(r, m, m.k());
  if (alpha >= m.k()) return {m.k(), MultiPoly(fI.nvars())};
  return {alpha, divide_scalars(r, m.pow_p(alpha))};
}

MultiPoly taylor_shift_reduce(const MultiPoly& fI, const TriangularIdeal& J, const Modulus& m) {
  if (J.empty()) throw InvalidIdeal("taylor_shift_reduce needs a nonempty ideal");
  const int L = static_cast<int>(J.length()) - 1;  // index of the new variable
  if (fI.nvars() > L + 1) throw VariableMismatch("f_I must live in x_0..x_{l} and the free variable");
  const MultiPoly f = fI.lift(L + 1);
  const auto gens = J.generators();
  const auto lower = gens.first(L);
  const MultiPoly& h = gens[L];

  // Coefficients of f in x, embedded as constants in x_{l+1}.
  std::vector<MultiPoly> c;
  c.reserve(f.coeffs().size());
  for (const auto& t : f.coeffs()) c.push_back(detail::reduce_span(t.lift(L + 1), gens, m));
  const int D = static_cast<int>(c.size()) - 1;

  auto times_new_var = [&](const MultiPoly& a) {
    if (a.is_zero()) return a;
    std::vector<MultiPoly> t;
    t.reserve(a.coeffs().size() + 1);
    t.emplace_back(L);
    for (const auto& x : a.coeffs()) t.push_back(x);
    MultiPoly r = MultiPoly::from_coeffs(L + 1, std::move(t));
    detail::rem_monic_inplace(r, h, lower, m, nullptr);
    return r;
  };

  // Horner-style Taylor shift: afterwards c[j] = sum_i binom(i, j) x_{l+1}^{i-j} c_i.
  for (int i = 0; i < D; ++i)
    for (int j = D - 1; j >= i; --j) c[j] = add(c[j], times_new_var(c[j + 1]), m);

  std::vector<MultiPoly> out;
  out.reserve(c.size());
  Int pj = 1;
  for (int j = 0; j <= D; ++j) {
    if (static_cast<unsigned>(j) >= m.k()) break;
    out.push_back(scale(c[j], pj, m));
    pj *= m.p();
  }
  return MultiPoly::from_coeffs(L + 2, std::move(out));
}

MultiPoly frobenius_reduce(const Int& q, const TriangularIdeal& I, const MultiPoly& gtilde, const Modulus& m) {
  const int n = static_cast<int>(I.length()) + 1;
  if (gtilde.nvars() != n) throw VariableMismatch("gtilde must have the free variable on top");
  if (gtilde.degree() < 1 || !gtilde.lead().is_one()) throw InvalidIdeal("gtilde must be monic of degree >= 1");
  std::vector<MultiPoly> ext(I.generators().begin(), I.generators().end());
  ext.push_back(gtilde);
  const MultiPoly x = detail::reduce_span(MultiPoly::variable(n - 1, n), ext, m);
  MultiPoly acc = detail::reduce_span(MultiPoly::constant(Int(1), n), ext, m);
  const auto bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (long i = static_cast<long>(bits) - 1; i >= 0; --i) {
    acc = detail::mulmod_span(acc, acc, ext, m);
    if (mpz_tstbit(q.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = detail::mulmod_span(acc, x, ext, m);
  }
  return sub(acc, x, m);
}

}  // namespace pkroots
