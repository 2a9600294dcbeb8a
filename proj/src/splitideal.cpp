#include "pkroots/splitideal.hpp"

#include <algorithm>

#include "pkroots/errors.hpp"

namespace pkroots {
namespace {

// Z/p^k viewed through the interface evaluate() expects.
struct ResidueRing {
  using Elem = Int;
  const Modulus& mod;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& a) const { return mod.reduce(a); }
  Elem add(const Elem& a, const Elem& b) const { return mod.reduce(a + b); }
  Elem mul(const Elem& a, const Elem& b) const { return mod.reduce(a * b); }
};

}  // namespace

MultiPoly tagged_polynomial(const UPoly& f, const TriangularIdeal& U, const Modulus& m) {
  MultiPoly F = MultiPoly::from_univariate(upoly::reduce(f, m.pk()), 1);
  for (std::size_t t = 0; t < U.length(); ++t) F = taylor_shift_reduce(F, U.prefix(t + 1), m);
  return F;
}

std::vector<StackEntry> split_entry(const StackEntry& entry, std::size_t gen_index,
                                    std::span<const MultiPoly> factors, SplitRefresh refresh) {
  const auto& base = entry.ideal.base();
  const auto& ctx = entry.ideal.context();
  const Modulus fp = ctx.mod.field();
  if (gen_index >= base.length()) throw InvalidFactorization("generator index out of range");
  if (factors.size() < 2) throw InvalidFactorization("a split needs at least two factors");

  const auto gens = base.generators();
  const auto lower = gens.first(gen_index);
  const int nv = static_cast<int>(gen_index) + 1;

  MultiPoly product = MultiPoly::constant(1, nv);
  for (const auto& g : factors) {
    if (g.nvars() != nv || g.degree() < 1 || !g.lead().is_one())
      throw InvalidFactorization("factors must be monic of positive degree in x_" + std::to_string(gen_index));
    product = detail::mulmod_span(product, detail::reduce_span(g, lower, fp), lower, fp);
  }
  if (!(product == detail::reduce_span(gens[gen_index], lower, fp)))
    throw InvalidFactorization("factors do not multiply to the generator");

  std::vector<StackEntry> out;
  out.reserve(factors.size());
  for (const auto& g : factors) {
    std::vector<MultiPoly> child(lower.begin(), lower.end());
    child.push_back(detail::reduce_span(g, lower, fp));
    for (std::size_t t = gen_index + 1; t < gens.size(); ++t) child.push_back(detail::reduce_span(gens[t], child, fp));
    TriangularIdeal U(std::move(child));
    MultiPoly fU = refresh == SplitRefresh::recompute ? tagged_polynomial(ctx.f, U, ctx.mod)
                                                      : reduce(entry.fU, U, ctx.mod);
    out.push_back(StackEntry{SplitIdeal(std::move(U), entry.ideal.context_ptr()), std::move(fU)});
  }
  return out;
}

Int represented_root_count(const MaximalSplitIdeal& M, const Modulus& mod, unsigned galois_degree) {
  if (M.length > mod.k()) throw InvalidIdeal("maximal split ideal longer than k");
  const Int q = ipow(mod.p(), galois_degree);
  return Int(static_cast<unsigned long>(M.degree)) * ipow(q, mod.k() - M.length);
}

// ---------------------------------------------------------------------------

std::vector<ZeroTuple> enumerate_zeroset(const TriangularIdeal& I, const oracle::FiniteField& F, std::uint64_t cap) {
  std::vector<ZeroTuple> out;
  ZeroTuple point(I.length(), 0);
  std::uint64_t work = 0;
  const std::uint64_t q = F.size();

  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (level == I.length()) {
      out.push_back(point);
      return;
    }
    for (std::uint64_t t = 0; t < q; ++t) {
      if (++work > cap) throw CapExceeded("zeroset enumeration exceeds the cap");
      point[level] = t;
      std::span<const oracle::FiniteField::Elem> pt(point.data(), level + 1);
      if (evaluate(I[level], pt, F) == F.zero()) self(self, level + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<std::vector<Int>> lifted_zeroset(const TriangularIdeal& I, const Modulus& mod, std::uint64_t cap) {
  const oracle::FiniteField F(mod.p().get_ui(), 1);
  const ResidueRing R{mod};
  std::vector<std::vector<Int>> out;
  for (const auto& z : enumerate_zeroset(I, F, cap)) {
    std::vector<Int> a;
    a.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      // Specialize h_i at the lifted prefix and run Newton on the univariate result.
      UPoly u;
      for (const auto& c : I[i].coeffs()) u.push_back(evaluate(c, std::span<const Int>(a), R));
      const UPoly du = upoly::derivative(u, mod.pk());
      Int r(static_cast<unsigned long>(z[i]));
      for (unsigned it = 0; it < mod.k(); ++it) {
        const Int d = upoly::eval(du, r, mod.pk());
        if (mpz_divisible_p(d.get_mpz_t(), mod.p().get_mpz_t())) throw InvalidIdeal("zero is not simple");
        r = mod.reduce(r - upoly::eval(u, r, mod.pk()) * inverse(d, mod));
      }
      a.push_back(r);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Int> represented_roots(const MaximalSplitIdeal& M, const Modulus& mod, std::uint64_t cap) {
  const std::size_t L = M.length;
  if (L > mod.k()) throw InvalidIdeal("maximal split ideal longer than k");
  const Int span = mod.pow_p(mod.k() - static_cast<unsigned>(L));
  const Int step = mod.pow_p(static_cast<unsigned>(L));
  const auto zeros = lifted_zeroset(M.ideal.base(), mod, cap);
  if (Int(static_cast<unsigned long>(zeros.size())) * span > Int(static_cast<unsigned long>(cap)))
    throw CapExceeded("represented root set exceeds the cap");
  std::vector<Int> out;
  for (const auto& a : zeros) {
    Int base = 0;
    for (std::size_t i = a.size(); i-- > 0;) base = base * mod.p() + a[i];
    base = mod.reduce(base);
    for (Int t = 0; t < span; ++t) out.push_back(mod.reduce(base + step * t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SplitCheck verify_split_ideal(const SplitIdeal& I, std::uint64_t cap) {
  const auto& ctx = I.context();
  const oracle::FiniteField F(ctx.mod.p().get_ui(), ctx.galois_degree);
  SplitCheck check;
  const auto zeros = enumerate_zeroset(I.base(), F, cap);
  check.zero_count_matches = zeros.size() == I.degree();

  const unsigned L = static_cast<unsigned>(I.length());
  if (L == 0) {
    check.prefixes_vanish = true;
    return check;
  }
  if (ctx.galois_degree == 1) {
    const Modulus mL = ctx.mod.with_exponent(std::min(L, ctx.mod.k()));
    check.prefixes_vanish = true;
    for (const auto& a : lifted_zeroset(I.base(), ctx.mod, cap)) {
      Int r = 0;
      for (std::size_t i = a.size(); i-- > 0;) r = r * ctx.mod.p() + a[i];
      if (upoly::eval(ctx.f, r, mL.pk()) != 0) check.prefixes_vanish = false;
    }
  } else {
    // Over F_q only the first digit is checked: f(a_0) = 0 in F_q.
    const UPoly f = upoly::reduce(ctx.f, ctx.mod.p());
    const MultiPoly F0 = MultiPoly::from_univariate(f, 1);
    check.prefixes_vanish = std::all_of(zeros.begin(), zeros.end(), [&](const ZeroTuple& z) {
      return evaluate(F0, std::span<const oracle::FiniteField::Elem>(z.data(), 1), F) == F.zero();
    });
  }
  return check;
}

bool prefix_free(const TriangularIdeal& a, const TriangularIdeal& b, const oracle::FiniteField& F,
                 std::uint64_t cap) {
  const bool a_short = a.length() <= b.length();
  const auto& s = a_short ? a : b;
  const auto& l = a_short ? b : a;
  const auto zs = enumerate_zeroset(s, F, cap);
  const auto zl = enumerate_zeroset(l, F, cap);
  for (const auto& x : zl)
    for (const auto& y : zs)
      if (std::equal(y.begin(), y.end(), x.begin())) return false;
  return true;
}

}  // namespace pkroots
