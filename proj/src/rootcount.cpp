#include "pkroots/rootcount.hpp"

#include <algorithm>
#include <cassert>

#include "pkroots/errors.hpp"

namespace pkroots {
namespace {

std::shared_ptr<const SplitContext> make_context(UPoly f, const Modulus& mod, unsigned b) {
  return std::make_shared<const SplitContext>(SplitContext{std::move(f), mod, b});
}

void tally(CountReport& rep, const Modulus& mod) {
  rep.root_count = 0;
  for (const auto& m : rep.msis) rep.root_count += represented_root_count(m, mod, rep.galois_degree);
}

// Replace the generator at `index` by each factor in every stack entry that
// shares the generators 0..index with `parent`. Children take their parent's
// place, in factor order.
void apply_split(std::vector<StackEntry>& stack, const StackEntry& parent, const Factorization& ev,
                 SplitRefresh refresh) {
  const auto pg = parent.ideal.base().generators();
  std::vector<StackEntry> next;
  next.reserve(stack.size() + ev.factors.size());
  for (auto& s : stack) {
    const auto sg = s.ideal.base().generators();
    const bool shares = sg.size() > ev.index && std::equal(pg.begin(), pg.begin() + ev.index + 1, sg.begin());
    if (!shares) {
      next.push_back(std::move(s));
      continue;
    }
    for (auto& c : split_entry(s, ev.index, ev.factors, refresh)) next.push_back(std::move(c));
  }
  stack = std::move(next);
}

}  // namespace

UPoly normalize_input(const UPoly& f, const Modulus& mod, bool normalize) {
  UPoly g = upoly::reduce(f, mod.pk());
  if (upoly::degree(g) < 1) return g;
  const Int& lc = g.back();
  if (mpz_divisible_p(lc.get_mpz_t(), mod.p().get_mpz_t()))
    throw NotMonicModP("leading coefficient is divisible by p");
  if (normalize && lc != 1) g = upoly::scale(g, inverse(lc, mod), mod.pk());
  return g;
}

std::optional<CountReport> count_all_residue_roots_shortcut(const UPoly& f, const Modulus& mod,
                                                            unsigned galois_degree) {
  const UPoly g = upoly::reduce(f, mod.pk());
  const int d = upoly::degree(g);
  if (d >= 1) return std::nullopt;
  CountReport rep;
  rep.galois_degree = galois_degree;
  rep.degree = d;
  if (d < 0) {
    rep.msis.push_back(MaximalSplitIdeal{SplitIdeal(TriangularIdeal{}, make_context(g, mod, galois_degree)), 0, 1});
  }
  tally(rep, mod);
  return rep;
}

CountReport count_roots(const UPoly& f_in, const Modulus& mod, const CountOptions& opts) {
  const unsigned b = opts.galois_degree;
  if (b == 0) throw InvalidModulus("Galois degree must be positive");
  if (auto rep = count_all_residue_roots_shortcut(f_in, mod, b)) return *rep;

  const UPoly f = normalize_input(f_in, mod, opts.normalize);
  const Modulus fp = mod.field();
  const Int q = ipow(mod.p(), b);
  const auto ctx = make_context(f, mod, b);

  CountReport rep;
  rep.galois_degree = b;
  rep.degree = upoly::degree(f);

  // h_0 = gcd(f mod p, x^q - x)
  const UPoly ft = upoly::reduce(f, mod.p());
  UPoly xq = upoly::powmod(upoly::x_power(1), q, ft, mod.p());
  xq = upoly::sub(xq, upoly::x_power(1), mod.p());
  const UPoly h0 = upoly::gcd(ft, xq, mod.p());
  if (upoly::degree(h0) < 1) {
    tally(rep, mod);
    return rep;
  }
  const TriangularIdeal U0({MultiPoly::from_univariate(h0, 1)});
  rep.stats.max_ideal_degree = U0.degree();

  if (mod.k() == 1) {
    rep.msis.push_back(MaximalSplitIdeal{SplitIdeal(U0, ctx), 1, U0.degree()});
    tally(rep, mod);
    return rep;
  }

  std::vector<StackEntry> stack;
  stack.push_back(StackEntry{SplitIdeal(U0, ctx), tagged_polynomial(f, U0, mod)});

  while (!stack.empty()) {
    StackEntry entry = std::move(stack.back());
    stack.pop_back();
    ++rep.stats.pops;

    const TriangularIdeal& I = entry.ideal.base();
    const std::size_t L = I.length();
    rep.stats.max_ideal_degree = std::max(rep.stats.max_ideal_degree, I.degree());
    ContentValuation cv = content_valuation(entry.fU, mod);
    if (L > mod.k() || cv.alpha < L) ++rep.stats.stack_invariant_violations;
    if (opts.on_pop) opts.on_pop(PopEvent{entry, cv.alpha, stack});

    if (cv.alpha >= mod.k()) {
      rep.msis.push_back(MaximalSplitIdeal{entry.ideal, L, I.degree()});
      continue;
    }

    auto split = [&](const Factorization& ev) {
      ++rep.stats.splits;
      const StackEntry parent = entry;
      stack.push_back(std::move(entry));
      apply_split(stack, parent, ev, opts.refresh);
    };

    const MultiPoly gt = reduce_scalars(cv.g, fp);
    const MultiPoly g1 = gt.lead();
    // Any generator factorization met while testing g1 is a valid split, even
    // when g1 itself turns out to be a unit.
    if (auto ev = detail::find_zero_divisor(g1, I.generators(), fp)) {
      split(*ev);
      continue;
    }
    const MultiPoly u = invert_mod(g1, I, fp);
    const MultiPoly gm = reduce(mul(gt, u.lift(gt.nvars()), fp), I, fp);
    if (gm.degree() < 1) {
      ++rep.stats.dead_ends;
      continue;
    }
    const MultiPoly frob = frobenius_reduce(q, I, gm, fp);
    GcdOutcome gcd = gcd_mod(gm, frob, I, fp);
    if (auto* ev = std::get_if<Factorization>(&gcd)) {
      split(*ev);
      continue;
    }
    MultiPoly& h = std::get<MultiPoly>(gcd);
    if (h.degree() < 1) {
      ++rep.stats.dead_ends;
      continue;
    }
    TriangularIdeal J = I.extended(std::move(h));
    MultiPoly fJ = taylor_shift_reduce(entry.fU, J, mod);
    rep.stats.max_ideal_degree = std::max(rep.stats.max_ideal_degree, J.degree());
    stack.push_back(StackEntry{SplitIdeal(std::move(J), ctx), std::move(fJ)});
  }

  tally(rep, mod);
  return rep;
}

}  // namespace pkroots
