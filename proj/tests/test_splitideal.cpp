#include <doctest.h>

#include <algorithm>
#include <memory>

#include "pkroots/errors.hpp"
#include "pkroots/rootcount.hpp"
#include "pkroots/splitideal.hpp"
#include "support.hpp"

using namespace pkroots;

namespace {

MultiPoly X(int i, int n) { return MultiPoly::variable(i, n); }
MultiPoly C(long c, int n) { return MultiPoly::constant(Int(c), n); }

StackEntry make_entry(const UPoly& f, const Modulus& mod, TriangularIdeal I) {
  auto ctx = std::make_shared<const SplitContext>(SplitContext{f, mod, 1});
  MultiPoly fU = tagged_polynomial(f, I, mod);
  return StackEntry{SplitIdeal(std::move(I), ctx), std::move(fU)};
}

MaximalSplitIdeal msi(std::size_t length, std::uint64_t degree) {
  auto ctx = std::make_shared<const SplitContext>(SplitContext{UPoly{0, 1}, Modulus(2, 1), 1});
  return MaximalSplitIdeal{SplitIdeal(TriangularIdeal{}, ctx), length, degree};
}

}  // namespace

TEST_CASE("split_entry on a linear split") {
  const Modulus f2(2, 1), m(2, 3);
  const TriangularIdeal I({add(mul(X(0, 1), X(0, 1), f2), X(0, 1), f2)});
  const StackEntry e = make_entry(UPoly{0, 1, 1}, m, I);  // x^2 + x
  const std::vector<MultiPoly> factors{X(0, 1), add(X(0, 1), C(1, 1), f2)};
  const auto kids = split_entry(e, 0, factors);
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].ideal.base() == TriangularIdeal({X(0, 1)}));
  CHECK(kids[1].ideal.base() == TriangularIdeal({add(X(0, 1), C(1, 1), f2)}));
  for (const auto& k : kids) CHECK(k.fU == tagged_polynomial(k.ideal.context().f, k.ideal.base(), m));
}

TEST_CASE("split_entry rejects trivial or wrong factorizations") {
  const Modulus f2(2, 1), m(2, 3);
  const TriangularIdeal I({add(mul(X(0, 1), X(0, 1), f2), X(0, 1), f2)});
  const StackEntry e = make_entry(UPoly{0, 1, 1}, m, I);
  const std::vector<MultiPoly> one{I[0]};
  CHECK_THROWS_AS(split_entry(e, 0, one), InvalidFactorization);
  const std::vector<MultiPoly> wrong{X(0, 1), X(0, 1)};
  CHECK_THROWS_AS(split_entry(e, 0, wrong), InvalidFactorization);
}

TEST_CASE("split_entry on the first of two Boolean generators") {
  const Modulus f2(2, 1), m(2, 3);
  const oracle::FiniteField F(2, 1);
  const MultiPoly x1 = X(1, 2);
  const TriangularIdeal I({add(mul(X(0, 1), X(0, 1), f2), X(0, 1), f2), add(mul(x1, x1, f2), x1, f2)});
  // f = x(x-1)(x-2)(x-3) vanishes mod 4 at every a_0 + 2 a_1
  const UPoly f = upoly::reduce(
      upoly::mul_z(upoly::mul_z(UPoly{0, 1}, UPoly{-1, 1}), upoly::mul_z(UPoly{-2, 1}, UPoly{-3, 1})), Int(8));
  const StackEntry e = make_entry(f, m, I);
  CHECK(verify_split_ideal(e.ideal).ok());
  const std::vector<MultiPoly> factors{X(0, 1), add(X(0, 1), C(1, 1), f2)};
  for (auto refresh : {SplitRefresh::recompute, SplitRefresh::reduce_only}) {
    const auto kids = split_entry(e, 0, factors, refresh);
    REQUIRE(kids.size() == 2);
    CHECK(kids[0].ideal.base() == TriangularIdeal({X(0, 1), I[1]}));
    CHECK(kids[1].ideal.base() == TriangularIdeal({add(X(0, 1), C(1, 1), f2), I[1]}));
    std::vector<ZeroTuple> all;
    for (const auto& k : kids) {
      CHECK(k.fU.nvars() == 3);
      const auto z = enumerate_zeroset(k.ideal.base(), F);
      CHECK(z.size() == 2);
      all.insert(all.end(), z.begin(), z.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == enumerate_zeroset(I, F));
  }
}

TEST_CASE("split_entry re-reduces later generators") {
  const Modulus f3(3, 1), m(3, 2);
  const MultiPoly x0 = X(0, 2), x1 = X(1, 2);
  // h1 = x1 - x0^2 reduces to x1 - x0 once x0^2 - x0 is split into x0 and x0 - 1
  const TriangularIdeal I({sub(mul(X(0, 1), X(0, 1), f3), X(0, 1), f3), sub(x1, mul(x0, x0, f3), f3)});
  const StackEntry e = make_entry(UPoly{0, 1}, m, I);
  const std::vector<MultiPoly> factors{X(0, 1), sub(X(0, 1), C(1, 1), f3)};
  const auto kids = split_entry(e, 0, factors);
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].ideal.base()[1] == x1);
  CHECK(kids[1].ideal.base()[1] == sub(x1, C(1, 2), f3));
}

TEST_CASE("represented_root_count examples") {
  CHECK(represented_root_count(msi(2, 1), Modulus(5, 2)) == 1);
  CHECK(represented_root_count(msi(1, 3), Modulus(3, 2)) == 9);
  CHECK(represented_root_count(msi(1, 2), Modulus(2, 3), 2) == 2 * 16);
  const auto rep = count_roots(UPoly{0, 0, 1}, Modulus(2, 3));
  REQUIRE(rep.msis.size() == 1);
  CHECK(rep.msis[0].length == 2);
  CHECK(rep.msis[0].degree == 1);
  CHECK(represented_root_count(rep.msis[0], Modulus(2, 3)) == 2);
  CHECK(represented_roots(rep.msis[0], Modulus(2, 3)) == std::vector<Int>{0, 4});
}

TEST_CASE("enumerate_zeroset examples") {
  const Modulus f3(3, 1), f2(2, 1);
  CHECK(enumerate_zeroset(TriangularIdeal({X(0, 1)}), oracle::FiniteField(5, 1)) == std::vector<ZeroTuple>{{0}});

  const TriangularIdeal I({sub(mul(X(0, 1), X(0, 1), f3), X(0, 1), f3), sub(X(1, 2), X(0, 2), f3)});
  CHECK(enumerate_zeroset(I, oracle::FiniteField(3, 1)) == std::vector<ZeroTuple>{{0, 0}, {1, 1}});

  const oracle::FiniteField F4(2, 2);
  const TriangularIdeal J({add(add(mul(X(0, 1), X(0, 1), f2), X(0, 1), f2), C(1, 1), f2)});
  const auto z = enumerate_zeroset(J, F4);
  // F_4 elements are encoded c_0 + 2 c_1; the two outside F_2 are 2 and 3
  CHECK(z == std::vector<ZeroTuple>{{2}, {3}});
  CHECK(enumerate_zeroset(J, oracle::FiniteField(2, 1)).empty());
}

TEST_CASE("enumerate_zeroset respects the cap") {
  const Modulus f5(5, 1);
  std::vector<MultiPoly> gens;
  for (int i = 0; i < 6; ++i) {
    MultiPoly h = sub(mul(X(i, i + 1), X(i, i + 1), f5), C(1, i + 1), f5);
    gens.push_back(h);
  }
  CHECK_THROWS_AS(enumerate_zeroset(TriangularIdeal(gens), oracle::FiniteField(5, 1), 100), CapExceeded);
}

TEST_CASE("lifted zeros are zeros of the lift") {
  const Modulus f3(3, 1), m(3, 4);
  const TriangularIdeal I({sub(mul(X(0, 1), X(0, 1), f3), C(1, 1), f3)});
  const auto z = lifted_zeroset(I, m);
  REQUIRE(z.size() == 2);
  // the lift reads the generator x0^2 + 2 with its canonical coefficients
  for (const auto& a : z) CHECK(m.reduce(a[0] * a[0] + 2) == 0);
}

TEST_CASE("prefix_free detects shared prefixes") {
  const Modulus f2(2, 1);
  const oracle::FiniteField F(2, 1);
  const TriangularIdeal a({X(0, 1)});
  const TriangularIdeal b({X(0, 1), add(X(1, 2), C(1, 2), f2)});
  const TriangularIdeal c({add(X(0, 1), C(1, 1), f2), X(1, 2)});
  CHECK_FALSE(prefix_free(a, b, F));
  CHECK(prefix_free(a, c, F));
  CHECK(prefix_free(b, c, F));
}

// ---------------------------------------------------------------------------
// Properties of every ideal the root counter constructs

TEST_CASE("every popped ideal is split, tagged correctly and prefix-free with the live stack") {
  std::size_t pops = 0, checked_pairs = 0;
  for (const auto& inst : testsupport::root_corpus(150, 99)) {
    const Modulus mod(inst.p, inst.k);
    const oracle::FiniteField F(inst.p, 1);
    CountOptions opts;
    opts.on_pop = [&](const PopEvent& ev) {
      ++pops;
      const auto& I = ev.entry.ideal;
      const auto chk = verify_split_ideal(I);
      CHECK(chk.zero_count_matches);
      CHECK(chk.prefixes_vanish);
      CHECK(ev.entry.fU == tagged_polynomial(I.context().f, I.base(), mod));
      for (const auto& other : ev.stack) {
        ++checked_pairs;
        CHECK(prefix_free(I.base(), other.ideal.base(), F));
      }
    };
    const auto rep = count_roots(inst.f, mod, opts);
    for (const auto& M : rep.msis) {
      CHECK(verify_split_ideal(M.ideal).ok());
      CHECK(M.degree == M.ideal.degree());
      CHECK(M.length == M.ideal.length());
    }
  }
  CHECK(pops > 0);
  MESSAGE("pops " << pops << ", live pairs " << checked_pairs);
}
