#include <doctest.h>

#include <random>

#include "pkroots/errors.hpp"
#include "pkroots/factorcount.hpp"
#include "pkroots/oracle.hpp"
#include "support.hpp"

using namespace pkroots;

namespace {

UPoly product(const std::vector<UPoly>& fs, const Int& m) {
  UPoly acc{1};
  for (const auto& f : fs) acc = upoly::mul(acc, f, m);
  return acc;
}

/// Random monic f of degree <= max_deg built from factors of degree <= 2.
UPoly random_factored(std::mt19937_64& rng, const Modulus& mod, int max_deg) {
  UPoly f{1};
  int d = 0;
  const int target = 1 + static_cast<int>(rng() % max_deg);
  while (d < target) {
    const int fd = std::min<int>(target - d, 1 + static_cast<int>(rng() % 2));
    f = upoly::mul(f, testsupport::random_monic(rng, fd, mod.pk()), mod.pk());
    d += fd;
  }
  return f;
}

}  // namespace

TEST_CASE("hensel_lift_coprime examples") {
  const Modulus m(3, 2);
  auto r = hensel_lift_coprime(UPoly{-1, 0, 1}, UPoly{-1, 1}, UPoly{1, 1}, m);
  CHECK(r.g == UPoly{8, 1});
  CHECK(r.h == UPoly{1, 1});

  r = hensel_lift_coprime(UPoly{-7, 0, 1}, UPoly{2, 1}, UPoly{1, 1}, m);
  CHECK(r.g == UPoly{5, 1});  // x - 4
  CHECK(r.h == UPoly{4, 1});  // x - 5
  CHECK(upoly::mul(r.g, r.h, m.pk()) == UPoly{2, 0, 1});

  CHECK_THROWS_AS(hensel_lift_coprime(UPoly{0, 0, 1}, UPoly{0, 1}, UPoly{0, 1}, m), NotCoprimeModP);
}

TEST_CASE("hensel lifting preserves residues and reconstructs f") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 100; ++it) {
    const unsigned p = std::array<unsigned, 3>{2, 3, 7}[it % 3];
    const Modulus mod(p, 1 + static_cast<unsigned>(rng() % 12));
    const Int P(p);
    const UPoly g0 = testsupport::random_monic(rng, 1 + static_cast<int>(rng() % 3), P);
    const UPoly h0 = testsupport::random_monic(rng, 1 + static_cast<int>(rng() % 3), P);
    if (upoly::degree(upoly::gcd(g0, h0, P)) > 0) continue;
    // f = g0 h0 + p * noise, with noise of lower degree
    UPoly noise = testsupport::random_monic(rng, upoly::degree(g0) + upoly::degree(h0) - 1, mod.pk());
    const UPoly f = upoly::add(upoly::mul(g0, h0, mod.pk()), upoly::scale(noise, P, mod.pk()), mod.pk());
    const auto r = hensel_lift_coprime(f, g0, h0, mod);
    CHECK(upoly::mul(r.g, r.h, mod.pk()) == f);
    CHECK(upoly::reduce(r.g, P) == g0);
    CHECK(upoly::reduce(r.h, P) == h0);
  }
}

TEST_CASE("squarefree decomposition and distinct-degree factorization") {
  const Int two(2), three(3);
  // x^2 (x^2+x+1) over F_2
  const UPoly f = upoly::mul(UPoly{0, 0, 1}, UPoly{1, 1, 1}, two);
  const auto sq = squarefree_decomposition(f, two);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].e == 1);
  CHECK(sq[0].a == UPoly{1, 1, 1});
  CHECK(sq[1].e == 2);
  CHECK(sq[1].a == UPoly{0, 1});

  // (x+1)^3 x over F_3 needs a p-th root
  const UPoly g = upoly::mul(upoly::mul(UPoly{1, 1}, upoly::mul(UPoly{1, 1}, UPoly{1, 1}, three), three), UPoly{0, 1},
                             three);
  const auto sq3 = squarefree_decomposition(g, three);
  REQUIRE(sq3.size() == 2);
  CHECK(sq3[0].a == UPoly{0, 1});
  CHECK(sq3[1].a == UPoly{1, 1});
  CHECK(sq3[1].e == 3);

  // x (x^2+1) (x^3 + 2x + 1) over F_3
  const UPoly h = upoly::mul(upoly::mul(UPoly{0, 1}, UPoly{1, 0, 1}, three), UPoly{1, 2, 0, 1}, three);
  const auto ddf = distinct_degree_factorization(h, three);
  REQUIRE(ddf.size() == 3);
  CHECK(ddf[0].b == 1);
  CHECK(ddf[0].g == UPoly{0, 1});
  CHECK(ddf[1].b == 2);
  CHECK(ddf[1].g == UPoly{1, 0, 1});
  CHECK(ddf[2].b == 3);
}

TEST_CASE("decompose examples") {
  // x^2 + 3x is x^2 mod 3: one linear irreducible with multiplicity 2
  auto cs = decompose(UPoly{0, 3, 1}, Modulus(3, 2));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].b == 1);
  CHECK(cs[0].e == 2);
  CHECK(cs[0].t == 1);
  CHECK(cs[0].g == UPoly{0, 3, 1});

  cs = decompose(UPoly{0, 4, 1}, Modulus(3, 2));  // x (x + 4), distinct mod 3
  REQUIRE(cs.size() == 1);
  CHECK((cs[0].b == 1 && cs[0].e == 1 && cs[0].t == 2));

  cs = decompose(UPoly{0, 0, 1, 1, 1}, Modulus(2, 2));
  REQUIRE(cs.size() == 2);
  CHECK((cs[0].b == 1 && cs[0].e == 2 && cs[0].t == 1));
  CHECK((cs[1].b == 2 && cs[1].e == 1 && cs[1].t == 1));

  cs = decompose(UPoly{1, 1, 0, 1}, Modulus(2, 3));  // x^3 + x + 1 irreducible mod 2
  REQUIRE(cs.size() == 1);
  CHECK((cs[0].b == 3 && cs[0].e == 1 && cs[0].t == 1));

  CHECK_THROWS_AS(decompose(UPoly{1, 0, 2}, Modulus(2, 2)), NotMonicModP);
}

TEST_CASE("count_basic_irreducible examples") {
  CHECK(count_basic_irreducible(UPoly{0, 3, 1}, Modulus(3, 2)).total == 3);
  CHECK(count_basic_irreducible(UPoly{3, 0, 1}, Modulus(3, 2)).total == 0);
  const auto r = count_basic_irreducible(UPoly{1, 1, 1}, Modulus(2, 2));
  CHECK(r.total == 1);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].galois_roots == 2);
  CHECK(r.per_degree.at(2) == 1);
  for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(count_basic_irreducible(UPoly{0, Int(p), 1}, Modulus(p, 2)).total == p);
}

TEST_CASE("components cover f and lift to a factorization of f") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 120; ++it) {
    const unsigned p = std::array<unsigned, 3>{2, 3, 5}[it % 3];
    const Modulus mod(p, 1 + static_cast<unsigned>(rng() % 6));
    const UPoly f = random_factored(rng, mod, 8);
    const auto cs = decompose(f, mod);
    int deg = 0;
    std::vector<UPoly> gs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      deg += static_cast<int>(c.b * c.t * c.e);
      CHECK(upoly::degree(c.g) == static_cast<int>(c.b * c.t * c.e));
      if (i > 0) CHECK(std::pair(cs[i - 1].b, cs[i - 1].e) < std::pair(c.b, c.e));
      gs.push_back(c.g);
    }
    CHECK(deg == upoly::degree(f));
    CHECK(product(gs, mod.pk()) == f);
  }
}

TEST_CASE("degree-1 counts equal root counts for squarefree products of linear factors") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 80; ++it) {
    const unsigned p = std::array<unsigned, 3>{3, 5, 7}[it % 3];
    const Modulus mod(p, 1 + static_cast<unsigned>(rng() % 4));
    // distinct residues mod p so that f is squarefree mod p
    std::vector<unsigned> rs(p);
    for (unsigned i = 0; i < p; ++i) rs[i] = i;
    std::shuffle(rs.begin(), rs.end(), rng);
    const unsigned d = 1 + static_cast<unsigned>(rng() % (p - 1));
    UPoly f{1};
    for (unsigned i = 0; i < d; ++i) {
      const Int r = Int(rs[i]) + Int(p) * testsupport::uniform(rng, mod.pk());
      f = upoly::mul(f, UPoly{Int(mod.pk() - r), 1}, mod.pk());
    }
    const auto rep = count_basic_irreducible(f, mod);
    CHECK(rep.per_degree.at(1) == count_roots(f, mod).root_count);
  }
}

TEST_CASE("factor counts agree with brute force") {
  std::mt19937_64 rng(24);
  int n = 0;
  for (int it = 0; it < 120; ++it) {
    const unsigned p = it % 2 ? 2 : 3;
    const Modulus mod(p, 1 + static_cast<unsigned>(rng() % 3));
    const UPoly f = random_factored(rng, mod, 4);
    const auto rep = count_basic_irreducible(f, mod, it % 2 ? Exec::serial : Exec::parallel);
    for (unsigned b = 1; b <= 2; ++b) {
      const Int got = rep.per_degree.count(b) ? rep.per_degree.at(b) : Int(0);
      CHECK_MESSAGE(got == oracle::brute_force_basic_irreducible(f, mod, b),
                    upoly::to_string(f) << " mod " << p << "^" << mod.k() << " b=" << b);
    }
    for (const auto& c : rep.components) CHECK(c.galois_roots == c.count * c.component.b);
    ++n;
  }
  CHECK(n == 120);
}

TEST_CASE("serial and parallel component counting agree") {
  std::mt19937_64 rng(25);
  for (int it = 0; it < 30; ++it) {
    const Modulus mod(5, 6);
    const UPoly f = random_factored(rng, mod, 10);
    const auto a = count_basic_irreducible(f, mod, Exec::serial);
    const auto b = count_basic_irreducible(f, mod, Exec::parallel);
    CHECK(a.total == b.total);
    CHECK(a.per_degree == b.per_degree);
  }
}
