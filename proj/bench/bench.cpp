// Serial reference vs OpenMP kernels, plus the large smoke instance.
//
//   pkroots_bench            kernel comparison table
//   pkroots_bench --smoke    deg 50, p = 10007, k = 50 root count

#include <omp.h>

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "pkroots/factorcount.hpp"
#include "pkroots/igusa.hpp"
#include "pkroots/oracle.hpp"
#include "pkroots/rootcount.hpp"

using namespace pkroots;

namespace {

template <class F>
double seconds(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

UPoly random_monic(std::mt19937_64& rng, int d, const Int& bound) {
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  UPoly f(d + 1);
  for (int i = 0; i < d; ++i) f[i] = gr.get_z_range(bound);
  f[d] = 1;
  return f;
}

UPoly from_roots(const std::vector<long>& roots) {
  UPoly f{1};
  for (long r : roots) f = upoly::mul_z(f, UPoly{Int(-r), 1});
  return f;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(12) << parallel << std::setw(9) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "  " << (agree ? "agree" : "DIFFER") << "\n";
}

int smoke() {
  std::mt19937_64 rng(2024);
  const Modulus mod(Int(10007), 50);
  const UPoly f = random_monic(rng, 50, mod.pk());
  CountReport rep;
  const double t = seconds([&] { rep = count_roots(f, mod); });
  std::cout << "smoke: deg 50, p = 10007, k = 50\n"
            << "  root_count " << rep.root_count << ", msis " << rep.msis.size() << ", pops " << rep.stats.pops
            << ", splits " << rep.stats.splits << ", dead_ends " << rep.stats.dead_ends << "\n"
            << "  time " << std::fixed << std::setprecision(3) << t << " s\n";

  // A second instance with many roots exercises splitting at scale.
  std::vector<long> roots;
  for (long i = 0; i < 25; ++i) roots.push_back(i * 37 + 5), roots.push_back(i * 37 + 5 + 10007L * (i + 1));
  const UPoly g = from_roots(roots);
  const double t2 = seconds([&] { rep = count_roots(g, mod); });
  std::cout << "smoke: deg 50 with 25 root pairs congruent mod p, p = 10007, k = 50\n"
            << "  root_count " << rep.root_count << ", msis " << rep.msis.size() << ", pops " << rep.stats.pops
            << ", splits " << rep.stats.splits << "\n"
            << "  time " << std::fixed << std::setprecision(3) << t2 << " s\n";

  // Fifty distinct simple roots: every pop grows an ideal of degree 50.
  roots.clear();
  for (long i = 0; i < 50; ++i) roots.push_back(i * 191 + 3);
  const UPoly h = from_roots(roots);
  const double t3 = seconds([&] { rep = count_roots(h, mod); });
  std::cout << "smoke: deg 50 with 50 simple roots, p = 10007, k = 50\n"
            << "  root_count " << rep.root_count << ", msis " << rep.msis.size() << ", pops " << rep.stats.pops
            << ", splits " << rep.stats.splits << "\n"
            << "  time " << std::fixed << std::setprecision(3) << t3 << " s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::strcmp(argv[1], "--smoke") == 0) return smoke();

  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial s" << std::setw(12)
            << "parallel s" << std::setw(9) << "speedup" << "\n";

  std::mt19937_64 rng(7);
  {
    const Modulus mod(Int(5), 8);  // 390625 residues
    const UPoly f = random_monic(rng, 6, mod.pk());
    std::vector<Int> a, b;
    const double s = seconds([&] { a = oracle::brute_force_roots(f, mod, oracle::kDefaultCap, Exec::serial); });
    const double p = seconds([&] { b = oracle::brute_force_roots(f, mod, oracle::kDefaultCap, Exec::parallel); });
    row("brute_force_roots 5^8", s, p, a == b);
  }
  {
    const oracle::GaloisRing G(3, 6, 2);  // 531441 elements
    const UPoly f{Int(1), Int(0), Int(1), Int(1), Int(1)};
    std::uint64_t a = 0, b = 0;
    const double s = seconds([&] { a = oracle::brute_force_galois_roots(f, G, oracle::kDefaultCap, Exec::serial); });
    const double p = seconds([&] { b = oracle::brute_force_galois_roots(f, G, oracle::kDefaultCap, Exec::parallel); });
    row("brute_force_galois_roots G(729,2)", s, p, a == b);
  }
  {
    const Modulus mod(Int(3), 4);
    const UPoly f = upoly::mul_z(UPoly{Int(1), Int(0), Int(1)}, UPoly{Int(2), Int(0), Int(1)});
    std::uint64_t a = 0, b = 0;
    const double s =
        seconds([&] { a = oracle::brute_force_basic_irreducible(f, mod, 2, oracle::kDefaultCap, Exec::serial); });
    const double p =
        seconds([&] { b = oracle::brute_force_basic_irreducible(f, mod, 2, oracle::kDefaultCap, Exec::parallel); });
    row("brute_force_basic_irreducible b=2", s, p, a == b);
  }
  {
    const UPoly f = from_roots({0, 0, 3, 9, 27, 1, 28});
    SeriesPrefix a, b;
    const double s = seconds([&] { a = poincare_prefix(f, Int(3), 24, Exec::serial); });
    const double p = seconds([&] { b = poincare_prefix(f, Int(3), 24, Exec::parallel); });
    row("poincare_prefix K=24", s, p, a.coefficients == b.coefficients);
  }
  {
    const Modulus mod(Int(101), 30);
    UPoly f = upoly::mul_z(from_roots({1, 2, 3, 4, 5, 6}), UPoly{Int(2), Int(0), Int(1)});
    f = upoly::mul_z(f, UPoly{Int(3), Int(1), Int(0), Int(1)});
    f = upoly::mul_z(f, from_roots({7, 7, 8, 8}));
    FactorReport a, b;
    const double s = seconds([&] { a = count_basic_irreducible(f, mod, Exec::serial); });
    const double p = seconds([&] { b = count_basic_irreducible(f, mod, Exec::parallel); });
    row("count_basic_irreducible p=101 k=30", s, p, a.total == b.total && a.per_degree == b.per_degree);
  }
  return 0;
}
