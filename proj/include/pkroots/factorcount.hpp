#pragma once

#include <map>
#include <vector>

#include "pkroots/exec.hpp"
#include "pkroots/rootcount.hpp"

namespace pkroots {

/// g = (phi_1 ... phi_t)^e mod p with every phi_j irreducible of degree b,
/// lifted to Z/p^k as a factor of f.
struct Component {
  UPoly g;
  unsigned b = 0;
  unsigned e = 0;
  unsigned t = 0;
};

struct LiftedPair {
  UPoly g, h;
};

/// Lift f = g h mod p to f = g* h* mod p^k by quadratic Hensel steps. g must
/// be monic and coprime to h mod p; f must have a unit leading coefficient.
LiftedPair hensel_lift_coprime(const UPoly& f, const UPoly& g, const UPoly& h, const Modulus& mod);

/// Lift pairwise coprime monic factors of f mod p (product = f mod p, f
/// monic) to factors mod p^k, via a balanced tree of pairwise lifts.
std::vector<UPoly> hensel_lift_multi(const UPoly& f, const std::vector<UPoly>& factors, const Modulus& mod);

struct SquarefreeFactor {
  UPoly a;  // monic, squarefree
  unsigned e;
};
/// f = prod a_i^{e_i} over F_p with distinct e_i and pairwise coprime a_i.
std::vector<SquarefreeFactor> squarefree_decomposition(const UPoly& f, const Int& p);

struct DegreeFactor {
  UPoly g;  // product of all irreducible factors of degree b
  unsigned b;
};
/// Distinct-degree factorization of a monic squarefree polynomial over F_p.
std::vector<DegreeFactor> distinct_degree_factorization(const UPoly& f, const Int& p);

/// Components sorted by ascending (b, e).
std::vector<Component> decompose(const UPoly& f, const Modulus& mod);

struct ComponentCount {
  Component component;
  Int galois_roots;  // roots of g in the degree-b Galois ring
  Int count;         // galois_roots / b
  CountStats stats;
};

struct FactorReport {
  Int total;
  std::vector<ComponentCount> components;
  std::map<unsigned, Int> per_degree;
};

/// Number of basic-irreducible factors of f mod p^k (monic g, irreducible
/// mod p, dividing f), with a per-component and per-degree breakdown.
FactorReport count_basic_irreducible(const UPoly& f, const Modulus& mod, Exec exec = Exec::parallel);

}  // namespace pkroots
