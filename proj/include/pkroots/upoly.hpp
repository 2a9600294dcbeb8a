#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pkroots/modring.hpp"

// Dense univariate polynomials, ascending coefficient order. Functions taking
// a modulus return canonical residues with trailing zeros stripped.
namespace pkroots {

using UPoly = std::vector<Int>;

namespace upoly {

void trim(UPoly& a);
int degree(const UPoly& a);
inline bool is_zero(const UPoly& a) { return degree(a) < 0; }

UPoly reduce(const UPoly& a, const Int& m);
UPoly add(const UPoly& a, const UPoly& b, const Int& m);
UPoly sub(const UPoly& a, const UPoly& b, const Int& m);
UPoly mul(const UPoly& a, const UPoly& b, const Int& m);
UPoly scale(const UPoly& a, const Int& c, const Int& m);

/// Division by b, whose leading coefficient must be a unit mod m.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b, const Int& m);
UPoly rem(const UPoly& a, const UPoly& b, const Int& m);
/// a / lc(a); throws NotAUnit if the leading coefficient is not invertible.
UPoly monic(const UPoly& a, const Int& m);

/// Monic gcd over the field F_p.
UPoly gcd(UPoly a, UPoly b, const Int& p);

struct XGcd {
  UPoly g, s, t;  // s*a + t*b = g, g monic
};
XGcd xgcd(const UPoly& a, const UPoly& b, const Int& p);

UPoly powmod(const UPoly& base, const Int& e, const UPoly& modulus, const Int& m);
UPoly derivative(const UPoly& a, const Int& m);
/// f = g(x^p) over F_p; returns g (p-th roots of F_p coefficients are trivial).
UPoly pth_root(const UPoly& a, const Int& p);
Int eval(const UPoly& a, const Int& x, const Int& m);

/// Plain integer arithmetic (no modulus).
UPoly mul_z(const UPoly& a, const UPoly& b);
UPoly add_z(const UPoly& a, const UPoly& b);
UPoly derivative_z(const UPoly& a);

UPoly x_power(unsigned e);

std::string to_string(const UPoly& a, const char* var = "x");

}  // namespace upoly
}  // namespace pkroots
