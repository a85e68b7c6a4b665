#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "agtrace/field_tower.hpp"

namespace agtrace {

/// Dense univariate polynomial over F_{q^m}, coefficients low-degree-first,
/// normalized with no trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<Elem>;

int poly_deg(const Poly& a);  // -1 for the zero polynomial
void poly_trim(Poly& a);
bool poly_is_zero(const Poly& a);
Poly poly_constant(Elem c);
Poly poly_x();

bool poly_eq(const Poly& a, const Poly& b);
bool poly_is_monic(const Poly& a);

Poly poly_add(const FieldTower& t, const Poly& a, const Poly& b);
Poly poly_sub(const FieldTower& t, const Poly& a, const Poly& b);
Poly poly_scale(const FieldTower& t, Elem c, const Poly& a);
Poly poly_mul(const FieldTower& t, const Poly& a, const Poly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldTower& t, const Poly& a, const Poly& b);
Poly poly_mod(const FieldTower& t, const Poly& a, const Poly& b);
/// Exact quotient; throws InternalError if the division leaves a remainder.
Poly poly_div_exact(const FieldTower& t, const Poly& a, const Poly& b);
bool poly_divides(const FieldTower& t, const Poly& d, const Poly& a);

/// Monic gcd (zero polynomial if both inputs are zero).
Poly poly_gcd(const FieldTower& t, Poly a, Poly b);
Poly poly_monic(const FieldTower& t, const Poly& a);
Poly poly_derivative(const FieldTower& t, const Poly& a);
Elem poly_eval(const FieldTower& t, const Poly& a, Elem x);

Poly poly_pow(const FieldTower& t, const Poly& a, int e);
Poly poly_powmod(const FieldTower& t, Poly base, long long e, const Poly& mod);

/// Irreducibility over F_{q^m} via the x^{Q^d} = x criterion plus gcd checks
/// at maximal proper divisors of d.
bool poly_is_irreducible(const FieldTower& t, const Poly& f);

/// Inverse of the Frobenius x -> x^p on coefficients: for f in F[x^p] with
/// p-th power coefficients structure, returns h with h^p = f.
/// Throws InternalError if f is not of that shape.
Poly poly_pth_root(const FieldTower& t, const Poly& f);

/// Squarefree decomposition in characteristic p: returns pairs (e_i, u_i)
/// with f = lc * prod u_i^{e_i}, the u_i monic, squarefree, pairwise coprime
/// and the e_i distinct, sorted ascending. f must be nonzero.
std::vector<std::pair<int, Poly>> poly_squarefree_decomposition(const FieldTower& t,
                                                                const Poly& f);

/// Uniformly random monic irreducible of the given degree (rejection
/// sampling; deterministic in the rng state).
Poly poly_random_monic_irreducible(const FieldTower& t, int degree, std::mt19937_64& rng);

std::string poly_to_string(const Poly& a);

}  // namespace agtrace
