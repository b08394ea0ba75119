#pragma once

// Dense univariate polynomials over Q, coefficients ascending (c[0] + c[1] x + ...).
// The zero polynomial is the empty vector; results are always trimmed.

#include "ringkt/linalg.hpp"

namespace ringkt::poly {

using Poly = RatVector;

Poly from_integers(const IntVector& c);
void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
bool is_zero(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& s);
Poly derivative(const Poly& a);

/// Euclidean division; throws ZeroDivisor for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

Rational eval(const Poly& p, const Rational& x);

/// Number of distinct real roots, by a Sturm sequence.
std::size_t count_real_roots(const Poly& f);

/// Phi_n with integer coefficients.
IntVector cyclotomic(unsigned n);

}  // namespace ringkt::poly
