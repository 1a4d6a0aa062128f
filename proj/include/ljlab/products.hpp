#pragma once

#include "ljlab/observable.hpp"

#include <string>

namespace ljlab
{

class RealSubspace;

// Lie bracket convention: [a,b] = (i/2)(ab - ba). Textbook su(n) structure
// constants for i[a,b]_std must be divided by -2 before comparing.

/// a o b = (ab + ba)/2
[[nodiscard]] Observable jordan(const Observable& a, const Observable& b);
/// [a,b] = (i/2)(ab - ba)
[[nodiscard]] Observable lie(const Observable& a, const Observable& b);
/// (a o b) o c - a o (b o c)
[[nodiscard]] Observable associator(const Observable& a, const Observable& b, const Observable& c);
/// ab rebuilt from the two real products: a o b - i[a,b].
[[nodiscard]] ComplexMatrix recover_associative(const Observable& a, const Observable& b);

struct IdentityReport
{
	std::string name;
	double residual = 0.0;   // operator norm of the defect
	double threshold = 0.0;  // zero_tol * max(1, operand norm scale)
	bool passed = false;
};

[[nodiscard]] IdentityReport check_jacobi(const Observable& a, const Observable& b, const Observable& c,
                                          const Tolerance& tol = {});
[[nodiscard]] IdentityReport check_leibniz(const Observable& a, const Observable& b, const Observable& c,
                                           const Tolerance& tol = {});
[[nodiscard]] IdentityReport check_associator_identity(const Observable& a, const Observable& b,
                                                       const Observable& c, const Tolerance& tol = {});
[[nodiscard]] IdentityReport check_weak_associativity(const Observable& a, const Observable& b,
                                                      const Tolerance& tol = {});
/// ||a o b|| <= ||a|| ||b||, ||a^2|| = ||a||^2, ||a^2|| <= ||a^2 + b^2|| (and with a, b swapped).
[[nodiscard]] IdentityReport check_norm_axioms(const Observable& a, const Observable& b,
                                               const Tolerance& tol = {});

/// Whether the Jordan multipliers of a and b commute on every basis element of `ambient`.
/// Throws NotInSpan when a or b lies outside the ambient span.
[[nodiscard]] bool jordan_commute(const Observable& a, const Observable& b, const RealSubspace& ambient,
                                  const Tolerance& tol = {});

/// The threshold used by jordan_commute, exposed so callers can compare with ||[a,b]||.
[[nodiscard]] double commutation_threshold(const Observable& a, const Observable& b, const Tolerance& tol = {});

} // namespace ljlab
