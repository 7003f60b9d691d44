#ifndef QMDS_HERMITIAN_HPP
#define QMDS_HERMITIAN_HPP

#include <span>
#include <vector>

#include "qmds/code.hpp"

namespace qmds {

// <x, y> = sum x_i * conj(y_i); sesquilinear, conjugate-symmetric.
felt hermitian_inner(const Field& f, std::span<const felt> x, std::span<const felt> y);

// The Hermitian dual as a constacyclic code, via the complement defining set.
ConstacyclicCode dual_code(const ConstacyclicCode& code);

// C^{perp_H} subseteq C tested as generator divisibility: g | g_dual.
bool contains_dual_by_divisibility(const ConstacyclicCode& code);

// Basis of C^{perp_H} computed by elimination on the Hermitian constraint
// matrix (rows = conjugated shifts of g), without touching defining sets.
// Always has exactly n - k vectors.
std::vector<std::vector<felt>> hermitian_dual_basis(const ConstacyclicCode& code);

// Membership test of every dual-basis vector in C. Decides containment for
// any dimensions: if dim C^{perp_H} > dim C some basis vector must fail.
bool gram_check(const ConstacyclicCode& code);

// Divisibility route cross-checked against the defining-set criterion; a
// disagreement would falsify the duality criterion itself and aborts hard.
bool contains_dual(const ConstacyclicCode& code);

}  // namespace qmds

#endif
