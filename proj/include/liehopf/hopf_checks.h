#pragma once

#include "liehopf/pbw.h"
#include "liehopf/report.h"

#include <vector>

namespace liehopf {

/// Exact checks of the Hopf algebra structure of U(L) on the degree-≤d
/// window. One record per identity:
///   relations            b_i b_j − b_j b_i = [b_i, b_j]
///   associativity        (ab)c = a(bc), deg a + deg b + deg c ≤ d
///   coassociativity      (Δ⊗id)Δ = (id⊗Δ)Δ
///   counit               (ε⊗id)Δ = id = (id⊗ε)Δ
///   antipode             m(S⊗id)Δ = ηε = m(id⊗S)Δ
///   coproduct_multiplicative, counit_multiplicative
///   antipode_anti_multiplicative   S(ab) = S(b)S(a)
///   antipode_involution  S² = id (U(L) is cocommutative)
std::vector<CheckRecord> hopf_axioms(Envelope const &E, int d);

} // namespace liehopf
