#pragma once

#include "gurlab/cumulant.hpp"
#include "gurlab/qmat.hpp"

namespace gur {

/// Baker-Campbell-Hausdorff terms of log(e^{sX} e^{tY}) through fifth
/// order, each with its rational coefficient baked in. Subscripts count
/// the powers of s and t.
struct BchTerms {
  Complex s, t;
  CMatrix z1;    // sX + tY
  CMatrix z11;   // [sX,tY]/2
  CMatrix z21;   // [sX,[sX,tY]]/12
  CMatrix z12;   // [tY,[tY,sX]]/12
  CMatrix z22;   // -[tY,[sX,[sX,tY]]]/24
  CMatrix z14;   // -[[[[sX,tY],tY],tY],tY]/720
  CMatrix z41;   // -[[[[tY,sX],sX],sX],sX]/720
  CMatrix z23_1; // [[[[sX,tY],tY],tY],sX]/360
  CMatrix z32_1; // [[[[tY,sX],sX],sX],tY]/360
  CMatrix z23_2; // [[[[tY,sX],tY],sX],tY]/120
  CMatrix z32_2; // [[[[sX,tY],sX],tY],sX]/120
};

BchTerms bch_terms(const Observable& x, const Observable& y, Complex s, Complex t);

/// Sum of all terms of total order <= max_order, max_order in [1, 5].
CMatrix bch_partial_sum(const BchTerms& terms, int max_order);

/// log(e^{sX} e^{tY}) through the principal matrix logarithm.
CMatrix z_exact(const Observable& x, const Observable& y, Complex s, Complex t);

/// Coefficient of the joint second order of K(Z_st) in (s, t):
/// st<[X,Y]>/2 + [kappa2(sX) + kappa2(tY) + 2 kappa11(sX,tY)]/2.
/// z11_coeff exists for fault injection in the self-test negative control;
/// the production value is 1/2.
Complex k2_coefficient(const State& state, const Observable& x,
                       const Observable& y, Complex s, Complex t,
                       double z11_coeff = 0.5);

/// Coefficient of the joint third order of K(Z_st): nested-commutator
/// terms /12, the symmetrized {Z1, Z11} piece with its -2<Z1><Z11>
/// correction, plus kappa3(sX + tY)/3! via the multinomial identity.
Complex k3_coefficient(const State& state, const Observable& x,
                       const Observable& y, Complex s, Complex t,
                       double z11_coeff = 0.5);

} // namespace gur
