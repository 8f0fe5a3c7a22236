#pragma once

#include "heckedn/laurent.hpp"
#include "heckedn/partitions.hpp"

namespace heckedn {

// s_la(v) = v^{-l(w_{la',0})} prod_{(i,j) in [la]} [h_{i,j}]_v.
LaurentPoly schur_type_a(const Partition& la);

// Two-parameter Schur element s_la(v,u) of H_{v,u}(B_n) at parameters
// (q, Q1, Q2) = (v, -1, u), normalized so that
//   f_la(v,u) = v^{n(n-1)/2} u^{n-a} s_la(v,u) / (s_{la1}(v) s_{la2}(v))
// holds exactly.
LaurentPoly schur_bipartition(const Bipartition& la);

// f_la(v,u) via exact division; NotDivisibleError would signal a violated
// divisibility theorem.
LaurentPoly f_poly(const Bipartition& la);

// f_la(v) = f_la(v,1).
LaurentPoly f_poly_one_param(const Bipartition& la);

// g_beta(v) = sqrt(f_{(beta,beta)}(v)) with positive leading coefficient.
LaurentPoly g_poly(const Partition& beta);

}  // namespace heckedn
