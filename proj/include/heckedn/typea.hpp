#pragma once

#include <string>
#include <vector>

#include "heckedn/laurent.hpp"
#include "heckedn/partitions.hpp"

namespace heckedn {

// Decomposition matrix of H_q(S_m) over a characteristic-0 field at q a
// primitive e-th root of unity, in the dual Specht / e-restricted
// convention: rows are all partitions of m, columns the e-restricted ones,
// entries d_{beta,alpha} = [S_beta : D_alpha].
struct TypeADecompositionMatrix {
    int m = 0;
    int e = 0;
    std::vector<Partition> rows;  // all partitions of m, lex descending
    std::vector<Partition> cols;  // e-restricted partitions, lex descending
    std::vector<std::vector<long long>> entries;

    long long entry(const Partition& beta, const Partition& alpha) const;
};

// Computed via the LLT canonical-basis algorithm on the level-1 Fock space;
// coefficients evaluated at 1.  Results are cached in memory and, when
// cache_dir is nonempty, on disk (one file per (m,e)).
TypeADecompositionMatrix decomposition_matrix_type_a(int m, int e,
                                                     const std::string& cache_dir = "");

// Graded canonical-basis coefficient d_{la,mu}(q) in the Specht/e-regular
// convention (exposed for tests).
LaurentPoly llt_graded_coefficient(const Partition& la, const Partition& mu, int e);

// dim D_alpha computed as the rank over Q(zeta_e) of the Gram matrix
// [trace(b_i b_j^*)] on a spanning set of the right ideal z'_alpha H.
long long gram_rank_dim_simple(const Partition& alpha, int e);

// Solves dim D_alpha from the unitriangular system
//   sum_alpha d_{beta,alpha} dim D_alpha = #SYT(beta)
// and cross-checks positivity, integrality and (for m <= 4) the Gram ranks.
bool verify_dimension_consistency(int m, int e);

// Cache file format: header "m e convention=dual-specht", one row per
// partition, entries space-separated.
std::string typea_cache_text(const TypeADecompositionMatrix& mat);
TypeADecompositionMatrix parse_typea_cache_text(const std::string& text);

}  // namespace heckedn
