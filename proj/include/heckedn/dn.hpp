#pragma once

#include <string>
#include <vector>

#include "heckedn/partitions.hpp"
#include "heckedn/typea.hpp"

namespace heckedn {

// Row/column label of the D_n decomposition matrix: an unordered pair of
// distinct-profile partitions in canonical order (larger size first, then
// lexicographically larger), or a split label (beta,beta)+/- (even n only).
struct DnLabel {
    enum class Kind { Pair, SplitPlus, SplitMinus };
    Kind kind = Kind::Pair;
    Bipartition pair;  // canonical representative when kind == Pair
    Partition beta;    // when kind != Pair

    static DnLabel make_pair(const Bipartition& bp);
    static DnLabel split(const Partition& beta, bool plus);

    std::string str() const;  // "([3]|[2,1])", "([2,1]|[2,1])+"
    friend bool operator==(const DnLabel&, const DnLabel&) = default;
};

struct DnDecompositionMatrix {
    int n = 0;
    int e = 0;
    bool sqrt_sign_minus = false;
    std::vector<DnLabel> rows;
    std::vector<DnLabel> cols;
    std::vector<std::vector<long long>> entries;

    long long entry(const DnLabel& row, const DnLabel& col) const;
};

// Separation condition: 1 + q^i != 0 in Q(zeta_e) for 1 <= i <= n-1.
bool separation_check(int n, int e);

// Entry formulas of the separated-case theory.  The type-A inputs come from
// decomposition_matrix_type_a at the relevant ranks.
long long split_entry_plus(const Partition& beta, const Partition& alpha, int e,
                           bool sqrt_sign_minus = false, const std::string& cache_dir = "");
long long split_entry_minus(const Partition& beta, const Partition& alpha, int e,
                            bool sqrt_sign_minus = false, const std::string& cache_dir = "");
long long mixed_row_entry(const Bipartition& row_pair, const DnLabel& col, int e,
                          const std::string& cache_dir = "");
long long split_row_pair_entry(const Partition& beta, const Bipartition& col_pair, int e,
                               const std::string& cache_dir = "");
long long tensor_block_entry(const Bipartition& row_pair, const Bipartition& col_pair, int e,
                             const std::string& cache_dir = "");

// The full decomposition matrix of H_q(D_n) in the separated case; throws
// SeparationFailedError otherwise.
DnDecompositionMatrix full_matrix(int n, int e, bool sqrt_sign_minus = false,
                                  const std::string& cache_dir = "");

// Exchange SplitPlus(beta) <-> SplitMinus(beta) on rows and columns
// simultaneously (for the sign-swap covariance check).
DnDecompositionMatrix swap_split_labels(const DnDecompositionMatrix& mat);

std::string render_text(const DnDecompositionMatrix& mat);
std::string render_csv(const DnDecompositionMatrix& mat);
std::string render_json(const DnDecompositionMatrix& mat);
DnDecompositionMatrix parse_json_matrix(const std::string& text);

}  // namespace heckedn
