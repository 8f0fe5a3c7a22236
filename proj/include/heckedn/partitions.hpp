#pragma once

#include <compare>
#include <string>
#include <vector>

#include "heckedn/errors.hpp"

namespace heckedn {

// Integer partition in canonical form: strictly positive weakly decreasing
// parts, no trailing zeros stored.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                  // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;             // 1-based, 0 beyond the last row
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

    std::string str() const;           // "[2,1]", "[]"

  private:
    std::vector<int> parts_;
};

Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& la);
std::vector<int> hook_lengths(const Partition& la);  // multiset, descending
// Length of the longest element of the Young subgroup S_la.
long young_longest_length(const Partition& la);
bool is_e_restricted(const Partition& la, int e);
bool is_e_regular(const Partition& la, int e);
// Partial sums comparison; requires |mu| = |la| (SizeMismatchError).
bool dominance_leq(const Partition& mu, const Partition& la);
long long count_standard_tableaux(const Partition& la);

// The permutation carrying the row-reading tableau t^la to the
// column-reading tableau t_la, with a reduced word.
struct TableauWord {
    std::vector<int> one_line;  // images of 1..m
    std::vector<int> word;      // reduced word in generator indices >= 1
    long length() const { return static_cast<long>(word.size()); }
};
TableauWord w_lambda(const Partition& la);

// All partitions of k, lexicographically descending.
const std::vector<Partition>& partitions_of(int k);

// Ordered pair of partitions; a() = |first|.
class Bipartition {
  public:
    Bipartition() = default;
    Bipartition(Partition first, Partition second)
        : first_(std::move(first)), second_(std::move(second)) {}

    const Partition& first() const { return first_; }
    const Partition& second() const { return second_; }
    int a() const { return first_.size(); }
    int size() const { return first_.size() + second_.size(); }
    Bipartition hat() const { return {second_, first_}; }  // component swap

    auto operator<=>(const Bipartition&) const = default;

    std::string str() const;  // "([2,1]|[1,1,1])"

  private:
    Partition first_, second_;
};

// CLI syntax "[2,1]|[1,1,1]".
Bipartition parse_bipartition(const std::string& text);

// All (la1 |- a, la2 |- n-a), lexicographically descending on the first
// component, then the second.
std::vector<Bipartition> enumerate_bipartitions(int n, int a);

// Cells (1-based row, col) and residue bookkeeping used by the Fock space.
struct Cell {
    int row, col;
    auto operator<=>(const Cell&) const = default;
};
std::vector<Cell> cells_of(const Partition& la);
std::vector<Cell> addable_cells(const Partition& la);
std::vector<Cell> removable_cells(const Partition& la);
Partition with_cell(const Partition& la, const Cell& c);

}  // namespace heckedn
