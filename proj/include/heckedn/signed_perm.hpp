#pragma once

#include <compare>
#include <string>
#include <vector>

namespace heckedn {

// Element of the Weyl group of type B_n in one-line signed form: img[i-1] =
// w(i), with |w(1)|,...,|w(n)| a permutation of 1..n.  Type A elements are
// the subcase with all images positive.  Generators: s_0 negates the first
// entry, s_i (i >= 1) swaps entries i and i+1.
class SignedPermutation {
  public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);
    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const;  // signed input allowed: w(-i) = -w(i)
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    bool is_type_a() const;

    SignedPermutation operator*(const SignedPermutation& rhs) const;  // (w*u)(i) = w(u(i))
    SignedPermutation inverse() const;

    // Coxeter length: inversions + negatives + negative sum pairs.
    long length() const;

    // Right multiplication by a generator; length changes by exactly 1.
    SignedPermutation times_gen(int s) const;
    bool right_descent(int s) const;  // true iff l(w s) < l(w)

    std::vector<int> reduced_word() const;

    auto operator<=>(const SignedPermutation&) const = default;

    std::string str() const;

  private:
    std::vector<int> img_;
};

// All elements of W(B_n) or, with type_a, of S_n.
std::vector<SignedPermutation> enumerate_group(int n, bool type_a);

}  // namespace heckedn
