#pragma once

#include <map>
#include <vector>

#include "heckedn/laurent.hpp"
#include "heckedn/partitions.hpp"
#include "heckedn/signed_perm.hpp"

namespace heckedn {

// Which algebra an element lives in.  Type A rank n is H_v(S_n) on
// generators T_1..T_{n-1}; type B rank n is H_{v,u}(B_n) with the extra
// generator T_0 satisfying (T_0+1)(T_0-u) = 0.
struct AlgebraTag {
    bool type_b = false;
    int rank = 0;
    friend bool operator==(const AlgebraTag&, const AlgebraTag&) = default;
};

// Sparse linear combination of word-basis elements T_w with Laurent
// polynomial coefficients.  No zero coefficients are stored.
class HeckeElement {
  public:
    explicit HeckeElement(AlgebraTag tag) : tag_(tag) {}
    static HeckeElement one(AlgebraTag tag);

    const AlgebraTag& tag() const { return tag_; }
    const std::map<SignedPermutation, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add(const SignedPermutation& w, const LaurentPoly& c);
    LaurentPoly coeff(const SignedPermutation& w) const;

    HeckeElement scaled(const LaurentPoly& c) const;
    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }

    // Right multiplication by T_s: T_w T_s = T_{ws} if the length goes up,
    // else v T_{ws} + (v-1) T_w (with u in place of v when s = 0).
    HeckeElement times_gen(int s) const;
    HeckeElement times_word(const std::vector<int>& word) const;

  private:
    AlgebraTag tag_;
    std::map<SignedPermutation, LaurentPoly> terms_;
};

// A linear combination of T-words, kept in factored form so products of the
// structural elements can be evaluated one generator at a time.
struct HeckeFactor {
    struct Summand {
        std::vector<int> word;
        LaurentPoly coeff;
    };
    std::vector<Summand> summands;
};

HeckeElement apply_factors(HeckeElement x, const std::vector<HeckeFactor>& factors);
HeckeElement multiply(const HeckeElement& x, const HeckeElement& y);  // TagMismatchError
LaurentPoly trace(const HeckeElement& x);  // coefficient of T_identity

// T_{word} as an element.
HeckeElement t_word(AlgebraTag tag, const std::vector<int>& word);

// Young subgroup sums over a composition (given as sorted-or-not block
// lengths): x = sum T_w, y = sum (-v)^{-l(w)} T_w.
std::vector<HeckeFactor> x_factors(const std::vector<int>& blocks, int offset = 0);
std::vector<HeckeFactor> y_factors(const std::vector<int>& blocks, int offset = 0);
HeckeElement x_element(AlgebraTag tag, const std::vector<int>& blocks);
HeckeElement y_element(AlgebraTag tag, const std::vector<int>& blocks);

// The structural elements of the two-parameter type B algebra:
//   u_plus(k)  = prod_{i=1..k} (v^{i-1} + T_{i-1}...T_1 T_0 T_1...T_{i-1})
//   u_minus(k) = prod_{i=1..k} (u v^{i-1} - T_{i-1}...T_1 T_0 T_1...T_{i-1})
//   h_ab(a,b)  = T_{w_{a,b}},  w_{a,b} = (s_a..s_1)(s_{a+1}..s_2)...(s_{a+b-1}..s_b)
std::vector<HeckeFactor> u_plus_factors(int k);
std::vector<HeckeFactor> u_minus_factors(int k);
std::vector<int> h_ab_word(int a, int b);
HeckeElement u_plus(int n, int k);
HeckeElement u_minus(int n, int k);
HeckeElement h_ab(AlgebraTag tag, int a, int b);

// z_mu = x_mu T_{w_mu} y_{mu'} and z'_mu = y_{mu'} T_{w_{mu'}} x_mu inside
// the block {offset+1, ..., offset+|mu|}.
std::vector<HeckeFactor> z_factors(const Partition& mu, int offset = 0);
std::vector<HeckeFactor> z_prime_factors(const Partition& mu, int offset = 0);
HeckeElement z_partition(AlgebraTag tag, const Partition& mu);
HeckeElement z_prime_partition(AlgebraTag tag, const Partition& mu);

// z_la for an a-bipartition: the first component in the block {1..a}, the
// second in {a+1..n}.
std::vector<HeckeFactor> z_bipartition_factors(const Bipartition& la);

// z_mu T_{w_mu'} z_mu = v^{l(w_mu)} s_mu(v) z_mu in H_v(S_m).
bool verify_specht_scalar(const Partition& mu);

// The eigenvalue f_la(v,u): solves X = c Y coefficientwise where
//   Y = u-_{n-a} h_{n-a,a} u+_a z_la
//   X = u-_{n-a} h_{n-a,a} u+_a h_{a,n-a} u-_{n-a} h_{n-a,a} u+_a z_la.
// Throws ZeroVectorError when Y = 0 and InconsistentEigenvalueError when no
// single scalar works.
LaurentPoly oracle_f(const Bipartition& la);

// tr(u-_{n-a} h_{n-a,a} u+_a z_la h_{a,n-a} T_{w_{hat(la)'}})
//   = v^{n(n-1)/2 + l(w_{la1}) + l(w_{la2})} u^{n-a}.
bool verify_trace_identity(const Bipartition& la);

}  // namespace heckedn
