#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckedn/errors.hpp"

namespace heckedn {

using Int = mpz_class;
using Rat = mpq_class;

// Exact Laurent polynomial in two variables over Z.  The first variable
// prints as `v`, the second as `u` (the second Hecke parameter).  Terms map
// exponent pairs to nonzero coefficients; one-variable polynomials are the
// subcase with all u-exponents zero.
class LaurentPoly {
  public:
    using Exp = std::pair<int, int>;  // (power of v, power of u)

    LaurentPoly() = default;
    explicit LaurentPoly(const Int& constant) {
        if (constant != 0) terms_[{0, 0}] = constant;
    }
    explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(Int coeff, int vpow, int upow = 0) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[{vpow, upow}] = std::move(coeff);
        return p;
    }
    static LaurentPoly v(int k = 1) { return monomial(1, k, 0); }
    static LaurentPoly u(int k = 1) { return monomial(1, 0, k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool one_variable() const;  // no u-dependence

    const std::map<Exp, Int>& terms() const { return terms_; }
    Int coeff(int vpow, int upow = 0) const;

    // Extremal exponents; require a nonzero polynomial.
    int min_v_power() const;
    int max_v_power() const;
    int min_u_power() const;
    int max_u_power() const;

    // Coefficient of the highest v-power (one-variable use).
    Int leading_coeff_v() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    LaurentPoly scaled(const Int& c) const;
    LaurentPoly shifted(int dv, int du) const;  // multiply by v^dv u^du
    LaurentPoly substitute_u_one() const;       // u := 1
    // Substitute u := u^-1 (used by symmetry cross-checks).
    LaurentPoly substitute_u_inverse() const;

    void add_term(int vpow, int upow, const Int& c);

    // Canonical rendering: terms ascending by (v-power, u-power), `v^k`/`u^k`
    // notation, e.g. "v^-1 + 1 + v".
    std::string str() const;

  private:
    std::map<Exp, Int> terms_;
};

// [k]_v = (v^k - 1)/(v - 1); for k < 0 this equals -v^k [-k]_v.
LaurentPoly quantum_integer(long k);

// Exact quotient in Z[v,v^-1,u,u^-1]; throws NotDivisibleError when no exact
// quotient exists.
LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Square root of a perfect square in Z[v,v^-1] with positive leading
// coefficient (the fixed sign choice).  Throws NotASquareError.
LaurentPoly laurent_sqrt(const LaurentPoly& f);

}  // namespace heckedn
