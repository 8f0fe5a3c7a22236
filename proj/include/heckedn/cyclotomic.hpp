#pragma once

#include <vector>

#include "heckedn/laurent.hpp"

namespace heckedn {

// Phi_e as a dense integer coefficient vector, constant term first, monic.
// Computed by exact division of x^e - 1 by the product of Phi_d over proper
// divisors d of e; results are cached.
const std::vector<Int>& cyclotomic_polynomial(int e);

// Element of Q(zeta_e) as a rational-coefficient polynomial in zeta_e of
// degree < deg Phi_e.  Arithmetic is exact; equality is coefficientwise.
class CyclotomicNumber {
  public:
    CyclotomicNumber(int e, const Rat& constant = Rat(0));
    static CyclotomicNumber zeta_power(int e, long k);  // zeta_e^k

    int order() const { return e_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber inverse() const;  // field inverse, requires nonzero
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a * b.inverse();
    }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.e_ == b.e_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    int e_;
    std::vector<Rat> coeffs_;  // length deg Phi_e

    void check_same_field(const CyclotomicNumber& rhs) const;
};

// Substitute v -> zeta_e and u -> tv_value, reduce mod Phi_e.  Negative
// powers of v go through zeta^-1 = zeta^(e-1); tv_value must be nonzero when
// negative u-powers occur.
CyclotomicNumber cyclotomic_eval(const LaurentPoly& p, int e, const Rat& tv_value = Rat(1));

// The rational value of x, when x lies in the prime subfield; throws
// NotRationalError otherwise.
Rat cyclotomic_to_rational(const CyclotomicNumber& x);

}  // namespace heckedn
