#include "heckedn/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace heckedn {

namespace {

std::mutex phi_mutex;
std::map<int, std::vector<Int>> phi_cache;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int e) {
    if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be >= 1");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(e);
    if (it != phi_cache.end()) return it->second;
    // x^e - 1 = prod_{d | e} Phi_d; fill the cache divisor by divisor.
    for (int d = 1; d <= e; ++d) {
        if (e % d != 0 || phi_cache.count(d)) continue;
        LaurentPoly num = LaurentPoly::v(d) - LaurentPoly(1);
        for (int dd = 1; dd < d; ++dd) {
            if (d % dd != 0) continue;
            const auto& phi_dd = phi_cache.at(dd);
            LaurentPoly den;
            for (size_t i = 0; i < phi_dd.size(); ++i)
                den.add_term(static_cast<int>(i), 0, phi_dd[i]);
            num = laurent_exact_div(num, den);
        }
        std::vector<Int> coeffs(num.max_v_power() + 1);
        for (const auto& [exp, c] : num.terms()) coeffs[exp.first] = c;
        phi_cache.emplace(d, std::move(coeffs));
    }
    return phi_cache.at(e);
}

CyclotomicNumber::CyclotomicNumber(int e, const Rat& constant) : e_(e) {
    const auto& phi = cyclotomic_polynomial(e);
    coeffs_.assign(phi.size() - 1, Rat(0));
    if (constant != 0) coeffs_[0] = constant;
}

CyclotomicNumber CyclotomicNumber::zeta_power(int e, long k) {
    const auto& phi = cyclotomic_polynomial(e);
    const int deg = static_cast<int>(phi.size()) - 1;
    long r = k % e;
    if (r < 0) r += e;
    CyclotomicNumber out(e);
    if (static_cast<int>(r) < deg) {
        out.coeffs_[r] = 1;
        return out;
    }
    // reduce x^r mod Phi_e by repeated substitution of the top power
    std::vector<Rat> poly(r + 1, Rat(0));
    poly[r] = 1;
    for (long d = r; d >= deg; --d) {
        Rat top = poly[d];
        if (top == 0) continue;
        poly[d] = 0;
        for (int i = 0; i < deg; ++i) {
            Rat t = top * Rat(phi[i]);
            poly[d - deg + i] -= t;
        }
    }
    for (int i = 0; i < deg; ++i) {
        out.coeffs_[i] = poly[i];
        out.coeffs_[i].canonicalize();
    }
    return out;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& rhs) const {
    if (e_ != rhs.e_) throw TagMismatchError("cyclotomic numbers live in different fields");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    check_same_field(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    check_same_field(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.check_same_field(b);
    const auto& phi = cyclotomic_polynomial(a.e_);
    const int deg = static_cast<int>(phi.size()) - 1;
    std::vector<Rat> prod(2 * deg - 1, Rat(0));
    for (int i = 0; i < deg; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    for (int d = static_cast<int>(prod.size()) - 1; d >= deg; --d) {
        Rat top = prod[d];
        if (top == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < deg; ++i) prod[d - deg + i] -= top * Rat(phi[i]);
    }
    CyclotomicNumber out(a.e_);
    for (int i = 0; i < deg; ++i) out.coeffs_[i] = prod[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    // extended Euclid in Q[x] for gcd(this, Phi_e) = 1
    const auto& phi = cyclotomic_polynomial(e_);

    using Poly = std::vector<Rat>;  // dense, constant first
    auto degree = [](const Poly& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    auto trim = [&](Poly& p) { p.resize(std::max(degree(p) + 1, 1)); };

    Poly r0(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0{Rat(0)}, s1{Rat(1)};  // s-coefficients track the input operand

    while (degree(r1) > 0) {
        // divide r0 by r1
        Poly q(std::max<size_t>(r0.size(), 1), Rat(0));
        Poly rem = r0;
        int d1 = degree(r1);
        Rat lc1 = r1[d1];
        while (degree(rem) >= d1 && degree(rem) >= 0) {
            int d = degree(rem);
            Rat f = rem[d] / lc1;
            q[d - d1] += f;
            for (int i = 0; i <= d1; ++i) rem[d - d1 + i] -= f * r1[i];
        }
        trim(rem);
        trim(q);
        // s2 = s0 - q*s1
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (degree(r1) != 0 || r1[0] == 0)
        throw std::domain_error("inverse: gcd with Phi_e is not a unit");
    CyclotomicNumber out(e_);
    Rat scale = Rat(1) / r1[0];
    for (size_t i = 0; i < s1.size() && i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = s1[i] * scale;
        out.coeffs_[i].canonicalize();
    }
    if (s1.size() > out.coeffs_.size())
        throw std::logic_error("inverse: unreduced Bezout coefficient");
    return out;
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << " z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber cyclotomic_eval(const LaurentPoly& p, int e, const Rat& tv_value) {
    CyclotomicNumber acc(e);
    for (const auto& [exp, c] : p.terms()) {
        Rat scale(c);
        if (exp.second != 0) {
            if (tv_value == 0) throw std::domain_error("cyclotomic_eval: u = 0 with u-power present");
            Rat pw(1);
            Rat base = exp.second > 0 ? tv_value : Rat(1) / tv_value;
            for (int j = 0; j < std::abs(exp.second); ++j) pw *= base;
            scale *= pw;
        }
        CyclotomicNumber z = CyclotomicNumber::zeta_power(e, exp.first);
        acc += z * CyclotomicNumber(e, scale);
    }
    return acc;
}

Rat cyclotomic_to_rational(const CyclotomicNumber& x) {
    if (!x.is_rational())
        throw NotRationalError("value lies outside the prime subfield: " + x.str());
    return x.coeffs()[0];
}

}  // namespace heckedn
