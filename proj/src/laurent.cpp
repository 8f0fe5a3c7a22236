#include "heckedn/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace heckedn {

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

bool LaurentPoly::one_variable() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.second == 0; });
}

Int LaurentPoly::coeff(int vpow, int upow) const {
    auto it = terms_.find({vpow, upow});
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_v_power() const {
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::min(m, e.first);
    return m;
}

int LaurentPoly::max_v_power() const {
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::max(m, e.first);
    return m;
}

int LaurentPoly::min_u_power() const {
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return m;
}

int LaurentPoly::max_u_power() const {
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::max(m, e.second);
    return m;
}

Int LaurentPoly::leading_coeff_v() const {
    int top = max_v_power();
    Int c = 0;
    for (const auto& [e, coef] : terms_)
        if (e.first == top) c += coef;  // meaningful for one-variable polynomials
    return c;
}

void LaurentPoly::add_term(int vpow, int upow, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({vpow, upow}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int dv, int du) const {
    LaurentPoly r;
    for (const auto& [e, coef] : terms_) r.terms_[{e.first + dv, e.second + du}] = coef;
    return r;
}

LaurentPoly LaurentPoly::substitute_u_one() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, 0, c);
    return r;
}

LaurentPoly LaurentPoly::substitute_u_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, -e.second, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        if (e.first != 0) mono += e.first == 1 ? "v" : "v^" + std::to_string(e.first);
        if (e.second != 0) {
            if (!mono.empty()) mono += " ";
            mono += e.second == 1 ? "u" : "u^" + std::to_string(e.second);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << " ";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly quantum_integer(long k) {
    LaurentPoly r;
    if (k == 0) return r;
    if (k > 0) {
        for (long i = 0; i < k; ++i) r.add_term(static_cast<int>(i), 0, 1);
        return r;
    }
    // [k] = -v^k [-k] for k < 0
    for (long i = 0; i < -k; ++i) r.add_term(static_cast<int>(k + i), 0, -1);
    return r;
}

namespace {

// term order: total degree, then lexicographic on (v,u)
bool term_less(const LaurentPoly::Exp& a, const LaurentPoly::Exp& b) {
    int ta = a.first + a.second, tb = b.first + b.second;
    if (ta != tb) return ta < tb;
    return a < b;
}

LaurentPoly::Exp leading_term(const LaurentPoly& p) {
    auto it = p.terms().begin();
    auto best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (term_less(best, it->first)) best = it->first;
    return best;
}

}  // namespace

LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw NotDivisibleError("division by zero polynomial");
    if (num.is_zero()) return LaurentPoly();

    // Normalize both operands to honest polynomials; the exponent shift moves
    // to the quotient (units of the Laurent ring).
    const int nv = num.min_v_power(), nu = num.min_u_power();
    const int dv = den.min_v_power(), du = den.min_u_power();
    LaurentPoly rem = num.shifted(-nv, -nu);
    LaurentPoly d = den.shifted(-dv, -du);

    const auto dlt = leading_term(d);
    const Int dlc = d.coeff(dlt.first, dlt.second);
    LaurentPoly q;
    while (!rem.is_zero()) {
        const auto rlt = leading_term(rem);
        const Int rlc = rem.coeff(rlt.first, rlt.second);
        if (rlt.first < dlt.first || rlt.second < dlt.second || rlc % dlc != 0)
            throw NotDivisibleError("no exact quotient: " + num.str() + " by " + den.str());
        LaurentPoly t = LaurentPoly::monomial(rlc / dlc, rlt.first - dlt.first, rlt.second - dlt.second);
        q += t;
        rem -= t * d;
    }
    return q.shifted(nv - dv, nu - du);
}

LaurentPoly laurent_sqrt(const LaurentPoly& f) {
    if (!f.one_variable()) throw NotASquareError("square root requires a one-variable polynomial");
    if (f.is_zero()) return f;

    const int lo = f.min_v_power();
    if (lo % 2 != 0) throw NotASquareError("odd valuation: " + f.str());
    const LaurentPoly p = f.shifted(-lo, 0);
    const int deg = p.max_v_power();
    if (deg % 2 != 0) throw NotASquareError("odd degree: " + f.str());
    const int half = deg / 2;

    std::vector<Int> pc(deg + 1), g(half + 1);
    for (const auto& [e, c] : p.terms()) pc[e.first] = c;

    Int lead = pc[deg];
    if (lead < 0 || mpz_perfect_square_p(lead.get_mpz_t()) == 0)
        throw NotASquareError("leading coefficient is not a square: " + f.str());
    mpz_sqrt(g[half].get_mpz_t(), lead.get_mpz_t());

    const Int two_lead = 2 * g[half];
    for (int k = half - 1; k >= 0; --k) {
        Int s = pc[half + k];
        for (int j = k + 1; j < half; ++j)
            if (half + k - j >= 0 && half + k - j <= half) s -= g[j] * g[half + k - j];
        if (s % two_lead != 0) throw NotASquareError("not a perfect square: " + f.str());
        g[k] = s / two_lead;
    }

    LaurentPoly root;
    for (int k = 0; k <= half; ++k) root.add_term(k + lo / 2, 0, g[k]);
    if (!(root * root == f)) throw NotASquareError("not a perfect square: " + f.str());
    return root;  // leading coefficient positive by construction
}

}  // namespace heckedn
