#include "heckedn/hecke_algebra.hpp"

#include <algorithm>

#include "heckedn/errors.hpp"
#include "heckedn/schur.hpp"

namespace heckedn {

HeckeElement HeckeElement::one(AlgebraTag tag) {
    HeckeElement e(tag);
    e.add(SignedPermutation::identity(tag.rank), LaurentPoly(1));
    return e;
}

void HeckeElement::add(const SignedPermutation& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly HeckeElement::coeff(const SignedPermutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
    HeckeElement out(tag_);
    if (c.is_zero()) return out;
    for (const auto& [w, coef] : terms_) out.terms_.emplace(w, coef * c);
    return out;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (!(a.tag_ == b.tag_)) throw TagMismatchError("adding elements of different algebras");
    HeckeElement out = a;
    for (const auto& [w, c] : b.terms_) out.add(w, c);
    return out;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    if (!(a.tag_ == b.tag_)) throw TagMismatchError("subtracting elements of different algebras");
    HeckeElement out = a;
    for (const auto& [w, c] : b.terms_) out.add(w, -c);
    return out;
}

HeckeElement HeckeElement::times_gen(int s) const {
    if (s < 0 || s >= tag_.rank || (s == 0 && !tag_.type_b))
        throw TagMismatchError("generator index outside the algebra");
    HeckeElement out(tag_);
    const LaurentPoly param = s == 0 ? LaurentPoly::u() : LaurentPoly::v();
    const LaurentPoly param_minus_one = param - LaurentPoly(1);
    for (const auto& [w, c] : terms_) {
        SignedPermutation ws = w.times_gen(s);
        if (!w.right_descent(s)) {
            out.add(ws, c);
        } else {
            out.add(ws, c * param);
            out.add(w, c * param_minus_one);
        }
    }
    return out;
}

HeckeElement HeckeElement::times_word(const std::vector<int>& word) const {
    HeckeElement out = *this;
    for (int s : word) out = out.times_gen(s);
    return out;
}

HeckeElement apply_factors(HeckeElement x, const std::vector<HeckeFactor>& factors) {
    for (const auto& f : factors) {
        HeckeElement acc(x.tag());
        for (const auto& s : f.summands) acc = acc + x.times_word(s.word).scaled(s.coeff);
        x = std::move(acc);
    }
    return x;
}

HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) {
    if (!(x.tag() == y.tag())) throw TagMismatchError("multiplying elements of different algebras");
    HeckeElement out(x.tag());
    for (const auto& [w, c] : y.terms())
        out = out + x.times_word(w.reduced_word()).scaled(c);
    return out;
}

LaurentPoly trace(const HeckeElement& x) {
    return x.coeff(SignedPermutation::identity(x.tag().rank));
}

HeckeElement t_word(AlgebraTag tag, const std::vector<int>& word) {
    return HeckeElement::one(tag).times_word(word);
}

namespace {

// Right coset sums building Sum_{w in S_block} c^{l(w)} T_w one level at a
// time; `sign_v_inverse` switches from x (coefficient 1) to y (coefficient
// (-v)^{-l}).
std::vector<HeckeFactor> young_sum_factors(const std::vector<int>& blocks, int offset,
                                           bool sign_v_inverse) {
    std::vector<HeckeFactor> out;
    int start = offset + 1;  // first position of the current block, 1-based
    for (int len : blocks) {
        for (int k = start + 1; k < start + len; ++k) {
            // positions start..k; coset representatives s_{k-1} s_{k-2} .. s_j
            HeckeFactor f;
            f.summands.push_back({{}, LaurentPoly(1)});
            for (int j = k - 1; j >= start; --j) {
                std::vector<int> word;
                for (int t = k - 1; t >= j; --t) word.push_back(t);
                LaurentPoly c(1);
                if (sign_v_inverse) {
                    int l = static_cast<int>(word.size());
                    c = LaurentPoly::monomial((l % 2) ? -1 : 1, -l, 0);
                }
                f.summands.push_back({std::move(word), std::move(c)});
            }
            out.push_back(std::move(f));
        }
        start += len;
    }
    return out;
}

std::vector<int> block_word(const std::vector<int>& word, int offset) {
    std::vector<int> out;
    out.reserve(word.size());
    for (int s : word) out.push_back(s + offset);
    return out;
}

}  // namespace

std::vector<HeckeFactor> x_factors(const std::vector<int>& blocks, int offset) {
    return young_sum_factors(blocks, offset, false);
}

std::vector<HeckeFactor> y_factors(const std::vector<int>& blocks, int offset) {
    return young_sum_factors(blocks, offset, true);
}

HeckeElement x_element(AlgebraTag tag, const std::vector<int>& blocks) {
    return apply_factors(HeckeElement::one(tag), x_factors(blocks));
}

HeckeElement y_element(AlgebraTag tag, const std::vector<int>& blocks) {
    return apply_factors(HeckeElement::one(tag), y_factors(blocks));
}

std::vector<HeckeFactor> u_plus_factors(int k) {
    std::vector<HeckeFactor> out;
    for (int i = 1; i <= k; ++i) {
        HeckeFactor f;
        f.summands.push_back({{}, LaurentPoly::v(i - 1)});
        std::vector<int> word;
        for (int t = i - 1; t >= 0; --t) word.push_back(t);
        for (int t = 1; t <= i - 1; ++t) word.push_back(t);
        f.summands.push_back({std::move(word), LaurentPoly(1)});
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<HeckeFactor> u_minus_factors(int k) {
    std::vector<HeckeFactor> out;
    for (int i = 1; i <= k; ++i) {
        HeckeFactor f;
        f.summands.push_back({{}, LaurentPoly::monomial(1, i - 1, 1)});
        std::vector<int> word;
        for (int t = i - 1; t >= 0; --t) word.push_back(t);
        for (int t = 1; t <= i - 1; ++t) word.push_back(t);
        f.summands.push_back({std::move(word), LaurentPoly(-1)});
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> h_ab_word(int a, int b) {
    std::vector<int> word;
    if (a <= 0 || b <= 0) return word;
    for (int j = 0; j < b; ++j)
        for (int t = a + j; t >= j + 1; --t) word.push_back(t);
    return word;
}

HeckeElement u_plus(int n, int k) {
    return apply_factors(HeckeElement::one({true, n}), u_plus_factors(k));
}

HeckeElement u_minus(int n, int k) {
    return apply_factors(HeckeElement::one({true, n}), u_minus_factors(k));
}

HeckeElement h_ab(AlgebraTag tag, int a, int b) { return t_word(tag, h_ab_word(a, b)); }

std::vector<HeckeFactor> z_factors(const Partition& mu, int offset) {
    std::vector<HeckeFactor> out = x_factors(mu.parts(), offset);
    HeckeFactor tw;
    tw.summands.push_back({block_word(w_lambda(mu).word, offset), LaurentPoly(1)});
    out.push_back(std::move(tw));
    auto y = y_factors(conjugate(mu).parts(), offset);
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

std::vector<HeckeFactor> z_prime_factors(const Partition& mu, int offset) {
    const Partition muc = conjugate(mu);
    std::vector<HeckeFactor> out = y_factors(muc.parts(), offset);
    HeckeFactor tw;
    tw.summands.push_back({block_word(w_lambda(muc).word, offset), LaurentPoly(1)});
    out.push_back(std::move(tw));
    auto x = x_factors(mu.parts(), offset);
    out.insert(out.end(), x.begin(), x.end());
    return out;
}

HeckeElement z_partition(AlgebraTag tag, const Partition& mu) {
    return apply_factors(HeckeElement::one(tag), z_factors(mu));
}

HeckeElement z_prime_partition(AlgebraTag tag, const Partition& mu) {
    return apply_factors(HeckeElement::one(tag), z_prime_factors(mu));
}

std::vector<HeckeFactor> z_bipartition_factors(const Bipartition& la) {
    std::vector<HeckeFactor> out = z_factors(la.first(), 0);
    auto second = z_factors(la.second(), la.a());
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

bool verify_specht_scalar(const Partition& mu) {
    const int m = mu.size();
    const AlgebraTag tag{false, m};
    const HeckeElement z = z_partition(tag, mu);
    if (z.is_zero()) return false;  // z_mu generates the Specht module
    const HeckeElement lhs =
        apply_factors(z.times_word(w_lambda(conjugate(mu)).word), z_factors(mu));
    const LaurentPoly scale =
        LaurentPoly::v(static_cast<int>(w_lambda(mu).length())) * schur_type_a(mu);
    return lhs == z.scaled(scale);
}

LaurentPoly oracle_f(const Bipartition& la) {
    const int n = la.size();
    const int a = la.a();
    const AlgebraTag tag{true, n};

    std::vector<HeckeFactor> pre;
    auto append = [&pre](std::vector<HeckeFactor> fs) {
        pre.insert(pre.end(), fs.begin(), fs.end());
    };
    append(u_minus_factors(n - a));
    pre.push_back({{{h_ab_word(n - a, a), LaurentPoly(1)}}});
    append(u_plus_factors(a));
    const HeckeElement p = apply_factors(HeckeElement::one(tag), pre);

    const auto zf = z_bipartition_factors(la);
    const HeckeElement y = apply_factors(p, zf);
    if (y.is_zero()) throw ZeroVectorError("oracle_f: Y vanishes for " + la.str());

    std::vector<HeckeFactor> rest;
    rest.push_back({{{h_ab_word(a, n - a), LaurentPoly(1)}}});
    rest.insert(rest.end(), pre.begin(), pre.end());
    rest.insert(rest.end(), zf.begin(), zf.end());
    const HeckeElement x = apply_factors(p, rest);

    const auto& [w0, y0] = *y.terms().begin();
    LaurentPoly c;
    try {
        c = laurent_exact_div(x.coeff(w0), y0);
    } catch (const NotDivisibleError&) {
        throw InconsistentEigenvalueError("oracle_f: no scalar for " + la.str());
    }
    if (!(x == y.scaled(c)))
        throw InconsistentEigenvalueError("oracle_f: X != c Y for " + la.str());
    return c;
}

bool verify_trace_identity(const Bipartition& la) {
    const int n = la.size();
    const int a = la.a();
    const AlgebraTag tag{true, n};

    std::vector<HeckeFactor> chain;
    auto append = [&chain](std::vector<HeckeFactor> fs) {
        chain.insert(chain.end(), fs.begin(), fs.end());
    };
    append(u_minus_factors(n - a));
    chain.push_back({{{h_ab_word(n - a, a), LaurentPoly(1)}}});
    append(u_plus_factors(a));
    append(z_bipartition_factors(la));
    chain.push_back({{{h_ab_word(a, n - a), LaurentPoly(1)}}});
    // T_{w_{hat(la)'}}: hat(la)' = (la2', la1') as an (n-a)-bipartition
    chain.push_back({{{block_word(w_lambda(conjugate(la.second())).word, 0), LaurentPoly(1)}}});
    chain.push_back(
        {{{block_word(w_lambda(conjugate(la.first())).word, n - a), LaurentPoly(1)}}});

    const HeckeElement prod = apply_factors(HeckeElement::one(tag), chain);
    const long lw1 = w_lambda(la.first()).length();
    const long lw2 = w_lambda(la.second()).length();
    const LaurentPoly expected = LaurentPoly::monomial(
        1, static_cast<int>(static_cast<long>(n) * (n - 1) / 2 + lw1 + lw2), n - a);
    return trace(prod) == expected;
}

}  // namespace heckedn
