#include "heckedn/schur.hpp"

#include <algorithm>

#include <map>
#include <mutex>
#include <utility>

namespace heckedn {

LaurentPoly schur_type_a(const Partition& la) {
    LaurentPoly out(1);
    for (int h : hook_lengths(la)) out *= quantum_integer(h);
    return out.shifted(-static_cast<int>(young_longest_length(conjugate(la))), 0);
}

namespace {

// Mixed hook through the other component's column: for x = (i,j) in mu,
// arm in mu plus leg in nu plus one.  Can be zero or negative.
int mixed_hook(const Partition& mu, const Partition& nu_conj, int i, int j) {
    return mu.part(i) + nu_conj.part(j) - i - j + 1;
}

// Exponent of the global v-monomial in the cross part of s_la(v,u), pinned
// by the brute-force eigenvalues for every bipartition of n <= 4 and by the
// worked n = 6 values; the last term carries the normalization of the
// one-parameter f (it cancels from every ratio the decomposition formulas
// use and vanishes whenever one component has at most two boxes).
int cross_v_exponent(const Bipartition& la) {
    const int n = la.size();
    const Partition c1 = conjugate(la.first());
    const Partition c2 = conjugate(la.second());
    int column_pairing = 0;
    for (int j = 1; j <= std::max(c1.rows(), c2.rows()); ++j)
        column_pairing += c1.part(j) * c2.part(j);
    const int mu = std::min(la.a(), n - la.a());
    return n * (n - 1) / 2 - column_pairing - mu * (mu - 1) * (mu - 2);
}

}  // namespace

LaurentPoly schur_bipartition(const Bipartition& la) {
    const int n = la.size();
    const int a = la.a();
    const Partition c1 = conjugate(la.first());
    const Partition c2 = conjugate(la.second());

    LaurentPoly cross(1);
    for (const Cell& x : cells_of(la.first())) {
        int h = mixed_hook(la.first(), c2, x.row, x.col);
        cross *= LaurentPoly(1) + LaurentPoly::monomial(1, h, 1);  // 1 + u v^h
    }
    for (const Cell& x : cells_of(la.second())) {
        int h = mixed_hook(la.second(), c1, x.row, x.col);
        cross *= LaurentPoly::u() + LaurentPoly::v(h);  // u + v^h
    }
    cross = cross.shifted(cross_v_exponent(la) - static_cast<int>(static_cast<long>(n) * (n - 1) / 2),
                          -(n - a));
    return schur_type_a(la.first()) * schur_type_a(la.second()) * cross;
}

LaurentPoly f_poly(const Bipartition& la) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, LaurentPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({la.first(), la.second()});
        if (it != cache.end()) return it->second;
    }
    const int n = la.size();
    const LaurentPoly num = schur_bipartition(la);
    const LaurentPoly den = schur_type_a(la.first()) * schur_type_a(la.second());
    LaurentPoly f = laurent_exact_div(num, den)
                        .shifted(static_cast<int>(static_cast<long>(n) * (n - 1) / 2), n - la.a());
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(la.first(), la.second()), std::move(f)).first->second;
}

LaurentPoly f_poly_one_param(const Bipartition& la) { return f_poly(la).substitute_u_one(); }

LaurentPoly g_poly(const Partition& beta) {
    return laurent_sqrt(f_poly_one_param(Bipartition(beta, beta)));
}

}  // namespace heckedn
