#include "heckedn/typea.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "heckedn/cyclotomic.hpp"
#include "heckedn/errors.hpp"
#include "heckedn/hecke_algebra.hpp"

namespace heckedn {

long long TypeADecompositionMatrix::entry(const Partition& beta, const Partition& alpha) const {
    auto r = std::find(rows.begin(), rows.end(), beta);
    auto c = std::find(cols.begin(), cols.end(), alpha);
    if (r == rows.end() || c == cols.end())
        throw std::invalid_argument("label outside the matrix: " + beta.str() + ", " + alpha.str());
    return entries[r - rows.begin()][c - cols.begin()];
}

namespace {

using FockVec = std::map<Partition, LaurentPoly>;  // coefficients in Z[q,q^-1]

int residue(const Cell& c, int e) { return ((c.col - c.row) % e + e) % e; }

void fock_add(FockVec& f, const Partition& la, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.try_emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

// f_i: add one i-node; the q-power counts addable minus removable i-nodes
// strictly above the new node.
FockVec f_operator(const FockVec& f, int i, int e) {
    FockVec out;
    for (const auto& [la, c] : f) {
        const auto addable = addable_cells(la);
        const auto removable = removable_cells(la);
        for (const Cell& b : addable) {
            if (residue(b, e) != i) continue;
            int weight = 0;
            for (const Cell& x : addable)
                if (x.row < b.row && residue(x, e) == i) ++weight;
            for (const Cell& x : removable)
                if (x.row < b.row && residue(x, e) == i) --weight;
            fock_add(out, with_cell(la, b), c.shifted(weight, 0));
        }
    }
    return out;
}

// Balanced quantum factorial prod_{k<=a} (q^{k-1} + q^{k-3} + ... + q^{1-k}).
LaurentPoly balanced_q_factorial(int a) {
    LaurentPoly out(1);
    for (int k = 1; k <= a; ++k) {
        LaurentPoly qk;
        for (int j = 0; j < k; ++j) qk.add_term(k - 1 - 2 * j, 0, 1);
        out *= qk;
    }
    return out;
}

FockVec f_divided_power(FockVec f, int i, int a, int e) {
    for (int t = 0; t < a; ++t) f = f_operator(f, i, e);
    if (a > 1) {
        const LaurentPoly fact = balanced_q_factorial(a);
        for (auto& [la, c] : f) c = laurent_exact_div(c, fact);
    }
    return f;
}

// Ladder reading of mu: ladder index row + (e-1)(col-1), increasing; each
// ladder carries one residue.
std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu, int e) {
    std::map<int, std::pair<int, int>> ladders;  // index -> (residue, count)
    for (const Cell& c : cells_of(mu)) {
        const int idx = c.row + (e - 1) * (c.col - 1);
        const int r = residue(c, e);
        auto [it, inserted] = ladders.try_emplace(idx, std::make_pair(r, 1));
        if (!inserted) {
            if (it->second.first != r) throw std::logic_error("mixed residues in a ladder");
            it->second.second += 1;
        }
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [idx, rc] : ladders) out.push_back(rc);
    return out;
}

// Bar-symmetric completion of the q^{<=0} part of a: the unique c with
// c(q) = c(q^-1) and a - c in qZ[q].
LaurentPoly bar_symmetric_part(const LaurentPoly& a) {
    LaurentPoly c;
    for (const auto& [exp, coef] : a.terms()) {
        if (exp.first > 0) continue;
        c.add_term(exp.first, 0, coef);
        if (exp.first < 0) c.add_term(-exp.first, 0, coef);
    }
    return c;
}

struct CanonicalBasis {
    // G(mu) for every e-regular mu, keyed by mu.
    std::map<Partition, FockVec> g;
};

CanonicalBasis canonical_basis(int m, int e) {
    CanonicalBasis cb;
    std::vector<Partition> regulars;
    for (const auto& p : partitions_of(m))
        if (is_e_regular(p, e)) regulars.push_back(p);
    // Most dominated first: lex ascending refines dominance upward.
    std::sort(regulars.begin(), regulars.end());

    for (const auto& mu : regulars) {
        FockVec a;
        a.emplace(Partition(), LaurentPoly(1));
        for (const auto& [res, count] : ladder_sequence(mu, e)) a = f_divided_power(a, res, count, e);
        if (a.find(mu) == a.end() || !a.at(mu).is_one())
            throw std::logic_error("ladder product is not unitriangular at " + mu.str());

        // Strip bar-invariant multiples of already-known canonical vectors,
        // most dominant candidates first.
        for (auto it = regulars.rbegin(); it != regulars.rend(); ++it) {
            const Partition& nu = *it;
            if (nu == mu) continue;
            auto coeff_it = a.find(nu);
            if (coeff_it == a.end()) continue;
            const LaurentPoly c = bar_symmetric_part(coeff_it->second);
            if (c.is_zero()) continue;
            const auto g_it = cb.g.find(nu);
            if (g_it == cb.g.end())
                throw std::logic_error("correction needs an unknown canonical vector");
            for (const auto& [la, gc] : g_it->second) fock_add(a, la, -(gc * c));
        }

        for (const auto& [la, c] : a) {
            if (la == mu) continue;
            if (c.min_v_power() < 1)
                throw std::logic_error("canonical coefficient not in qZ[q] at " + mu.str());
        }
        cb.g.emplace(mu, std::move(a));
    }
    return cb;
}

long long eval_at_one(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    if (!s.fits_slong_p()) throw std::overflow_error("decomposition number overflow");
    return s.get_si();
}

std::mutex typea_mutex;
std::map<std::pair<int, int>, TypeADecompositionMatrix> typea_cache;

TypeADecompositionMatrix compute_typea(int m, int e) {
    const CanonicalBasis cb = canonical_basis(m, e);
    TypeADecompositionMatrix out;
    out.m = m;
    out.e = e;
    out.rows = partitions_of(m);
    for (const auto& p : out.rows)
        if (is_e_restricted(p, e)) out.cols.push_back(p);

    out.entries.assign(out.rows.size(), std::vector<long long>(out.cols.size(), 0));
    for (size_t j = 0; j < out.cols.size(); ++j) {
        // Labeling transport: the dual Specht / e-restricted numbers
        // are the regular-convention coefficients at conjugate labels.
        const FockVec& g = cb.g.at(conjugate(out.cols[j]));
        for (size_t i = 0; i < out.rows.size(); ++i) {
            auto it = g.find(conjugate(out.rows[i]));
            if (it != g.end()) out.entries[i][j] = eval_at_one(it->second);
        }
    }

    // Invariants of the type: unit diagonal and dominance-directed support.
    for (size_t j = 0; j < out.cols.size(); ++j) {
        if (out.entry(out.cols[j], out.cols[j]) != 1)
            throw std::logic_error("decomposition matrix lost its unit diagonal");
        for (size_t i = 0; i < out.rows.size(); ++i) {
            if (out.entries[i][j] < 0) throw std::logic_error("negative decomposition number");
            if (out.entries[i][j] != 0 && !dominance_leq(out.cols[j], out.rows[i]))
                throw std::logic_error("support escapes the dominance order");
        }
    }
    return out;
}

}  // namespace

LaurentPoly llt_graded_coefficient(const Partition& la, const Partition& mu, int e) {
    if (la.size() != mu.size()) throw SizeMismatchError("llt_graded_coefficient: sizes differ");
    const CanonicalBasis cb = canonical_basis(mu.size(), e);
    auto it = cb.g.find(mu);
    if (it == cb.g.end()) throw std::invalid_argument(mu.str() + " is not e-regular");
    auto c = it->second.find(la);
    return c == it->second.end() ? LaurentPoly() : c->second;
}

TypeADecompositionMatrix decomposition_matrix_type_a(int m, int e, const std::string& cache_dir) {
    if (m < 1 || e < 2) throw std::invalid_argument("decomposition_matrix_type_a: need m >= 1, e >= 2");
    std::filesystem::path file;
    if (!cache_dir.empty())
        file = std::filesystem::path(cache_dir) /
               ("typea_m" + std::to_string(m) + "_e" + std::to_string(e) + ".txt");
    auto persist = [&](const TypeADecompositionMatrix& mat) {
        if (cache_dir.empty() || std::filesystem::exists(file)) return;
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        std::ofstream out(file);
        out << typea_cache_text(mat);
    };

    {
        std::lock_guard<std::mutex> lock(typea_mutex);
        auto it = typea_cache.find({m, e});
        if (it != typea_cache.end()) {
            persist(it->second);
            return it->second;
        }
    }

    TypeADecompositionMatrix mat;
    bool loaded = false;
    if (!cache_dir.empty() && std::filesystem::exists(file)) {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        mat = parse_typea_cache_text(ss.str());
        loaded = mat.m == m && mat.e == e;
    }
    if (!loaded) {
        mat = compute_typea(m, e);
        persist(mat);
    }

    std::lock_guard<std::mutex> lock(typea_mutex);
    return typea_cache.emplace(std::make_pair(m, e), std::move(mat)).first->second;
}

long long gram_rank_dim_simple(const Partition& alpha, int e) {
    const int m = alpha.size();
    const AlgebraTag tag{false, m};
    const HeckeElement zp = z_prime_partition(tag, alpha);
    if (zp.is_zero()) throw RankDeficientError("z' vanished for " + alpha.str());

    // pivot term of z' whose coefficient stays invertible at q = zeta_e
    const SignedPermutation* pivot = nullptr;
    CyclotomicNumber pivot_inv(e);
    for (const auto& [w, c] : zp.terms()) {
        const CyclotomicNumber value = cyclotomic_eval(c, e);
        if (!value.is_zero()) {
            pivot = &w;
            pivot_inv = value.inverse();
            break;
        }
    }
    if (pivot == nullptr) throw RankDeficientError("z' vanishes at the evaluation: " + alpha.str());

    const auto group = enumerate_group(m, true);
    std::vector<HeckeElement> basis;
    basis.reserve(group.size());
    for (const auto& w : group) basis.push_back(zp.times_word(w.reduced_word()));

    // The cellular form on the dual Specht module z' H: the sandwich
    // y_{alpha'} H x_alpha is spanned by z' alone, so
    //   z' h_i h_j^* x_alpha = <b_i, b_j> z'
    // with * the anti-automorphism fixing the generators.  dim D_alpha is
    // the rank of this Gram matrix over Q(zeta_e).
    const auto xf = x_factors(alpha.parts());
    const LaurentPoly pivot_coeff = zp.coeff(*pivot);
    const size_t k = basis.size();
    std::vector<std::vector<CyclotomicNumber>> gram(k, std::vector<CyclotomicNumber>(k, CyclotomicNumber(e)));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            auto inv_word = group[j].inverse().reduced_word();
            const HeckeElement sandwich = apply_factors(basis[i].times_word(inv_word), xf);
            const LaurentPoly num = sandwich.coeff(*pivot);
            if (!(sandwich.scaled(pivot_coeff) == zp.scaled(num)))
                throw std::logic_error("sandwich escaped the z' line at " + alpha.str());
            gram[i][j] = cyclotomic_eval(num, e) * pivot_inv;
        }
    }

    // Exact Gaussian elimination over Q(zeta_e).
    long long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < k && row < k; ++col) {
        size_t pivot = row;
        while (pivot < k && gram[pivot][col].is_zero()) ++pivot;
        if (pivot == k) continue;
        std::swap(gram[pivot], gram[row]);
        const CyclotomicNumber inv = gram[row][col].inverse();
        for (size_t r = row + 1; r < k; ++r) {
            if (gram[r][col].is_zero()) continue;
            const CyclotomicNumber factor = gram[r][col] * inv;
            for (size_t c = col; c < k; ++c) gram[r][c] -= factor * gram[row][c];
        }
        ++rank;
        ++row;
    }
    if (rank == 0)
        throw RankDeficientError("Gram rank vanished for " + alpha.str() + " at e=" + std::to_string(e));
    return rank;
}

bool verify_dimension_consistency(int m, int e) {
    const TypeADecompositionMatrix mat = decomposition_matrix_type_a(m, e);

    // Solve the unitriangular system bottom-up (lex ascending visits every
    // alpha after all dominance-smaller columns).
    std::vector<Partition> order = mat.cols;
    std::sort(order.begin(), order.end());
    std::map<Partition, long long> dim;
    for (const auto& alpha : order) {
        long long value = count_standard_tableaux(alpha);
        for (const auto& prev : order) {
            if (prev == alpha) break;
            value -= mat.entry(alpha, prev) * dim.at(prev);
        }
        if (value <= 0) return false;
        dim[alpha] = value;
    }
    // Every row must now be consistent.
    for (const auto& beta : mat.rows) {
        long long total = 0;
        for (const auto& alpha : mat.cols) total += mat.entry(beta, alpha) * dim.at(alpha);
        if (total != count_standard_tableaux(beta)) return false;
    }
    if (m <= 4) {
        for (const auto& alpha : mat.cols)
            if (gram_rank_dim_simple(alpha, e) != dim.at(alpha)) return false;
    }
    return true;
}

std::string typea_cache_text(const TypeADecompositionMatrix& mat) {
    std::ostringstream os;
    os << mat.m << " " << mat.e << " convention=dual-specht\n";
    os << "cols";
    for (const auto& c : mat.cols) os << " " << c.str();
    os << "\n";
    for (size_t i = 0; i < mat.rows.size(); ++i) {
        os << mat.rows[i].str();
        for (long long v : mat.entries[i]) os << " " << v;
        os << "\n";
    }
    return os.str();
}

TypeADecompositionMatrix parse_typea_cache_text(const std::string& text) {
    std::istringstream in(text);
    TypeADecompositionMatrix mat;
    std::string convention, word;
    in >> mat.m >> mat.e >> convention;
    if (convention != "convention=dual-specht")
        throw std::invalid_argument("unrecognized cache convention: " + convention);
    in >> word;  // "cols"
    std::string line;
    std::getline(in, line);
    {
        std::istringstream cols(line);
        while (cols >> word) mat.cols.push_back(parse_partition(word));
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        row >> word;
        mat.rows.push_back(parse_partition(word));
        std::vector<long long> entries;
        long long v;
        while (row >> v) entries.push_back(v);
        if (entries.size() != mat.cols.size())
            throw std::invalid_argument("cache row has the wrong width");
        mat.entries.push_back(std::move(entries));
    }
    return mat;
}

}  // namespace heckedn
