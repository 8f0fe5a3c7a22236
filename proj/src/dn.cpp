#include "heckedn/dn.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "heckedn/cyclotomic.hpp"
#include "heckedn/errors.hpp"
#include "heckedn/schur.hpp"

namespace heckedn {

DnLabel DnLabel::make_pair(const Bipartition& bp) {
    DnLabel out;
    out.kind = Kind::Pair;
    const auto key = [](const Partition& p) { return std::make_pair(p.size(), p); };
    if (key(bp.first()) > key(bp.second()))
        out.pair = bp;
    else
        out.pair = bp.hat();
    if (out.pair.first() == out.pair.second())
        throw std::invalid_argument("equal components need a split label: " + bp.str());
    return out;
}

DnLabel DnLabel::split(const Partition& beta, bool plus) {
    DnLabel out;
    out.kind = plus ? Kind::SplitPlus : Kind::SplitMinus;
    out.beta = beta;
    return out;
}

std::string DnLabel::str() const {
    switch (kind) {
        case Kind::Pair:
            return pair.str();
        case Kind::SplitPlus:
            return Bipartition(beta, beta).str() + "+";
        case Kind::SplitMinus:
            return Bipartition(beta, beta).str() + "-";
    }
    return {};
}

long long DnDecompositionMatrix::entry(const DnLabel& row, const DnLabel& col) const {
    auto r = std::find(rows.begin(), rows.end(), row);
    auto c = std::find(cols.begin(), cols.end(), col);
    if (r == rows.end() || c == cols.end())
        throw std::invalid_argument("label outside the matrix: " + row.str() + ", " + col.str());
    return entries[r - rows.begin()][c - cols.begin()];
}

bool separation_check(int n, int e) {
    if (n < 2 || e < 2) throw std::invalid_argument("separation_check: need n >= 2, e >= 2");
    for (int i = 1; i <= n - 1; ++i) {
        const LaurentPoly p = LaurentPoly(1) + LaurentPoly::v(i);
        if (cyclotomic_eval(p, e).is_zero()) return false;
    }
    return true;
}

namespace {

Rat g_ratio(const Partition& beta, const Partition& alpha, int e, bool sqrt_sign_minus) {
    LaurentPoly gb = g_poly(beta);
    LaurentPoly ga = g_poly(alpha);
    if (sqrt_sign_minus) {
        gb = -gb;
        ga = -ga;
    }
    const CyclotomicNumber num = cyclotomic_eval(gb, e);
    const CyclotomicNumber den = cyclotomic_eval(ga, e);
    if (den.is_zero())
        throw ViolatedTheoremError("g_" + alpha.str() + "(q) = 0 at e=" + std::to_string(e));
    return cyclotomic_to_rational(num / den);
}

long long to_integer(const Rat& value, const std::string& context) {
    Rat v = value;
    v.canonicalize();
    if (v.get_den() != 1) throw NotIntegralError(context + " is not an integer: " + v.get_str());
    if (!v.get_num().fits_slong_p()) throw std::overflow_error(context + " overflows");
    return v.get_num().get_si();
}

}  // namespace

long long split_entry_plus(const Partition& beta, const Partition& alpha, int e,
                           bool sqrt_sign_minus, const std::string& cache_dir) {
    if (beta.size() != alpha.size()) throw SizeMismatchError("split entries need |beta| = |alpha|");
    const int m = beta.size();
    if (!separation_check(2 * m, e))
        throw SeparationFailedError("split entries need separation at n=" + std::to_string(2 * m) +
                                    ", e=" + std::to_string(e));
    const long long d = decomposition_matrix_type_a(m, e, cache_dir).entry(beta, alpha);
    if (d == 0) return 0;
    const Rat r = g_ratio(beta, alpha, e, sqrt_sign_minus);
    const Rat dd(static_cast<long>(d));
    const long long value =
        to_integer(dd * (r + dd) / 2,
                   "[S+" + beta.str() + ":D+" + alpha.str() + "] at e=" + std::to_string(e));
    if (value < 0 || value > d * d)
        throw ViolatedTheoremError("split entry outside [0, d^2] for " + beta.str() + ", " +
                                   alpha.str());
    return value;
}

long long split_entry_minus(const Partition& beta, const Partition& alpha, int e,
                            bool sqrt_sign_minus, const std::string& cache_dir) {
    const int m = beta.size();
    const long long d = decomposition_matrix_type_a(m, e, cache_dir).entry(beta, alpha);
    return d * d - split_entry_plus(beta, alpha, e, sqrt_sign_minus, cache_dir);
}

long long mixed_row_entry(const Bipartition& row_pair, const DnLabel& col, int e,
                          const std::string& cache_dir) {
    const int m = row_pair.a();
    if (row_pair.second().size() != m || row_pair.first() == row_pair.second())
        throw std::invalid_argument("mixed_row_entry wants a distinct equal-size pair");
    const auto d = decomposition_matrix_type_a(m, e, cache_dir);
    if (col.kind == DnLabel::Kind::Pair) {
        if (col.pair.a() != m || col.pair.second().size() != m) return 0;
        return d.entry(row_pair.first(), col.pair.first()) *
                   d.entry(row_pair.second(), col.pair.second()) +
               d.entry(row_pair.first(), col.pair.second()) *
                   d.entry(row_pair.second(), col.pair.first());
    }
    // Same value on the plus and the minus column: the two orderings of the
    // symmetrized product cancel the half, as in the pair-column display.
    // (Restriction of S_la counts D_{(alpha,alpha)} once per sign.)
    return d.entry(row_pair.first(), col.beta) * d.entry(row_pair.second(), col.beta);
}

long long split_row_pair_entry(const Partition& beta, const Bipartition& col_pair, int e,
                               const std::string& cache_dir) {
    const int m = beta.size();
    if (col_pair.a() != m || col_pair.second().size() != m) return 0;
    const auto d = decomposition_matrix_type_a(m, e, cache_dir);
    return d.entry(beta, col_pair.first()) * d.entry(beta, col_pair.second());
}

long long tensor_block_entry(const Bipartition& row_pair, const Bipartition& col_pair, int e,
                             const std::string& cache_dir) {
    if (row_pair.a() <= row_pair.size() - row_pair.a())
        throw std::invalid_argument("tensor_block_entry wants the canonical |la1| > |la2| form");
    if (row_pair.a() != col_pair.a() ||
        row_pair.size() - row_pair.a() != col_pair.size() - col_pair.a())
        return 0;
    const long long d1 = decomposition_matrix_type_a(row_pair.a(), e, cache_dir)
                             .entry(row_pair.first(), col_pair.first());
    if (d1 == 0) return 0;
    const int b = row_pair.size() - row_pair.a();
    const long long d2 =
        b == 0 ? 1
               : decomposition_matrix_type_a(b, e, cache_dir).entry(row_pair.second(),
                                                                    col_pair.second());
    return d1 * d2;
}

namespace {

std::vector<DnLabel> build_labels(int n, bool restricted_only, int e) {
    std::vector<DnLabel> out;
    const int low = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
    auto admissible = [&](const Partition& p) { return !restricted_only || is_e_restricted(p, e); };
    for (int a = n; a >= low; --a) {
        for (const auto& p1 : partitions_of(a)) {
            if (!admissible(p1)) continue;
            for (const auto& p2 : partitions_of(n - a)) {
                if (!admissible(p2)) continue;
                out.push_back(DnLabel::make_pair(Bipartition(p1, p2)));
            }
        }
    }
    if (n % 2 == 0) {
        const int m = n / 2;
        for (const auto& p1 : partitions_of(m)) {
            if (!admissible(p1)) continue;
            for (const auto& p2 : partitions_of(m)) {
                if (!(p2 < p1) || !admissible(p2)) continue;
                out.push_back(DnLabel::make_pair(Bipartition(p1, p2)));
            }
        }
        for (bool plus : {true, false})
            for (const auto& beta : partitions_of(m))
                if (admissible(beta)) out.push_back(DnLabel::split(beta, plus));
    }
    return out;
}

long long matrix_entry(const DnLabel& row, const DnLabel& col, int n, int e,
                       bool sqrt_sign_minus, const std::string& cache_dir) {
    const int m = n / 2;
    const bool row_split = row.kind != DnLabel::Kind::Pair;
    const bool col_split = col.kind != DnLabel::Kind::Pair;
    if (row_split && col_split) {
        const bool same_sign = row.kind == col.kind;
        return same_sign ? split_entry_plus(row.beta, col.beta, e, sqrt_sign_minus, cache_dir)
                         : split_entry_minus(row.beta, col.beta, e, sqrt_sign_minus, cache_dir);
    }
    if (row_split) return split_row_pair_entry(row.beta, col.pair, e, cache_dir);
    if (col_split) {
        if (row.pair.a() != m || row.pair.second().size() != m) return 0;
        return mixed_row_entry(row.pair, col, e, cache_dir);
    }
    if (n % 2 == 0 && row.pair.a() == m)
        return row.pair.a() == col.pair.a() && col.pair.second().size() == m
                   ? mixed_row_entry(row.pair, col, e, cache_dir)
                   : 0;
    return tensor_block_entry(row.pair, col.pair, e, cache_dir);
}

}  // namespace

DnDecompositionMatrix full_matrix(int n, int e, bool sqrt_sign_minus,
                                  const std::string& cache_dir) {
    if (!separation_check(n, e))
        throw SeparationFailedError("the separation condition fails for n=" + std::to_string(n) +
                                    ", e=" + std::to_string(e) +
                                    ": some 1+q^i vanishes in Q(zeta_e)");
    DnDecompositionMatrix mat;
    mat.n = n;
    mat.e = e;
    mat.sqrt_sign_minus = sqrt_sign_minus;
    mat.rows = build_labels(n, false, e);
    mat.cols = build_labels(n, true, e);
    mat.entries.assign(mat.rows.size(), std::vector<long long>(mat.cols.size(), 0));
    for (size_t i = 0; i < mat.rows.size(); ++i)
        for (size_t j = 0; j < mat.cols.size(); ++j)
            mat.entries[i][j] = matrix_entry(mat.rows[i], mat.cols[j], n, e, sqrt_sign_minus,
                                             cache_dir);

    // Simple-head columns: 1 on the diagonal label, and split columns do not
    // meet the opposite split row of the same alpha.
    for (const auto& col : mat.cols) {
        if (mat.entry(col, col) != 1)
            throw ViolatedTheoremError("column " + col.str() + " lost its simple head");
        if (col.kind == DnLabel::Kind::SplitPlus &&
            mat.entry(DnLabel::split(col.beta, false), col) != 0)
            throw ViolatedTheoremError("split column " + col.str() + " meets its twin");
    }
    return mat;
}

DnDecompositionMatrix swap_split_labels(const DnDecompositionMatrix& mat) {
    auto swap_one = [](DnLabel l) {
        if (l.kind == DnLabel::Kind::SplitPlus)
            l.kind = DnLabel::Kind::SplitMinus;
        else if (l.kind == DnLabel::Kind::SplitMinus)
            l.kind = DnLabel::Kind::SplitPlus;
        return l;
    };
    DnDecompositionMatrix out = mat;
    out.entries.assign(mat.rows.size(), std::vector<long long>(mat.cols.size(), 0));
    for (size_t i = 0; i < mat.rows.size(); ++i)
        for (size_t j = 0; j < mat.cols.size(); ++j)
            out.entries[i][j] = mat.entry(swap_one(mat.rows[i]), swap_one(mat.cols[j]));
    return out;
}

std::string render_text(const DnDecompositionMatrix& mat) {
    std::vector<size_t> widths(mat.cols.size());
    size_t row_width = 0;
    for (const auto& r : mat.rows) row_width = std::max(row_width, r.str().size());
    for (size_t j = 0; j < mat.cols.size(); ++j) widths[j] = mat.cols[j].str().size();
    for (size_t i = 0; i < mat.rows.size(); ++i)
        for (size_t j = 0; j < mat.cols.size(); ++j)
            widths[j] = std::max(widths[j], std::to_string(mat.entries[i][j]).size());

    std::ostringstream os;
    os << "decomposition matrix of H_q(D_" << mat.n << "), e = " << mat.e << "\n";
    os << std::string(row_width, ' ');
    for (size_t j = 0; j < mat.cols.size(); ++j)
        os << "  " << std::setw(static_cast<int>(widths[j])) << mat.cols[j].str();
    os << "\n";
    for (size_t i = 0; i < mat.rows.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(row_width)) << mat.rows[i].str()
           << std::right;
        for (size_t j = 0; j < mat.cols.size(); ++j)
            os << "  " << std::setw(static_cast<int>(widths[j])) << mat.entries[i][j];
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const DnDecompositionMatrix& mat) {
    std::ostringstream os;
    for (const auto& c : mat.cols) os << ",\"" << c.str() << "\"";
    os << "\n";
    for (size_t i = 0; i < mat.rows.size(); ++i) {
        os << "\"" << mat.rows[i].str() << "\"";
        for (long long v : mat.entries[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::string render_json(const DnDecompositionMatrix& mat) {
    nlohmann::json j;
    j["n"] = mat.n;
    j["e"] = mat.e;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : mat.rows) j["rows"].push_back(r.str());
    j["cols"] = nlohmann::json::array();
    for (const auto& c : mat.cols) j["cols"].push_back(c.str());
    j["entries"] = mat.entries;
    j["convention"] = {{"sqrt_sign", mat.sqrt_sign_minus ? "-leading" : "+leading"},
                       {"pair_order", "size-then-lex"}};
    return j.dump(2) + "\n";
}

namespace {

DnLabel parse_label(const std::string& text) {
    std::string body = text;
    DnLabel::Kind kind = DnLabel::Kind::Pair;
    if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
        kind = body.back() == '+' ? DnLabel::Kind::SplitPlus : DnLabel::Kind::SplitMinus;
        body.pop_back();
    }
    const Bipartition bp = parse_bipartition(body);
    if (kind == DnLabel::Kind::Pair) return DnLabel::make_pair(bp);
    if (!(bp.first() == bp.second()))
        throw std::invalid_argument("split label needs equal components: " + text);
    return DnLabel::split(bp.first(), kind == DnLabel::Kind::SplitPlus);
}

}  // namespace

DnDecompositionMatrix parse_json_matrix(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    DnDecompositionMatrix mat;
    mat.n = j.at("n").get<int>();
    mat.e = j.at("e").get<int>();
    mat.sqrt_sign_minus = j.at("convention").at("sqrt_sign").get<std::string>() == "-leading";
    for (const auto& r : j.at("rows")) mat.rows.push_back(parse_label(r.get<std::string>()));
    for (const auto& c : j.at("cols")) mat.cols.push_back(parse_label(c.get<std::string>()));
    mat.entries = j.at("entries").get<std::vector<std::vector<long long>>>();
    return mat;
}

}  // namespace heckedn
