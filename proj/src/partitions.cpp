#include "heckedn/partitions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckedn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition syntax is [3,2,1]: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in partition: " + text);
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

Partition conjugate(const Partition& la) {
    if (la.empty()) return la;
    std::vector<int> cols(la.part(1), 0);
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 0; j < la.part(i); ++j) ++cols[j];
    return Partition(cols);
}

std::vector<int> hook_lengths(const Partition& la) {
    const Partition conj = conjugate(la);
    std::vector<int> hooks;
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            hooks.push_back(la.part(i) + conj.part(j) - i - j + 1);
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

long young_longest_length(const Partition& la) {
    long total = 0;
    for (int p : la.parts()) total += static_cast<long>(p) * (p - 1) / 2;
    return total;
}

bool is_e_restricted(const Partition& la, int e) {
    for (int i = 1; i <= la.rows(); ++i)
        if (la.part(i) - la.part(i + 1) >= e) return false;
    return true;
}

bool is_e_regular(const Partition& la, int e) {
    int run = 1;
    for (int i = 2; i <= la.rows(); ++i) {
        run = (la.part(i) == la.part(i - 1)) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return la.rows() == 0 || e > 1;
}

bool dominance_leq(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size()) throw SizeMismatchError("dominance needs equal sizes");
    int pm = 0, pl = 0;
    const int rows = std::max(mu.rows(), la.rows());
    for (int i = 1; i <= rows; ++i) {
        pm += mu.part(i);
        pl += la.part(i);
        if (pm > pl) return false;
    }
    return true;
}

long long count_standard_tableaux(const Partition& la) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), la.size());
    for (int h : hook_lengths(la)) num /= h;
    if (!num.fits_slong_p()) throw std::overflow_error("tableaux count overflow");
    return num.get_si();
}

TableauWord w_lambda(const Partition& la) {
    const int m = la.size();
    // t^la: 1..m along successive rows; t_la: 1..m along successive columns.
    // w carries t^la to t_la under the right action on entries, so the
    // one-line form sends each t_la entry to the t^la entry in its cell.
    std::vector<int> images(m + 1, 0);
    const Partition conj = conjugate(la);
    int row_entry = 0;
    std::vector<std::vector<int>> col_tab(la.rows());
    for (int i = 0; i < la.rows(); ++i) col_tab[i].resize(la.part(i + 1));
    int k = 0;
    for (int j = 1; j <= la.part(1); ++j)
        for (int i = 1; i <= conj.part(j); ++i) col_tab[i - 1][j - 1] = ++k;
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j) images[col_tab[i - 1][j - 1]] = ++row_entry;

    TableauWord out;
    out.one_line.assign(images.begin() + 1, images.end());

    // Extract a reduced word by repeatedly removing a right descent.
    std::vector<int> w = out.one_line;
    std::vector<int> rev;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < m; ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                rev.push_back(i + 1);
                changed = true;
                break;
            }
        }
    }
    out.word.assign(rev.rbegin(), rev.rend());
    return out;
}

const std::vector<Partition>& partitions_of(int k) {
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (k >= 0) rec(rec, k, k == 0 ? 1 : k);
    return cache.emplace(k, std::move(out)).first->second;
}

std::string Bipartition::str() const { return "(" + first_.str() + "|" + second_.str() + ")"; }

Bipartition parse_bipartition(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    auto bar = s.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("bipartition syntax is [2,1]|[1,1,1]: " + text);
    return {parse_partition(s.substr(0, bar)), parse_partition(s.substr(bar + 1))};
}

std::vector<Bipartition> enumerate_bipartitions(int n, int a) {
    if (a < 0 || a > n) throw std::invalid_argument("enumerate_bipartitions: need 0 <= a <= n");
    std::vector<Bipartition> out;
    for (const auto& p1 : partitions_of(a))
        for (const auto& p2 : partitions_of(n - a)) out.emplace_back(p1, p2);
    return out;
}

std::vector<Cell> cells_of(const Partition& la) {
    std::vector<Cell> out;
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j) out.push_back({i, j});
    return out;
}

std::vector<Cell> addable_cells(const Partition& la) {
    std::vector<Cell> out;
    for (int i = 1; i <= la.rows() + 1; ++i) {
        if (i == 1 || la.part(i) < la.part(i - 1)) out.push_back({i, la.part(i) + 1});
    }
    return out;
}

std::vector<Cell> removable_cells(const Partition& la) {
    std::vector<Cell> out;
    for (int i = 1; i <= la.rows(); ++i) {
        if (la.part(i) > la.part(i + 1)) out.push_back({i, la.part(i)});
    }
    return out;
}

Partition with_cell(const Partition& la, const Cell& c) {
    std::vector<int> parts = la.parts();
    if (c.row == la.rows() + 1) {
        parts.push_back(1);
    } else {
        parts.at(c.row - 1) += 1;
    }
    return Partition(parts);
}

}  // namespace heckedn
