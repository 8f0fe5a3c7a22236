#include "heckedn/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckedn {

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n() || seen[a])
            throw std::invalid_argument("invalid signed permutation");
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return SignedPermutation(std::move(img));
}

int SignedPermutation::operator()(int i) const {
    if (i < 0) return -img_.at(-i - 1);
    return img_.at(i - 1);
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

bool SignedPermutation::is_type_a() const {
    return std::all_of(img_.begin(), img_.end(), [](int v) { return v > 0; });
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
    if (n() != rhs.n()) throw std::invalid_argument("rank mismatch");
    std::vector<int> img(n());
    for (int i = 1; i <= n(); ++i) img[i - 1] = (*this)(rhs(i));
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> img(n());
    for (int i = 1; i <= n(); ++i) {
        int v = img_[i - 1];
        if (v > 0)
            img[v - 1] = i;
        else
            img[-v - 1] = -i;
    }
    return SignedPermutation(std::move(img));
}

long SignedPermutation::length() const {
    long inv = 0, neg = 0, nsp = 0;
    for (int i = 0; i < n(); ++i) {
        if (img_[i] < 0) ++neg;
        for (int j = i + 1; j < n(); ++j) {
            if (img_[i] > img_[j]) ++inv;
            if (img_[i] + img_[j] < 0) ++nsp;
        }
    }
    return inv + neg + nsp;
}

bool SignedPermutation::right_descent(int s) const {
    if (s == 0) return img_.at(0) < 0;
    return img_.at(s - 1) > img_.at(s);
}

SignedPermutation SignedPermutation::times_gen(int s) const {
    SignedPermutation out = *this;
    if (s == 0) {
        out.img_.at(0) = -out.img_.at(0);
    } else {
        std::swap(out.img_.at(s - 1), out.img_.at(s));
    }
    return out;
}

std::vector<int> SignedPermutation::reduced_word() const {
    SignedPermutation w = *this;
    std::vector<int> rev;
    for (;;) {
        int s = -1;
        if (w.img_[0] < 0) s = 0;
        for (int i = 1; s < 0 && i < w.n(); ++i)
            if (w.img_[i - 1] > w.img_[i]) s = i;
        if (s < 0) break;
        w = w.times_gen(s);
        rev.push_back(s);
    }
    return {rev.rbegin(), rev.rend()};
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n(); ++i) {
        if (i) os << ",";
        os << img_[i];
    }
    os << "]";
    return os.str();
}

std::vector<SignedPermutation> enumerate_group(int n, bool type_a) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        if (type_a) {
            out.emplace_back(base);
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> img = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) img[i] = -img[i];
            out.emplace_back(std::move(img));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace heckedn
