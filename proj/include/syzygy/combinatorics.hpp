#ifndef SYZYGY_COMBINATORICS_HPP
#define SYZYGY_COMBINATORICS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "syzygy/errors.hpp"

namespace syzygy {

inline long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Index of the ordered pair (i, j), j < i, in the wedge-square basis
/// ordered (1,0), (2,0), (2,1), (3,0), ...
inline int wedge2_index(int i, int j) {
    if (j >= i) throw InvalidRange("wedge2_index expects j < i");
    return i * (i - 1) / 2 + j;
}

inline int wedge2_dim(int m) { return (m + 1) * m / 2; }

/// Lex rank of a strictly increasing p-subset of {0..n-1}.
inline long subset_rank(const std::vector<int>& s, int n) {
    const int p = static_cast<int>(s.size());
    long rank = 0;
    int prev = -1;
    for (int i = 0; i < p; ++i) {
        for (int x = prev + 1; x < s[i]; ++x) rank += binomial(n - 1 - x, p - 1 - i);
        prev = s[i];
    }
    return rank;
}

/// Advance a strictly increasing subset to its lex successor; false at the end.
inline bool next_subset(std::vector<int>& s, int n) {
    const int p = static_cast<int>(s.size());
    for (int i = p - 1; i >= 0; --i) {
        if (s[i] < n - p + i) {
            ++s[i];
            for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_subset(int p) {
    std::vector<int> s(p);
    for (int i = 0; i < p; ++i) s[i] = i;
    return s;
}

/// Monomials of a fixed degree in nvars symbols, enumerated in lex-descending
/// exponent order: (d,0,...,0) first, (0,...,0,d) last.
class MonomialTable {
  public:
    MonomialTable(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        std::vector<int> e(nvars, 0);
        emit(e, 0, degree);
        for (std::size_t i = 0; i < exps_.size(); ++i) index_[key(exps_[i])] = static_cast<int>(i);
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    long size() const { return static_cast<long>(exps_.size()); }
    const std::vector<int>& exponents(int idx) const { return exps_[idx]; }

    int index_of(const std::vector<int>& e) const {
        auto it = index_.find(key(e));
        if (it == index_.end()) throw InvalidRange("monomial not in table");
        return it->second;
    }

    /// Index (in the degree+1 table) of this monomial times variable v.
    int mult_var(const MonomialTable& next, int idx, int v) const {
        std::vector<int> e = exps_[idx];
        ++e[v];
        return next.index_of(e);
    }

  private:
    static std::string key(const std::vector<int>& e) {
        std::string k;
        k.reserve(e.size() * 2);
        for (int x : e) {
            k.push_back(static_cast<char>('0' + (x & 0x3f)));
            k.push_back(',');
        }
        return k;
    }

    void emit(std::vector<int>& e, int pos, int remaining) {
        if (pos == nvars_ - 1) {
            e[pos] = remaining;
            exps_.push_back(e);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[pos] = v;
            emit(e, pos + 1, remaining - v);
        }
        e[pos] = 0;
    }

    int nvars_;
    int degree_;
    std::vector<std::vector<int>> exps_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace syzygy

#endif
