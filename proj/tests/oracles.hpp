#pragma once

// Brute-force reference implementations written directly from the tuple
// criteria. They share no code with the library on purpose.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

// Every tuple in [lo, hi]^(d+1), odometer order.
inline std::vector<Tuple> cube(int lo, int hi, int d)
{
    std::vector<Tuple> out;
    if (hi < lo) return out;
    Tuple t(d + 1, lo);
    while (true) {
        out.push_back(t);
        int i = d;
        while (i >= 0 && t[i] == hi) t[i--] = lo;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

inline bool gapped(const Tuple& t)
{
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (t[i + 1] < t[i] + 2) return false;
    }
    return true;
}

inline std::vector<Tuple> modset(int m, int d)
{
    std::vector<Tuple> out;
    for (auto& t : cube(1, m, d)) {
        if (gapped(t)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Tuple> nonconsec(int m, int d)
{
    std::vector<Tuple> out;
    for (auto& t : modset(m, d)) {
        if (t.back() <= t.front() + m - 2) out.push_back(t);
    }
    return out;
}

inline bool in_derset(const Tuple& t, int m) { return gapped(t) && t.back() + 2 <= t.front() + m; }

// Tuples of D(m, d) with a_0 in [lo, hi]; entries are bounded by a_0 + m - 2.
inline std::vector<Tuple> derset_window(int m, int d, int lo, int hi)
{
    std::vector<Tuple> out;
    for (auto& t : cube(lo, hi + m, d)) {
        if (t.front() >= lo && t.front() <= hi && in_derset(t, m)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Tuple minus_one(Tuple t)
{
    for (int& x : t) --x;
    return t;
}

// a_0 < b_0 < a_1 < b_1 < ... < a_d < b_d
inline bool wr(const Tuple& a, const Tuple& b)
{
    std::vector<int> chain;
    for (std::size_t i = 0; i < a.size(); ++i) {
        chain.push_back(a[i]);
        chain.push_back(b[i]);
    }
    return std::is_sorted(chain.begin(), chain.end()) &&
           std::adjacent_find(chain.begin(), chain.end()) == chain.end();
}

inline int mod1(int x, int m) { return ((x - 1) % m + m) % m + 1; }

inline Tuple reduce(Tuple t, int m)
{
    for (int& x : t) x = mod1(x, m);
    std::sort(t.begin(), t.end());
    return t;
}

// Some rotation of [m] puts the two tuples in intertwining position.
inline bool swr(const Tuple& a, const Tuple& b, int m)
{
    for (int k = 0; k < m; ++k) {
        Tuple ra = a;
        Tuple rb = b;
        for (int& x : ra) x += k;
        for (int& x : rb) x += k;
        ra = reduce(ra, m);
        rb = reduce(rb, m);
        if (wr(ra, rb) || wr(rb, ra)) return true;
    }
    return false;
}

// b_0 - 1 < a_0 < b_1 - 1 < a_1 < ... < b_d - 1 < a_d < b_0 + n + 2d
inline bool derived_hom(const Tuple& b, const Tuple& a, int n, int d)
{
    std::vector<int> chain;
    for (int i = 0; i <= d; ++i) {
        chain.push_back(b[i] - 1);
        chain.push_back(a[i]);
    }
    chain.push_back(b[0] + n + 2 * d);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!(chain[i] < chain[i + 1])) return false;
    }
    return true;
}

// a_0 < b_0 < ... < a_d < b_d < a_0 + n + 2d + 1
inline bool derived_ext(const Tuple& b, const Tuple& a, int n, int d)
{
    return wr(a, b) && b.back() < a.front() + n + 2 * d + 1;
}

// a_0 - 1 < c_0 < a_1 - 1 < ... < a_d - 1 < c_d < a_0 + n + 2d
inline bool derived_comp(const Tuple& a, const Tuple& c, int n, int d)
{
    return derived_hom(a, c, n, d);
}

// Cyclic composition: ranks in some rotation satisfy
// a_i - 1 <= b_i - 1 < c_i < a_{i+1} - 1, and c_d < a_0 + n + 2d = (a_0 - 1) + m.
inline bool cluster_comp(const Tuple& a, const Tuple& b, const Tuple& c, int m)
{
    const int d = static_cast<int>(a.size()) - 1;
    for (int l = 1; l <= m; ++l) {
        auto rank = [&](int x) { return ((mod1(x, m) - l) % m + m) % m; };
        std::vector<int> ra;
        std::vector<int> rb;
        std::vector<int> rc;
        for (int i = 0; i <= d; ++i) {
            ra.push_back(rank(a[i] - 1));
            rb.push_back(rank(b[i] - 1));
            rc.push_back(rank(c[i]));
        }
        // the tuples are sets; sort each by rank
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        std::sort(rc.begin(), rc.end());
        bool ok = true;
        for (int i = 0; i <= d && ok; ++i) {
            ok = ra[i] <= rb[i] && rb[i] < rc[i] && (i == d || rc[i] < ra[i + 1]);
        }
        if (ok && rc[d] < ra[0] + m) return true;
    }
    return false;
}

// Independent rank: Gaussian elimination modulo a large prime.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> rows)
{
    const long long p = 1000000007LL;
    auto power = [&](long long b, long long e) {
        long long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (auto& row : rows) {
        for (auto& x : row) x = ((x % p) + p) % p;
    }
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        long long inv = power(rows[rank][c], p - 2);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            long long f = rows[r][c] * inv % p;
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// All inclusion-maximal sets of pairwise non-conflicting indices.
inline std::vector<std::vector<int>> maximal_independent(int count, const std::function<bool(int, int)>& conflict)
{
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::function<void(int)> visit = [&](int i) {
        if (i == count) {
            for (int j = 0; j < count; ++j) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                bool blocked = conflict(j, j);
                for (int k : chosen) blocked = blocked || conflict(j, k);
                if (!blocked) return;
            }
            out.push_back(chosen);
            return;
        }
        bool free = !conflict(i, i);
        for (int k : chosen) free = free && !conflict(i, k);
        if (free) {
            chosen.push_back(i);
            visit(i + 1);
            chosen.pop_back();
        }
        visit(i + 1);
    };
    visit(0);
    return out;
}

inline std::uint64_t choose(int n, int k)
{
    if (k < 0 || n < k) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

inline std::uint64_t catalan(int k) { return choose(2 * k, k) / static_cast<std::uint64_t>(k + 1); }

}  // namespace oracle
