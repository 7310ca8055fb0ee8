#include "hicat/tuple.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hicat {

namespace {

void require_valid_d(int d, const char* where)
{
    if (d < 1) {
        throw std::invalid_argument(std::string(where) + ": d must be >= 1");
    }
}

int mod_into_range(int x, int m)
{
    int r = ((x - 1) % m + m) % m;
    return r + 1;
}

void extend_gapped(std::vector<int>& prefix, int remaining, int hi, std::vector<IndexTuple>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    int lo = prefix.back() + 2;
    // leave room for the remaining entries, each at least 2 apart
    for (int x = lo; x + 2 * (remaining - 1) <= hi; ++x) {
        prefix.push_back(x);
        extend_gapped(prefix, remaining - 1, hi, out);
        prefix.pop_back();
    }
}

}  // namespace

IndexTuple::IndexTuple(std::vector<int> entries) : entries_(std::move(entries))
{
    if (!has_gaps(entries_)) {
        throw std::invalid_argument("IndexTuple (" + to_key(entries_) +
                                    ") is not increasing with gaps >= 2");
    }
}

IndexTuple::IndexTuple(std::initializer_list<int> entries)
    : IndexTuple(std::vector<int>(entries))
{
}

std::optional<IndexTuple> IndexTuple::from_raw(std::span<const int> raw)
{
    if (!has_gaps(raw)) return std::nullopt;
    return IndexTuple(std::vector<int>(raw.begin(), raw.end()));
}

bool has_gaps(std::span<const int> t)
{
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (t[i + 1] < t[i] + 2) return false;
    }
    return true;
}

bool in_modset(std::span<const int> t, int m, int d)
{
    if (t.size() != static_cast<std::size_t>(d + 1)) return false;
    if (t.front() < 1 || t.back() > m) return false;
    return has_gaps(t);
}

bool in_nonconsec(std::span<const int> t, int m, int d)
{
    return in_modset(t, m, d) && t.back() <= t.front() + m - 2;
}

bool in_derset(std::span<const int> t, int m, int d)
{
    if (t.size() != static_cast<std::size_t>(d + 1)) return false;
    return has_gaps(t) && t.back() + 2 <= t.front() + m;
}

std::vector<IndexTuple> gen_modset(int m, int d)
{
    if (d < 0 || m < 0) throw std::invalid_argument("gen_modset: m and d must be >= 0");
    std::vector<IndexTuple> out;
    std::vector<int> prefix;
    for (int a0 = 1; a0 + 2 * d <= m; ++a0) {
        prefix.assign(1, a0);
        extend_gapped(prefix, d, m, out);
    }
    return out;
}

std::vector<IndexTuple> gen_nonconsec(int m, int d)
{
    require_valid_d(d, "gen_nonconsec");
    std::vector<IndexTuple> out;
    for (auto& t : gen_modset(m, d)) {
        if (t.back() <= t.front() + m - 2) out.push_back(std::move(t));
    }
    return out;
}

std::vector<IndexTuple> gen_derset_window(int m, int d, IntRange a0_range)
{
    require_valid_d(d, "gen_derset_window");
    std::vector<IndexTuple> out;
    std::vector<int> prefix;
    for (int a0 = a0_range.lo; a0 <= a0_range.hi; ++a0) {
        prefix.assign(1, a0);
        extend_gapped(prefix, d, a0 + m - 2, out);
    }
    return out;
}

bool intertwines(std::span<const int> a, std::span<const int> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("intertwines: tuples of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] < b[i])) return false;
        if (i + 1 < a.size() && !(b[i] < a[i + 1])) return false;
    }
    return true;
}

bool intertwines(const IndexTuple& a, const IndexTuple& b)
{
    return intertwines(a.span(), b.span());
}

bool intertwines_cyclic(std::span<const int> a, std::span<const int> b, int m)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("intertwines_cyclic: tuples of different length");
    }
    auto in_range = [m](int x) { return 1 <= x && x <= m; };
    if (!std::all_of(a.begin(), a.end(), in_range) || !std::all_of(b.begin(), b.end(), in_range)) {
        throw std::invalid_argument("intertwines_cyclic: entry outside [1, m]");
    }
    for (int k = 0; k < m; ++k) {
        RawTuple ak = reduce_cyclic(offset(a, k), m);
        RawTuple bk = reduce_cyclic(offset(b, k), m);
        if (intertwines(ak, bk) || intertwines(bk, ak)) return true;
    }
    return false;
}

bool intertwines_cyclic(const IndexTuple& a, const IndexTuple& b, int m)
{
    return intertwines_cyclic(a.span(), b.span(), m);
}

RawTuple m_mix(SubsetMask subset, std::span<const int> a, std::span<const int> b)
{
    if (a.size() != b.size()) throw std::invalid_argument("m_mix: tuples of different length");
    RawTuple c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = (subset >> i) & 1u ? a[i] : b[i];
    }
    return c;
}

RawTuple reduce_cyclic(std::span<const int> raw, int m)
{
    if (m < 1) throw std::invalid_argument("reduce_cyclic: modulus must be positive");
    RawTuple out(raw.size());
    std::transform(raw.begin(), raw.end(), out.begin(), [m](int x) { return mod_into_range(x, m); });
    std::sort(out.begin(), out.end());
    return out;
}

IndexTuple normalize_cyclic(std::span<const int> raw, int m)
{
    RawTuple r = reduce_cyclic(raw, m);
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) {
        throw std::invalid_argument("normalize_cyclic: entries of (" + to_key(raw) +
                                    ") collide modulo " + std::to_string(m));
    }
    return IndexTuple(std::move(r));
}

RawTuple offset(std::span<const int> t, int k)
{
    RawTuple out(t.begin(), t.end());
    for (int& x : out) x += k;
    return out;
}

IndexTuple shift_derived(const IndexTuple& a, int n, int d)
{
    int m = n + 2 * d + 1;
    if (!in_derset(a.span(), m, d)) {
        throw std::invalid_argument("shift_derived: (" + to_key(a) + ") is not in D(" +
                                    std::to_string(m) + ", " + std::to_string(d) + ")");
    }
    std::vector<int> out;
    out.reserve(a.size());
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] - 1);
    out.push_back(a[0] + n + 2 * d);
    return IndexTuple(std::move(out));
}

IndexTuple shift_cluster(const IndexTuple& a, int m)
{
    int d = static_cast<int>(a.size()) - 1;
    if (d < 1 || !in_nonconsec(a.span(), m, d)) {
        throw std::invalid_argument("shift_cluster: (" + to_key(a) + ") is not in N(" +
                                    std::to_string(m) + ", " + std::to_string(d) + ")");
    }
    return normalize_cyclic(offset(a.span(), -1), m);
}

Quiver build_quiver(int d, int n)
{
    if (d < 1 || n < 1) throw std::invalid_argument("build_quiver: d and n must be >= 1");
    Quiver q;
    q.d = d;
    q.n = n;
    q.vertices = gen_modset(n + 2 * d - 2, d - 1);
    std::set<IndexTuple> vertex_set(q.vertices.begin(), q.vertices.end());

    auto step = [&](const IndexTuple& v, int i) -> std::optional<IndexTuple> {
        std::vector<int> e = v.entries();
        e[i] += 1;
        auto t = IndexTuple::from_raw(e);
        if (t && vertex_set.count(*t)) return t;
        return std::nullopt;
    };

    for (const auto& v : q.vertices) {
        for (int i = 0; i < d; ++i) {
            if (auto w = step(v, i)) q.arrows.push_back({v, *w, i});
        }
    }
    for (const auto& v : q.vertices) {
        for (int i = 0; i < d; ++i) {
            auto mid = step(v, i);
            if (!mid) continue;
            for (int j = 0; j < d; ++j) {
                if (j == i || !step(*mid, j)) continue;
                auto other = step(v, j);
                if (!other) {
                    q.relations.push_back({{v, i, j}, std::nullopt});
                } else if (i < j) {
                    q.relations.push_back({{v, i, j}, QuiverPath{v, j, i}});
                }
            }
        }
    }
    return q;
}

std::string to_key(std::span<const int> t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

std::string to_key(const IndexTuple& t) { return to_key(t.span()); }

std::string to_label(const IndexTuple& t)
{
    bool small = std::all_of(t.entries().begin(), t.entries().end(),
                             [](int x) { return 0 <= x && x <= 9; });
    if (!small) return to_key(t);
    std::string s;
    for (int x : t.entries()) s += static_cast<char>('0' + x);
    return s;
}

IndexTuple parse_tuple(std::string_view text)
{
    std::string cleaned;
    for (char c : text) {
        if (c == '[' || c == ']' || c == '(' || c == ')') continue;
        cleaned += c;
    }
    bool separated = cleaned.find_first_of(", ;") != std::string::npos;
    std::vector<int> entries;
    if (separated) {
        for (char& c : cleaned) {
            if (c == ',' || c == ';') c = ' ';
        }
        std::istringstream in(cleaned);
        std::string token;
        while (in >> token) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw std::invalid_argument("parse_tuple: bad entry '" + token + "'");
            }
            entries.push_back(value);
        }
    } else {
        for (char c : cleaned) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("parse_tuple: bad tuple '" + std::string(text) + "'");
            }
            entries.push_back(c - '0');
        }
    }
    if (entries.empty()) throw std::invalid_argument("parse_tuple: empty tuple");
    return IndexTuple(std::move(entries));
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace hicat
