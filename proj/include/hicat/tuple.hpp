#pragma once

// Index tuples labelling indecomposable objects, the three tuple families
// (module, derived, cluster labels), intertwining and the quiver Q^(d,n).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hicat {

/// Unvalidated tuple of integers: m_mix results, shifted copies, inputs to
/// cyclic normalization.
using RawTuple = std::vector<int>;

/// Subset of {0, ..., d} encoded as a bitmask (bit i set iff i is in the set).
using SubsetMask = std::uint32_t;

/// Strictly increasing tuple with consecutive gaps of at least 2.
class IndexTuple {
public:
    IndexTuple() = default;
    explicit IndexTuple(std::vector<int> entries);
    IndexTuple(std::initializer_list<int> entries);

    /// Returns nullopt instead of throwing when the gap condition fails.
    static std::optional<IndexTuple> from_raw(std::span<const int> raw);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::span<const int> span() const noexcept { return entries_; }

    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

private:
    std::vector<int> entries_;
};

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
    int lo = 1;
    int hi = 0;
    bool empty() const noexcept { return lo > hi; }
    bool contains(int x) const noexcept { return lo <= x && x <= hi; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

bool has_gaps(std::span<const int> t);

/// Membership in M(m, d): entries in [1, m], length d+1, gaps >= 2.
bool in_modset(std::span<const int> t, int m, int d);
/// Membership in N(m, d): M(m, d) with a_d <= a_0 + m - 2.
bool in_nonconsec(std::span<const int> t, int m, int d);
/// Membership in D(m, d): integer entries, gaps >= 2, a_d + 2 <= a_0 + m.
bool in_derset(std::span<const int> t, int m, int d);

std::vector<IndexTuple> gen_modset(int m, int d);
std::vector<IndexTuple> gen_nonconsec(int m, int d);
std::vector<IndexTuple> gen_derset_window(int m, int d, IntRange a0_range);

/// a_0 < b_0 < a_1 < b_1 < ... < a_d < b_d.
bool intertwines(std::span<const int> a, std::span<const int> b);
bool intertwines(const IndexTuple& a, const IndexTuple& b);

/// Intertwining up to a simultaneous rotation of [1, m], in either order.
bool intertwines_cyclic(std::span<const int> a, std::span<const int> b, int m);
bool intertwines_cyclic(const IndexTuple& a, const IndexTuple& b, int m);

/// c_i = a_i for i in the subset, b_i otherwise.
RawTuple m_mix(SubsetMask subset, std::span<const int> a, std::span<const int> b);

/// Reduces every entry into [1, m] and sorts ascending.
RawTuple reduce_cyclic(std::span<const int> raw, int m);
/// reduce_cyclic followed by validation as an IndexTuple.
IndexTuple normalize_cyclic(std::span<const int> raw, int m);

/// Entrywise a_i + k.
RawTuple offset(std::span<const int> t, int k);

/// U_A[d] in the derived labelling.
IndexTuple shift_derived(const IndexTuple& a, int n, int d);
/// O_A[d] = O_{A - 1} in the cluster labelling.
IndexTuple shift_cluster(const IndexTuple& a, int m);

struct QuiverArrow {
    IndexTuple source;
    IndexTuple target;
    int direction = 0;
    friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

/// Path of length two: start -> start + 1_first -> start + 1_first + 1_second.
struct QuiverPath {
    IndexTuple start;
    int first = 0;
    int second = 0;
};

/// lhs = rhs, or lhs = 0 when rhs is empty.
struct QuiverRelation {
    QuiverPath lhs;
    std::optional<QuiverPath> rhs;
};

struct Quiver {
    int d = 0;
    int n = 0;
    std::vector<IndexTuple> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<QuiverRelation> relations;
};

Quiver build_quiver(int d, int n);

/// "1,3,5" always; used for keys and DOT node ids.
std::string to_key(std::span<const int> t);
std::string to_key(const IndexTuple& t);
/// Concatenated digits ("135") unless some entry exceeds 9, then comma-joined.
std::string to_label(const IndexTuple& t);
/// Accepts "135", "1,3,5", "[1, 3, 5]" or "(1 3 5)".
IndexTuple parse_tuple(std::string_view text);

std::uint64_t binomial(int n, int k);

}  // namespace hicat
