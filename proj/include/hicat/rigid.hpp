#pragma once

// Rigid and maximal rigid sets of indecomposables, exchange exangles and
// mutation, plus the correspondence checks across the quotient functors.

#include "hicat/exangle.hpp"
#include "hicat/report.hpp"

#include <bitset>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hicat {

/// Largest model the bitset-based enumeration accepts.
inline constexpr std::size_t kMaxRigidObjects = 256;

struct RigidSet {
    ModelKind kind = ModelKind::Module;
    std::vector<IndexTuple> summands;  // sorted

    bool contains(const IndexTuple& t) const;
    friend bool operator==(const RigidSet& x, const RigidSet& y) { return x.summands == y.summands; }
    friend bool operator<(const RigidSet& x, const RigidSet& y) { return x.summands < y.summands; }
};

RigidSet make_rigid_set(const CategoryModel& model, std::vector<IndexTuple> summands);

struct Mutation {
    RigidSet result;
    IndexTuple removed;
    IndexTuple added;
    std::vector<Exangle> exchange;
};

class AmbiguousMutation : public std::runtime_error {
public:
    AmbiguousMutation(const std::string& what, std::vector<IndexTuple> candidates)
        : std::runtime_error(what), candidates_(std::move(candidates))
    {
    }
    const std::vector<IndexTuple>& candidates() const noexcept { return candidates_; }

private:
    std::vector<IndexTuple> candidates_;
};

/// Ext-conflict data of one model, reusable across many queries.
class RigidityIndex {
public:
    using Mask = std::bitset<kMaxRigidObjects>;

    explicit RigidityIndex(CategoryModel model);

    const CategoryModel& model() const noexcept { return model_; }
    Mask mask_of(const RigidSet& s) const;
    RigidSet set_of(const Mask& mask) const;

    bool is_rigid(const Mask& s) const;
    bool is_maximal_rigid(const Mask& s) const;
    std::vector<RigidSet> maximal_rigid() const;
    std::vector<Exangle> exchange_exangles(const RigidSet& t, const IndexTuple& x) const;
    std::optional<Mutation> mutate(const RigidSet& t, const IndexTuple& x) const;

private:
    CategoryModel model_;
    std::vector<Mask> conflicts_;
};

bool is_rigid(const CategoryModel& model, const std::vector<IndexTuple>& summands);
/// All inclusion-maximal rigid sets, sorted.
std::vector<RigidSet> maximal_rigid(const CategoryModel& model);
std::vector<Exangle> exchange_exangles(const CategoryModel& model, const RigidSet& t, const IndexTuple& x);
/// nullopt when no replacement exists; AmbiguousMutation when several do.
std::optional<Mutation> mutate(const CategoryModel& model, const RigidSet& t, const IndexTuple& x);

struct MutationEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    IndexTuple removed;
    IndexTuple added;
};

struct MutationGraph {
    std::vector<RigidSet> nodes;
    std::vector<MutationEdge> edges;  // from < to, one per unordered pair
    std::size_t frozen = 0;           // (set, summand) pairs with no replacement
};

MutationGraph mutation_graph(const CategoryModel& model);

/// Number of sets per summand count.
std::map<std::size_t, long long> size_histogram(const std::vector<RigidSet>& sets);

/// Fails, with the smallest witness, when maximal rigid sets differ in size.
VerificationReport cardinality_check(const CategoryModel& model);

/// Maximal rigid sets and exchange exangles matched across
/// Module(d, n+1)/projinj and RelativeF(d, n)/injproj against
/// AlmostPositive(d, n).
VerificationReport correspondence_check(int d, int n);

}  // namespace hicat
