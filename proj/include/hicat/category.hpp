#pragma once

// Finite combinatorial category models. Every nonzero hom space between
// indecomposables is one-dimensional, so a model is a hom table, an ext
// table and a 0/1 composition rule on canonical basis morphisms.

#include "hicat/tuple.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hicat {

enum class ModelKind { Module, DerivedWindow, Cluster, AlmostPositive, RelativeF };

std::string_view to_string(ModelKind kind);
/// CLI spelling: module, derived, cluster, almost-positive, relative-f.
ModelKind parse_model_kind(std::string_view text);
std::string_view cli_name(ModelKind kind);

/// Membership criteria straight from the tuple descriptions. Arguments are
/// written (B, A) for Hom(X_B, X_A) and (A, B, C) for X_A -> X_B -> X_C.
namespace criteria {

/// (B - 1) intertwines A.
bool module_hom(std::span<const int> b, std::span<const int> a);
/// b_0 - 1 < a_0 < b_1 - 1 < ... < b_d - 1 < a_d < b_0 + n + 2d.
bool derived_hom(std::span<const int> b, std::span<const int> a, int n, int d);
/// a_0 < b_0 < ... < a_d < b_d < a_0 + n + 2d + 1.
bool derived_ext(std::span<const int> b, std::span<const int> a, int n, int d);
/// (B - 1) intertwines A up to rotation of [1, m].
bool cluster_hom(std::span<const int> b, std::span<const int> a, int m);
/// Scans the m cyclically shifted orders of [1, m] for
/// a_0 - 1 <= b_0 - 1 < c_0 < a_1 - 1 <= ... <= b_d - 1 < c_d.
bool cluster_compose(std::span<const int> a, std::span<const int> b, std::span<const int> c, int m);

}  // namespace criteria

struct BasisMorphism {
    IndexTuple source;
    IndexTuple target;
    friend bool operator==(const BasisMorphism&, const BasisMorphism&) = default;
};

/// Morphism between direct sums of indecomposables. Entry (i, j) scales the
/// basis morphism source[j] -> target[i].
struct MorphismMatrix {
    std::vector<IndexTuple> source;
    std::vector<IndexTuple> target;
    std::vector<int> entries;  // row-major, rows = target.size()

    MorphismMatrix() = default;
    MorphismMatrix(std::vector<IndexTuple> src, std::vector<IndexTuple> tgt);

    std::size_t rows() const noexcept { return target.size(); }
    std::size_t cols() const noexcept { return source.size(); }
    int at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
    int& at(std::size_t i, std::size_t j) { return entries[i * cols() + j]; }
    bool is_zero() const;

    friend bool operator==(const MorphismMatrix&, const MorphismMatrix&) = default;
};

struct ObjectClass {
    bool projective = false;
    bool injective = false;
    bool image_of_projective = false;
    bool shifted_projective = false;

    bool projective_injective() const noexcept { return projective && injective; }
};

/// Raw tables for a finite model. Used for ideal quotients; the named
/// factories below are the usual entry points.
struct ModelTables {
    ModelKind kind = ModelKind::Module;
    int d = 1;
    int n = 1;
    std::optional<IntRange> window;
    std::string name;
    bool quotient = false;
    std::vector<IndexTuple> objects;
    std::vector<std::uint8_t> hom;  // hom[src * N + tgt]
    std::vector<std::uint8_t> ext;  // ext[b * N + a]
    /// compose(x, y, z) for indices with hom(x, y) and hom(y, z) both set.
    std::function<bool(std::size_t, std::size_t, std::size_t)> compose;
};

class CategoryModel {
public:
    static CategoryModel module(int d, int n);
    static CategoryModel derived_window(int d, int n);
    static CategoryModel derived_window(int d, int n, IntRange window);
    static CategoryModel cluster(int d, int n);
    static CategoryModel almost_positive(int d, int n);
    static CategoryModel relative_f(int d, int n);
    static CategoryModel make(ModelKind kind, int d, int n, std::optional<IntRange> window = {});
    static CategoryModel from_tables(ModelTables tables);

    /// Default derived window: a_0 in [1, n + 2d + 1].
    static IntRange default_window(int d, int n);

    ModelKind kind() const noexcept;
    int d() const noexcept;
    int n() const noexcept;
    /// n + 2d + 1.
    int modulus() const noexcept;
    std::optional<IntRange> window() const;
    const std::string& name() const noexcept;
    bool is_quotient() const noexcept;

    const std::vector<IndexTuple>& objects() const noexcept;
    std::size_t size() const noexcept;
    bool contains(const IndexTuple& t) const;
    /// Throws std::out_of_range for objects outside the model.
    std::size_t index_of(const IndexTuple& t) const;

    int hom_dim(const IndexTuple& src, const IndexTuple& tgt) const;
    /// Dimension of E(X_b, X_a).
    int ext_dim(const IndexTuple& b, const IndexTuple& a) const;
    /// Scalar c with g * f = c * (canonical basis morphism).
    int compose(const BasisMorphism& g, const BasisMorphism& f) const;
    /// Same as compose, 0 when either factor is the zero morphism.
    int compose_scalar(const IndexTuple& x, const IndexTuple& y, const IndexTuple& z) const;
    BasisMorphism basis(const IndexTuple& src, const IndexTuple& tgt) const;

    bool hom(std::size_t src, std::size_t tgt) const;
    bool ext(std::size_t b, std::size_t a) const;
    bool comp(std::size_t x, std::size_t y, std::size_t z) const;
    const std::vector<std::size_t>& hom_out(std::size_t src) const;
    const std::vector<std::size_t>& hom_in(std::size_t tgt) const;

    /// Label set indexing exangle middle terms: M(n + 2d, d) for modules,
    /// D(n + 2d + 1, d) otherwise.
    bool in_middle_set(std::span<const int> raw) const;

    ObjectClass classify(const IndexTuple& t) const;

private:
    struct Data;
    explicit CategoryModel(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

MorphismMatrix identity_matrix(const std::vector<IndexTuple>& objects);
MorphismMatrix compose_matrices(const CategoryModel& model, const MorphismMatrix& g, const MorphismMatrix& f);

}  // namespace hicat
