#pragma once

// Distinguished d-exangles X_A -> E_d -> ... -> E_1 -> X_B attached to a
// nonzero extension, with Koszul-signed differentials, and the decidable
// checks run against them.

#include "hicat/category.hpp"

#include <utility>
#include <vector>

namespace hicat {

struct Exangle {
    CategoryModel model;
    IndexTuple a_end;
    IndexTuple b_end;
    /// E_d, ..., E_1; an empty list is the zero object.
    std::vector<std::vector<IndexTuple>> middles;
    /// X_A -> E_d, E_d -> E_{d-1}, ..., E_1 -> X_B.
    std::vector<MorphismMatrix> differentials;

    /// The extension (B, A) this exangle realizes.
    std::pair<IndexTuple, IndexTuple> extension() const { return {b_end, a_end}; }
    /// Number of terms, d + 2.
    std::size_t length() const { return middles.size() + 2; }
    /// Term k: 0 is X_A, 1..d the middles, d + 1 is X_B.
    std::vector<IndexTuple> term(std::size_t k) const;
};

/// Coefficient of the component m_I -> m_{I \ {i}}.
int koszul_sign(SubsetMask subset, int removed);

/// Raises std::invalid_argument("no extension") when ext_dim(b, a) = 0.
Exangle realize(const CategoryModel& model, const IndexTuple& b, const IndexTuple& a);

bool is_complex(const Exangle& e);

struct ExactnessCheck {
    IndexTuple test_object;
    bool covariant = true;  // Hom(T, -) when true, Hom(-, T) otherwise
    std::size_t position = 0;  // term index, 1..d
    std::size_t dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    bool complex = true;
    bool pass = true;
};

struct ExactnessReport {
    std::vector<ExactnessCheck> checks;
    bool pass() const;
    std::size_t failures() const;
};

ExactnessReport hom_exactness_report(const CategoryModel& model, const Exangle& e);

/// Rank over the rationals.
std::size_t integer_rank(std::vector<std::vector<long long>> rows);

/// Equal end terms and middle terms, and differentials related by a
/// simultaneous sign change of basis vectors.
bool same_up_to_gauge(const Exangle& x, const Exangle& y);

}  // namespace hicat
