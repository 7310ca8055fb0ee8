#pragma once

// Exhaustive model checks of the quotient equivalences, the relative
// exangle characterization and the structural properties they rely on.

#include "hicat/category.hpp"
#include "hicat/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hicat {

/// Grid of (d, n) points; a point is skipped when its largest model has
/// more than objmax objects.
struct Grid {
    int dmax = 3;
    int nmax = 4;
    std::size_t objmax = 200;

    /// "D:N:O", e.g. "3:4:200"; missing fields keep their defaults.
    static Grid parse(std::string_view text);
    /// Defaults, overridden by HICAT_GRID when set.
    static Grid from_env();
};

enum class Theorem { Equivalence, FExangles, Main2, Sanity, Correspondence, Cardinality };

std::string_view to_string(Theorem t);
/// CLI spelling: equiv, f-exangles, main2, sanity, correspondence, cardinality.
Theorem parse_theorem(std::string_view text);

/// Module(d, n + 1) modulo projective-injectives against AlmostPositive(d, n).
VerificationReport verify_equiv_module_ap(int d, int n);
/// Cluster extensions (B, A) whose connecting morphism O_B -> O_A[d]
/// factors through a shifted projective are exactly those with A ≀ B.
VerificationReport verify_F_exangles(int d, int n);
/// RelativeF(d, n) modulo injective-to-projective arrows against
/// AlmostPositive(d, n).
VerificationReport verify_main2(int d, int n);
/// Associativity, identities, shift invariance, and complex and
/// hom-exactness of every realized exangle.
VerificationReport verify_model_sanity(const CategoryModel& model);

/// Largest model touched by `t` at (d, n).
std::size_t grid_cost(Theorem t, int d, int n);

/// Runs one theorem at one point; sanity aggregates all five model kinds.
VerificationReport run_point(Theorem t, int d, int n);

/// Runs every grid point, concurrently, in (d, n) order.
std::vector<VerificationReport> run_grid(Theorem t, const Grid& grid);

}  // namespace hicat
