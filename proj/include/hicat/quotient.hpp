#pragma once

// Ideals of morphisms factoring through a class of objects or a class of
// arrows, and the ideal quotients they define.

#include "hicat/exangle.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hicat {

struct IdealSpec {
    enum class Kind { ThroughObjects, ThroughArrows };

    CategoryModel base;
    Kind kind = Kind::ThroughObjects;
    std::string name;
    std::function<bool(const IndexTuple&)> object_class;
    std::function<bool(const IndexTuple& source, const IndexTuple& target)> arrow_class;
};

IdealSpec object_ideal(const CategoryModel& base, std::string name,
                       std::function<bool(const IndexTuple&)> object_class);
IdealSpec arrow_ideal(const CategoryModel& base, std::string name,
                      std::function<bool(const IndexTuple&, const IndexTuple&)> arrow_class);

/// Morphisms factoring through projective-injective modules (a_0 = 1 and
/// a_d = n + 2d). Module models only.
IdealSpec projinj_ideal(const CategoryModel& module_model);
/// Morphisms factoring through an arrow from a shifted projective
/// (c_d = n + 2d + 1) to an image of a projective (c_0 = 1). RelativeF only.
IdealSpec injproj_ideal(const CategoryModel& relative_f_model);

/// Single-middle factorization search: one object of the class, or one
/// admissible arrow, with a nonzero composite.
bool factors_through(const CategoryModel& model, const BasisMorphism& f, const IdealSpec& ideal);

struct QuotientModel {
    CategoryModel base;
    IdealSpec ideal;
    /// Nonzero objects, surviving homs, inherited ext and composition.
    CategoryModel view;
    /// Basis morphisms (source, target) of the base that become zero.
    std::vector<std::pair<IndexTuple, IndexTuple>> killed;
    /// Objects whose identity is killed.
    std::vector<IndexTuple> zero_objects;
};

QuotientModel quotient(const CategoryModel& model, const IdealSpec& ideal);

/// Image of a base exangle: zero-object middle summands deleted and killed
/// components set to zero.
Exangle image(const QuotientModel& q, const Exangle& base_exangle);
Exangle realize(const QuotientModel& q, const IndexTuple& b, const IndexTuple& a);

}  // namespace hicat
