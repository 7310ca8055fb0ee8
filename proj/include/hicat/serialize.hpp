#pragma once

// JSON forms of models, quotients, exangles, rigid sets and reports.
// Tuples are always arrays; hom and ext adjacency is keyed by "1,3,5".

#include "hicat/exangle.hpp"
#include "hicat/quotient.hpp"
#include "hicat/report.hpp"
#include "hicat/rigid.hpp"

#include "json.hpp"

namespace hicat {

using Json = nlohmann::ordered_json;

Json to_json(const IndexTuple& t);
Json to_json(const std::vector<IndexTuple>& ts);
Json to_json(const Quiver& q);
Json to_json(const CategoryModel& model);
Json to_json(const QuotientModel& q);
Json to_json(const MorphismMatrix& m);
Json to_json(const Exangle& e);
Json to_json(const RigidSet& s);
Json to_json(const Mutation& m);
Json to_json(const MutationGraph& g);
Json to_json(const VerificationReport& r);

}  // namespace hicat
