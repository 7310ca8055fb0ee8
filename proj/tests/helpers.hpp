#pragma once

#include "hicat/category.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

inline hicat::IndexTuple T(const char* text) { return hicat::parse_tuple(text); }

inline oracle::Tuple raw(const hicat::IndexTuple& t) { return t.entries(); }

inline std::vector<oracle::Tuple> raw(const std::vector<hicat::IndexTuple>& ts)
{
    std::vector<oracle::Tuple> out;
    for (const auto& t : ts) out.push_back(t.entries());
    return out;
}

inline std::vector<std::string> labels(const std::vector<hicat::IndexTuple>& ts)
{
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(hicat::to_label(t));
    return out;
}

// Model criteria evaluated by the brute-force oracles.
inline bool oracle_hom(hicat::ModelKind kind, const oracle::Tuple& b, const oracle::Tuple& a, int n, int d)
{
    using hicat::ModelKind;
    const int m = n + 2 * d + 1;
    switch (kind) {
    case ModelKind::Module: return oracle::wr(oracle::minus_one(b), a);
    case ModelKind::DerivedWindow:
    case ModelKind::AlmostPositive: return oracle::derived_hom(b, a, n, d);
    case ModelKind::Cluster:
    case ModelKind::RelativeF: return oracle::swr(oracle::reduce(oracle::minus_one(b), m), a, m);
    }
    return false;
}

inline bool oracle_ext(hicat::ModelKind kind, const oracle::Tuple& b, const oracle::Tuple& a, int n, int d)
{
    using hicat::ModelKind;
    const int m = n + 2 * d + 1;
    switch (kind) {
    case ModelKind::Module:
    case ModelKind::AlmostPositive:
    case ModelKind::RelativeF: return oracle::wr(a, b);
    case ModelKind::DerivedWindow: return oracle::derived_ext(b, a, n, d);
    case ModelKind::Cluster: return oracle::swr(a, b, m);
    }
    return false;
}

inline bool oracle_comp(hicat::ModelKind kind, const oracle::Tuple& a, const oracle::Tuple& b, const oracle::Tuple& c,
                        int n, int d)
{
    using hicat::ModelKind;
    const int m = n + 2 * d + 1;
    switch (kind) {
    case ModelKind::Module: return oracle::wr(oracle::minus_one(a), c);
    case ModelKind::DerivedWindow:
    case ModelKind::AlmostPositive: return oracle::derived_comp(a, c, n, d);
    case ModelKind::Cluster:
    case ModelKind::RelativeF: return oracle::cluster_comp(a, b, c, m);
    }
    return false;
}

inline const hicat::ModelKind kAllKinds[] = {hicat::ModelKind::Module, hicat::ModelKind::DerivedWindow,
                                             hicat::ModelKind::Cluster, hicat::ModelKind::AlmostPositive,
                                             hicat::ModelKind::RelativeF};
