#include "hicat/exangle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hicat {

namespace {

struct Summand {
    SubsetMask subset = 0;
    IndexTuple label;
};

// Union-find over sign variables carrying parity to the root.
class ParityForest {
public:
    explicit ParityForest(std::size_t size) : parent_(size), parity_(size, 0)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<std::size_t, int> find(std::size_t x)
    {
        int p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    // Records s_x * s_y = (-1)^parity; false on contradiction.
    bool unite(std::size_t x, std::size_t y, int parity)
    {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == parity;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ parity;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

}  // namespace

std::vector<IndexTuple> Exangle::term(std::size_t k) const
{
    if (k == 0) return {a_end};
    if (k == middles.size() + 1) return {b_end};
    return middles.at(k - 1);
}

int koszul_sign(SubsetMask subset, int removed)
{
    SubsetMask below = subset & ((SubsetMask{1} << removed) - 1);
    return std::popcount(below) % 2 == 0 ? 1 : -1;
}

Exangle realize(const CategoryModel& model, const IndexTuple& b, const IndexTuple& a)
{
    if (!model.ext_dim(b, a)) {
        throw std::invalid_argument("no extension: E((" + to_key(b) + "), (" + to_key(a) + ")) = 0 in " +
                                    model.name());
    }
    const int d = model.d();
    const int m = model.modulus();
    const bool cyclic = model.kind() == ModelKind::Cluster || model.kind() == ModelKind::RelativeF;

    // Cyclic models: read B in the circular order starting after a_0.
    RawTuple b_lift(b.entries());
    if (cyclic) {
        for (int& x : b_lift) {
            if (x < a.front()) x += m;
        }
        std::sort(b_lift.begin(), b_lift.end());
    }
    if (!intertwines(a.span(), b_lift)) {
        throw std::logic_error("realize: lifted ends do not intertwine");
    }

    const SubsetMask full = (SubsetMask{1} << (d + 1)) - 1;
    std::vector<std::vector<Summand>> terms(d + 2);
    for (SubsetMask subset = 0; subset <= full; ++subset) {
        RawTuple mix = m_mix(subset, a.span(), b_lift);
        if (!model.in_middle_set(mix)) continue;
        IndexTuple label = cyclic ? normalize_cyclic(mix, m) : IndexTuple(mix);
        int r = std::popcount(subset);
        terms[d + 1 - r].push_back({subset, std::move(label)});
    }
    for (auto& t : terms) {
        std::sort(t.begin(), t.end(), [](const Summand& x, const Summand& y) { return x.label < y.label; });
    }
    if (terms.front().size() != 1 || terms.back().size() != 1) {
        throw std::logic_error("realize: end terms missing from the label set");
    }

    auto labels = [](const std::vector<Summand>& t) {
        std::vector<IndexTuple> out;
        for (const auto& s : t) out.push_back(s.label);
        return out;
    };

    Exangle e{model, a, b, {}, {}};
    for (int k = 1; k <= d; ++k) e.middles.push_back(labels(terms[k]));
    for (int k = 0; k <= d; ++k) {
        const auto& src = terms[k];
        const auto& tgt = terms[k + 1];
        MorphismMatrix diff(labels(src), labels(tgt));
        for (std::size_t j = 0; j < src.size(); ++j) {
            for (std::size_t i = 0; i < tgt.size(); ++i) {
                SubsetMask removed = src[j].subset & ~tgt[i].subset;
                if ((tgt[i].subset & ~src[j].subset) != 0 || std::popcount(removed) != 1) continue;
                if (!model.hom_dim(src[j].label, tgt[i].label)) continue;
                diff.at(i, j) = koszul_sign(src[j].subset, std::countr_zero(removed));
            }
        }
        e.differentials.push_back(std::move(diff));
    }
    return e;
}

bool is_complex(const Exangle& e)
{
    for (std::size_t k = 0; k + 1 < e.differentials.size(); ++k) {
        if (!compose_matrices(e.model, e.differentials[k + 1], e.differentials[k]).is_zero()) return false;
    }
    return true;
}

std::size_t integer_rank(std::vector<std::vector<long long>> rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    long long prev_pivot = 1;
    // fraction-free (Bareiss) elimination
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                rows[r][k] = (rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k]) / prev_pivot;
            }
            rows[r][c] = 0;
        }
        prev_pivot = rows[rank][c];
        ++rank;
    }
    return rank;
}

bool ExactnessReport::pass() const { return failures() == 0; }

std::size_t ExactnessReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                                  [](const ExactnessCheck& c) { return !c.pass; }));
}

ExactnessReport hom_exactness_report(const CategoryModel& model, const Exangle& e)
{
    ExactnessReport report;
    const std::size_t len = e.length();
    std::vector<std::vector<std::size_t>> term_idx(len);
    for (std::size_t k = 0; k < len; ++k) {
        for (const auto& t : e.term(k)) term_idx[k].push_back(model.index_of(t));
    }

    using Matrix = std::vector<std::vector<long long>>;
    auto product_is_zero = [](const Matrix& second, const Matrix& first, std::size_t inner) {
        for (const auto& row : second) {
            for (std::size_t c = 0; c < (first.empty() ? 0 : first.front().size()); ++c) {
                long long s = 0;
                for (std::size_t j = 0; j < inner; ++j) s += row[j] * first[j][c];
                if (s != 0) return false;
            }
        }
        return true;
    };

    for (std::size_t t = 0; t < model.size(); ++t) {
        for (bool covariant : {true, false}) {
            // basis[k]: positions within term k whose summand Y has Hom(T, Y) (resp. Hom(Y, T)) nonzero
            std::vector<std::vector<std::size_t>> basis(len);
            for (std::size_t k = 0; k < len; ++k) {
                for (std::size_t p = 0; p < term_idx[k].size(); ++p) {
                    std::size_t y = term_idx[k][p];
                    if (covariant ? model.hom(t, y) : model.hom(y, t)) basis[k].push_back(p);
                }
            }
            // maps[k]: induced map between position k and k + 1, in the complex's direction
            std::vector<Matrix> maps(len - 1);
            for (std::size_t k = 0; k + 1 < len; ++k) {
                const auto& diff = e.differentials[k];
                const auto& lo = basis[k];
                const auto& hi = basis[k + 1];
                if (covariant) {
                    Matrix mat(hi.size(), std::vector<long long>(lo.size(), 0));
                    for (std::size_t i = 0; i < hi.size(); ++i) {
                        for (std::size_t j = 0; j < lo.size(); ++j) {
                            int c = diff.at(hi[i], lo[j]);
                            if (c && model.comp(t, term_idx[k][lo[j]], term_idx[k + 1][hi[i]])) mat[i][j] = c;
                        }
                    }
                    maps[k] = std::move(mat);
                } else {
                    Matrix mat(lo.size(), std::vector<long long>(hi.size(), 0));
                    for (std::size_t i = 0; i < lo.size(); ++i) {
                        for (std::size_t j = 0; j < hi.size(); ++j) {
                            int c = diff.at(hi[j], lo[i]);
                            if (c && model.comp(term_idx[k][lo[i]], term_idx[k + 1][hi[j]], t)) mat[i][j] = c;
                        }
                    }
                    maps[k] = std::move(mat);
                }
            }
            for (std::size_t k = 1; k + 1 < len; ++k) {
                ExactnessCheck check;
                check.test_object = model.objects()[t];
                check.covariant = covariant;
                check.position = k;
                check.dim = basis[k].size();
                // covariant: maps[k-1] enters position k; contravariant: maps[k] enters position k
                const Matrix& incoming = covariant ? maps[k - 1] : maps[k];
                const Matrix& outgoing = covariant ? maps[k] : maps[k - 1];
                check.rank_in = integer_rank(incoming);
                check.rank_out = integer_rank(outgoing);
                check.complex = product_is_zero(outgoing, incoming, check.dim);
                check.pass = check.complex && check.rank_in + check.rank_out == check.dim;
                report.checks.push_back(std::move(check));
            }
        }
    }
    return report;
}

bool same_up_to_gauge(const Exangle& x, const Exangle& y)
{
    if (!(x.a_end == y.a_end) || !(x.b_end == y.b_end) || x.middles != y.middles) return false;
    if (x.differentials.size() != y.differentials.size()) return false;
    const std::size_t len = x.length();
    std::vector<std::size_t> first(len + 1, 0);
    for (std::size_t k = 0; k < len; ++k) first[k + 1] = first[k] + x.term(k).size();
    ParityForest signs(first[len]);
    for (std::size_t k = 0; k + 1 < len; ++k) {
        const auto& dx = x.differentials[k];
        const auto& dy = y.differentials[k];
        if (dx.rows() != dy.rows() || dx.cols() != dy.cols()) return false;
        for (std::size_t i = 0; i < dx.rows(); ++i) {
            for (std::size_t j = 0; j < dx.cols(); ++j) {
                int u = dx.at(i, j);
                int v = dy.at(i, j);
                if ((u == 0) != (v == 0)) return false;
                if (u == 0) continue;
                if (u != v && u != -v) return false;
                if (!signs.unite(first[k + 1] + i, first[k] + j, u == v ? 0 : 1)) return false;
            }
        }
    }
    return true;
}

}  // namespace hicat
