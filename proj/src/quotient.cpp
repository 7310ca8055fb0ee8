#include "hicat/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace hicat {

namespace {

std::vector<std::uint8_t> object_marks(const CategoryModel& model, const IdealSpec& ideal)
{
    std::vector<std::uint8_t> marks(model.size(), 0);
    for (std::size_t i = 0; i < model.size(); ++i) marks[i] = ideal.object_class(model.objects()[i]);
    return marks;
}

// Index-level search shared by factors_through and quotient.
class FactorSearch {
public:
    FactorSearch(const CategoryModel& model, const IdealSpec& ideal) : model_(model), ideal_(ideal)
    {
        if (ideal.kind == IdealSpec::Kind::ThroughObjects) {
            marks_ = object_marks(model, ideal);
        } else {
            arrows_.resize(model.size());
            for (std::size_t z1 = 0; z1 < model.size(); ++z1) {
                for (std::size_t z2 : model.hom_out(z1)) {
                    if (ideal.arrow_class(model.objects()[z1], model.objects()[z2])) arrows_[z1].push_back(z2);
                }
            }
        }
    }

    bool factors(std::size_t x, std::size_t y) const
    {
        if (!model_.hom(x, y)) return false;
        if (ideal_.kind == IdealSpec::Kind::ThroughObjects) {
            for (std::size_t z : model_.hom_out(x)) {
                if (marks_[z] && model_.comp(x, z, y)) return true;
            }
            return false;
        }
        for (std::size_t z1 : model_.hom_out(x)) {
            for (std::size_t z2 : arrows_[z1]) {
                // h o (w o g) with g: x -> z1, w: z1 -> z2, h: z2 -> y
                if (model_.comp(x, z1, z2) && model_.comp(x, z2, y)) return true;
            }
        }
        return false;
    }

private:
    const CategoryModel& model_;
    const IdealSpec& ideal_;
    std::vector<std::uint8_t> marks_;
    std::vector<std::vector<std::size_t>> arrows_;
};

}  // namespace

IdealSpec object_ideal(const CategoryModel& base, std::string name,
                       std::function<bool(const IndexTuple&)> object_class)
{
    return {base, IdealSpec::Kind::ThroughObjects, std::move(name), std::move(object_class), {}};
}

IdealSpec arrow_ideal(const CategoryModel& base, std::string name,
                      std::function<bool(const IndexTuple&, const IndexTuple&)> arrow_class)
{
    return {base, IdealSpec::Kind::ThroughArrows, std::move(name), {}, std::move(arrow_class)};
}

IdealSpec projinj_ideal(const CategoryModel& module_model)
{
    if (module_model.kind() != ModelKind::Module || module_model.is_quotient()) {
        throw std::invalid_argument("projinj_ideal: expected a module model, got " + module_model.name());
    }
    const int top = module_model.n() + 2 * module_model.d();
    return object_ideal(module_model, "projinj",
                        [top](const IndexTuple& t) { return t.front() == 1 && t.back() == top; });
}

IdealSpec injproj_ideal(const CategoryModel& relative_f_model)
{
    if (relative_f_model.kind() != ModelKind::RelativeF || relative_f_model.is_quotient()) {
        throw std::invalid_argument("injproj_ideal: expected a RelativeF model, got " + relative_f_model.name());
    }
    const int m = relative_f_model.modulus();
    return arrow_ideal(relative_f_model, "injproj", [m](const IndexTuple& s, const IndexTuple& t) {
        return s.back() == m && t.front() == 1;
    });
}

bool factors_through(const CategoryModel& model, const BasisMorphism& f, const IdealSpec& ideal)
{
    FactorSearch search(model, ideal);
    return search.factors(model.index_of(f.source), model.index_of(f.target));
}

QuotientModel quotient(const CategoryModel& model, const IdealSpec& ideal)
{
    const std::size_t count = model.size();
    FactorSearch search(model, ideal);
    std::vector<std::uint8_t> killed(count * count, 0);
    QuotientModel q{model, ideal, model, {}, {}};
    for (std::size_t x = 0; x < count; ++x) {
        for (std::size_t y : model.hom_out(x)) {
            if (search.factors(x, y)) {
                killed[x * count + y] = 1;
                q.killed.emplace_back(model.objects()[x], model.objects()[y]);
            }
        }
    }

    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < count; ++x) {
        if (killed[x * count + x]) {
            q.zero_objects.push_back(model.objects()[x]);
        } else {
            keep.push_back(x);
        }
    }

    ModelTables t;
    t.kind = model.kind();
    t.d = model.d();
    t.n = model.n();
    t.window = model.window();
    t.name = model.name() + "/" + ideal.name;
    t.quotient = true;
    const std::size_t kept = keep.size();
    t.hom.assign(kept * kept, 0);
    t.ext.assign(kept * kept, 0);
    for (std::size_t i = 0; i < kept; ++i) {
        t.objects.push_back(model.objects()[keep[i]]);
        for (std::size_t j = 0; j < kept; ++j) {
            std::size_t x = keep[i];
            std::size_t y = keep[j];
            t.hom[i * kept + j] = model.hom(x, y) && !killed[x * count + y];
            t.ext[i * kept + j] = model.ext(x, y);
        }
    }
    auto surviving = std::make_shared<const std::vector<std::uint8_t>>(t.hom);
    t.compose = [model, keep, surviving, kept](std::size_t x, std::size_t y, std::size_t z) {
        return model.comp(keep[x], keep[y], keep[z]) && (*surviving)[x * kept + z] != 0;
    };
    q.view = CategoryModel::from_tables(std::move(t));
    return q;
}

Exangle image(const QuotientModel& q, const Exangle& base_exangle)
{
    const CategoryModel& view = q.view;
    if (!view.contains(base_exangle.a_end) || !view.contains(base_exangle.b_end)) {
        throw std::invalid_argument("image: an end term is a zero object of " + view.name());
    }
    const std::size_t len = base_exangle.length();
    // kept[k]: positions of term k that survive
    std::vector<std::vector<std::size_t>> kept(len);
    std::vector<std::vector<IndexTuple>> terms(len);
    for (std::size_t k = 0; k < len; ++k) {
        auto term = base_exangle.term(k);
        for (std::size_t p = 0; p < term.size(); ++p) {
            if (view.contains(term[p])) {
                kept[k].push_back(p);
                terms[k].push_back(term[p]);
            }
        }
    }
    Exangle out{view, base_exangle.a_end, base_exangle.b_end, {}, {}};
    for (std::size_t k = 1; k + 1 < len; ++k) out.middles.push_back(terms[k]);
    for (std::size_t k = 0; k + 1 < len; ++k) {
        const auto& src = base_exangle.differentials[k];
        MorphismMatrix diff(terms[k], terms[k + 1]);
        for (std::size_t i = 0; i < kept[k + 1].size(); ++i) {
            for (std::size_t j = 0; j < kept[k].size(); ++j) {
                int c = src.at(kept[k + 1][i], kept[k][j]);
                if (c && view.hom_dim(terms[k][j], terms[k + 1][i])) diff.at(i, j) = c;
            }
        }
        out.differentials.push_back(std::move(diff));
    }
    return out;
}

Exangle realize(const QuotientModel& q, const IndexTuple& b, const IndexTuple& a)
{
    return image(q, realize(q.base, b, a));
}

}  // namespace hicat
