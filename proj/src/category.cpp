#include "hicat/category.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hicat {

namespace {

constexpr std::size_t kComposeTableLimit = 256;

void require_params(int d, int n, const char* where)
{
    if (d < 1 || n < 1) {
        throw std::invalid_argument(std::string(where) + ": d and n must be >= 1");
    }
}

}  // namespace

std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::Module: return "Module";
    case ModelKind::DerivedWindow: return "DerivedWindow";
    case ModelKind::Cluster: return "Cluster";
    case ModelKind::AlmostPositive: return "AlmostPositive";
    case ModelKind::RelativeF: return "RelativeF";
    }
    return "?";
}

std::string_view cli_name(ModelKind kind)
{
    switch (kind) {
    case ModelKind::Module: return "module";
    case ModelKind::DerivedWindow: return "derived";
    case ModelKind::Cluster: return "cluster";
    case ModelKind::AlmostPositive: return "almost-positive";
    case ModelKind::RelativeF: return "relative-f";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view text)
{
    for (auto k : {ModelKind::Module, ModelKind::DerivedWindow, ModelKind::Cluster,
                   ModelKind::AlmostPositive, ModelKind::RelativeF}) {
        if (text == cli_name(k) || text == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown model kind '" + std::string(text) + "'");
}

namespace criteria {

bool module_hom(std::span<const int> b, std::span<const int> a)
{
    return intertwines(offset(b, -1), a);
}

bool derived_hom(std::span<const int> b, std::span<const int> a, int n, int d)
{
    return intertwines(offset(b, -1), a) && a.back() < b.front() + n + 2 * d;
}

bool derived_ext(std::span<const int> b, std::span<const int> a, int n, int d)
{
    return intertwines(a, b) && b.back() < a.front() + n + 2 * d + 1;
}

bool cluster_hom(std::span<const int> b, std::span<const int> a, int m)
{
    return intertwines_cyclic(reduce_cyclic(offset(b, -1), m), a, m);
}

bool cluster_compose(std::span<const int> a, std::span<const int> b, std::span<const int> c, int m)
{
    const RawTuple a1 = reduce_cyclic(offset(a, -1), m);
    const RawTuple b1 = reduce_cyclic(offset(b, -1), m);
    const std::size_t len = a.size();
    std::vector<int> pa(len), pb(len), pc(len);
    for (int r = 0; r < m; ++r) {
        auto position = [&](int x) { return ((x - 1 - r) % m + m) % m; };
        for (std::size_t i = 0; i < len; ++i) {
            pa[i] = position(a1[i]);
            pb[i] = position(b1[i]);
            pc[i] = position(c[i]);
        }
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        std::sort(pc.begin(), pc.end());
        bool chain = true;
        for (std::size_t i = 0; i < len && chain; ++i) {
            chain = pa[i] <= pb[i] && pb[i] < pc[i] && (i + 1 == len || pc[i] < pa[i + 1]);
        }
        if (chain) return true;
    }
    return false;
}

}  // namespace criteria

MorphismMatrix::MorphismMatrix(std::vector<IndexTuple> src, std::vector<IndexTuple> tgt)
    : source(std::move(src)), target(std::move(tgt)), entries(source.size() * target.size(), 0)
{
}

bool MorphismMatrix::is_zero() const
{
    return std::all_of(entries.begin(), entries.end(), [](int x) { return x == 0; });
}

namespace {

struct TupleHash {
    std::size_t operator()(const IndexTuple& t) const noexcept
    {
        std::size_t h = t.size();
        for (int x : t.entries()) h = h * 1000003u ^ static_cast<std::size_t>(x + 1024);
        return h;
    }
};

}  // namespace

struct CategoryModel::Data {
    ModelKind kind = ModelKind::Module;
    int d = 1;
    int n = 1;
    std::optional<IntRange> window;
    std::string name;
    bool quotient = false;
    std::vector<IndexTuple> objects;
    std::unordered_map<IndexTuple, std::size_t, TupleHash> index;
    std::vector<std::uint8_t> hom;
    std::vector<std::uint8_t> ext;
    std::vector<std::uint8_t> comp;
    std::function<bool(std::size_t, std::size_t, std::size_t)> compose_fn;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> in;
};

CategoryModel::CategoryModel(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

CategoryModel CategoryModel::from_tables(ModelTables tables)
{
    const std::size_t n_obj = tables.objects.size();
    if (tables.hom.size() != n_obj * n_obj || tables.ext.size() != n_obj * n_obj) {
        throw std::invalid_argument("from_tables: table sizes do not match the object count");
    }
    auto data = std::make_shared<Data>();
    data->kind = tables.kind;
    data->d = tables.d;
    data->n = tables.n;
    data->window = tables.window;
    data->name = std::move(tables.name);
    data->quotient = tables.quotient;
    data->objects = std::move(tables.objects);
    data->hom = std::move(tables.hom);
    data->ext = std::move(tables.ext);
    data->compose_fn = std::move(tables.compose);
    for (std::size_t i = 0; i < n_obj; ++i) data->index.emplace(data->objects[i], i);
    data->out.resize(n_obj);
    data->in.resize(n_obj);
    for (std::size_t s = 0; s < n_obj; ++s) {
        for (std::size_t t = 0; t < n_obj; ++t) {
            if (data->hom[s * n_obj + t]) {
                data->out[s].push_back(t);
                data->in[t].push_back(s);
            }
        }
    }
    if (n_obj <= kComposeTableLimit) {
        data->comp.assign(n_obj * n_obj * n_obj, 0);
        for (std::size_t x = 0; x < n_obj; ++x) {
            for (std::size_t y : data->out[x]) {
                for (std::size_t z : data->out[y]) {
                    data->comp[(x * n_obj + y) * n_obj + z] = data->compose_fn(x, y, z) ? 1 : 0;
                }
            }
        }
    }
    return CategoryModel(std::move(data));
}

IntRange CategoryModel::default_window(int d, int n) { return {1, n + 2 * d + 1}; }

CategoryModel CategoryModel::make(ModelKind kind, int d, int n, std::optional<IntRange> window)
{
    require_params(d, n, "CategoryModel");
    const int m = n + 2 * d + 1;
    ModelTables t;
    t.kind = kind;
    t.d = d;
    t.n = n;

    std::ostringstream name;
    name << to_string(kind) << '(' << d << ',' << n;
    switch (kind) {
    case ModelKind::Module:
        t.objects = gen_modset(n + 2 * d, d);
        break;
    case ModelKind::DerivedWindow: {
        IntRange w = window.value_or(default_window(d, n));
        t.window = w;
        t.objects = gen_derset_window(m, d, w);
        name << ",[" << w.lo << ',' << w.hi << ']';
        break;
    }
    case ModelKind::Cluster:
    case ModelKind::AlmostPositive:
    case ModelKind::RelativeF:
        t.objects = gen_nonconsec(m, d);
        break;
    }
    if (window && kind != ModelKind::DerivedWindow) {
        throw std::invalid_argument("a window only applies to the derived model");
    }
    name << ')';
    t.name = name.str();

    const std::size_t count = t.objects.size();
    t.hom.assign(count * count, 0);
    t.ext.assign(count * count, 0);
    auto objs = std::make_shared<const std::vector<IndexTuple>>(t.objects);

    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            auto b = (*objs)[i].span();  // i plays B (source of hom, first slot of ext)
            auto a = (*objs)[j].span();
            bool h = false;
            bool e = false;
            switch (kind) {
            case ModelKind::Module:
                h = criteria::module_hom(b, a);
                e = intertwines(a, b);
                break;
            case ModelKind::DerivedWindow:
                h = criteria::derived_hom(b, a, n, d);
                e = criteria::derived_ext(b, a, n, d);
                break;
            case ModelKind::Cluster:
                h = criteria::cluster_hom(b, a, m);
                e = intertwines_cyclic(a, b, m);
                break;
            case ModelKind::AlmostPositive:
                h = criteria::derived_hom(b, a, n, d);
                e = intertwines(a, b);
                break;
            case ModelKind::RelativeF:
                h = criteria::cluster_hom(b, a, m);
                e = intertwines(a, b);
                break;
            }
            t.hom[i * count + j] = h;
            t.ext[i * count + j] = e;
        }
    }

    switch (kind) {
    case ModelKind::Module:
        t.compose = [objs](std::size_t x, std::size_t, std::size_t z) {
            return criteria::module_hom((*objs)[x].span(), (*objs)[z].span());
        };
        break;
    case ModelKind::DerivedWindow:
    case ModelKind::AlmostPositive:
        t.compose = [objs, n, d](std::size_t x, std::size_t, std::size_t z) {
            return criteria::derived_hom((*objs)[x].span(), (*objs)[z].span(), n, d);
        };
        break;
    case ModelKind::Cluster:
    case ModelKind::RelativeF:
        t.compose = [objs, m](std::size_t x, std::size_t y, std::size_t z) {
            return criteria::cluster_compose((*objs)[x].span(), (*objs)[y].span(), (*objs)[z].span(), m);
        };
        break;
    }
    return from_tables(std::move(t));
}

CategoryModel CategoryModel::module(int d, int n) { return make(ModelKind::Module, d, n); }
CategoryModel CategoryModel::derived_window(int d, int n) { return make(ModelKind::DerivedWindow, d, n); }
CategoryModel CategoryModel::derived_window(int d, int n, IntRange window)
{
    return make(ModelKind::DerivedWindow, d, n, window);
}
CategoryModel CategoryModel::cluster(int d, int n) { return make(ModelKind::Cluster, d, n); }
CategoryModel CategoryModel::almost_positive(int d, int n) { return make(ModelKind::AlmostPositive, d, n); }
CategoryModel CategoryModel::relative_f(int d, int n) { return make(ModelKind::RelativeF, d, n); }

ModelKind CategoryModel::kind() const noexcept { return data_->kind; }
int CategoryModel::d() const noexcept { return data_->d; }
int CategoryModel::n() const noexcept { return data_->n; }
int CategoryModel::modulus() const noexcept { return data_->n + 2 * data_->d + 1; }
std::optional<IntRange> CategoryModel::window() const { return data_->window; }
const std::string& CategoryModel::name() const noexcept { return data_->name; }
bool CategoryModel::is_quotient() const noexcept { return data_->quotient; }
const std::vector<IndexTuple>& CategoryModel::objects() const noexcept { return data_->objects; }
std::size_t CategoryModel::size() const noexcept { return data_->objects.size(); }

bool CategoryModel::contains(const IndexTuple& t) const { return data_->index.count(t) > 0; }

std::size_t CategoryModel::index_of(const IndexTuple& t) const
{
    auto it = data_->index.find(t);
    if (it == data_->index.end()) {
        throw std::out_of_range("(" + to_key(t) + ") is not an object of " + data_->name);
    }
    return it->second;
}

bool CategoryModel::hom(std::size_t src, std::size_t tgt) const
{
    return data_->hom[src * size() + tgt] != 0;
}

bool CategoryModel::ext(std::size_t b, std::size_t a) const
{
    return data_->ext[b * size() + a] != 0;
}

bool CategoryModel::comp(std::size_t x, std::size_t y, std::size_t z) const
{
    if (!hom(x, y) || !hom(y, z)) return false;
    const std::size_t count = size();
    if (!data_->comp.empty()) return data_->comp[(x * count + y) * count + z] != 0;
    return data_->compose_fn(x, y, z);
}

const std::vector<std::size_t>& CategoryModel::hom_out(std::size_t src) const { return data_->out[src]; }
const std::vector<std::size_t>& CategoryModel::hom_in(std::size_t tgt) const { return data_->in[tgt]; }

int CategoryModel::hom_dim(const IndexTuple& src, const IndexTuple& tgt) const
{
    return hom(index_of(src), index_of(tgt)) ? 1 : 0;
}

int CategoryModel::ext_dim(const IndexTuple& b, const IndexTuple& a) const
{
    return ext(index_of(b), index_of(a)) ? 1 : 0;
}

BasisMorphism CategoryModel::basis(const IndexTuple& src, const IndexTuple& tgt) const
{
    if (!hom_dim(src, tgt)) {
        throw std::invalid_argument("no nonzero morphism (" + to_key(src) + ") -> (" + to_key(tgt) +
                                    ") in " + name());
    }
    return {src, tgt};
}

int CategoryModel::compose(const BasisMorphism& g, const BasisMorphism& f) const
{
    if (!(f.target == g.source)) {
        throw std::invalid_argument("compose: (" + to_key(f.target) + ") != (" + to_key(g.source) + ")");
    }
    return compose_scalar(f.source, f.target, g.target);
}

int CategoryModel::compose_scalar(const IndexTuple& x, const IndexTuple& y, const IndexTuple& z) const
{
    return comp(index_of(x), index_of(y), index_of(z)) ? 1 : 0;
}

bool CategoryModel::in_middle_set(std::span<const int> raw) const
{
    if (kind() == ModelKind::Module) return in_modset(raw, n() + 2 * d(), d());
    return in_derset(raw, modulus(), d());
}

ObjectClass CategoryModel::classify(const IndexTuple& t) const
{
    index_of(t);
    ObjectClass c;
    const int top = n() + 2 * d();
    switch (kind()) {
    case ModelKind::Module:
        c.projective = t.front() == 1;
        c.injective = t.back() == top;
        break;
    case ModelKind::DerivedWindow:
        c.projective = t.front() == 1 && t.back() <= top;
        c.image_of_projective = c.projective;
        c.shifted_projective = in_nonconsec(t.span(), modulus(), d()) && t.back() == modulus();
        break;
    case ModelKind::Cluster:
    case ModelKind::AlmostPositive:
    case ModelKind::RelativeF:
        c.image_of_projective = t.front() == 1;
        c.shifted_projective = t.back() == modulus();
        c.projective = c.image_of_projective;
        break;
    }
    return c;
}

MorphismMatrix identity_matrix(const std::vector<IndexTuple>& objects)
{
    MorphismMatrix id(objects, objects);
    for (std::size_t i = 0; i < objects.size(); ++i) id.at(i, i) = 1;
    return id;
}

MorphismMatrix compose_matrices(const CategoryModel& model, const MorphismMatrix& g, const MorphismMatrix& f)
{
    if (f.target != g.source) {
        throw std::invalid_argument("compose_matrices: target of F does not match source of G");
    }
    MorphismMatrix out(f.source, g.target);
    std::vector<std::size_t> xs, ys, zs;
    for (const auto& t : f.source) xs.push_back(model.index_of(t));
    for (const auto& t : f.target) ys.push_back(model.index_of(t));
    for (const auto& t : g.target) zs.push_back(model.index_of(t));
    for (std::size_t i = 0; i < zs.size(); ++i) {
        for (std::size_t k = 0; k < xs.size(); ++k) {
            int sum = 0;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                int gf = g.at(i, j) * f.at(j, k);
                if (gf != 0 && model.comp(xs[k], ys[j], zs[i])) sum += gf;
            }
            out.at(i, k) = sum;
        }
    }
    return out;
}

}  // namespace hicat
