#include "coxeter/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "coxeter/kernels.hpp"

namespace coxeter {

namespace {

// k = 2 * pairing / squared_length, which must be exact.
GoldenInt reflection_coefficient(const GoldenInt& pairing, const GoldenInt& squared_length) {
    const auto k = exact_div(pairing + pairing, squared_length);
    if (!k) throw std::domain_error("reflection leaves the Z[tau]-lattice spanned by the simple roots");
    return *k;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

RootSystem RootSystem::generate(const CoxeterDatum& datum) { return build(datum, build_gram(datum)); }

RootSystem RootSystem::from_gram(std::string label, const Gram& gram) {
    if (gram.rank == 0 || gram.rank > kMaxRank) throw std::invalid_argument("Gram rank out of range");
    CoxeterDatum d;
    d.label = std::move(label);
    d.rank = gram.rank;
    d.coxeter_matrix = coxeter_matrix_from_gram(gram);
    d.components.emplace_back(d.label, 0);
    return build(std::move(d), gram);
}

RootSystem RootSystem::with_gram(const CoxeterDatum& datum, const Gram& gram) {
    if (gram.rank != datum.rank || coxeter_matrix_from_gram(gram) != datum.coxeter_matrix)
        throw std::invalid_argument("Gram matrix does not realize the Coxeter datum " + datum.label);
    return build(datum, gram);
}

RootSystem RootSystem::build(CoxeterDatum datum, const Gram& gram) {
    RootSystem s;
    s.datum_ = std::move(datum);
    s.gram_ = gram;
    const std::size_t n = gram.rank;

    std::unordered_map<Vec, RootIndex, VecHash> seen;
    std::deque<Vec> queue;
    std::vector<Vec> found;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec e = Vec::unit(j);
        seen.emplace(e, 0);
        queue.push_back(e);
        found.push_back(e);
    }
    while (!queue.empty()) {
        const Vec v = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            Vec w = s.reflect_simple(j, v);
            if (seen.emplace(w, 0).second) {
                if (found.size() >= kRootClosureCap)
                    throw std::runtime_error("root closure exceeded " + std::to_string(kRootClosureCap) +
                                             " roots; Gram matrix is not of finite type");
                found.push_back(w);
                queue.push_back(w);
            }
        }
    }
    std::sort(found.begin(), found.end(), CanonicalLess{});
    s.roots_ = std::move(found);
    s.index();
    return s;
}

void RootSystem::index() {
    const std::size_t n = rank();
    const std::size_t count = roots_.size();
    lookup_.clear();
    lookup_.reserve(count * 2);
    for (RootIndex i = 0; i < count; ++i) lookup_.emplace(roots_[i], i);

    is_positive_.assign(count, false);
    positive_.clear();
    negative_.assign(count, 0);
    squared_length_.resize(count);
    for (RootIndex i = 0; i < count; ++i) {
        const int sign = coherent_sign(roots_[i], n);
        if (sign == 0) throw std::logic_error("root with mixed-sign coefficients in " + label());
        if (sign > 0) {
            is_positive_[i] = true;
            positive_.push_back(i);
        }
        const auto neg = index_of(-roots_[i]);
        if (!neg) throw std::logic_error("root set not closed under negation in " + label());
        negative_[i] = *neg;
        squared_length_[i] = form(roots_[i], roots_[i]);
    }

    simple_.resize(n);
    for (std::size_t j = 0; j < n; ++j) simple_[j] = *index_of(Vec::unit(j));

    reflection_table_.resize(n * count);
    for (std::size_t j = 0; j < n; ++j) {
        for (RootIndex i = 0; i < count; ++i) {
            const auto img = index_of(reflect_simple(j, roots_[i]));
            if (!img) throw std::logic_error("root set not closed under simple reflections");
            reflection_table_[j * count + i] = *img;
        }
    }

    length_classes_.clear();
    for (RootIndex i = 0; i < count; ++i) {
        auto it = std::find_if(length_classes_.begin(), length_classes_.end(),
                               [&](const LengthClass& c) { return c.squared_length == squared_length_[i]; });
        if (it == length_classes_.end()) length_classes_.push_back({squared_length_[i], {i}});
        else it->members.push_back(i);
    }
    std::sort(length_classes_.begin(), length_classes_.end(), [](const LengthClass& x, const LengthClass& y) {
        return real_compare(x.squared_length, y.squared_length) < 0;
    });

    std::vector<std::uint32_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0U);
    for (std::size_t j = 0; j < n; ++j) {
        for (RootIndex i = 0; i < count; ++i) {
            const auto a = find_root(parent, i), b = find_root(parent, simple_image(j, i));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    orbit_id_.assign(count, 0);
    orbits_.clear();
    std::unordered_map<std::uint32_t, std::uint32_t> rep_to_orbit;
    for (RootIndex i = 0; i < count; ++i) {
        const auto rep = find_root(parent, i);
        auto [it, inserted] = rep_to_orbit.emplace(rep, static_cast<std::uint32_t>(orbits_.size()));
        if (inserted) orbits_.emplace_back();
        orbit_id_[i] = it->second;
        orbits_[it->second].push_back(i);
    }
    crystallographic_ = compute_crystallographic();
}

GoldenInt RootSystem::form(const Vec& u, const Vec& v) const {
    return kernels::dot(u, kernels::combine(v, gram_.row_span()));
}

Vec RootSystem::simple_pairings(const Vec& v) const { return kernels::combine(v, gram_.row_span()); }

std::optional<RootIndex> RootSystem::index_of(const Vec& v) const {
    const auto it = lookup_.find(v);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Vec RootSystem::reflect_simple(std::size_t j, const Vec& v) const {
    const GoldenInt k = reflection_coefficient(kernels::dot(v, gram_.rows[j]), gram_(j, j));
    Vec w = v;
    w.set(j, v[j] - k);
    return w;
}

Vec RootSystem::reflect(const Vec& alpha, const Vec& v) const {
    const auto idx = index_of(alpha);
    if (!idx) throw std::invalid_argument("reflect: vector is not a root");
    const GoldenInt k = reflection_coefficient(form(v, alpha), squared_length_[*idx]);
    return v - alpha.scaled(k);
}

RationalVec RootSystem::coroot(const Vec& alpha) const {
    const auto idx = index_of(alpha);
    if (!idx) throw std::invalid_argument("coroot: vector is not a root");
    const GoldenRational scale = GoldenRational(2) / GoldenRational(squared_length_[*idx]);
    RationalVec out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = scale * GoldenRational(alpha[i]);
    return out;
}

bool RootSystem::compute_crystallographic() const {
    std::vector<Vec> pairings;
    pairings.reserve(roots_.size());
    for (const auto& r : roots_) pairings.push_back(simple_pairings(r));
    for (RootIndex i = 0; i < roots_.size(); ++i) {
        for (RootIndex j = 0; j < roots_.size(); ++j) {
            const GoldenRational value(kernels::dot(roots_[i], pairings[j]) * GoldenInt(2));
            const GoldenRational ratio = value / GoldenRational(squared_length_[j]);
            if (!ratio.is_integral() || !ratio.numerator().is_integer()) return false;
        }
    }
    return true;
}

IndexMask support(const Vec& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("support of the zero vector");
    return alpha.support();
}

Rescaled rescale(const RootSystem& s, std::span<const GoldenRational> factors) {
    const std::size_t count = s.size();
    const std::size_t n = s.rank();
    if (factors.size() != count) throw std::invalid_argument("rescale: need one factor per root");
    for (RootIndex i = 0; i < count; ++i) {
        if (factors[i].sign() <= 0) throw std::invalid_argument("rescale: factors must be positive");
        const RootIndex rep = s.orbit_members(s.orbit_of(i)).front();
        if (!(factors[i] == factors[rep])) throw std::invalid_argument("rescale: factors are not constant on W-orbits");
    }

    std::vector<GoldenRational> d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = factors[s.simple_index(j)];

    std::vector<GoldenRational> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i * n + j] = d[i] * d[j] * GoldenRational(s.gram()(i, j));
    GoldenRational shortest = g[0];
    for (std::size_t i = 1; i < n; ++i)
        if ((g[i * n + i] - shortest).sign() < 0) shortest = g[i * n + i];
    const GoldenRational normalize = GoldenRational(2) / shortest;

    Gram gram;
    gram.rank = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const GoldenRational x = normalize * g[i * n + j];
            if (!x.is_integral()) throw std::domain_error("rescale: Gram matrix leaves Z[tau]");
            gram.rows[i].set(j, x.numerator());
        }
    }

    std::vector<Vec> mapped(count);
    for (RootIndex r = 0; r < count; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            const GoldenRational c = GoldenRational(s.root(r)[j]) * factors[r] / d[j];
            if (!c.is_integral()) throw std::domain_error("rescale: root coefficient leaves Z[tau]");
            mapped[r].set(j, c.numerator());
        }
    }

    Rescaled out{RootSystem::with_gram(s.datum(), gram), {}};
    out.correspondence.resize(count);
    for (RootIndex r = 0; r < count; ++r) {
        const auto idx = out.system.index_of(mapped[r]);
        if (!idx) throw std::logic_error("rescale: rescaled vector is not a root of the rescaled system");
        out.correspondence[r] = *idx;
    }
    return out;
}

Rescaled rescale_by_orbit(const RootSystem& s, std::span<const GoldenRational> orbit_factors) {
    if (orbit_factors.size() != s.orbit_count()) throw std::invalid_argument("rescale: need one factor per W-orbit");
    std::vector<GoldenRational> factors(s.size());
    for (RootIndex i = 0; i < s.size(); ++i) factors[i] = orbit_factors[s.orbit_of(i)];
    return rescale(s, factors);
}

Rescaled dual_with_correspondence(const RootSystem& s) {
    std::vector<GoldenRational> factors(s.size());
    for (RootIndex i = 0; i < s.size(); ++i) factors[i] = GoldenRational(2) / GoldenRational(s.squared_length(i));
    return rescale(s, factors);
}

RootSystem dual_system(const RootSystem& s) { return dual_with_correspondence(s).system; }

} // namespace coxeter
