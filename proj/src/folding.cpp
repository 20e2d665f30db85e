#include "coxeter/folding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "coxeter/kernels.hpp"
#include "coxeter/linalg.hpp"

namespace coxeter {

namespace {

Certificate make_fold_certificate(const FoldedSystem& f, std::string check) {
    Certificate c = make_certificate(f.source(), std::move(check));
    c.rank = f.lattice_rank();
    c.golden = false;
    return c;
}

// Sorted Psi indices.
using PsiSet = std::vector<RootIndex>;

PsiSet sorted(PsiSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Closure of `start` (indices into some root set) under a reflection map.
template <class Reflect>
std::vector<RootIndex> reflection_closure(std::vector<RootIndex> start, std::size_t universe, Reflect&& reflect) {
    std::vector<char> in(universe, 0);
    std::vector<RootIndex> members;
    for (RootIndex r : start)
        if (!in[r]) {
            in[r] = 1;
            members.push_back(r);
        }
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t k = 0; k <= head; ++k) {
            for (auto [x, y] : {std::pair{members[head], members[k]}, std::pair{members[k], members[head]}}) {
                const RootIndex z = reflect(x, y);
                if (!in[z]) {
                    in[z] = 1;
                    members.push_back(z);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::string count_note(const char* what, std::size_t n) { return std::string(what) + " " + std::to_string(n); }

} // namespace

RootIndex FoldedSystem::partner(RootIndex psi_root) const {
    const Bundle& b = bundles_[base_of_[psi_root]];
    return tau_side_[psi_root] ? b.pair[0] : b.pair[1];
}

Vec FoldedSystem::to_lattice(const Vec& golden) const {
    const std::size_t n = source_.rank();
    Vec u;
    for (std::size_t i = 0; i < n; ++i) {
        u.a[i] = golden.a[i];
        u.a[n + i] = golden.b[i];
    }
    return u;
}

Vec FoldedSystem::from_lattice(const Vec& lattice) const {
    const std::size_t n = source_.rank();
    Vec g;
    for (std::size_t i = 0; i < n; ++i) g.set(i, {lattice.a[i], lattice.a[n + i]});
    return g;
}

Vec FoldedSystem::tau_lattice(const Vec& lattice) const {
    const std::size_t n = source_.rank();
    Vec u;
    for (std::size_t i = 0; i < n; ++i) {
        u.a[i] = lattice.a[n + i];
        u.a[n + i] = checked::add(lattice.a[i], lattice.a[n + i]);
    }
    return u;
}

std::int64_t FoldedSystem::pairing(const Vec& x, const Vec& y) const {
    const GoldenInt p = psi_.form(x, y);
    if (!p.is_integer()) throw std::logic_error("folded form is not integral");
    return p.a;
}

Vec FoldedSystem::integer_reflect(const Vec& x, const Vec& v) const {
    // (x, x) = 2 for every root of Psi.
    return v - x.scaled(GoldenInt(pairing(v, x)));
}

FoldedSystem fold(const RootSystem& s) {
    const std::size_t n = s.rank();
    if (!s.is_golden()) throw std::invalid_argument("fold: source must have a golden Gram matrix");
    if (2 * n > kMaxRank) throw std::invalid_argument("fold: doubled rank exceeds " + std::to_string(kMaxRank));
    for (std::size_t i = 0; i < n; ++i) {
        if (s.gram()(i, i) != GoldenInt(2)) throw std::invalid_argument("fold: simple roots must have squared length 2");
        for (std::size_t j = 0; j < n; ++j) {
            const GoldenInt g = s.gram()(i, j);
            if (i != j && !(g.is_zero() || g == GoldenInt(-1) || g == GoldenInt(0, -1)))
                throw std::invalid_argument("fold: bonds must be 0, -1 or -tau");
        }
    }

    Gram doubled;
    doubled.rank = 2 * n;
    const GoldenInt t = GoldenInt::tau();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const GoldenInt g = s.gram()(i, j);
            doubled.set(i, j, theta(g));
            doubled.set(i, n + j, theta(t * g));
            doubled.set(n + i, j, theta(t * g));
            doubled.set(n + i, n + j, theta(t * t * g));
        }
    }

    FoldedSystem f(s, RootSystem::from_gram("fold(" + s.label() + ")", doubled));
    const std::size_t count = f.psi_.size();
    if (count != 2 * s.size())
        throw std::logic_error("fold: |Psi| = " + std::to_string(count) + ", expected " + std::to_string(2 * s.size()));
    f.base_of_.assign(count, 0);
    f.tau_side_.assign(count, 0);
    std::vector<char> hit(count, 0);
    for (RootIndex a = 0; a < s.size(); ++a) {
        const Vec u = f.to_lattice(s.root(a));
        const auto x = f.psi_.index_of(u);
        const auto y = f.psi_.index_of(f.tau_lattice(u));
        if (!x || !y) throw std::logic_error("fold: closure of the doubled basis misses alpha or tau*alpha");
        if (hit[*x] || hit[*y]) throw std::logic_error("fold: bundles overlap");
        hit[*x] = hit[*y] = 1;
        f.bundles_.push_back({a, {*x, *y}});
        f.base_of_[*x] = f.base_of_[*y] = a;
        f.tau_side_[*y] = 1;
    }
    return f;
}

std::optional<std::string> expected_fold_type(std::string_view source_label) {
    if (source_label == "H4") return "E8";
    if (source_label == "H3") return "D6";
    if (source_label == "I2(5)") return "A4";
    return std::nullopt;
}

std::vector<std::vector<int>> catalog_graph(std::string_view label) {
    if (label.size() < 2) throw std::invalid_argument("catalog_graph: bad label");
    const int n = std::stoi(std::string(label.substr(1)));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto edge = [&](int i, int j) { adj[i][j] = adj[j][i] = 1; };
    switch (label[0]) {
    case 'A':
        if (n < 1 || n > 16) break;
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        return adj;
    case 'D':
        if (n < 4 || n > 16) break;
        for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
        edge(n - 3, n - 1);
        return adj;
    case 'E':
        if (n < 6 || n > 8) break;
        edge(0, 2);
        edge(1, 3);
        for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
        return adj;
    default: break;
    }
    throw std::invalid_argument("catalog_graph: no simply laced type " + std::string(label));
}

namespace {

// Maps component nodes onto catalog nodes; returns the map or nullopt.
std::optional<std::vector<int>> match_graph(const std::vector<std::vector<int>>& g, const std::vector<std::vector<int>>& h) {
    const std::size_t n = g.size();
    if (h.size() != n) return std::nullopt;
    auto degrees = [](const std::vector<std::vector<int>>& a) {
        std::vector<int> d;
        for (const auto& row : a) d.push_back(std::count(row.begin(), row.end(), 1));
        return d;
    };
    const auto dg = degrees(g), dh = degrees(h);
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || dg[i] != dh[c]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = g[i][k] == h[c][static_cast<std::size_t>(map[k])];
            if (!ok) continue;
            map[i] = static_cast<int>(c);
            used[c] = 1;
            if (self(self, i + 1)) return true;
            used[c] = 0;
        }
        map[i] = -1;
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return map;
}

} // namespace

Identification identify_type(std::span<const Vec> simple, const Gram& form) {
    const std::size_t k = simple.size();
    if (k == 0) throw std::invalid_argument("identify_type: empty simple system");
    std::vector<std::vector<int>> adj(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        const Vec gi = kernels::combine(simple[i], form.row_span());
        for (std::size_t j = 0; j < k; ++j) {
            const GoldenInt p = kernels::dot(simple[j], gi);
            if (i == j ? p != GoldenInt(2) : !(p.is_zero() || p == GoldenInt(-1)))
                throw std::invalid_argument("identify_type: products must be 2 on the diagonal and 0 or -1 elsewhere");
            adj[i][j] = (i != j && p == GoldenInt(-1)) ? 1 : 0;
        }
    }
    if (!linearly_independent(simple, form.rank)) throw std::invalid_argument("identify_type: vectors are dependent");

    Identification id;
    id.node_map.assign(k, 0);
    std::vector<char> placed(k, 0);
    std::size_t offset = 0;
    for (std::size_t root = 0; root < k; ++root) {
        if (placed[root]) continue;
        std::vector<std::size_t> comp{root};
        placed[root] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (std::size_t j = 0; j < k; ++j)
                if (adj[comp[head]][j] && !placed[j]) {
                    placed[j] = 1;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        const std::size_t m = comp.size();
        std::vector<std::vector<int>> sub(m, std::vector<int>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) sub[a][b] = adj[comp[a]][comp[b]];

        std::vector<std::string> candidates{"A" + std::to_string(m)};
        if (m >= 4) candidates.push_back("D" + std::to_string(m));
        if (m >= 6 && m <= 8) candidates.push_back("E" + std::to_string(m));
        std::optional<std::vector<int>> map;
        std::string name;
        for (const auto& cand : candidates) {
            if (m > 16) break;
            if ((map = match_graph(sub, catalog_graph(cand)))) {
                name = cand;
                break;
            }
        }
        if (!map) throw std::invalid_argument("identify_type: component of rank " + std::to_string(m) + " is not in the catalog");
        for (std::size_t a = 0; a < m; ++a) id.node_map[comp[a]] = offset + static_cast<std::size_t>((*map)[a]);
        id.label += (id.label.empty() ? "" : "x") + name;
        offset += m;
    }
    return id;
}

Certificate check_fold_type(const FoldedSystem& f) {
    Certificate c = make_fold_certificate(f, "fold-type");
    const std::size_t r = f.lattice_rank();
    std::vector<Vec> delta;
    for (std::size_t i = 0; i < r; ++i) delta.push_back(Vec::unit(i));
    const Identification id = identify_type(delta, f.form());
    c.note = "identified " + id.label + "; |Psi|=" + std::to_string(f.psi().size());

    const auto expected = expected_fold_type(f.source().label());
    if (expected && id.label != *expected) {
        c.fail({}, "expected " + *expected);
        return c;
    }
    for (RootIndex i = 0; i < f.psi().size(); ++i)
        if (f.psi().squared_length(i) != GoldenInt(2)) {
            c.fail({f.psi().root(i)}, "root of Psi with (x,x) != 2");
            return c;
        }

    // Base change against the catalog realization of the identified type.
    const RootSystem catalog = RootSystem::generate(id.label);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (catalog.gram()(id.node_map[i], id.node_map[j]) != f.form()(i, j)) {
                c.fail({Vec::unit(i), Vec::unit(j)}, "Gram entries differ under the node map");
                return c;
            }
    if (catalog.size() != f.psi().size()) {
        c.fail({}, "catalog has " + std::to_string(catalog.size()) + " roots");
        return c;
    }
    for (const Vec& root : catalog.roots()) {
        Vec u;
        for (std::size_t i = 0; i < r; ++i) u.set(i, root[id.node_map[i]]);
        if (!f.psi().contains(u)) {
            c.fail({u}, "catalog root missing from Psi");
            return c;
        }
    }
    return c;
}

Certificate check_ip_table(const FoldedSystem& f) {
    Certificate c = make_fold_certificate(f, "fold-table");
    const RootSystem& s = f.source();
    struct Row {
        GoldenInt value;
        std::array<std::int64_t, 4> folded;
    };
    const std::vector<Row> table{
        {{0, 0}, {0, 0, 0, 0}},    {{1, 0}, {1, 0, 0, 1}},    {{-1, 0}, {-1, 0, 0, -1}},
        {{-1, 1}, {-1, 1, 1, 0}},  {{1, -1}, {1, -1, -1, 0}}, {{0, 1}, {0, 1, 1, 1}},
        {{0, -1}, {0, -1, -1, -1}}, {{2, 0}, {2, 0, 0, 2}},   {{-2, 0}, {-2, 0, 0, -2}},
    };
    std::map<std::string, std::size_t> histogram;
    for (RootIndex i = 0; i < s.size(); ++i) {
        const Vec& ua = f.psi().root(f.image(i));
        const Vec& ta = f.psi().root(f.tau_image(i));
        for (RootIndex k = 0; k < s.size(); ++k) {
            const GoldenInt g = s.form(s.root(i), s.root(k));
            const auto row = std::find_if(table.begin(), table.end(), [&](const Row& r) { return r.value == g; });
            if (row == table.end()) {
                c.fail({s.root(i), s.root(k)}, "inner product " + to_string(g) + " outside the table");
                return c;
            }
            const Vec& ub = f.psi().root(f.image(k));
            const Vec& tb = f.psi().root(f.tau_image(k));
            const std::array<std::int64_t, 4> got{f.pairing(ua, ub), f.pairing(ua, tb), f.pairing(ta, ub), f.pairing(ta, tb)};
            if (got != row->folded) {
                c.fail({s.root(i), s.root(k)}, "folded products differ from the table row " + to_string(g));
                return c;
            }
            ++histogram[to_string(g)];
        }
    }
    std::ostringstream os;
    os << "pairs " << s.size() * s.size() << ";";
    for (const auto& [value, n] : histogram) os << " " << value << ":" << n;
    c.note = os.str();
    return c;
}

Certificate check_reflection_factorization(const FoldedSystem& f) {
    Certificate c = make_fold_certificate(f, "fold-reflections");
    const RootSystem& s = f.source();
    const std::size_t r = f.lattice_rank();
    for (RootIndex a = 0; a < s.size(); ++a) {
        const Vec& x = f.psi().root(f.image(a));
        const Vec& tx = f.psi().root(f.tau_image(a));
        for (std::size_t k = 0; k < r; ++k) {
            const Vec u = Vec::unit(k);
            const Vec expect = f.to_lattice(s.reflect(s.root(a), f.from_lattice(u)));
            const Vec one = f.integer_reflect(x, f.integer_reflect(tx, u));
            const Vec two = f.integer_reflect(tx, f.integer_reflect(x, u));
            if (!(one == expect) || !(two == expect)) {
                c.fail({f.to_lattice(s.root(a)), u, one, two, expect}, "s_alpha != r_alpha r_tau_alpha");
                return c;
            }
        }
    }
    c.note = count_note("roots", s.size());
    return c;
}

Certificate check_length_doubling(const FoldedSystem& f, std::size_t max_len) {
    Certificate c = make_fold_certificate(f, "fold-length");
    const RootSystem& s = f.source();
    const RootSystem& psi = f.psi();
    const auto elements = enumerate_group(s, max_len);
    std::size_t longest = 0;
    for (const auto& e : elements) {
        const std::size_t l = length(s, e.element);
        if (l != e.length) {
            c.fail(std::vector<Vec>(e.element.images().begin(), e.element.images().end()), "inversion count != word length");
            return c;
        }
        std::size_t l2 = 0;
        for (RootIndex p : psi.positive()) {
            const Vec image = f.to_lattice(e.element.apply(f.from_lattice(psi.root(p))));
            const auto idx = psi.index_of(image);
            if (!idx) {
                c.fail({psi.root(p), image}, "w does not preserve Psi");
                return c;
            }
            l2 += !psi.is_positive(*idx);
        }
        if (l2 != 2 * l) {
            c.fail(std::vector<Vec>(e.element.images().begin(), e.element.images().end()),
                   "l'=" + std::to_string(l2) + " l=" + std::to_string(l));
            return c;
        }
        longest = std::max(longest, l);
    }
    c.note = "elements " + std::to_string(elements.size()) + "; longest l=" + std::to_string(longest) +
             " l'=" + std::to_string(2 * longest);
    return c;
}

std::vector<std::vector<RootIndex>> source_simple_subsystems(const FoldedSystem& f, std::size_t max_size) {
    const RootSystem& s = f.source();
    const std::size_t count = s.size();
    std::vector<std::vector<char>> compatible(count, std::vector<char>(count, 0));
    for (RootIndex i = 0; i < count; ++i)
        for (RootIndex k = 0; k < count; ++k) {
            const GoldenInt g = s.form(s.root(i), s.root(k));
            compatible[i][k] = i != k && (g.is_zero() || g == GoldenInt(-1) || g == GoldenInt(0, -1));
        }

    std::vector<std::vector<RootIndex>> out{{}};
    std::vector<RootIndex> current;
    std::vector<Vec> vecs;
    auto grow = [&](auto&& self, RootIndex from) -> void {
        if (current.size() == max_size) return;
        for (RootIndex i = from; i < count; ++i) {
            bool ok = true;
            for (RootIndex m : current) ok = ok && compatible[m][i];
            if (!ok) continue;
            vecs.push_back(s.root(i));
            if (linearly_independent(vecs, s.rank())) {
                current.push_back(i);
                out.push_back(current);
                self(self, i + 1);
                current.pop_back();
            }
            vecs.pop_back();
        }
    };
    grow(grow, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<RootIndex>> bundle_simple_subsystems(const FoldedSystem& f, std::size_t max_size) {
    const std::size_t count = f.bundles().size();
    const RootSystem& psi = f.psi();
    auto ok_pair = [&](RootIndex x, RootIndex y) {
        const std::int64_t p = f.pairing(psi.root(x), psi.root(y));
        return p == 0 || p == -1;
    };
    std::vector<std::vector<char>> compatible(count, std::vector<char>(count, 0));
    for (RootIndex i = 0; i < count; ++i) {
        const auto& bi = f.bundles()[i].pair;
        for (RootIndex k = 0; k < count; ++k) {
            const auto& bk = f.bundles()[k].pair;
            bool ok = i != k;
            for (RootIndex x : bi)
                for (RootIndex y : bk) ok = ok && ok_pair(x, y);
            compatible[i][k] = ok;
        }
    }

    std::vector<std::vector<RootIndex>> out{{}};
    std::vector<RootIndex> current;
    std::vector<Vec> vecs;
    auto grow = [&](auto&& self, RootIndex from) -> void {
        if (current.size() == max_size) return;
        for (RootIndex i = from; i < count; ++i) {
            const auto& bi = f.bundles()[i].pair;
            if (!ok_pair(bi[0], bi[1])) continue;
            bool ok = true;
            for (RootIndex m : current) ok = ok && compatible[m][i];
            if (!ok) continue;
            vecs.push_back(psi.root(bi[0]));
            vecs.push_back(psi.root(bi[1]));
            if (linearly_independent(vecs, f.lattice_rank())) {
                current.push_back(i);
                out.push_back(current);
                self(self, i + 1);
                current.pop_back();
            }
            vecs.pop_back();
            vecs.pop_back();
        }
    };
    grow(grow, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

PsiSet phi_of(const FoldedSystem& f, const std::vector<RootIndex>& gamma) {
    PsiSet out;
    for (RootIndex g : gamma) {
        out.push_back(f.image(g));
        out.push_back(f.tau_image(g));
    }
    return sorted(out);
}

} // namespace

Certificate check_phi_bijection(const FoldedSystem& f, std::size_t max_size, std::mt19937_64& rng,
                                std::size_t equivariance_samples) {
    Certificate c = make_fold_certificate(f, "fold-phi");
    const RootSystem& s = f.source();
    const auto left = source_simple_subsystems(f, max_size);
    const auto right = bundle_simple_subsystems(f, max_size);
    c.note = "max size " + std::to_string(max_size) + "; simple subsystems " + std::to_string(left.size()) +
             "; bundle unions " + std::to_string(right.size());
    if (left != right) {
        std::vector<std::vector<RootIndex>> only;
        std::set_symmetric_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(only));
        std::vector<Vec> w;
        for (RootIndex g : only.front()) w.push_back(f.to_lattice(s.root(g)));
        c.fail(w, "the two enumerations differ");
        return c;
    }

    // The full simple system maps to the doubled basis.
    if (max_size >= s.rank()) {
        std::vector<RootIndex> pi;
        for (std::size_t j = 0; j < s.rank(); ++j) pi.push_back(s.simple_index(j));
        std::sort(pi.begin(), pi.end());
        PsiSet delta;
        for (std::size_t i = 0; i < f.lattice_rank(); ++i) delta.push_back(*f.psi().index_of(Vec::unit(i)));
        if (phi_of(f, pi) != sorted(delta)) {
            c.fail({}, "phi(Pi) is not the doubled basis");
            return c;
        }
    }

    const auto group = enumerate_group(s);
    std::uniform_int_distribution<std::size_t> pick_w(0, group.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_g(1, left.size() - 1);
    for (std::size_t n = 0; n < equivariance_samples && left.size() > 1; ++n) {
        const GroupElt& w = group[pick_w(rng)].element;
        const auto& gamma = left[pick_g(rng)];
        std::vector<RootIndex> moved;
        for (RootIndex g : gamma) moved.push_back(*s.index_of(w.apply(s.root(g))));
        std::sort(moved.begin(), moved.end());
        if (!std::binary_search(left.begin(), left.end(), moved)) {
            c.fail({}, "w(Gamma) is not a simple subsystem");
            return c;
        }
        PsiSet transported;
        for (RootIndex x : phi_of(f, gamma))
            transported.push_back(*f.psi().index_of(f.to_lattice(w.apply(f.from_lattice(f.psi().root(x))))));
        if (sorted(transported) != phi_of(f, moved)) {
            c.fail({}, "phi is not W-equivariant");
            return c;
        }
    }
    c.note += "; equivariance samples " + std::to_string(equivariance_samples);
    return c;
}

Certificate check_chamber_equivalence(const FoldedSystem& f, std::size_t max_size) {
    Certificate c = make_fold_certificate(f, "fold-chamber");
    const RootSystem& s = f.source();
    const auto subsystems = source_simple_subsystems(f, max_size);
    std::size_t instances = 0;
    for (const auto& gamma : subsystems) {
        const PsiSet image = phi_of(f, gamma);
        for (RootIndex a = 0; a < s.size(); ++a) {
            bool left = true;
            for (RootIndex g : gamma) left = left && golden_sign(s.form(s.root(a), s.root(g))) >= 0;
            const Vec& ta = f.psi().root(f.tau_image(a));
            bool right = true;
            for (RootIndex d : image) right = right && f.pairing(ta, f.psi().root(d)) >= 0;
            ++instances;
            if (left != right) {
                std::vector<Vec> w{f.to_lattice(s.root(a))};
                for (RootIndex g : gamma) w.push_back(f.to_lattice(s.root(g)));
                c.fail(w, "chamber membership differs");
                return c;
            }
        }
    }
    c.note = "subsystems " + std::to_string(subsystems.size()) + "; instances " + std::to_string(instances);
    return c;
}

Certificate check_slice_transfer(const FoldedSystem& f, IndexMask J) {
    Certificate c = make_fold_certificate(f, "fold-chamber");
    const RootSystem& s = f.source();
    const RootSystem& psi = f.psi();
    const std::size_t n = s.rank();
    const IndexMask doubled = J | (J << n);
    c.J = doubled;
    std::vector<RootIndex> candidates;
    for (RootIndex i = 0; i < s.size(); ++i)
        if (!s.in_parabolic(i, J) && in_chamber(s, J, s.root(i))) candidates.push_back(i);
    std::size_t pairs = 0;
    for (RootIndex a : candidates) {
        for (RootIndex b : candidates) {
            if (!equal_outside(s.root(a), s.root(b), J)) continue;
            ++pairs;
            for (RootIndex x : {f.tau_image(a), f.tau_image(b)}) {
                if (psi.in_parabolic(x, doubled) || !in_chamber(psi, doubled, psi.root(x))) {
                    c.fail({psi.root(x)}, "tau-image outside Psi \\ Psi_J' or its chamber");
                    return c;
                }
            }
            if (s.orbit_of(a) == s.orbit_of(b) && a != b) {
                c.fail({s.root(a), s.root(b)}, "distinct chamber roots in one slice");
                return c;
            }
        }
    }
    c.note = "slice transfer; chamber roots " + std::to_string(candidates.size()) + "; pairs " + std::to_string(pairs);
    return c;
}

Certificate check_phi_prime(const FoldedSystem& f, std::mt19937_64& rng, std::size_t samples) {
    Certificate c = make_fold_certificate(f, "fold-phi-prime");
    const RootSystem& s = f.source();
    const RootSystem& psi = f.psi();
    auto reflect_phi = [&](RootIndex x, RootIndex y) { return *s.index_of(s.reflect(s.root(x), s.root(y))); };
    auto reflect_psi = [&](RootIndex x, RootIndex y) {
        const auto z = psi.index_of(f.integer_reflect(psi.root(x), psi.root(y)));
        if (!z) throw std::logic_error("integer reflection leaves Psi");
        return *z;
    };
    auto phi_prime = [&](const std::vector<RootIndex>& lambda) {
        PsiSet out;
        for (RootIndex l : lambda) {
            out.push_back(f.image(l));
            out.push_back(f.tau_image(l));
        }
        return sorted(out);
    };
    auto closed_in_psi = [&](const PsiSet& set) {
        for (RootIndex x : set)
            for (RootIndex y : set)
                if (!std::binary_search(set.begin(), set.end(), reflect_psi(x, y))) return false;
        return true;
    };

    // Whole system.
    {
        std::vector<RootIndex> all(s.size());
        for (RootIndex i = 0; i < s.size(); ++i) all[i] = i;
        if (phi_prime(all).size() != psi.size()) {
            c.fail({}, "phi'(Phi) != Psi");
            return c;
        }
    }

    std::uniform_int_distribution<std::size_t> size_dist(1, s.rank());
    std::uniform_int_distribution<RootIndex> root_dist(0, static_cast<RootIndex>(s.size() - 1));
    std::size_t forward = 0, converse = 0, not_bundle_union = 0;
    std::set<std::vector<RootIndex>> distinct;
    for (std::size_t n = 0; n < samples; ++n) {
        std::vector<RootIndex> gens;
        for (std::size_t k = size_dist(rng); k > 0; --k) {
            const RootIndex g = root_dist(rng);
            gens.push_back(g);
            gens.push_back(s.negative_of(g));
        }
        const auto lambda = reflection_closure(gens, s.size(), reflect_phi);
        const PsiSet image = phi_prime(lambda);
        if (!closed_in_psi(image)) {
            c.fail({}, "phi'(Lambda) is not closed in Psi");
            return c;
        }
        distinct.insert(lambda);
        ++forward;
    }
    for (std::size_t n = 0; n < samples; ++n) {
        std::vector<RootIndex> start;
        for (std::size_t k = size_dist(rng); k > 0; --k) {
            const RootIndex g = root_dist(rng);
            for (RootIndex x : {f.image(g), f.tau_image(g)}) {
                start.push_back(x);
                start.push_back(*psi.index_of(-psi.root(x)));
            }
        }
        const PsiSet closure = reflection_closure(start, psi.size(), reflect_psi);
        bool bundle_union = true;
        for (RootIndex x : closure) bundle_union = bundle_union && std::binary_search(closure.begin(), closure.end(), f.partner(x));
        if (!bundle_union) {
            ++not_bundle_union;
            continue;
        }
        std::vector<RootIndex> lambda;
        for (RootIndex x : closure)
            if (!f.is_tau_multiple(x)) lambda.push_back(f.bundle_base(x));
        std::sort(lambda.begin(), lambda.end());
        if (reflection_closure(lambda, s.size(), reflect_phi) != lambda) {
            c.fail({}, "Lambda' n Phi is not closed");
            return c;
        }
        if (phi_prime(lambda) != closure) {
            c.fail({}, "phi'(Lambda' n Phi) != Lambda'");
            return c;
        }
        ++converse;
    }
    c.note = "forward " + std::to_string(forward) + " (" + std::to_string(distinct.size()) + " distinct); converse " +
             std::to_string(converse) + "; closures not bundle unions " + std::to_string(not_bundle_union);
    return c;
}

} // namespace coxeter
