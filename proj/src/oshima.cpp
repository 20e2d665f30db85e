#include "coxeter/oshima.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coxeter/kernels.hpp"
#include "coxeter/linalg.hpp"

namespace coxeter {

namespace {

std::vector<Vec> vecs_of(const RootSystem& s, std::span<const RootIndex> idx) {
    std::vector<Vec> out;
    out.reserve(idx.size());
    for (RootIndex i : idx) out.push_back(s.root(i));
    return out;
}

// Elements of `a` missing from `b`; both sorted.
std::vector<RootIndex> difference(const std::vector<RootIndex>& a, const std::vector<RootIndex>& b) {
    std::vector<RootIndex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string word_note(const std::vector<std::size_t>& word) {
    std::ostringstream os;
    os << "w=[";
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k] + 1;
    os << "]";
    return os.str();
}

bool is_nonnegative(const GoldenInt& x, bool integral) {
    if (integral) return x.b == 0 && x.a >= 0;
    return golden_sign(x) >= 0;
}

// Subset sums indexed by bitmask over the tuple.
std::vector<Vec> subset_sums(std::span<const Vec> roots) {
    const std::size_t n = roots.size();
    std::vector<Vec> sums(std::size_t{1} << n);
    for (std::size_t m = 1; m < sums.size(); ++m) {
        const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
        sums[m] = sums[m & (m - 1)] + roots[low];
    }
    return sums;
}

} // namespace

std::string_view status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "unknown";
}

void Certificate::fail(std::vector<Vec> w, std::string why) {
    status = Status::Fail;
    witness = std::move(w);
    if (!why.empty()) note = note.empty() ? why : note + "; " + why;
}

Certificate make_certificate(const RootSystem& s, std::string check) {
    Certificate c;
    c.type = s.label();
    c.check = std::move(check);
    c.rank = s.rank();
    c.golden = s.is_golden();
    return c;
}

std::vector<RootIndex> orbit_slice(const RootSystem& s, IndexMask J, RootIndex alpha) {
    std::vector<std::uint32_t> hits;
    kernels::match_outside(s.roots(), s.root(alpha), J, hits);
    const auto orbit_id = s.orbit_of(alpha);
    std::vector<RootIndex> out;
    for (auto h : hits)
        if (s.orbit_of(h) == orbit_id) out.push_back(h);
    return out;
}

Certificate check_prop_a(const RootSystem& s, IndexMask J, RootIndex alpha, bool enforce_precondition) {
    Certificate c = make_certificate(s, "prop-a");
    c.J = J;
    c.alpha = s.root(alpha);
    if (enforce_precondition && s.in_parabolic(alpha, J)) {
        c.status = Status::Skipped;
        c.note = "alpha in Phi_J";
        return c;
    }
    const auto slice = orbit_slice(s, J, alpha);
    const auto orb = root_orbit(s, J, alpha);
    if (slice != orb) {
        auto extra = difference(slice, orb);
        auto missing = difference(orb, slice);
        extra.insert(extra.end(), missing.begin(), missing.end());
        c.fail(vecs_of(s, extra), "slice " + std::to_string(slice.size()) + " vs orbit " + std::to_string(orb.size()));
    }
    return c;
}

Certificate check_prop_b(const RootSystem& s, IndexMask J) {
    Certificate c = make_certificate(s, "prop-b");
    c.J = J;
    std::vector<RootIndex> candidates;
    for (RootIndex i = 0; i < s.size(); ++i)
        if (!s.in_parabolic(i, J) && in_chamber(s, J, s.root(i))) candidates.push_back(i);

    std::vector<Vec> b_witness;
    for (std::size_t x = 0; x < candidates.size() && b_witness.empty(); ++x) {
        for (std::size_t y = x + 1; y < candidates.size(); ++y) {
            const RootIndex i = candidates[x], k = candidates[y];
            if (s.orbit_of(i) == s.orbit_of(k) && equal_outside(s.root(i), s.root(k), J)) {
                b_witness = {s.root(i), s.root(k)};
                break;
            }
        }
    }

    std::vector<Vec> a_witness;
    for (RootIndex i = 0; i < s.size() && a_witness.empty(); ++i)
        if (!s.in_parabolic(i, J) && check_prop_a(s, J, i).status == Status::Fail) a_witness = {s.root(i)};

    const bool a_holds = a_witness.empty(), b_holds = b_witness.empty();
    c.note = "chamber roots " + std::to_string(candidates.size()) + "; slice statement " + (a_holds ? "holds" : "fails");
    if (!b_holds) c.fail(b_witness, "two chamber roots in one slice");
    else if (!a_holds) c.fail(a_witness, "verdicts of the two statements disagree");
    return c;
}

Certificate check_prop_c(const RootSystem& s, IndexMask J, const GroupElt& w, RootIndex beta) {
    Certificate c = make_certificate(s, "prop-c");
    c.J = J;
    c.alpha = s.root(beta);
    c.note = word_note(reduced_word(s, w));

    std::vector<Vec> gens;
    for (std::size_t j = 0; j < s.rank(); ++j)
        if (has_index(J, j)) gens.push_back(w.image(j));

    for (RootIndex i = 0; i < s.size(); ++i) {
        if (s.in_parabolic(i, J) && w.apply(s.root(i)) == s.root(beta)) {
            c.status = Status::Skipped;
            c.note += "; beta in w(Phi_J)";
            return c;
        }
    }

    std::vector<RootIndex> slice;
    const Vec& b = s.root(beta);
    for (RootIndex i : s.orbit_members(s.orbit_of(beta)))
        if (in_span(gens, s.root(i) - b, s.rank())) slice.push_back(i);

    std::vector<char> seen(s.size(), 0);
    std::vector<RootIndex> orb{beta};
    seen[beta] = 1;
    for (std::size_t head = 0; head < orb.size(); ++head) {
        for (const Vec& g : gens) {
            const RootIndex next = *s.index_of(s.reflect(g, s.root(orb[head])));
            if (!seen[next]) {
                seen[next] = 1;
                orb.push_back(next);
            }
        }
    }
    std::sort(orb.begin(), orb.end());
    if (slice != orb) c.fail(vecs_of(s, difference(slice, orb)), "slice exceeds the conjugate parabolic orbit");
    return c;
}

Certificate check_counterexample_a3() {
    const RootSystem s = RootSystem::generate("A3");
    Certificate c = make_certificate(s, "counterexample-a3");
    const IndexMask J = 0b101;
    const RootIndex a1 = s.simple_index(0);
    c.J = J;
    c.alpha = s.root(a1);
    const auto slice = orbit_slice(s, J, a1);
    const auto orb = root_orbit(s, J, a1);
    c.inputs = vecs_of(s, slice);

    const std::vector<RootIndex> expected_orbit = [&] {
        std::vector<RootIndex> v{a1, s.negative_of(a1)};
        std::sort(v.begin(), v.end());
        return v;
    }();
    const bool strict = std::includes(slice.begin(), slice.end(), orb.begin(), orb.end()) && slice.size() > orb.size();
    const bool has_a3 = std::binary_search(slice.begin(), slice.end(), s.simple_index(2));
    const Certificate unguarded = check_prop_a(s, J, a1, false);
    const bool witness_has_a3 = std::find(unguarded.witness.begin(), unguarded.witness.end(), Vec::unit(2)) !=
                                unguarded.witness.end();
    c.note = "slice " + std::to_string(slice.size()) + ", W_J alpha_1 " + std::to_string(orb.size());
    if (orb != expected_orbit) c.fail(vecs_of(s, orb), "W_J alpha_1 is not {+-alpha_1}");
    else if (!strict || !has_a3) c.fail(vecs_of(s, slice), "slice does not strictly contain the orbit with alpha_3");
    else if (unguarded.status != Status::Fail || !witness_has_a3)
        c.fail(unguarded.witness, "unguarded slice check did not fail with alpha_3");
    return c;
}

std::vector<XSpec> realizable_xspecs(const RootSystem& s) {
    std::vector<XSpec> out;
    std::set<std::tuple<IndexMask, std::vector<GoldenInt>, GoldenInt>> seen;
    for (IndexMask delta = 1; delta <= full_mask(s.rank()); ++delta) {
        for (RootIndex i = 0; i < s.size(); ++i) {
            XSpec spec{delta, {}, s.squared_length(i)};
            std::vector<GoldenInt> key;
            bool nonzero = false;
            for (std::size_t j = 0; j < s.rank(); ++j) {
                if (!has_index(delta, j)) continue;
                spec.c.set(j, s.root(i)[j]);
                key.push_back(s.root(i)[j]);
                nonzero = nonzero || !s.root(i)[j].is_zero();
            }
            if (nonzero && seen.emplace(delta, key, spec.l).second) out.push_back(spec);
        }
    }
    return out;
}

Certificate check_oshima_x(const RootSystem& s, const XSpec& spec) {
    if (!s.is_crystallographic() || !s.is_irreducible())
        throw std::invalid_argument("check_oshima_x: needs an irreducible crystallographic root system");
    const IndexMask K = full_mask(s.rank()) & ~spec.delta;
    bool nonzero = false;
    for (std::size_t j = 0; j < s.rank(); ++j) nonzero = nonzero || (has_index(spec.delta, j) && !spec.c[j].is_zero());
    if (!nonzero) throw std::invalid_argument("check_oshima_x: prescribed coefficients are all zero");

    Certificate c = make_certificate(s, "oshima-x");
    c.J = K;
    c.inputs = {spec.c};
    std::vector<std::uint32_t> hits;
    kernels::match_outside(s.roots(), spec.c, K, hits);
    std::vector<RootIndex> X;
    for (auto h : hits)
        if (s.squared_length(h) == spec.l) X.push_back(h);
    c.note = "l2=" + to_string(spec.l) + "; |X|=" + std::to_string(X.size());
    if (X.empty()) return c;

    const auto orb = root_orbit(s, K, X.front());
    std::vector<Vec> chamber;
    for (RootIndex x : X)
        if (in_chamber(s, K, s.root(x))) chamber.push_back(s.root(x));
    if (orb != X) c.fail(vecs_of(s, difference(X, orb)), "X is not a single orbit");
    else if (chamber.size() > 1) c.fail(chamber, "more than one chamber point in X");
    return c;
}

Certificate check_dihedral(const RootSystem& s, const Vec& v, RootIndex alpha) {
    if (s.rank() > 2) throw std::invalid_argument("check_dihedral: rank must be at most 2");
    Certificate c = make_certificate(s, "dihedral");
    c.alpha = s.root(alpha);
    c.inputs = {v};
    const Vec& a = s.root(alpha);
    const Vec sv = s.reflect(a, v);
    std::size_t hypotheses = 0;
    for (const auto& e : enumerate_group(s)) {
        const Vec wv = e.element.apply(v);
        const std::array<Vec, 2> pair{a, wv - v};
        if (linearly_independent(pair, s.rank())) continue;
        ++hypotheses;
        if (!(wv == v) && !(wv == sv)) {
            c.fail({wv}, word_note(reduced_word(s, e.element)));
            return c;
        }
    }
    c.note = "elements with w(v)-v parallel to alpha: " + std::to_string(hypotheses);
    return c;
}

bool string_preamble(const RootSystem& s, std::span<const Vec> roots) {
    if (roots.empty()) return false;
    const auto sums = subset_sums(roots);
    for (std::size_t m = 1; m < sums.size(); ++m)
        if (sums[m].is_zero()) return false;
    return s.contains(sums.back());
}

Certificate check_rootstring_b(const RootSystem& s, const Vec& a1, const Vec& a2, const Vec& a3) {
    Certificate c = make_certificate(s, "rootstring-b");
    c.inputs = {a1, a2, a3};
    const std::array<Vec, 3> t{a1, a2, a3};
    if (!string_preamble(s, t)) {
        c.status = Status::Skipped;
        return c;
    }
    if (s.contains(a1 + a2) && !s.contains(a2 + a3) && !s.contains(a1 + a3)) c.fail({a1 + a3}, "a1+a3 is not a root");
    return c;
}

std::optional<std::vector<std::size_t>> find_string_permutation(const RootSystem& s, std::span<const Vec> roots) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> order;
    std::vector<char> used(n, 0);
    std::vector<Vec> prefix{Vec{}};
    auto dfs = [&](auto&& self) -> bool {
        if (order.size() == n) return true;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            const Vec next = prefix.back() + roots[i];
            if (!s.contains(next)) continue;
            used[i] = 1;
            order.push_back(i);
            prefix.push_back(next);
            if (self(self)) return true;
            used[i] = 0;
            order.pop_back();
            prefix.pop_back();
        }
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;
    return order;
}

Certificate check_rootstring_a(const RootSystem& s, std::span<const Vec> roots) {
    Certificate c = make_certificate(s, "rootstring-a");
    c.inputs.assign(roots.begin(), roots.end());
    if (!string_preamble(s, roots)) {
        c.status = Status::Skipped;
        return c;
    }
    const auto sigma = find_string_permutation(s, roots);
    if (!sigma) {
        c.fail({roots.begin(), roots.end()}, "no ordering with all prefix sums roots");
        return c;
    }
    std::ostringstream os;
    os << "sigma=[";
    for (std::size_t k = 0; k < sigma->size(); ++k) os << (k ? "," : "") << (*sigma)[k] + 1;
    os << "]";
    c.note = os.str();
    return c;
}

Certificate check_rootstring_c(const RootSystem& s, std::span<const Vec> roots) {
    Certificate c = make_certificate(s, "rootstring-c");
    c.inputs.assign(roots.begin(), roots.end());
    bool hypotheses = string_preamble(s, roots);
    for (std::size_t i = 1; i < roots.size() && hypotheses; ++i)
        for (std::size_t j = i + 1; j < roots.size() && hypotheses; ++j)
            if (s.contains(roots[i] + roots[j])) hypotheses = false;
    if (!hypotheses) {
        c.status = Status::Skipped;
        return c;
    }
    const auto sums = subset_sums(roots);
    for (std::size_t m = 1; m < sums.size(); m += 2)
        if (!s.contains(sums[m])) {
            c.fail({sums[m]}, "subset sum through the first root is not a root");
            break;
        }
    return c;
}

bool dominates(const RootSystem& s, IndexMask J, const Vec& lower, const Vec& upper) {
    const Vec d = upper - lower;
    const bool integral = !s.is_golden();
    for (std::size_t j = 0; j < s.rank(); ++j) {
        if (!has_index(J, j)) {
            if (!d[j].is_zero()) return false;
        } else if (!is_nonnegative(d[j], integral)) {
            return false;
        }
    }
    return true;
}

GroupElt dominance_adjust(const RootSystem& s, IndexMask J, RootIndex alpha, RootIndex beta) {
    const Vec& a = s.root(alpha);
    const Vec& b = s.root(beta);
    if (!equal_outside(a, b, J)) throw std::invalid_argument("dominance_adjust: beta is not in alpha + R Pi_J");
    const auto rep = chamber_rep(s, J, b - a);
    if (!dominates(s, J, rep.element.apply(a), rep.element.apply(b)))
        throw std::logic_error("dominance_adjust: chamber point of beta - alpha is not dominant");
    return rep.element;
}

std::vector<std::vector<RootIndex>> minimal_decompositions(const RootSystem& s, IndexMask J, RootIndex alpha,
                                                           RootIndex beta) {
    if (!s.is_crystallographic()) throw std::invalid_argument("minimal_decompositions: needs a crystallographic system");
    if (s.in_parabolic(alpha, J) || s.in_parabolic(beta, J))
        throw std::invalid_argument("minimal_decompositions: alpha and beta must lie outside Phi_J");
    if (!dominates(s, J, s.root(alpha), s.root(beta)))
        throw std::invalid_argument("minimal_decompositions: alpha <=_J beta fails");

    const Vec target = s.root(beta) - s.root(alpha);
    std::int64_t height = 0;
    for (std::size_t j = 0; j < s.rank(); ++j) height += target[j].a;

    std::vector<RootIndex> parts;
    for (RootIndex i : s.positive())
        if (s.in_parabolic(i, J)) parts.push_back(i);

    std::vector<std::vector<RootIndex>> found;
    std::vector<RootIndex> current;
    auto search = [&](auto&& self, std::size_t from, const Vec& rest, std::size_t left) -> void {
        if (left == 0) {
            if (rest.is_zero()) found.push_back(current);
            return;
        }
        for (std::size_t p = from; p < parts.size(); ++p) {
            const Vec next = rest - s.root(parts[p]);
            if (coherent_sign(next, s.rank()) < 0) continue;
            current.push_back(parts[p]);
            self(self, p, next, left - 1);
            current.pop_back();
        }
    };
    for (std::size_t k = 0; k <= static_cast<std::size_t>(height) && found.empty(); ++k) search(search, 0, target, k);
    if (found.empty()) throw std::logic_error("minimal_decompositions: no decomposition found");
    return found;
}

Certificate check_decomposition(const RootSystem& s, IndexMask J, RootIndex alpha, RootIndex beta) {
    Certificate c = make_certificate(s, "decomposition");
    c.J = J;
    c.alpha = s.root(alpha);
    c.inputs = {s.root(beta)};
    const auto decomps = minimal_decompositions(s, J, alpha, beta);
    const std::size_t n = decomps.front().size() + 1;
    c.note = "n=" + std::to_string(n) + "; minimal decompositions " + std::to_string(decomps.size());
    for (const auto& d : decomps) {
        std::vector<Vec> tuple{s.root(alpha)};
        for (RootIndex i : d) tuple.push_back(s.root(i));
        if (!string_preamble(s, tuple)) {
            c.fail(tuple, "root-string preamble fails");
            return c;
        }
        for (std::size_t i = 1; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (s.contains(tuple[i] + tuple[j])) {
                    c.fail(tuple, "two J-parts sum to a root");
                    return c;
                }
        const auto sums = subset_sums(tuple);
        for (std::size_t m = 1; m < sums.size(); m += 2)
            if (!s.contains(sums[m])) {
                c.fail({sums[m]}, "partial sum through alpha is not a root");
                return c;
            }
        if (!find_string_permutation(s, tuple)) {
            c.fail(tuple, "no root-string ordering");
            return c;
        }
    }
    return c;
}

namespace {

// W-orbit of a vector with its simple-reflection table.
struct OrbitGraph {
    std::vector<Vec> points;
    std::vector<std::uint32_t> table;   // table[j * size + i] = index of s_j(points[i])
};

OrbitGraph orbit_graph(const RootSystem& s, const Vec& v, std::size_t cap) {
    OrbitGraph g;
    std::unordered_map<Vec, std::uint32_t, VecHash> index{{v, 0}};
    g.points.push_back(v);
    std::vector<std::array<std::uint32_t, kMaxRank>> edges;
    for (std::size_t head = 0; head < g.points.size(); ++head) {
        std::array<std::uint32_t, kMaxRank> row{};
        for (std::size_t j = 0; j < s.rank(); ++j) {
            Vec next = s.reflect_simple(j, g.points[head]);
            auto [it, inserted] = index.emplace(next, static_cast<std::uint32_t>(g.points.size()));
            if (inserted) {
                if (g.points.size() >= cap) throw OrbitTooLarge("chamber vector orbit exceeds " + std::to_string(cap));
                g.points.push_back(next);
            }
            row[j] = it->second;
        }
        edges.push_back(row);
    }
    const std::size_t n = g.points.size();
    g.table.resize(s.rank() * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s.rank(); ++j) g.table[j * n + i] = edges[i][j];
    return g;
}

} // namespace

Certificate check_chamber_vector(const RootSystem& s, const Vec& v, std::size_t cap) {
    Certificate c = make_certificate(s, "chamber-vector");
    c.inputs = {v};
    const IndexMask stab = stabilizer_datum(s, v);
    const OrbitGraph g = orbit_graph(s, v, cap);
    const std::size_t n = g.points.size();
    c.note = "orbit " + std::to_string(n) + "; stabilizer type mask " + std::to_string(stab);

    std::vector<char> seen(n);
    for (IndexMask J = 0; J <= full_mask(s.rank()); ++J) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<std::uint32_t> orb{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < orb.size(); ++head)
            for (std::size_t j = 0; j < s.rank(); ++j) {
                if (!has_index(J, j)) continue;
                const auto next = g.table[j * n + orb[head]];
                if (!seen[next]) {
                    seen[next] = 1;
                    orb.push_back(next);
                }
            }
        std::vector<std::uint32_t> slice;
        kernels::match_outside(g.points, v, J, slice);
        std::sort(orb.begin(), orb.end());
        if (slice != orb) {
            std::vector<Vec> w;
            for (auto i : slice)
                if (!seen[i]) w.push_back(g.points[i]);
            c.J = J;
            c.fail(w, "slice exceeds W_J v");
            return c;
        }
    }
    return c;
}

std::vector<Vec> sample_chamber_vectors(const RootSystem& s, std::mt19937_64& rng, std::size_t count, std::size_t cap) {
    const std::size_t n = s.rank();
    const GoldenMatrix adj = adjugate(s.gram().matrix());
    std::uniform_int_distribution<int> value(1, 12);
    std::bernoulli_distribution zero(n >= 6 ? 0.6 : 0.4);
    std::vector<Vec> out;
    std::size_t boundary = 0;
    bool have_zero = false;
    const std::size_t attempts_limit = count * 200;
    for (std::size_t attempt = 0; attempt < attempts_limit && out.size() < count; ++attempt) {
        std::array<int, kMaxRank> p{};
        IndexMask zeros = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (zero(rng)) zeros |= IndexMask{1} << j;
            else p[j] = value(rng);
        }
        // The origin is the only wall point in rank one; take it once.
        if (zeros == full_mask(n)) {
            if (have_zero) continue;
            have_zero = true;
        }
        // Keep a quarter of the samples on chamber walls.
        if (zeros == 0 && boundary * 4 < out.size() + 1 && n > 1) continue;
        Vec v;
        for (std::size_t i = 0; i < n; ++i) {
            GoldenInt x;
            for (std::size_t j = 0; j < n; ++j) x += adj(i, j) * GoldenInt(p[j]);
            v.set(i, x);
        }
        try {
            (void)orbit(s, full_mask(n), v, cap);
        } catch (const OrbitTooLarge&) {
            continue;
        }
        boundary += zeros != 0;
        out.push_back(v);
    }
    return out;
}

Certificate check_rescale_invariance(const RootSystem& s, const Rescaled& r, IndexMask J, RootIndex alpha) {
    Certificate c = make_certificate(s, "rescale-invariance");
    c.J = J;
    c.alpha = s.root(alpha);
    const RootIndex image = r.correspondence[alpha];
    c.inputs = {r.system.root(image)};
    const Certificate here = check_prop_a(s, J, alpha);
    const Certificate there = check_prop_a(r.system, J, image);
    c.note = std::string("verdicts ") + std::string(status_name(here.status)) + "/" + std::string(status_name(there.status));
    if (here.status != there.status) {
        c.fail({r.system.root(image)}, "verdicts differ");
        return c;
    }
    if (here.status == Status::Skipped) {
        c.status = Status::Skipped;
        return c;
    }
    std::vector<RootIndex> mapped;
    for (RootIndex i : orbit_slice(s, J, alpha)) mapped.push_back(r.correspondence[i]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != orbit_slice(r.system, J, image)) c.fail({r.system.root(image)}, "slices do not correspond");
    return c;
}

} // namespace coxeter
