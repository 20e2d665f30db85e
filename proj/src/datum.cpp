#include "coxeter/datum.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <tuple>

namespace coxeter {

bool Gram::is_golden() const {
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            if (!rows[i][j].is_integer()) return true;
    return false;
}

bool CoxeterDatum::connected(IndexMask nodes) const {
    if (nodes == 0) return false;
    IndexMask seen = nodes & (~nodes + 1);  // lowest node
    IndexMask frontier = seen;
    while (frontier) {
        IndexMask next = 0;
        for (std::size_t i = 0; i < rank; ++i) {
            if (!has_index(frontier, i)) continue;
            for (std::size_t j = 0; j < rank; ++j)
                if (has_index(nodes, j) && !has_index(seen, j) && adjacent(i, j)) next |= IndexMask{1} << j;
        }
        seen |= next;
        frontier = next;
    }
    return seen == nodes;
}

namespace {

struct Component {
    std::string name;
    std::vector<int> lengths;                     // squared lengths of the simple roots
    std::vector<std::tuple<int, int, int>> bonds; // (i, j, m) with m >= 3
};

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

Component chain(std::string name, int n, std::vector<int> lengths) {
    Component c{std::move(name), std::move(lengths), {}};
    for (int i = 0; i + 1 < n; ++i) c.bonds.emplace_back(i, i + 1, 3);
    return c;
}

Component make_component(std::string_view label) {
    const std::string name(label);
    auto bad = [&] { return UnknownLabel("unknown Coxeter type label '" + name + "'"); };
    if (label.empty()) throw bad();

    if (label.starts_with("I2(") && label.ends_with(")")) {
        const auto m = parse_int(label.substr(3, label.size() - 4));
        if (!m || *m < 2 || *m > 6) throw bad();
        switch (*m) {
        case 2: return {name, {2, 2}, {}};
        case 3: return {name, {2, 2}, {{0, 1, 3}}};
        case 4: return {name, {4, 2}, {{0, 1, 4}}};
        case 5: return {name, {2, 2}, {{0, 1, 5}}};
        default: return {name, {2, 6}, {{0, 1, 6}}};
        }
    }

    const auto n = parse_int(label.substr(1));
    if (!n) throw bad();
    const int r = *n;
    switch (label[0]) {
    case 'A':
        if (r < 1) break;
        return chain(name, r, std::vector<int>(r, 2));
    case 'B': {
        if (r < 2) break;
        std::vector<int> len(r, 4);
        len[r - 1] = 2;
        Component c = chain(name, r, len);
        std::get<2>(c.bonds.back()) = 4;
        return c;
    }
    case 'C': {
        if (r < 3) break;
        std::vector<int> len(r, 2);
        len[r - 1] = 4;
        Component c = chain(name, r, len);
        std::get<2>(c.bonds.back()) = 4;
        return c;
    }
    case 'D': {
        if (r < 4) break;
        Component c = chain(name, r - 1, std::vector<int>(r, 2));
        c.bonds.emplace_back(r - 3, r - 1, 3);
        return c;
    }
    case 'E': {
        if (r < 6 || r > 8) break;
        Component c{name, std::vector<int>(r, 2), {{0, 2, 3}, {1, 3, 3}}};
        for (int i = 2; i + 1 < r; ++i) c.bonds.emplace_back(i, i + 1, 3);
        return c;
    }
    case 'F':
        if (r != 4) break;
        return {name, {4, 4, 2, 2}, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}};
    case 'G':
        if (r != 2) break;
        return {name, {2, 6}, {{0, 1, 6}}};
    case 'H':
        if (r == 3) return {name, {2, 2, 2}, {{0, 1, 5}, {1, 2, 3}}};
        if (r == 4) return {name, {2, 2, 2, 2}, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}}};
        break;
    default: break;
    }
    throw bad();
}

std::vector<Component> components_of(std::string_view label) {
    std::vector<Component> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t x = label.find('x', start);
        out.push_back(make_component(label.substr(start, x == std::string_view::npos ? x : x - start)));
        if (x == std::string_view::npos) break;
        start = x + 1;
    }
    return out;
}

// Bond value -cos(pi/m) |a| |b| for the supported length ratios.
GoldenInt bond_value(int m, int li, int lj, const std::string& where) {
    const int lo = std::min(li, lj), hi = std::max(li, lj);
    switch (m) {
    case 3:
        if (li == lj) return GoldenInt(-li / 2);
        break;
    case 4:
        if (hi == 2 * lo) return GoldenInt(-lo);
        break;
    case 5:
        if (li == 2 && lj == 2) return -GoldenInt::tau();
        break;
    case 6:
        if (hi == 3 * lo) return GoldenInt(-3 * lo / 2);
        break;
    default: break;
    }
    throw std::logic_error("inconsistent root lengths on a bond of " + where);
}

} // namespace

CoxeterDatum parse_datum(std::string_view label) {
    const auto comps = components_of(label);
    CoxeterDatum d;
    d.label = std::string(label);
    for (const auto& c : comps) d.rank += c.lengths.size();
    if (d.rank > kMaxRank)
        throw UnknownLabel("type '" + d.label + "' has rank " + std::to_string(d.rank) + " > " + std::to_string(kMaxRank));
    d.coxeter_matrix.assign(d.rank, std::vector<int>(d.rank, 2));
    std::size_t offset = 0;
    for (const auto& c : comps) {
        d.components.emplace_back(c.name, offset);
        for (auto [i, j, m] : c.bonds) {
            d.coxeter_matrix[offset + i][offset + j] = m;
            d.coxeter_matrix[offset + j][offset + i] = m;
        }
        offset += c.lengths.size();
    }
    for (std::size_t i = 0; i < d.rank; ++i) d.coxeter_matrix[i][i] = 1;
    return d;
}

Gram build_gram(const CoxeterDatum& datum) {
    const auto comps = components_of(datum.label);
    Gram g;
    g.rank = datum.rank;
    std::size_t offset = 0;
    for (const auto& c : comps) {
        for (std::size_t i = 0; i < c.lengths.size(); ++i) g.set(offset + i, offset + i, GoldenInt(c.lengths[i]));
        for (auto [i, j, m] : c.bonds)
            g.set(offset + i, offset + j, bond_value(m, c.lengths[i], c.lengths[j], c.name));
        offset += c.lengths.size();
    }
    if (!is_positive_definite(g.matrix())) throw std::logic_error("Gram matrix of " + datum.label + " is not positive definite");
    return g;
}

std::vector<std::vector<int>> coxeter_matrix_from_gram(const Gram& g) {
    std::vector<std::vector<int>> m(g.rank, std::vector<int>(g.rank, 1));
    // cos^2(pi/m) for m = 2..6; cos^2(pi/5) = tau^2 / 4 = (1 + tau) / 4.
    const std::array<std::pair<int, GoldenRational>, 5> table{{
        {2, GoldenRational(0)},
        {3, GoldenRational(GoldenInt(1), 4)},
        {4, GoldenRational(GoldenInt(1), 2)},
        {5, GoldenRational(GoldenInt(1, 1), 4)},
        {6, GoldenRational(GoldenInt(3), 4)},
    }};
    for (std::size_t i = 0; i < g.rank; ++i) {
        for (std::size_t j = 0; j < g.rank; ++j) {
            if (i == j) continue;
            const GoldenRational c = GoldenRational(g(i, j) * g(i, j)) / GoldenRational(g(i, i) * g(j, j));
            int found = 0;
            for (const auto& [order, value] : table)
                if (value == c) found = order;
            if (found == 0) throw std::invalid_argument("Gram entry does not correspond to a supported bond");
            m[i][j] = found;
        }
    }
    return m;
}

std::vector<std::string> default_type_labels() {
    std::vector<std::string> out;
    for (int n = 1; n <= 6; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) out.push_back("B" + std::to_string(n));
    for (int n = 3; n <= 6; ++n) out.push_back("C" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) out.push_back("D" + std::to_string(n));
    for (const char* l : {"E6", "E7", "F4", "G2", "H3", "H4", "I2(5)"}) out.emplace_back(l);
    return out;
}

} // namespace coxeter
