#include "coxeter/serialize.hpp"

#include <sstream>

namespace coxeter {

using json = nlohmann::ordered_json;

json scalar_json(const GoldenInt& x, bool golden) {
    if (golden) return json::array({x.a, x.b});
    if (!x.is_integer()) throw std::logic_error("scalar_json: irrational value in an integral context");
    return x.a;
}

json vec_json(const Vec& v, std::size_t rank, bool golden) {
    json out = json::array();
    for (std::size_t i = 0; i < rank; ++i) out.push_back(scalar_json(v[i], golden));
    return out;
}

json root_system_json(const RootSystem& s) {
    const bool golden = s.is_golden();
    json gram = json::array();
    for (std::size_t i = 0; i < s.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.rank(); ++j) row.push_back(scalar_json(s.gram()(i, j), true));
        gram.push_back(std::move(row));
    }
    json roots = json::array();
    for (const Vec& r : s.roots()) roots.push_back(vec_json(r, s.rank(), golden));
    json positive = json::array();
    for (RootIndex p : s.positive()) positive.push_back(p);
    return {{"label", s.label()}, {"rank", s.rank()}, {"gram", gram}, {"roots", roots}, {"positive", positive}};
}

json folded_json(const FoldedSystem& f) {
    json doc = root_system_json(f.psi());
    doc["source"] = f.source().label();
    json bundles = json::array();
    for (const Bundle& b : f.bundles()) bundles.push_back({{"base", b.base}, {"alpha", b.pair[0]}, {"tau_alpha", b.pair[1]}});
    doc["bundles"] = std::move(bundles);
    return doc;
}

namespace {

json mask_json(IndexMask J) {
    json out = json::array();
    for (std::size_t i = 0; i < 32; ++i)
        if (J >> i & 1U) out.push_back(i + 1);
    return out;
}

json vecs_json(const std::vector<Vec>& vs, const Certificate& c) {
    json out = json::array();
    for (const Vec& v : vs) out.push_back(vec_json(v, c.rank, c.golden));
    return out;
}

std::string compact(const json& j) { return j.dump(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

json certificate_json(const Certificate& c) {
    json out{{"type", c.type}, {"check", c.check}};
    if (c.J) out["J"] = mask_json(*c.J);
    if (c.alpha) out["alpha"] = vec_json(*c.alpha, c.rank, c.golden);
    if (!c.inputs.empty()) out["inputs"] = vecs_json(c.inputs, c);
    out["status"] = std::string(status_name(c.status));
    if (!c.witness.empty()) out["witness"] = vecs_json(c.witness, c);
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

std::string csv_header() { return "type,check,J,alpha,inputs,status,witness,note"; }

std::string certificate_csv(const Certificate& c) {
    std::ostringstream os;
    os << csv_field(c.type) << ',' << csv_field(c.check) << ',' << (c.J ? csv_field(compact(mask_json(*c.J))) : "") << ','
       << (c.alpha ? csv_field(compact(vec_json(*c.alpha, c.rank, c.golden))) : "") << ','
       << (c.inputs.empty() ? "" : csv_field(compact(vecs_json(c.inputs, c)))) << ',' << status_name(c.status) << ','
       << (c.witness.empty() ? "" : csv_field(compact(vecs_json(c.witness, c)))) << ',' << csv_field(c.note);
    return os.str();
}

} // namespace coxeter
