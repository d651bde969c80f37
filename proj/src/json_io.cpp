#include "lmhs/json_io.hpp"

#include <stdexcept>

namespace lmhs {

Json count_to_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Json to_json(const Summand& s, std::int64_t mult)
{
    Json j;
    j["kind"] = s.kind() == Summand::Kind::tate ? "tate" : "prim";
    j["twist"] = s.twist();
    j["mult"] = mult;
    if (s.kind() == Summand::Kind::prim) {
        j["ambient"] = s.variety().ambient_dim();
        j["multidegree"] = s.variety().multidegree().degrees();
    }
    return j;
}

Json to_json(const FormalSum& s)
{
    Json arr = Json::array();
    for (const auto& [summand, mult] : s.terms())
        arr.push_back(to_json(summand, mult));
    return arr;
}

Json to_json(const GradedObject& g)
{
    Json obj = Json::object();
    for (const auto& [w, piece] : g.grades())
        obj[std::to_string(w)] = {{"dim", piece.total_dim().get_str()}, {"summands", to_json(piece)}};
    return obj;
}

namespace {

const char* kind_name(E1Kind k)
{
    switch (k) {
    case E1Kind::nearby: return "nearby";
    case E1Kind::vanishing: return "vanishing";
    case E1Kind::custom: return "custom";
    }
    return "?";
}

}  // namespace

Json to_json(const E1Page& page)
{
    Json doc;
    doc["kind"] = kind_name(page.kind);
    doc["n"] = page.n;
    Json cells = Json::array();
    for (const auto& [key, cell] : page.cells) {
        Json c;
        c["i"] = key.first;
        c["j"] = key.second;
        c["weight"] = page.weight(key.first, key.second);
        c["dim"] = cell.dim.get_str();
        if (cell.summands)
            c["summands"] = to_json(*cell.summands);
        cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);
    if (!page.trace.empty()) {
        Json trace = Json::array();
        for (const auto& t : page.trace)
            trace.push_back({{"i", t.i}, {"j", t.j}, {"l", t.l}, {"subset", t.subset}, {"primed", t.primed},
                             {"degree", t.degree}, {"twist", t.twist}});
        doc["trace"] = std::move(trace);
    }
    return doc;
}

Json to_json(const JordanProfile& j)
{
    Json obj = Json::object();
    for (const auto& [size, count] : j.blocks)
        obj[std::to_string(size)] = count_to_json(count);
    return obj;
}

Json to_json(const SweepResult& r)
{
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"input", f.input}, {"detail", f.detail}});
    return {{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", failures}};
}

Json limit_to_json(const DegenerationInput& input, bool full)
{
    const LimitMHS mhs = limit_mhs(input);
    Json doc;
    doc["n"] = input.n();
    doc["degrees"] = input.degrees();
    doc["d0"] = input.d0();
    doc["center_weight"] = mhs.primitive.center_weight;
    doc["prim_dim"] = prim_middle_dim(CompleteIntersection(input.n(), Multidegree{input.d0()})).get_str();

    Json prims = Json::object();
    for (const auto& [k, piece] : mhs.primitive.primitives)
        prims[std::to_string(k)] = to_json(piece);
    doc["primitives"] = std::move(prims);
    doc["jordan"] = to_json(jordan_profile(input));

    Json levels = Json::object();
    for (const auto& [k, lvl] : level_report(input))
        levels[std::to_string(k)] = lvl ? Json(*lvl) : Json(nullptr);
    doc["levels"] = std::move(levels);
    doc["middle_has_hyperplane_class"] = mhs.middle_has_hyperplane_class;

    if (full) {
        doc["graded"] = to_json(mhs.full_graded);
        Json other = Json::object();
        for (int j = 0; j <= 2 * (input.n() - 1); ++j)
            if (j != input.n() - 1)
                other[std::to_string(j)] = to_json(other_degrees(input, j));
        doc["other_degrees"] = std::move(other);
    }
    return doc;
}

Json pencil_to_json(const PencilInput& input)
{
    const GammaTable g(input);
    Json doc;
    doc["n"] = input.n;
    doc["d1"] = input.d1;
    doc["d2"] = input.d2;
    doc["d0"] = input.d0();

    Json gamma = Json::object();
    for (auto v : {PencilVariety::Y, PencilVariety::Y0, PencilVariety::Y1, PencilVariety::Y2, PencilVariety::Z,
                   PencilVariety::Sigma}) {
        Json row = Json::object();
        for (int j = -3; j <= 3; ++j)
            row[std::to_string(j)] = g.gamma(v, j).get_str();
        gamma[to_string(v)] = {{"dim", g.dim(v)}, {"gamma", row}};
    }
    doc["gamma"] = std::move(gamma);
    doc["e1"] = to_json(e1_table(input));

    Json lines = Json::array();
    for (const auto& line : weak_lefschetz_inequalities(input))
        lines.push_back({{"statement", line.statement}, {"lhs", line.lhs.get_str()}, {"rhs", line.rhs.get_str()},
                         {"holds", line.holds}});
    doc["weak_lefschetz"] = std::move(lines);

    const auto t6 = theorem6_inequality(input);
    doc["vanishing_cycles"] = {{"gamma0_Y0", t6.gamma0_y0.get_str()}, {"gamma_minus1_Y", t6.gamma_minus1_y.get_str()},
                                  {"holds", t6.holds}, {"branch", to_string(t6.branch)}};
    return doc;
}

namespace {

BigInt parse_dim(const Json& v, const std::string& where)
{
    if (v.is_number_integer()) {
        const auto x = v.get<long long>();
        if (x < 0)
            throw std::invalid_argument("CohomologyTable: negative dimension at " + where);
        return BigInt(std::to_string(x));
    }
    if (v.is_string()) {
        BigInt x;
        if (x.set_str(v.get<std::string>(), 10) != 0 || x < 0)
            throw std::invalid_argument("CohomologyTable: bad dimension string at " + where);
        return x;
    }
    throw std::invalid_argument("CohomologyTable: dimension must be an integer at " + where);
}

int parse_key(const std::string& key, const std::string& where)
{
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(key, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != key.size() || key.empty())
        throw std::invalid_argument("CohomologyTable: non-integer key '" + key + "' in " + where);
    return v;
}

std::map<int, std::map<int, BigInt>> parse_part(const Json& doc, const char* name)
{
    std::map<int, std::map<int, BigInt>> out;
    if (!doc.contains(name))
        return out;
    const Json& part = doc.at(name);
    if (!part.is_object())
        throw std::invalid_argument(std::string("CohomologyTable: ") + name + " must be an object");
    for (const auto& [size_key, row] : part.items()) {
        const int s = parse_key(size_key, name);
        if (!row.is_object())
            throw std::invalid_argument(std::string("CohomologyTable: ") + name + "[" + size_key + "] must be an object");
        for (const auto& [j_key, v] : row.items())
            out[s][parse_key(j_key, name)] = parse_dim(v, std::string(name) + "[" + size_key + "][" + j_key + "]");
    }
    return out;
}

Json dump_part(const std::map<int, std::map<int, BigInt>>& part)
{
    Json obj = Json::object();
    for (const auto& [s, row] : part) {
        Json r = Json::object();
        for (const auto& [j, v] : row)
            r[std::to_string(j)] = count_to_json(v);
        obj[std::to_string(s)] = std::move(r);
    }
    return obj;
}

}  // namespace

CohomologyTable table_from_json(const Json& doc)
{
    if (!doc.is_object())
        throw std::invalid_argument("CohomologyTable: document must be an object");
    CohomologyTable t;
    if (!doc.contains("n") || !doc.at("n").is_number_integer())
        throw std::invalid_argument("CohomologyTable: missing integer field \"n\"");
    if (!doc.contains("r") || !doc.at("r").is_number_integer())
        throw std::invalid_argument("CohomologyTable: missing integer field \"r\"");
    t.n = doc.at("n").get<int>();
    t.r = doc.at("r").get<int>();
    t.yi = parse_part(doc, "YI");
    t.ypi = parse_part(doc, "YpI");
    return t;
}

Json table_to_json(const CohomologyTable& table)
{
    return {{"n", table.n}, {"r", table.r}, {"YI", dump_part(table.yi)}, {"YpI", dump_part(table.ypi)}};
}

}  // namespace lmhs
