#include "pdcalc/json_io.hpp"

#include <fstream>

#include "pdcalc/expr.hpp"

namespace pdcalc {

Scalar scalar_from_json(const Json& j, const VarTable& vars) {
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    if (j.is_string()) return parse_scalar(j.get<std::string>(), vars);
    throw validation_error("scalar literal must be an integer or a string");
}

namespace {

Json scalar_to_json(const Scalar& s) {
    return Json(s.str());
}

Vec vec_from_json(const Json& j, const VarTable& vars, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw validation_error("expected a coordinate vector of length " + std::to_string(dim));
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x, vars));
    return v;
}

} // namespace

CircularQuadruple quadruple_from_json(const Json& j) {
    CircularQuadruple q;
    q.name = j.value("name", "");
    const int dim = j.at("dim").get<int>();
    q.algebra.dim = dim;
    if (j.contains("basis"))
        q.algebra.basis_names = j.at("basis").get<std::vector<std::string>>();
    else
        for (int i = 0; i < dim; ++i) q.algebra.basis_names.push_back("e" + std::to_string(i + 1));
    q.algebra.idempotent_basis = j.value("idempotent_basis", false);
    if (j.contains("coeff_ring")) {
        auto names = j.at("coeff_ring").at("poly").get<std::vector<std::string>>();
        q.vars = make_vars(std::move(names));
    }
    q.algebra.unit = vec_from_json(j.at("unit"), q.vars, dim);
    if (j.contains("mult")) {
        const auto& mj = j.at("mult");
        if (static_cast<int>(mj.size()) != dim)
            throw validation_error("mult tensor must have dim rows");
        q.algebra.mult.resize(dim);
        for (int i = 0; i < dim; ++i)
            for (int jj = 0; jj < dim; ++jj)
                q.algebra.mult[i].push_back(vec_from_json(mj.at(i).at(jj), q.vars, dim));
    } else if (q.algebra.idempotent_basis) {
        q.algebra.mult.resize(dim);
        for (int i = 0; i < dim; ++i)
            for (int jj = 0; jj < dim; ++jj) {
                Vec v(dim, Scalar(0));
                if (i == jj) v[i] = Scalar(1);
                q.algebra.mult[i].push_back(std::move(v));
            }
    } else {
        throw validation_error("quadruple needs a mult tensor (or an idempotent basis)");
    }
    const auto& oj = j.at("omega");
    if (static_cast<int>(oj.size()) != dim) throw validation_error("omega must have dim rows");
    for (int i = 0; i < dim; ++i) q.omega.push_back(vec_from_json(oj.at(i), q.vars, dim));
    q.trace = vec_from_json(j.at("trace"), q.vars, dim);
    if (j.contains("constraints"))
        for (const auto& c : j.at("constraints")) {
            if (!c.is_array() || c.size() != 2)
                throw validation_error("constraint must be a [lhs, rhs] pair");
            q.constraints.emplace_back(scalar_from_json(c.at(0), q.vars),
                                       scalar_from_json(c.at(1), q.vars));
        }
    annotate_spherical_flags(q);
    return q;
}

CircularQuadruple load_quadruple(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open quadruple file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw validation_error("bad JSON in " + path + ": " + e.what());
    }
    auto q = quadruple_from_json(j);
    if (q.name.empty()) q.name = path;
    return q;
}

Json quadruple_to_json(const CircularQuadruple& q) {
    Json j;
    j["name"] = q.name;
    j["dim"] = q.algebra.dim;
    j["basis"] = q.algebra.basis_names;
    j["idempotent_basis"] = q.algebra.idempotent_basis;
    auto vec = [&](const Vec& v) {
        Json a = Json::array();
        for (const auto& s : v) a.push_back(scalar_to_json(s));
        return a;
    };
    j["unit"] = vec(q.algebra.unit);
    Json mult = Json::array();
    for (int i = 0; i < q.dim(); ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < q.dim(); ++jj) row.push_back(vec(q.algebra.mult[i][jj]));
        mult.push_back(row);
    }
    j["mult"] = mult;
    Json om = Json::array();
    for (const auto& row : q.omega) om.push_back(vec(row));
    j["omega"] = om;
    j["trace"] = vec(q.trace);
    if (q.vars) j["coeff_ring"] = Json{{"poly", *q.vars}};
    if (!q.constraints.empty()) {
        Json cs = Json::array();
        for (const auto& [l, r] : q.constraints) cs.push_back(Json::array({l.str(), r.str()}));
        j["constraints"] = cs;
    }
    j["z_spherical"] = q.z_spherical;
    j["r_spherical"] = q.r_spherical;
    return j;
}

namespace {

Contents contents_from_json(const Json& j, const VarTable& vars) {
    Contents c;
    if (!j.is_array()) throw validation_error("region contents must be an array");
    for (const auto& item : j) {
        if (item.contains("form")) {
            c.form *= CircularForm::parse(item.at("form").get<std::string>());
        } else if (item.contains("basis")) {
            int b = item.at("basis").get<int>();
            if (b < 1) throw validation_error("basis indices are 1-based");
            c.elems.push_back(ElemRef::basis_elem(b - 1));
        } else if (item.contains("elem")) {
            Vec v;
            for (const auto& x : item.at("elem")) v.push_back(scalar_from_json(x, vars));
            c.elems.push_back(ElemRef::vector(std::move(v)));
        } else if (item.contains("loop")) {
            Loop l;
            l.inside = contents_from_json(item.at("loop"), vars);
            c.loops.push_back(std::move(l));
        } else {
            throw validation_error("region item must be form/basis/elem/loop");
        }
    }
    c.normalize();
    return c;
}

Json contents_to_json(const Contents& c) {
    Json a = Json::array();
    if (!c.form.is_empty()) a.push_back(Json{{"form", c.form.encode()}});
    for (const auto& e : c.elems) {
        if (e.is_basis()) {
            a.push_back(Json{{"basis", e.basis + 1}});
        } else {
            Json v = Json::array();
            for (const auto& s : e.coords) v.push_back(scalar_to_json(s));
            a.push_back(Json{{"elem", v}});
        }
    }
    for (const auto& l : c.loops) a.push_back(Json{{"loop", contents_to_json(l.inside)}});
    return a;
}

Matching matching_from_json(const Json& j) {
    const int k = j.at("k").get<int>();
    int nb = 0, mt = 2 * k;
    if (j.contains("split")) {
        nb = j.at("split").at(0).get<int>();
        mt = j.at("split").at(1).get<int>();
    }
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    if (static_cast<int>(arcs.size()) != k) throw validation_error("expected k arcs");
    return Matching::from_arcs(nb, mt, arcs);
}

std::map<int, Contents> regions_from_json(const Json& j, const VarTable& vars) {
    std::map<int, Contents> out;
    if (!j.contains("regions")) return out;
    for (const auto& [key, val] : j.at("regions").items()) {
        int r = std::stoi(key);
        auto c = contents_from_json(val, vars);
        if (!c.is_trivial()) out[r] = std::move(c);
    }
    return out;
}

} // namespace

DecoratedDiagram diagram_from_json(const Json& j, const VarTable& vars) {
    DecoratedDiagram d;
    d.matching = matching_from_json(j);
    d.regions = regions_from_json(j, vars);
    d.check_regions();
    return d;
}

DecoratedOuter outer_from_json(const Json& j, const VarTable& vars) {
    DecoratedOuter d;
    d.outer = OuterMatching::make(matching_from_json(j), j.at("infinity_face").get<int>());
    d.regions = regions_from_json(j, vars);
    d.check_regions();
    return d;
}

Json diagram_to_json(const DecoratedDiagram& d) {
    Json j;
    j["k"] = d.matching.k();
    j["split"] = Json::array({d.matching.n_bottom(), d.matching.m_top()});
    Json arcs = Json::array();
    for (auto [a, b] : d.matching.arcs()) arcs.push_back(Json::array({a, b}));
    j["arcs"] = arcs;
    Json regions = Json::object();
    for (const auto& [r, c] : d.regions)
        if (!c.is_trivial()) regions[std::to_string(r)] = contents_to_json(c);
    j["regions"] = regions;
    return j;
}

Json outer_to_json(const DecoratedOuter& d) {
    DecoratedDiagram tmp{d.outer.arcs, d.regions};
    Json j = diagram_to_json(tmp);
    j.erase("split");
    j["infinity_face"] = d.outer.infinity_face;
    return j;
}

ParsedDiagram parse_diagram(const std::string& text, const VarTable& vars) {
    ParsedDiagram out{ParsedDiagram::Kind::form, {}, {}, {}};
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw parse_error(std::string("bad diagram JSON: ") + e.what(),
                              static_cast<std::size_t>(e.byte));
        }
        if (j.contains("infinity_face")) {
            out.kind = ParsedDiagram::Kind::outer;
            out.outer = outer_from_json(j, vars);
        } else {
            out.kind = ParsedDiagram::Kind::diagram;
            out.diagram = diagram_from_json(j, vars);
        }
        return out;
    }
    out.form = CircularForm::parse(text);
    return out;
}

} // namespace pdcalc
