#include "prisma/jsonio.hpp"

namespace prisma {

Int parse_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InputError(path, "not a valid integer literal");
        }
    }
    throw InputError(path, "expected an integer (number or decimal string)");
}

IntVector parse_vector(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected an array of integers");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

IntMatrix parse_matrix(const json& j, std::size_t ncols_hint, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected an array of rows");
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(parse_vector(j[i], path + "[" + std::to_string(i) + "]"));
    std::size_t ncols = rows.empty() ? ncols_hint : rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != ncols)
            throw InputError(path + "[" + std::to_string(i) + "]", "row length mismatch");
    return IntMatrix::from_rows(std::move(rows), ncols);
}

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t parse_dim(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw InputError(path, "expected a nonnegative dimension");
    return j.get<std::size_t>();
}

}  // namespace

MonoidExpr parse_expression(const json& j, const std::string& path) {
    const json& t = field(j, "type", path);
    if (!t.is_string()) throw InputError(path + ".type", "expected a string");
    const std::string type = t.get<std::string>();
    if (type == "lex") return MonoidExpr::lex(parse_dim(field(j, "dim", path), path + ".dim"));
    if (type == "orthant")
        return MonoidExpr::orthant(parse_dim(field(j, "dim", path), path + ".dim"));
    if (type == "lattice")
        return MonoidExpr::lattice(parse_dim(field(j, "dim", path), path + ".dim"));
    if (type == "fingen") {
        const json& g = field(j, "gens", path);
        std::size_t dim_hint = 0;
        if (j.contains("dim")) dim_hint = parse_dim(j["dim"], path + ".dim");
        IntMatrix gens = parse_matrix(g, dim_hint, path + ".gens");
        if (gens.nrows == 0 && !j.contains("dim"))
            throw InputError(path, "fingen with no generators needs a \"dim\" field");
        return MonoidExpr::fingen(AffineMonoid::from_gens(gens.ncols, gens.rows));
    }
    if (type == "intersect" || type == "product") {
        const json& a = field(j, "args", path);
        if (!a.is_array() || a.empty())
            throw InputError(path + ".args", "expected a nonempty array");
        std::vector<MonoidExpr> args;
        for (std::size_t i = 0; i < a.size(); ++i)
            args.push_back(parse_expression(a[i], path + ".args[" + std::to_string(i) + "]"));
        try {
            return type == "intersect" ? MonoidExpr::intersect(std::move(args))
                                       : MonoidExpr::product(std::move(args));
        } catch (const DimensionMismatch& ex) {
            throw InputError(path, ex.what());
        }
    }
    if (type == "preimage") {
        MonoidExpr arg = parse_expression(field(j, "arg", path), path + ".arg");
        IntMatrix m = parse_matrix(field(j, "matrix", path), 0, path + ".matrix");
        if (m.nrows != arg.ambient())
            throw InputError(path + ".matrix", "row count must equal the argument's dimension");
        return MonoidExpr::preimage(std::move(m), std::move(arg));
    }
    if (type == "restrict") {
        MonoidExpr arg = parse_expression(field(j, "arg", path), path + ".arg");
        Subspace v = parse_subspace(field(j, "subspace", path), arg.ambient(), path + ".subspace");
        return MonoidExpr::restriction(std::move(arg), std::move(v));
    }
    throw InputError(path + ".type", "unknown expression type \"" + type + "\"");
}

Subspace parse_subspace(const json& j, std::size_t ambient, const std::string& path) {
    IntMatrix gens = parse_matrix(j, ambient, path);
    if (gens.nrows != 0 && gens.ncols != ambient)
        throw InputError(path, "subspace rows must have the ambient dimension");
    IntMatrix fixed = gens;
    fixed.ncols = ambient;
    if (fixed.nrows == 0) fixed = IntMatrix(0, ambient);
    return Subspace::span_of(fixed);
}

Cone parse_cone(const json& j, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    std::size_t dim = parse_dim(field(j, "dim", path), path + ".dim");
    const bool has_v = j.contains("rays") || j.contains("lineality");
    const bool has_h = j.contains("equations") || j.contains("inequalities");
    if (has_v == has_h)
        throw InputError(path,
                         "give either a generator form (rays/lineality) or a constraint form "
                         "(equations/inequalities)");
    auto matrix_or_empty = [&](const char* key) {
        if (!j.contains(key)) return IntMatrix(0, dim);
        IntMatrix m = parse_matrix(j[key], dim, path + "." + key);
        if (m.nrows && m.ncols != dim)
            throw InputError(path + "." + key, "rows must match \"dim\"");
        if (!m.nrows) m = IntMatrix(0, dim);
        return m;
    };
    if (has_v) {
        IntMatrix rays = matrix_or_empty("rays");
        IntMatrix lin = matrix_or_empty("lineality");
        return Cone::from_rays(dim, rays.rows, lin.rows);
    }
    return Cone::from_hrep(dim, matrix_or_empty("equations"), matrix_or_empty("inequalities"));
}

ParasemifieldSpec parse_spec(const json& j, const std::string& path) {
    const json& f = field(j, "factors", path);
    if (!f.is_array()) throw InputError(path + ".factors", "expected an array");
    ParasemifieldSpec spec;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string fp = path + ".factors[" + std::to_string(i) + "]";
        const json& pj = field(f[i], "parents", fp);
        if (!pj.is_array()) throw InputError(fp + ".parents", "expected an array");
        RootedTree t;
        for (const auto& x : pj) {
            if (!x.is_number_integer()) throw InputError(fp + ".parents", "expected integers");
            t.parents.push_back(x.get<int>());
        }
        try {
            t.validate();
        } catch (const std::invalid_argument& ex) {
            throw InputError(fp + ".parents", ex.what());
        }
        spec.factors.push_back(std::move(t));
    }
    return spec;
}

IntVector parse_element(const json& j, std::size_t expected, const std::string& path) {
    IntVector v = parse_vector(field(j, "coords", path), path + ".coords");
    if (v.size() != expected)
        throw InputError(path + ".coords", "expected " + std::to_string(expected) + " coordinates");
    return v;
}

GeneratorTuple parse_tuple(const json& j, const ParasemifieldSpec& spec, const std::string& path) {
    GeneratorTuple x;
    x.spec = spec;
    const std::size_t total = spec.total_vertices();
    IntMatrix basis = parse_matrix(field(j, "basis", path), total, path + ".basis");
    if (basis.nrows && basis.ncols != total)
        throw InputError(path + ".basis", "basis rows must have one entry per vertex");
    x.basis = basis.rows;
    x.matrix = parse_matrix(field(j, "matrix", path), 0, path + ".matrix");
    if (x.matrix.nrows != x.basis.size())
        throw InputError(path + ".matrix", "matrix needs one row per basis element");
    return x;
}

MonoidPresentation parse_presentation(const json& j, const std::string& path) {
    MonoidPresentation p;
    const json& g = field(j, "generators", path);
    if (!g.is_number_integer() || g.get<std::int64_t>() < 0)
        throw InputError(path + ".generators", "expected a nonnegative count");
    p.generators = g.get<std::size_t>();
    const json& rels = field(j, "relations", path);
    if (!rels.is_array()) throw InputError(path + ".relations", "expected an array");
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const std::string rp = path + ".relations[" + std::to_string(i) + "]";
        if (!rels[i].is_array() || rels[i].size() != 2)
            throw InputError(rp, "expected a [lhs, rhs] pair");
        p.relations.emplace_back(parse_vector(rels[i][0], rp + "[0]"),
                                 parse_vector(rels[i][1], rp + "[1]"));
    }
    try {
        p.validate();
    } catch (const std::exception& ex) {
        throw InputError(path, ex.what());
    }
    return p;
}

json to_json(const Int& x) {
    if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

json to_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const IntMatrix& m) {
    json a = json::array();
    for (const auto& r : m.rows) a.push_back(to_json(r));
    return a;
}

json to_json(const SaturatedMonoid& s) {
    json j;
    j["lineality"] = to_json(s.lineality);
    json basis = json::array();
    for (const auto& b : s.basis) basis.push_back(to_json(b));
    j["hilbert_basis"] = basis;
    return j;
}

json to_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    j["basis"] = to_json(s.basis);
    return j;
}

json to_json(const Cone& c) {
    json j;
    j["dim"] = c.ambient;
    json rays = json::array();
    for (const auto& r : c.rays) rays.push_back(to_json(r));
    j["rays"] = rays;
    j["lineality"] = to_json(c.lineality);
    j["equations"] = to_json(c.equations);
    json ineqs = json::array();
    for (const auto& r : c.inequalities) ineqs.push_back(to_json(r));
    j["inequalities"] = ineqs;
    return j;
}

json to_json(const OpenFace& f) {
    json j;
    j["dim"] = f.dim;
    j["span"] = to_json(f.span.basis);
    j["closed_face"] = to_json(f.closed_face);
    return j;
}

json to_json(const MonoidExpr& e) {
    json j;
    switch (e.kind()) {
        case MonoidExpr::Kind::lex:
            j["type"] = "lex";
            j["dim"] = e.ambient();
            return j;
        case MonoidExpr::Kind::orthant:
            j["type"] = "orthant";
            j["dim"] = e.ambient();
            return j;
        case MonoidExpr::Kind::lattice:
            j["type"] = "lattice";
            j["dim"] = e.ambient();
            return j;
        case MonoidExpr::Kind::fingen: {
            j["type"] = "fingen";
            j["dim"] = e.ambient();
            json gens = json::array();
            for (const auto& g : e.monoid().gens) gens.push_back(to_json(g));
            j["gens"] = gens;
            return j;
        }
        case MonoidExpr::Kind::intersect:
        case MonoidExpr::Kind::product: {
            j["type"] = e.kind() == MonoidExpr::Kind::intersect ? "intersect" : "product";
            json args = json::array();
            for (const auto& a : e.args()) args.push_back(to_json(a));
            j["args"] = args;
            return j;
        }
        case MonoidExpr::Kind::preimage:
            j["type"] = "preimage";
            j["matrix"] = to_json(e.map());
            j["arg"] = to_json(e.arg());
            return j;
        case MonoidExpr::Kind::restriction:
            j["type"] = "restrict";
            j["subspace"] = to_json(e.subspace().basis);
            j["arg"] = to_json(e.arg());
            return j;
    }
    throw std::logic_error("unreachable expression kind");
}

json to_json(const CertNode& c) {
    json j;
    j["rule"] = c.rule;
    j["almost_prismal"] = c.almost_prismal;
    j["pure"] = c.pure;
    if (!c.purity_discharge.empty()) j["purity_discharge"] = c.purity_discharge;
    json ch = json::array();
    for (const auto& k : c.children) ch.push_back(to_json(k));
    j["children"] = ch;
    return j;
}

json to_json(const FaceDecomposition& d) {
    json pieces = json::array();
    for (const auto& p : d.pieces) {
        json pj;
        pj["dim"] = p.dim;
        pj["face_span"] = to_json(p.face.span.basis);
        pj["closure_lineality"] = to_json(p.closure.lineality);
        json basis = json::array();
        for (const auto& b : p.closure.basis) basis.push_back(to_json(b));
        pj["closure_hilbert_basis"] = basis;
        pieces.push_back(std::move(pj));
    }
    json j;
    j["ambient"] = d.ambient;
    j["pieces"] = pieces;
    return j;
}

json to_json(const DecompositionReport& r) {
    json j;
    j["partition"] = r.partition_ok;
    j["closure_match"] = r.closure_match_ok;
    j["growth"] = r.growth_ok;
    j["absorption"] = r.absorption_ok;
    j["points_checked"] = r.points_checked;
    j["pairs_checked"] = r.pairs_checked;
    j["passed"] = r.passed();
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace prisma
