#include "twistkit/serialize.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

namespace twistkit {

namespace {

Json scalar_to_json(const Scalar& s) {
    if (s.mod() != 0) return Json(long(s.value().convert_to<long long>()));
    return Json(s.str());
}

Scalar scalar_from_json(const Json& j, Field f) {
    if (j.is_number_integer()) return Scalar::of(j.get<long long>(), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    throw Error("parse-error", "scalar must be an integer or a string");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j, Field f) {
    Matrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), f);
    const Json& e = j.at("entries");
    if (int(e.size()) != m.rows()) throw Error("parse-error", "matrix row count mismatch");
    for (int i = 0; i < m.rows(); ++i) {
        if (int(e[i].size()) != m.cols()) throw Error("parse-error", "matrix col count mismatch");
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = scalar_from_json(e[i][c], f);
    }
    return m;
}

Json complex_to_json(const Complex& c) {
    Json dims = Json::array();
    for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
    Json diffs = Json::array();
    for (int n = c.lo(); n < c.hi(); ++n) diffs.push_back(matrix_to_json(c.diff(n)));
    return Json{{"lo", c.is_zero_complex() ? 0 : c.lo()},
                {"dims", std::move(dims)},
                {"diffs", std::move(diffs)}};
}

Complex complex_from_json(const Json& j, Field f) {
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<Matrix> diffs;
    for (const Json& d : j.at("diffs")) diffs.push_back(matrix_from_json(d, f));
    if (dims.empty()) return Complex::zero(f);
    return Complex(f, j.at("lo").get<int>(), std::move(dims), std::move(diffs));
}

Json graded_map_to_json(const GradedMap& g) {
    Json comps = Json::array();
    for (const auto& [m, mat] : g.components())
        comps.push_back(Json{{"m", m}, {"matrix", matrix_to_json(mat)}});
    return Json{{"degree", g.degree()},
                {"source", complex_to_json(g.source())},
                {"target", complex_to_json(g.target())},
                {"components", std::move(comps)}};
}

GradedMap graded_map_from_json(const Json& j, Field f) {
    GradedMap g(complex_from_json(j.at("source"), f), complex_from_json(j.at("target"), f),
                j.at("degree").get<int>());
    for (const Json& c : j.at("components"))
        g.set_component(c.at("m").get<int>(), matrix_from_json(c.at("matrix"), f));
    return g;
}

Json cover_to_json(const Cover& c) {
    Json j{{"indices", c.space.vertex_count()}};
    if (c.space.all_present()) j["nerve"] = "full";
    else {
        Json facets = Json::array();
        for (const Tuple& t : c.space.present_sets()) facets.push_back(t);
        j["nerve"] = std::move(facets);
    }
    return j;
}

Cover cover_from_json(const Json& j) {
    int n = j.at("indices").get<int>();
    const Json& nerve = j.at("nerve");
    if (nerve.is_string() && nerve.get<std::string>() == "full")
        return Cover{TupleSpace::cech_full(n)};
    std::vector<Tuple> facets;
    for (const Json& f : nerve) facets.push_back(f.get<Tuple>());
    return Cover{TupleSpace::cech(n, facets)};
}

Json labelling_to_json(const Labelling& l) {
    Json out = Json::array();
    for (const Complex& c : l.complexes) out.push_back(complex_to_json(c));
    return out;
}

Labelling labelling_from_json(const Json& j, Field f) {
    Labelling l;
    for (const Json& c : j) l.complexes.push_back(complex_from_json(c, f));
    return l;
}

Json bigraded_to_json(const BigradedElement& e) {
    Json out = Json::array();
    for (const auto& [key, g] : e.components())
        out.push_back(Json{{"tuple", key.first}, {"q", key.second},
                           {"map", graded_map_to_json(g)}});
    return out;
}

BigradedElement bigraded_from_json(const Json& j, const TupleSpace& space,
                                   const Labelling& lab, Field f) {
    BigradedElement e(space, lab);
    for (const Json& c : j)
        e.set_component(c.at("tuple").get<Tuple>(), c.at("q").get<int>(),
                        graded_map_from_json(c.at("map"), f));
    return e;
}

Json decl_to_json(const ElementaryDecl& d) {
    Json out = Json::array();
    for (auto [dim, place] : d.summands) out.push_back(Json::array({dim, place}));
    return out;
}

ElementaryDecl decl_from_json(const Json& j) {
    ElementaryDecl d;
    for (const Json& s : j) d.summands.emplace_back(s[0].get<int>(), s[1].get<int>());
    return d;
}

Json dg_to_json(const DgSimplex& s) {
    Json objs = Json::array();
    for (const Complex& c : s.objects) objs.push_back(complex_to_json(c));
    Json maps = Json::array();
    for (const auto& [face, g] : s.morphisms)
        maps.push_back(Json{{"face", face}, {"map", graded_map_to_json(g)}});
    return Json{{"objects", std::move(objs)}, {"maps", std::move(maps)}};
}

DgSimplex dg_from_json(const Json& j, Field f) {
    DgSimplex s;
    for (const Json& c : j.at("objects")) s.objects.push_back(complex_from_json(c, f));
    for (const Json& m : j.at("maps"))
        s.morphisms.emplace(m.at("face").get<std::vector<int>>(),
                            graded_map_from_json(m.at("map"), f));
    return s;
}

Json gtt_to_json(const GTTLabelling& l) {
    Json verts = Json::array();
    for (const auto& [face, s] : l.vertex_labels)
        verts.push_back(Json{{"face", face}, {"simplex", dg_to_json(s)}});
    Json cells = Json::array();
    for (const auto& [key, labels] : l.cell_labels) {
        Json ls = Json::array();
        for (const CellLabel& c : labels)
            ls.push_back(Json{{"decl", decl_to_json(c.decl)},
                              {"complement", complex_to_json(c.complement)},
                              {"theta", graded_map_to_json(c.triv.theta)},
                              {"theta_inv", graded_map_to_json(c.triv.theta_inv)}});
        cells.push_back(Json{{"tau", key.first}, {"sigma", key.second}, {"labels", std::move(ls)}});
    }
    return Json{{"dim", l.dim}, {"vertices", std::move(verts)}, {"cells", std::move(cells)}};
}

GTTLabelling gtt_from_json(const Json& j, Field f) {
    GTTLabelling l;
    l.dim = j.at("dim").get<int>();
    for (const Json& v : j.at("vertices"))
        l.vertex_labels.emplace(v.at("face").get<std::vector<int>>(),
                                dg_from_json(v.at("simplex"), f));
    for (const Json& c : j.at("cells")) {
        std::vector<CellLabel> labels;
        for (const Json& cl : c.at("labels"))
            labels.push_back(CellLabel{
                decl_from_json(cl.at("decl")), complex_from_json(cl.at("complement"), f),
                Trivialisation{graded_map_from_json(cl.at("theta"), f),
                               graded_map_from_json(cl.at("theta_inv"), f)}});
        l.cell_labels.emplace(std::pair{c.at("tau").get<std::vector<int>>(),
                                        c.at("sigma").get<std::vector<int>>()},
                              std::move(labels));
    }
    return l;
}

Json cocycle_to_json(const PrincipalCocycle& c) {
    Json edges = Json::array();
    for (const auto& [key, m] : c.g)
        edges.push_back(Json{{"pair", Json::array({key.first, key.second})},
                             {"matrix", matrix_to_json(m)}});
    return Json{{"cover", cover_to_json(c.cover)}, {"n", c.n}, {"edges", std::move(edges)}};
}

PrincipalCocycle cocycle_from_json(const Json& j, Field f) {
    PrincipalCocycle c{cover_from_json(j.at("cover")), j.at("n").get<int>(), {}};
    for (const Json& e : j.at("edges"))
        c.g.emplace(std::pair{e.at("pair")[0].get<int>(), e.at("pair")[1].get<int>()},
                    matrix_from_json(e.at("matrix"), f));
    return c;
}

} // namespace

Json to_json(const DescentFile& f) {
    Json field = f.field.rational() ? Json{{"type", "rational"}}
                                    : Json{{"type", "prime"}, {"p", f.field.p}};
    Json payload;
    if (f.kind == "locfree") {
        const auto& d = std::get<LocFreeData>(f.payload);
        Json edges = Json::array();
        for (const auto& [key, g] : d.edges)
            edges.push_back(Json{{"pair", Json::array({key.first, key.second})},
                                 {"map", graded_map_to_json(g)}});
        payload = Json{{"cover", cover_to_json(d.cover)},
                       {"labelling", labelling_to_json(d.labelling)},
                       {"edges", std::move(edges)}};
    } else if (f.kind == "twist") {
        const auto& d = std::get<TwistingCochainData>(f.payload);
        payload = Json{{"cover", cover_to_json(d.cover)},
                       {"labelling", labelling_to_json(d.labelling)},
                       {"mc", bigraded_to_json(d.mc)}};
    } else if (f.kind == "green" || f.kind == "stc") {
        const auto& d = std::get<SimplicialTwistData>(f.payload);
        Json tuples = Json::array();
        for (const auto& [t, l] : d.tuples)
            tuples.push_back(Json{{"tuple", t}, {"labelling", gtt_to_json(l)}});
        payload = Json{{"cover", cover_to_json(d.cover)}, {"tuples", std::move(tuples)}};
    } else if (f.kind == "path") {
        const auto& d = std::get<TwistPathData>(f.payload);
        payload = Json{{"cover", cover_to_json(d.cover)},
                       {"labelling", labelling_to_json(d.labelling)},
                       {"mc", bigraded_to_json(d.mc)}};
    } else if (f.kind == "weq") {
        const auto& d = std::get<WeakEquivalenceData>(f.payload);
        Json lambda = Json::array();
        for (const auto& [t, g] : d.lambda)
            lambda.push_back(Json{{"tuple", t}, {"map", graded_map_to_json(g)}});
        payload = Json{{"cover", cover_to_json(d.e.cover)},
                       {"e", Json{{"labelling", labelling_to_json(d.e.labelling)},
                                  {"mc", bigraded_to_json(d.e.mc)}}},
                       {"f", Json{{"labelling", labelling_to_json(d.f.labelling)},
                                  {"mc", bigraded_to_json(d.f.mc)}}},
                       {"lambda", std::move(lambda)}};
    } else if (f.kind == "cocycle") {
        const auto& d = std::get<CocycleFile>(f.payload);
        payload = Json{{"g", cocycle_to_json(d.g)}};
        if (d.h) payload["h"] = cocycle_to_json(*d.h);
        if (d.lambda) {
            Json ls = Json::array();
            for (const auto& [i, m] : *d.lambda)
                ls.push_back(Json{{"index", i}, {"matrix", matrix_to_json(m)}});
            payload["lambda"] = std::move(ls);
        }
    } else if (f.kind == "horn") {
        const auto& d = std::get<HornFile>(f.payload);
        payload = Json{{"mode", d.mode},
                       {"edges", Json::array({gtt_to_json(d.edge_a), gtt_to_json(d.edge_b)})}};
    } else if (f.kind == "gtt") {
        payload = Json{{"labelling", gtt_to_json(std::get<GttFile>(f.payload).labelling)}};
    } else if (f.kind == "quasi_iso") {
        payload = Json{{"map", graded_map_to_json(std::get<QuasiIsoFile>(f.payload).map)}};
    } else if (f.kind == "strictified") {
        const auto& d = std::get<StrictifiedFile>(f.payload);
        payload = Json{{"a_tilde", complex_to_json(d.a_tilde)},
                       {"b_tilde", complex_to_json(d.b_tilde)},
                       {"f_tilde", graded_map_to_json(d.f_tilde)},
                       {"decl_a", decl_to_json(d.decl_a)},
                       {"decl_b", decl_to_json(d.decl_b)}};
    } else if (f.kind == "nerve") {
        const auto& d = std::get<NerveFile>(f.payload);
        Json simps = Json::array();
        for (const auto& [t, s] : d.simplices)
            simps.push_back(Json{{"tuple", t}, {"simplex", dg_to_json(s)}});
        payload = Json{{"cover", cover_to_json(d.cover)},
                       {"labelling", labelling_to_json(d.labelling)},
                       {"simplices", std::move(simps)}};
    } else {
        throw Error("parse-error", "unknown kind '" + f.kind + "'");
    }
    return Json{{"format", f.format}, {"field", std::move(field)}, {"kind", f.kind},
                {"payload", std::move(payload)}};
}

DescentFile descent_file_from_json(const Json& j) {
    DescentFile f;
    f.format = j.at("format").get<int>();
    if (f.format != 1) throw Error("parse-error", "unsupported format version");
    const Json& field = j.at("field");
    std::string ft = field.at("type").get<std::string>();
    if (ft == "rational") f.field = Field{};
    else if (ft == "prime") f.field = Field{field.at("p").get<std::uint32_t>()};
    else throw Error("parse-error", "unknown field type");
    f.kind = j.at("kind").get<std::string>();
    const Json& p = j.at("payload");
    Field fl = f.field;
    if (f.kind == "locfree") {
        LocFreeData d{cover_from_json(p.at("cover")),
                      labelling_from_json(p.at("labelling"), fl), {}};
        for (const Json& e : p.at("edges"))
            d.edges.emplace(std::pair{e.at("pair")[0].get<int>(), e.at("pair")[1].get<int>()},
                            graded_map_from_json(e.at("map"), fl));
        f.payload = std::move(d);
    } else if (f.kind == "twist") {
        Cover cover = cover_from_json(p.at("cover"));
        Labelling lab = labelling_from_json(p.at("labelling"), fl);
        BigradedElement mc = bigraded_from_json(p.at("mc"), cover.space, lab, fl);
        f.payload = TwistingCochainData{std::move(cover), std::move(lab), std::move(mc)};
    } else if (f.kind == "green" || f.kind == "stc") {
        SimplicialTwistData d{cover_from_json(p.at("cover")), {}};
        for (const Json& t : p.at("tuples"))
            d.tuples.emplace(t.at("tuple").get<Tuple>(), gtt_from_json(t.at("labelling"), fl));
        f.payload = std::move(d);
    } else if (f.kind == "path") {
        Cover cover = cover_from_json(p.at("cover"));
        TupleSpace prism = TupleSpace::prism_of(cover.space);
        Labelling lab = labelling_from_json(p.at("labelling"), fl);
        BigradedElement mc = bigraded_from_json(p.at("mc"), prism, lab, fl);
        f.payload = TwistPathData{std::move(cover), std::move(prism), std::move(lab),
                                  std::move(mc)};
    } else if (f.kind == "weq") {
        Cover cover = cover_from_json(p.at("cover"));
        Labelling el = labelling_from_json(p.at("e").at("labelling"), fl);
        Labelling flab = labelling_from_json(p.at("f").at("labelling"), fl);
        TwistingCochainData e{cover, el,
                              bigraded_from_json(p.at("e").at("mc"), cover.space, el, fl)};
        TwistingCochainData ff{cover, flab,
                               bigraded_from_json(p.at("f").at("mc"), cover.space, flab, fl)};
        WeakEquivalenceData w{std::move(e), std::move(ff), {}};
        for (const Json& l : p.at("lambda"))
            w.lambda.emplace(l.at("tuple").get<Tuple>(),
                             graded_map_from_json(l.at("map"), fl));
        f.payload = std::move(w);
    } else if (f.kind == "cocycle") {
        CocycleFile c{cocycle_from_json(p.at("g"), fl), std::nullopt, std::nullopt};
        if (p.contains("h")) c.h = cocycle_from_json(p.at("h"), fl);
        if (p.contains("lambda")) {
            std::map<int, Matrix> ls;
            for (const Json& l : p.at("lambda"))
                ls.emplace(l.at("index").get<int>(), matrix_from_json(l.at("matrix"), fl));
            c.lambda = std::move(ls);
        }
        f.payload = std::move(c);
    } else if (f.kind == "horn") {
        HornFile h{p.at("mode").get<std::string>(), gtt_from_json(p.at("edges")[0], fl),
                   gtt_from_json(p.at("edges")[1], fl)};
        f.payload = std::move(h);
    } else if (f.kind == "gtt") {
        f.payload = GttFile{gtt_from_json(p.at("labelling"), fl)};
    } else if (f.kind == "quasi_iso") {
        f.payload = QuasiIsoFile{graded_map_from_json(p.at("map"), fl)};
    } else if (f.kind == "strictified") {
        f.payload = StrictifiedFile{complex_from_json(p.at("a_tilde"), fl),
                                    complex_from_json(p.at("b_tilde"), fl),
                                    graded_map_from_json(p.at("f_tilde"), fl),
                                    decl_from_json(p.at("decl_a")),
                                    decl_from_json(p.at("decl_b"))};
    } else if (f.kind == "nerve") {
        NerveFile n{cover_from_json(p.at("cover")),
                    labelling_from_json(p.at("labelling"), fl), {}};
        for (const Json& s : p.at("simplices"))
            n.simplices.emplace(s.at("tuple").get<Tuple>(), dg_from_json(s.at("simplex"), fl));
        f.payload = std::move(n);
    } else {
        throw Error("parse-error", "unknown kind '" + f.kind + "'");
    }
    return f;
}

std::string canonical_text(const DescentFile& f) { return to_json(f).dump(2) + "\n"; }

DescentFile parse_descent_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw Error("parse-error", e.what());
    }
    try {
        return descent_file_from_json(j);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("parse-error", e.what());
    }
}

DescentFile load_descent_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_descent_file(text);
}

void save_descent_file(const std::string& path, const DescentFile& f) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("io-error", "cannot write " + tmp);
        out << canonical_text(f);
    }
    std::filesystem::rename(tmp, path);
}

Report validate_descent_file(const DescentFile& f, bool strict_elementary) {
    if (f.kind == "locfree") return validate_locfree(std::get<LocFreeData>(f.payload));
    if (f.kind == "twist")
        return validate_twisting_cochain(std::get<TwistingCochainData>(f.payload));
    if (f.kind == "green")
        return validate_green(std::get<SimplicialTwistData>(f.payload), strict_elementary);
    if (f.kind == "stc")
        return validate_stc(std::get<SimplicialTwistData>(f.payload), strict_elementary);
    if (f.kind == "path") return validate_path(std::get<TwistPathData>(f.payload));
    if (f.kind == "weq") return validate_weq(std::get<WeakEquivalenceData>(f.payload));
    if (f.kind == "cocycle") {
        const auto& c = std::get<CocycleFile>(f.payload);
        Report rep = validate_principal_cocycle(c.g);
        if (c.h) rep.merge(validate_principal_cocycle(*c.h));
        if (c.lambda) {
            if (!c.h) throw Error("shape-error", "gauge data needs a second cocycle");
            rep.merge(validate_gauge(*c.lambda, c.g, *c.h));
        }
        return rep;
    }
    if (f.kind == "horn") {
        const auto& h = std::get<HornFile>(f.payload);
        Report rep = validate_gtt(h.edge_a, strict_elementary);
        rep.merge(validate_gtt(h.edge_b, strict_elementary));
        if (h.mode == "green") {
            if (!is_gtt1(h.edge_a) || !is_gtt1(h.edge_b))
                rep.add({"not-gtt1", "horn edges", 0, 0, 0, false, ""});
        }
        return rep;
    }
    if (f.kind == "gtt") return validate_gtt(std::get<GttFile>(f.payload).labelling,
                                             strict_elementary);
    if (f.kind == "quasi_iso") {
        Report rep;
        const GradedMap& m = std::get<QuasiIsoFile>(f.payload).map;
        if (m.degree() != 0 || !is_chain_map(m))
            rep.add({"not-chain-map", "map", 0, 0, 0, false, ""});
        else if (!is_quasi_iso(m))
            rep.add({"not-quasi-iso", "map", 0, 0, 0, false, ""});
        return rep;
    }
    if (f.kind == "strictified") {
        Report rep;
        const auto& s = std::get<StrictifiedFile>(f.payload);
        if (!is_chain_map(s.f_tilde) || !s.f_tilde.invertible())
            rep.add({"not-iso", "f_tilde", 0, 0, 0, false, ""});
        return rep;
    }
    if (f.kind == "nerve") {
        Report rep;
        const auto& n = std::get<NerveFile>(f.payload);
        for (const auto& [t, s] : n.simplices) {
            Report sub = validate_dg_simplex(s);
            for (Record r : sub.records) {
                r.where = to_string(t) + " " + r.where;
                rep.add(std::move(r));
            }
        }
        return rep;
    }
    throw Error("parse-error", "no validator for kind '" + f.kind + "'");
}

} // namespace twistkit
