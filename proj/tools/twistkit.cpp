#include "twistkit/generate.hpp"
#include "twistkit/parallel.hpp"
#include "twistkit/serialize.hpp"
#include "twistkit/prism.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>

using namespace twistkit;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMalformed = 2;

void print_report(const Report& rep, bool as_json) {
    if (as_json) {
        Json arr = Json::array();
        for (const auto& r : rep.records)
            arr.push_back(Json{{"condition", r.condition},
                               {"where", r.where},
                               {"p", r.p},
                               {"q", r.q},
                               {"residual_norm", r.residual_norm},
                               {"warning", r.warning},
                               {"detail", r.detail}});
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const auto& r : rep.records) {
        std::cout << (r.warning ? "warning" : "error") << "\t" << r.condition << "\t" << r.where
                  << "\tbidegree=(" << r.p << "," << r.q << ")\tresidual=" << r.residual_norm;
        if (!r.detail.empty()) std::cout << "\t" << r.detail;
        std::cout << "\n";
    }
}

int run_validate(const std::string& path, const std::string& kind_override, bool strict,
                 bool as_json) {
    DescentFile f = load_descent_file(path);
    if (!kind_override.empty() && kind_override != f.kind)
        throw Error("parse-error", "file kind '" + f.kind + "' does not match --kind");
    Report rep = validate_descent_file(f, strict);
    print_report(rep, as_json);
    if (rep.ok()) {
        if (!as_json) std::cout << "valid\n";
        return kExitValid;
    }
    return kExitInvalid;
}

int run_fill_horn(const std::string& path, int index, std::string mode,
                  const std::string& out) {
    DescentFile f = load_descent_file(path);
    if (f.kind != "horn") throw Error("parse-error", "fill-horn needs a horn file");
    const auto& horn = std::get<HornFile>(f.payload);
    if (mode.empty()) mode = horn.mode;
    if (mode != "stc" && mode != "green")
        throw Error("parse-error", "mode must be stc or green");
    Report pre = validate_descent_file(f);
    if (!pre.ok()) {
        print_report(pre, false);
        return kExitInvalid;
    }
    GTTLabelling filled = mode == "green" ? fill_horn2_green(horn.edge_a, horn.edge_b, index)
                                          : fill_horn2(horn.edge_a, horn.edge_b, index);
    Report post = validate_gtt(filled);
    if (!post.ok()) {
        print_report(post, false);
        return kExitInvalid;
    }
    DescentFile result{1, f.field, "gtt", GttFile{std::move(filled)}};
    save_descent_file(out, result);
    std::cout << "wrote " << out << "\n";
    return kExitValid;
}

int run_strictify(const std::string& path, const std::string& out) {
    DescentFile f = load_descent_file(path);
    if (f.kind != "quasi_iso") throw Error("parse-error", "strictify needs a quasi_iso file");
    Report pre = validate_descent_file(f);
    if (!pre.ok()) {
        print_report(pre, false);
        return kExitInvalid;
    }
    Strictified st = strictify(std::get<QuasiIsoFile>(f.payload).map);
    print_report(st.self_check, false);
    if (!st.self_check.ok()) return kExitInvalid;
    DescentFile result{1, f.field, "strictified",
                       StrictifiedFile{st.a_tilde, st.b_tilde, st.f_tilde, st.decl_a,
                                       st.decl_b}};
    save_descent_file(out, result);
    std::cout << "wrote " << out << "\n";
    return kExitValid;
}

int run_weq_from_path(const std::string& path, const std::string& out) {
    DescentFile f = load_descent_file(path);
    if (f.kind != "path") throw Error("parse-error", "weq-from-path needs a path file");
    const auto& p = std::get<TwistPathData>(f.payload);
    Report pre = validate_path(p);
    if (!pre.ok()) {
        print_report(pre, false);
        return kExitInvalid;
    }
    WeakEquivalenceData w = path_to_weq(p);
    Report post = validate_weq(w);
    if (!post.ok()) {
        print_report(post, false);
        return kExitInvalid;
    }
    DescentFile result{1, f.field, "weq", std::move(w)};
    save_descent_file(out, result);
    std::cout << "wrote " << out << "\n";
    return kExitValid;
}

int run_convert(const std::string& path, const std::string& to, const std::string& out) {
    DescentFile f = load_descent_file(path);
    if (to == "nerve") {
        if (f.kind != "twist") throw Error("parse-error", "convert --to nerve needs twist");
        const auto& d = std::get<TwistingCochainData>(f.payload);
        SimplexFamily family = mc_to_labelling(d.mc);
        DescentFile result{1, f.field, "nerve", NerveFile{d.cover, d.labelling, family}};
        save_descent_file(out, result);
    } else if (to == "mc") {
        if (f.kind != "nerve") throw Error("parse-error", "convert --to mc needs nerve");
        const auto& n = std::get<NerveFile>(f.payload);
        BigradedElement mc = labelling_to_mc(n.cover.space, n.labelling, n.simplices);
        DescentFile result{1, f.field, "twist",
                           TwistingCochainData{n.cover, n.labelling, std::move(mc)}};
        save_descent_file(out, result);
    } else {
        throw Error("parse-error", "--to must be mc or nerve");
    }
    std::cout << "wrote " << out << "\n";
    return kExitValid;
}

int run_enum(const std::string& what, int p, int q, int i) {
    if (what == "faces") {
        auto fs = enumerate_faces(p, q);
        for (const Face& f : fs) std::cout << to_string(f) << "\n";
        std::cout << "count " << fs.size() << "\n";
    } else if (what == "horn") {
        auto fs = horn_simplices(p, i);
        for (const Face& f : fs) std::cout << to_string(f) << "\n";
        std::cout << "count " << fs.size() << "\n";
    } else if (what == "pair") {
        auto cells = pair_cells(p);
        std::vector<int> per_dim(p + 1, 0);
        long euler = 0;
        for (const PairCell& c : cells) {
            std::cout << to_string(c) << "\n";
            ++per_dim[c.dim()];
            euler += (c.dim() % 2 == 0) ? 1 : -1;
        }
        std::cout << "cells per dim:";
        for (int d = 0; d <= p; ++d) std::cout << " " << per_dim[d];
        std::cout << "\neuler " << euler << "\ncount " << cells.size() << "\n";
    } else if (what == "bary") {
        auto flags = bary_flags(p, q);
        for (const auto& flag : flags) {
            for (std::size_t k = 0; k < flag.size(); ++k) {
                if (k) std::cout << " < ";
                std::cout << to_string(flag[k]);
            }
            std::cout << "\n";
        }
        std::cout << "count " << flags.size() << "\n";
    } else if (what == "prism") {
        auto ps = prism_simplices(p, q);
        for (const PrismSimplex& s : ps) std::cout << to_string(s) << "\n";
        std::cout << "count " << ps.size() << "\n";
    } else {
        throw Error("parse-error", "--what must be faces, horn, pair, bary or prism");
    }
    return kExitValid;
}

int run_gen(const std::string& kind, int openings, int amp, std::uint64_t seed, int dims,
            const Field& field, const std::string& out) {
    if (kind != "twist") throw Error("parse-error", "gen supports --kind twist");
    if (openings < 1 || openings > 6 || amp < 0 || amp > 4 || dims < 1 || dims > 6)
        throw Error("parse-error", "parameters out of desk-scale bounds");
    Rng rng(seed);
    TwistGenOptions opt;
    opt.amplitude = amp;
    opt.max_dim = dims;
    TupleSpace space = TupleSpace::cech_full(openings);
    TwistFixture fx = gen_twist(rng, space, opt, field);
    TwistingCochainData d{Cover{space}, fx.labelling, fx.mc};
    Report check = validate_twisting_cochain(d);
    if (!check.ok()) {
        print_report(check, false);
        return kExitInvalid;
    }
    DescentFile result{1, field, "twist", std::move(d)};
    save_descent_file(out, result);
    std::cout << "wrote " << out << "\n";
    return kExitValid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Čech descent data of complexes "
                 "of free modules"};
    app.require_subcommand(1);

    if (const char* threads = std::getenv("TWISTKIT_THREADS"))
        set_thread_cap(unsigned(std::max(1, atoi(threads))));

    std::string file, out, kind, mode, what, to;
    int index = 0, p = 0, q = 0, i = 0;
    bool strict = false, as_json = false;
    int openings = 2, amp = 1, dims = 2;
    std::uint64_t seed = 0;
    std::string field_kind = "rational";
    std::uint32_t prime = 0;

    auto* validate = app.add_subcommand("validate", "validate a descent file");
    validate->add_option("file", file)->required();
    validate->add_option("--kind", kind, "expected payload kind");
    validate->add_flag("--strict-elementary", strict,
                       "require 0/1 identity-span differentials in complements");
    validate->add_flag("--json", as_json, "machine-readable report");

    auto* fill = app.add_subcommand("fill-horn", "fill a 2-horn from two edges");
    fill->add_option("file", file)->required();
    fill->add_option("--index", index, "horn index (0, 1 or 2)")->required();
    fill->add_option("--mode", mode, "stc or green (default: the file's mode)");
    fill->add_option("-o,--out", out)->required();

    auto* stf = app.add_subcommand("strictify", "strictify a quasi-isomorphism");
    stf->add_option("file", file)->required();
    stf->add_option("-o,--out", out)->required();

    auto* weq = app.add_subcommand("weq-from-path", "extract the weak equivalence of a path");
    weq->add_option("file", file)->required();
    weq->add_option("-o,--out", out)->required();

    auto* conv = app.add_subcommand("convert", "convert between twist and nerve forms");
    conv->add_option("file", file)->required();
    conv->add_option("--to", to, "mc or nerve")->required();
    conv->add_option("-o,--out", out)->required();

    auto* en = app.add_subcommand("enum", "enumerate simplex combinatorics");
    en->add_option("--what", what, "faces, horn, pair, bary or prism")->required();
    en->add_option("-p", p, "ambient dimension")->required();
    en->add_option("-q", q, "secondary dimension (faces, bary, prism)");
    en->add_option("-i", i, "horn index");

    auto* gen = app.add_subcommand("gen", "generate a pseudorandom valid fixture");
    gen->add_option("--kind", kind, "fixture kind (twist)")->required();
    gen->add_option("--openings", openings, "number of cover indices");
    gen->add_option("--amp", amp, "amplitude of the complexes");
    gen->add_option("--seed", seed, "PRNG seed")->required();
    gen->add_option("--dims", dims, "per-degree dimension cap");
    gen->add_option("--field", field_kind, "rational or prime");
    gen->add_option("--prime", prime, "characteristic for --field prime");
    gen->add_option("-o,--out", out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(file, kind, strict, as_json);
        if (fill->parsed()) return run_fill_horn(file, index, mode, out);
        if (stf->parsed()) return run_strictify(file, out);
        if (weq->parsed()) return run_weq_from_path(file, out);
        if (conv->parsed()) return run_convert(file, to, out);
        if (en->parsed()) return run_enum(what, p, q, i);
        if (gen->parsed()) {
            Field f = field_kind == "prime" ? Field{prime} : Field{};
            if (field_kind == "prime" && prime < 2)
                throw Error("parse-error", "--field prime needs --prime >= 2");
            return run_gen(kind, openings, amp, seed, dims, f, out);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code == "refused" || e.code == "no-inverse" || e.code == "conversion-refused" ||
            e.code == "horn-shape-error" || e.code == "not-invertible")
            return kExitInvalid;
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
