#include "twistkit/group_cocycle.hpp"

namespace twistkit {

namespace {

std::string pkey(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

Report validate_principal_cocycle(const PrincipalCocycle& c) {
    Report rep;
    const TupleSpace& space = c.cover.space;
    auto lookup = [&](int a, int b) -> const Matrix* {
        auto it = c.g.find({a, b});
        return it == c.g.end() ? nullptr : &it->second;
    };
    for (const Tuple& t : space.tuples(1)) {
        const Matrix* m = lookup(t[0], t[1]);
        if (!m) {
            rep.add({"incomplete", pkey(t[0], t[1]), 1, 0, 0, false, "missing transition"});
            continue;
        }
        if (m->rows() != c.n || m->cols() != c.n) {
            rep.add({"shape", pkey(t[0], t[1]), 1, 0, 0, false, ""});
            continue;
        }
        if (!m->invertible())
            rep.add({"not-invertible", pkey(t[0], t[1]), 1, 0, 0, false, ""});
    }
    if (!rep.ok()) return rep;
    // Identity on inverse pairs: g_{ba} g_{ab} = id (the g_{aa} = id condition
    // on the degenerate tuples).
    for (const Tuple& t : space.tuples(1)) {
        if (t[0] > t[1]) continue;
        Matrix prod = *lookup(t[1], t[0]) * *lookup(t[0], t[1]);
        if (!(prod == Matrix::identity(c.n, prod.field())))
            rep.add({"identity", pkey(t[0], t[1]), 1, 0, prod.nnz(), false,
                     "inverse pair does not compose to the identity"});
    }
    for (const Tuple& t : space.all_tuples(2)) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        Matrix lhs = *lookup(t[1], t[2]) * *lookup(t[0], t[1]);
        Matrix rhs = *lookup(t[0], t[2]);
        if (!(lhs == rhs))
            rep.add({"cocycle", to_string(t), 2, 0, (lhs - rhs).nnz(), false, ""});
    }
    return rep;
}

Report validate_gauge(const std::map<int, Matrix>& lambda, const PrincipalCocycle& g,
                      const PrincipalCocycle& h) {
    Report rep;
    if (!(g.cover == h.cover) || g.n != h.n)
        throw Error("shape-error", "gauge relates cocycles on one cover and rank");
    for (const Tuple& v : g.cover.space.tuples(0)) {
        auto it = lambda.find(v[0]);
        if (it == lambda.end()) {
            rep.add({"incomplete", std::to_string(v[0]), 0, 0, 0, false, "missing gauge"});
            continue;
        }
        if (!it->second.invertible())
            rep.add({"not-invertible", std::to_string(v[0]), 0, 0, 0, false, ""});
    }
    if (!rep.ok()) return rep;
    for (const Tuple& t : g.cover.space.tuples(1)) {
        Matrix lhs = h.g.at({t[0], t[1]}) * lambda.at(t[0]);
        Matrix rhs = lambda.at(t[1]) * g.g.at({t[0], t[1]});
        if (!(lhs == rhs))
            rep.add({"gauge", pkey(t[0], t[1]), 1, 0, (lhs - rhs).nnz(), false, ""});
    }
    return rep;
}

} // namespace twistkit
