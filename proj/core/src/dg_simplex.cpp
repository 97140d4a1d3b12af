#include "twistkit/dg_simplex.hpp"

#include <algorithm>

namespace twistkit {

namespace {

std::string face_key(const std::vector<int>& face) {
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(face[i]);
    }
    return s + "}";
}

std::vector<std::vector<int>> faces_of_dim_ge2(int p) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= p; ++k)
        for (const Face& f : enumerate_faces(p, k)) out.push_back(f.vertices);
    return out;
}

} // namespace

const GradedMap& DgSimplex::label(const std::vector<int>& face) const {
    auto it = morphisms.find(face);
    if (it == morphisms.end())
        throw Error("incomplete-labelling", "missing face label " + face_key(face));
    return it->second;
}

DgSimplex dg_point(const Complex& c) { return DgSimplex{{c}, {}}; }

DgSimplex dg_edge(const GradedMap& f) {
    DgSimplex s{{f.target(), f.source()}, {}};
    s.morphisms.emplace(std::vector<int>{0, 1}, f);
    return s;
}

DgSimplex nerve_simplex(const std::vector<Complex>& objects,
                        const std::vector<GradedMap>& edges) {
    int p = int(objects.size()) - 1;
    if (int(edges.size()) != p)
        throw Error("invalid-input", "nerve simplex needs one edge per spine segment");
    DgSimplex s{objects, {}};
    for (const auto& face : faces_of_dim_ge2(p)) {
        if (face.size() == 2) {
            // Composite of the spine edges between the two vertices.
            GradedMap f = edges[face[0]]; // x_{face[0]+1} -> x_{face[0]}
            for (int v = face[0] + 1; v < face[1]; ++v) f = compose(f, edges[v]);
            s.morphisms.emplace(face, f);
        } else {
            const Complex& src = objects[face.back()];
            const Complex& tgt = objects[face.front()];
            s.morphisms.emplace(face, GradedMap(src, tgt, 2 - int(face.size())));
        }
    }
    return s;
}

GradedMap dg_relation_residual(const DgSimplex& s, const std::vector<int>& face) {
    int k = int(face.size()) - 1;
    const GradedMap& f = s.label(face);
    Field fld = f.source().field();
    GradedMap res = hom_differential(f);
    if (k == 1) return res;
    for (int j = 1; j <= k - 1; ++j) {
        std::vector<int> dropped = face;
        dropped.erase(dropped.begin() + j);
        int s1 = ((j - 1) % 2 == 0) ? 1 : -1;
        res = res - s.label(dropped).scaled(Scalar::of(s1, fld));
        std::vector<int> front(face.begin(), face.begin() + j + 1);
        std::vector<int> back(face.begin() + j, face.end());
        int s2 = ((k * (j - 1) + 1) % 2 == 0) ? 1 : -1;
        res = res - compose(s.label(front), s.label(back)).scaled(Scalar::of(s2, fld));
    }
    return res;
}

Report validate_dg_simplex(const DgSimplex& s) {
    Report rep;
    int p = s.dim();
    for (const auto& face : faces_of_dim_ge2(p)) {
        auto it = s.morphisms.find(face);
        if (it == s.morphisms.end()) {
            rep.add({"incomplete-labelling", face_key(face), 0, 0, 0, false, "missing label"});
            continue;
        }
        const GradedMap& f = it->second;
        int k = int(face.size()) - 1;
        if (f.degree() != 1 - k || f.source() != s.objects[face.back()] ||
            f.target() != s.objects[face.front()]) {
            rep.add({"malformed-map", face_key(face), 0, 0, 0, false,
                     "wrong degree or endpoints"});
            continue;
        }
    }
    if (!rep.records.empty()) return rep;
    for (const auto& face : faces_of_dim_ge2(p)) {
        GradedMap res = dg_relation_residual(s, face);
        if (!res.is_zero())
            rep.add({face.size() == 2 ? "edge-not-chain-map" : "relation-failed",
                     face_key(face), 0, 0, res.nnz(), false, ""});
    }
    return rep;
}

DgSimplex dg_face(const DgSimplex& s, int i) {
    int p = s.dim();
    if (i < 0 || i > p) throw Error("invalid-index", "face index out of range");
    std::vector<int> keep;
    for (int v = 0; v <= p; ++v)
        if (v != i) keep.push_back(v);
    return sub_simplex(s, keep);
}

DgSimplex sub_simplex(const DgSimplex& s, const std::vector<int>& vertices) {
    DgSimplex out;
    for (int v : vertices) out.objects.push_back(s.objects[v]);
    int k = int(vertices.size()) - 1;
    for (const auto& face : faces_of_dim_ge2(k)) {
        std::vector<int> image;
        for (int v : face) image.push_back(vertices[v]);
        out.morphisms.emplace(face, s.label(image));
    }
    return out;
}

DgSimplex dg_degeneracy(const DgSimplex& s, int i) {
    int p = s.dim();
    if (i < 0 || i > p) throw Error("invalid-index", "degeneracy index out of range");
    // Vertices of the output: 0..p+1 with both i and i+1 mapping to old i.
    auto collapse = [i](int v) { return v <= i ? v : v - 1; };
    DgSimplex out;
    for (int v = 0; v <= p + 1; ++v) out.objects.push_back(s.objects[collapse(v)]);
    for (const auto& face : faces_of_dim_ge2(p + 1)) {
        bool has_both = std::binary_search(face.begin(), face.end(), i) &&
                        std::binary_search(face.begin(), face.end(), i + 1);
        const Complex& src = out.objects[face.back()];
        const Complex& tgt = out.objects[face.front()];
        if (!has_both) {
            std::vector<int> image;
            for (int v : face) image.push_back(collapse(v));
            out.morphisms.emplace(face, s.label(image));
        } else if (face.size() == 2) {
            out.morphisms.emplace(face, GradedMap::identity(src));
        } else {
            out.morphisms.emplace(face, GradedMap(src, tgt, 2 - int(face.size())));
        }
    }
    return out;
}

bool in_core(const DgSimplex& s) {
    if (s.dim() < 1) return true;
    for (const Face& e : enumerate_faces(s.dim(), 1))
        if (!is_quasi_iso(s.label(e.vertices))) return false;
    return true;
}

bool is_nerve_simplex(const DgSimplex& s) {
    for (const auto& [face, f] : s.morphisms)
        if (face.size() >= 3 && !f.is_zero()) return false;
    return true;
}

bool is_ordinary_core(const DgSimplex& s) {
    if (!is_nerve_simplex(s)) return false;
    if (s.dim() < 1) return true;
    for (const Face& e : enumerate_faces(s.dim(), 1))
        if (!s.label(e.vertices).invertible()) return false;
    return true;
}

} // namespace twistkit
