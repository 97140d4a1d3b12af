#include "twistkit/simplex.hpp"

#include <algorithm>
#include <numeric>

namespace twistkit {

Face::Face(std::vector<int> verts, int amb) : vertices(std::move(verts)), ambient(amb) {
    if (vertices.empty()) throw Error("invalid-input", "empty face");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] >= vertices[i + 1])
            throw Error("invalid-input", "face vertices not strictly increasing");
    if (vertices.front() < 0 || vertices.back() > ambient)
        throw Error("invalid-input", "face vertex out of ambient range");
}

bool Face::contains(const Face& other) const {
    return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(),
                         other.vertices.end());
}

bool Face::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Face Face::drop(int pos) const {
    std::vector<int> v = vertices;
    v.erase(v.begin() + pos);
    return Face(std::move(v), ambient);
}

Face Face::insert(int v) const {
    std::vector<int> w = vertices;
    w.insert(std::upper_bound(w.begin(), w.end(), v), v);
    return Face(std::move(w), ambient);
}

std::string to_string(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.vertices[i]);
    }
    return s + "}";
}

std::vector<Face> enumerate_faces(int p, int k) {
    if (p < 0 || k < 0 || k > p) throw Error("invalid-dimension", "need 0 <= k <= p");
    std::vector<Face> out;
    std::vector<int> pick(k + 1);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.emplace_back(pick, p);
        int i = k;
        while (i >= 0 && pick[i] == p - (k - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Face> all_faces(int p) {
    std::vector<Face> out;
    for (int k = 0; k <= p; ++k) {
        auto fk = enumerate_faces(p, k);
        out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
}

std::vector<Face> horn_simplices(int p, int i) {
    if (i < 0 || i > p) throw Error("invalid-index", "horn index out of range");
    std::vector<Face> out;
    for (const Face& f : all_faces(p)) {
        // Membership: [p] is not contained in F ∪ {i}.
        std::vector<int> u = f.vertices;
        if (!f.contains_vertex(i)) u.insert(std::upper_bound(u.begin(), u.end(), i), i);
        if (int(u.size()) != p + 1) out.push_back(f);
    }
    return out;
}

namespace {

void extend_flag(int p, int q, std::vector<Face>& flag, std::vector<std::vector<Face>>& out) {
    if (int(flag.size()) == q + 1) {
        out.push_back(flag);
        return;
    }
    for (const Face& f : all_faces(p)) {
        if (!flag.empty()) {
            const Face& prev = flag.back();
            if (!(prev.dim() < f.dim() && f.contains(prev))) continue;
        }
        flag.push_back(f);
        extend_flag(p, q, flag, out);
        flag.pop_back();
    }
}

} // namespace

std::vector<std::vector<Face>> bary_flags(int p, int q) {
    if (q < 0) throw Error("invalid-dimension", "flag length must be nonnegative");
    std::vector<std::vector<Face>> out;
    std::vector<Face> flag;
    extend_flag(p, q, flag, out);
    return out;
}

std::vector<std::vector<int>> components(int n_vertices,
                                         const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n_vertices || b < 0 || b >= n_vertices)
            throw Error("invalid-input", "edge endpoint is not a vertex");
        parent[find(a)] = find(b);
    }
    std::vector<std::vector<int>> classes(n_vertices);
    for (int v = 0; v < n_vertices; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

} // namespace twistkit
