#include "twistkit/prism.hpp"

namespace twistkit {

PrismSimplex::PrismSimplex(std::vector<std::pair<int, int>> pts) : path(std::move(pts)) {
    if (path.empty()) throw Error("invalid-input", "empty prism path");
    for (auto& [i, j] : path)
        if (i < 0 || j < 0 || j > 1) throw Error("invalid-input", "prism vertex out of range");
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        auto [i0, j0] = path[k];
        auto [i1, j1] = path[k + 1];
        bool nondecreasing = i1 >= i0 && j1 >= j0;
        bool strict = i1 > i0 || j1 > j0;
        if (!nondecreasing || !strict)
            throw Error("invalid-input", "prism path not strictly increasing");
    }
}

PrismSimplex PrismSimplex::drop(int pos) const {
    auto pts = path;
    pts.erase(pts.begin() + pos);
    return PrismSimplex(std::move(pts));
}

PrismSimplex PrismSimplex::segment(int from, int to) const {
    return PrismSimplex({path.begin() + from, path.begin() + to + 1});
}

bool PrismSimplex::in_row(int j) const {
    for (auto& [i, jj] : path)
        if (jj != j) return false;
    return true;
}

std::string to_string(const PrismSimplex& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.path.size(); ++k) {
        if (k) out += " ";
        out += "(" + std::to_string(s.path[k].first) + "," + std::to_string(s.path[k].second) + ")";
    }
    return out + "]";
}

namespace {

void grow(int p, int q, std::vector<std::pair<int, int>>& path,
          std::vector<PrismSimplex>& out) {
    if (int(path.size()) == q + 1) {
        out.emplace_back(path);
        return;
    }
    auto [i, j] = path.back();
    // Lexicographic on vertices: (i, j+1) before (i', 0/1) with i' > i.
    if (j == 0) {
        path.emplace_back(i, 1);
        grow(p, q, path, out);
        path.pop_back();
    }
    for (int i2 = i + 1; i2 <= p; ++i2)
        for (int j2 = j; j2 <= 1; ++j2) {
            path.emplace_back(i2, j2);
            grow(p, q, path, out);
            path.pop_back();
        }
}

} // namespace

std::vector<PrismSimplex> prism_simplices(int p, int q) {
    if (p < 0 || q < 0) throw Error("invalid-dimension", "negative dimension");
    std::vector<PrismSimplex> out;
    if (q > p + 1) return out;
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= 1; ++j) {
            path.emplace_back(i, j);
            grow(p, q, path, out);
            path.pop_back();
        }
    return out;
}

std::vector<PrismSimplex> prism_top(int p) {
    if (p < 0) throw Error("invalid-dimension", "negative dimension");
    std::vector<PrismSimplex> out;
    for (int m = 0; m <= p; ++m) {
        std::vector<std::pair<int, int>> path;
        for (int i = 0; i <= m; ++i) path.emplace_back(i, 0);
        for (int i = m; i <= p; ++i) path.emplace_back(i, 1);
        out.emplace_back(std::move(path));
    }
    return out;
}

} // namespace twistkit
