#include "twistkit/pair_subdivision.hpp"

namespace twistkit {

PairCell::PairCell(Face t, Face s) : tau(std::move(t)), sigma(std::move(s)) {
    if (tau.ambient != sigma.ambient)
        throw Error("invalid-input", "pair cell faces have different ambients");
    if (!sigma.contains(tau)) throw Error("invalid-input", "pair cell needs tau ⊆ sigma");
}

std::string to_string(const PairCell& c) {
    return "(" + to_string(c.tau) + "," + to_string(c.sigma) + ")";
}

std::vector<PairCell> pair_cells(int p) {
    if (p < 0) throw Error("invalid-dimension", "negative dimension");
    std::vector<PairCell> out;
    for (int d = 0; d <= p; ++d)
        for (const Face& sigma : all_faces(p))
            for (const Face& tau : all_faces(p))
                if (sigma.dim() - tau.dim() == d && sigma.contains(tau))
                    out.emplace_back(tau, sigma);
    return out;
}

void CellChain::add(const PairCell& c, long coeff) {
    if (coeff == 0) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
        terms.emplace(c, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
}

CellChain& CellChain::operator+=(const CellChain& o) {
    for (const auto& [c, k] : o.terms) add(c, k);
    return *this;
}

CellChain pair_boundary(const PairCell& c) {
    CellChain out;
    // (tau, ∂sigma): delete a vertex of sigma not in tau.
    for (int pos = 0; pos <= c.sigma.dim(); ++pos) {
        int v = c.sigma.vertices[pos];
        if (c.tau.contains_vertex(v)) continue;
        out.add(PairCell(c.tau, c.sigma.drop(pos)), (pos % 2) ? -1 : 1);
    }
    // (d tau, sigma): insert a vertex of sigma into tau.
    long global = (c.dim() % 2) ? -1 : 1;
    for (int v : c.sigma.vertices) {
        if (c.tau.contains_vertex(v)) continue;
        Face bigger = c.tau.insert(v);
        int pos = 0;
        while (bigger.vertices[pos] != v) ++pos;
        out.add(PairCell(bigger, c.sigma), global * ((pos % 2) ? -1 : 1));
    }
    return out;
}

CellChain pair_boundary(const CellChain& chain) {
    CellChain out;
    for (const auto& [c, k] : chain.terms) {
        CellChain b = pair_boundary(c);
        for (const auto& [c2, k2] : b.terms) out.add(c2, k * k2);
    }
    return out;
}

} // namespace twistkit
