#include "dualcx/topology.hpp"

#include <algorithm>
#include <map>

#include "dualcx/error.hpp"

namespace dualcx {

namespace {

// Position of each cell among the cells of its dimension.
std::map<int, std::size_t> positions(const DualComplex& c, std::vector<std::size_t>& counts) {
    std::map<int, std::size_t> pos;
    counts.assign(static_cast<std::size_t>(c.dim() + 1), 0);
    for (const auto& cell : c.cells) pos[cell.id] = counts[static_cast<std::size_t>(cell.dim)]++;
    return pos;
}

}  // namespace

std::vector<IntMatrix> boundary_matrices(const DualComplex& c) {
    const auto report = validate_complex(c);
    if (!report.valid) throw InvalidArgument("invalid complex: " + report.violations.front());

    std::vector<std::size_t> counts;
    const auto pos = positions(c, counts);
    std::vector<IntMatrix> out;
    for (std::size_t k = 1; k < counts.size(); ++k) out.emplace_back(counts[k - 1], counts[k]);
    for (const auto& cell : c.cells) {
        if (cell.dim == 0) continue;
        IntMatrix& d = out[static_cast<std::size_t>(cell.dim - 1)];
        const std::size_t col = pos.at(cell.id);
        for (std::size_t i = 0; i < cell.boundary.size(); ++i)
            d(pos.at(cell.boundary[i]), col) += (i % 2 == 0) ? 1 : -1;
    }
    return out;
}

HomologyProfile homology(const DualComplex& c, bool reduced) {
    const auto maps = boundary_matrices(c);
    HomologyProfile p;
    p.reduced = reduced;
    p.euler = euler_characteristic(c);
    const int top = c.dim();
    if (top < 0) return p;

    std::vector<std::size_t> counts(static_cast<std::size_t>(top + 1), 0);
    for (const auto& cell : c.cells) ++counts[static_cast<std::size_t>(cell.dim)];

    // ranks[k] = rank of the map out of degree k (d_k), with d_0 the augmentation when reduced.
    std::vector<std::size_t> ranks(counts.size() + 1, 0);
    std::vector<SNFResult> snf(counts.size() + 1);
    ranks[0] = (reduced && counts[0] > 0) ? 1 : 0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
        snf[k] = smith_normal_form(maps[k - 1]);
        ranks[k] = snf[k].rank;
    }

    for (std::size_t k = 0; k < counts.size(); ++k) {
        const std::size_t cycles = counts[k] - ranks[k];
        const std::size_t bounds = ranks[k + 1];
        p.betti.push_back(static_cast<long>(cycles - bounds));
        std::vector<Integer> tors;
        for (const auto& d : snf[k + 1].diagonal)
            if (d > 1) tors.push_back(d);
        p.torsion.push_back(std::move(tors));
    }
    return p;
}

long euler_characteristic(const DualComplex& c) {
    long chi = 0;
    for (const auto& cell : c.cells) chi += (cell.dim % 2 == 0) ? 1 : -1;
    return chi;
}

bool same_homology(const HomologyProfile& a, const HomologyProfile& b) {
    if (a.reduced != b.reduced) return false;
    const std::size_t n = std::max(a.betti.size(), b.betti.size());
    for (std::size_t k = 0; k < n; ++k) {
        const long ba = k < a.betti.size() ? a.betti[k] : 0;
        const long bb = k < b.betti.size() ? b.betti[k] : 0;
        static const std::vector<Integer> none;
        const auto& ta = k < a.torsion.size() ? a.torsion[k] : none;
        const auto& tb = k < b.torsion.size() ? b.torsion[k] : none;
        if (ba != bb || ta != tb) return false;
    }
    return a.euler == b.euler;
}

}  // namespace dualcx
