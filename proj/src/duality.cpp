#include "bhv/duality.hpp"

namespace bhv {

FinVect FinVect::make(const FieldSpec& f, int dim) {
    if (dim < 0) throw DimensionError("negative dimension");
    return FinVect{f, dim, {}};
}

FinVect FinVect::make(const FieldSpec& f, std::vector<std::string> labels) {
    FinVect v{f, static_cast<int>(labels.size()), std::move(labels)};
    return v;
}

LinMap::LinMap(FinVect dom, FinVect cod, ScalarMat m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
    if (!(domain.field == codomain.field) ||
        !(matrix.field() == domain.field))
        throw FieldMismatchError("linear map across different fields");
    if (matrix.rows() != static_cast<std::size_t>(codomain.dim) ||
        matrix.cols() != static_cast<std::size_t>(domain.dim))
        throw DimensionError("linear map matrix shape mismatch");
}

LinMap LinMap::identity(const FinVect& v) {
    return LinMap(v, v, ScalarMat::identity(v.field, v.dim));
}

LinMap LinMap::zero(const FinVect& dom, const FinVect& cod) {
    return LinMap(dom, cod, ScalarMat(dom.field, cod.dim, dom.dim));
}

LinMap LinMap::after(const LinMap& f) const {
    if (f.codomain.dim != domain.dim ||
        !(f.codomain.field == domain.field))
        throw DimensionError("composition shape mismatch");
    return LinMap(f.domain, codomain, matrix * f.matrix);
}

bool LinMap::is_injective() const {
    return rank() == static_cast<std::size_t>(domain.dim);
}

bool LinMap::is_surjective() const {
    return rank() == static_cast<std::size_t>(codomain.dim);
}

FinVect dual_finite(const FinVect& v) {
    FinVect d = v;
    for (auto& l : d.labels) l += "*";
    return d;
}

LinMap dual_map(const LinMap& f) {
    return LinMap(dual_finite(f.codomain), dual_finite(f.domain),
                  f.matrix.transposed());
}

Tower Tower::make(std::vector<FinVect> levels,
                  std::vector<LinMap> transitions) {
    if (levels.empty()) throw DimensionError("tower needs at least one level");
    if (transitions.size() + 1 != levels.size())
        throw DimensionError("tower needs one transition per adjacent pair");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const LinMap& t = transitions[i];
        if (t.domain.dim != levels[i + 1].dim ||
            t.codomain.dim != levels[i].dim)
            throw DimensionError("tower transition shape mismatch at level " +
                                 std::to_string(i));
        if (!t.is_surjective())
            throw Error("tower transition " + std::to_string(i) +
                        " is not surjective");
    }
    return Tower{std::move(levels), std::move(transitions)};
}

FilteredSpace FilteredSpace::make(std::vector<FinVect> levels,
                                  std::vector<LinMap> inclusions) {
    if (levels.empty())
        throw DimensionError("filtration needs at least one level");
    if (inclusions.size() + 1 != levels.size())
        throw DimensionError("filtration needs one inclusion per pair");
    for (std::size_t i = 0; i < inclusions.size(); ++i) {
        const LinMap& f = inclusions[i];
        if (f.domain.dim != levels[i].dim ||
            f.codomain.dim != levels[i + 1].dim)
            throw DimensionError("filtration inclusion shape mismatch");
        if (!f.is_injective())
            throw Error("filtration inclusion " + std::to_string(i) +
                        " is not injective");
    }
    return FilteredSpace{std::move(levels), std::move(inclusions)};
}

Tower dualize_filtered(const FilteredSpace& f) {
    std::vector<FinVect> levels;
    for (const auto& v : f.levels) levels.push_back(dual_finite(v));
    std::vector<LinMap> transitions;
    for (const auto& inc : f.inclusions) transitions.push_back(dual_map(inc));
    // duals of injections are surjections; Tower::make re-asserts it
    return Tower::make(std::move(levels), std::move(transitions));
}

FilteredSpace dualize_tower(const Tower& t) {
    std::vector<FinVect> levels;
    for (const auto& v : t.levels) levels.push_back(dual_finite(v));
    std::vector<LinMap> inclusions;
    for (const auto& tr : t.transitions) inclusions.push_back(dual_map(tr));
    return FilteredSpace::make(std::move(levels), std::move(inclusions));
}

bool double_dual_check(const FilteredSpace& f) {
    FilteredSpace dd = dualize_tower(dualize_filtered(f));
    if (dd.levels.size() != f.levels.size()) return false;
    for (std::size_t i = 0; i < f.levels.size(); ++i) {
        // evaluation is the identity matrix in the double-dual basis, so
        // the check is dimension equality plus equality of the maps
        if (dd.levels[i].dim != f.levels[i].dim) return false;
    }
    for (std::size_t i = 0; i < f.inclusions.size(); ++i) {
        if (!(dd.inclusions[i].matrix == f.inclusions[i].matrix))
            return false;
    }
    return true;
}

bool tower_round_trip_check(const Tower& t) {
    Tower dd = dualize_filtered(dualize_tower(t));
    if (dd.levels.size() != t.levels.size()) return false;
    for (std::size_t i = 0; i < t.levels.size(); ++i)
        if (dd.levels[i].dim != t.levels[i].dim) return false;
    for (std::size_t i = 0; i < t.transitions.size(); ++i)
        if (!(dd.transitions[i].matrix == t.transitions[i].matrix))
            return false;
    return true;
}

Tower closed_subtower(const TowerSubspace& s) {
    const Tower& parent = s.parent;
    const std::size_t L = parent.levels.size();
    if (s.basis.size() != L)
        throw DimensionError("one basis matrix per tower level required");
    const FieldSpec& f = parent.levels.front().field;

    for (std::size_t i = 0; i < L; ++i) {
        const ScalarMat& b = s.basis[i];
        if (b.rows() != static_cast<std::size_t>(parent.levels[i].dim))
            throw DimensionError("subspace basis rows != level dimension");
        if (b.rank() != b.cols())
            throw Error("subspace basis at level " + std::to_string(i) +
                        " has dependent columns");
    }

    std::vector<LinMap> restricted(L > 0 ? L - 1 : 0,
                                   LinMap::zero(FinVect::make(f, 0),
                                                FinVect::make(f, 0)));
    // scan from the deepest transition down so a single corruption is
    // reported at its own level
    for (std::size_t ii = L - 1; ii-- > 0;) {
        const LinMap& pi = parent.transitions[ii];
        ScalarMat image = pi.matrix * s.basis[ii + 1];
        std::size_t dim_target = s.basis[ii].cols();
        std::size_t r_target = s.basis[ii].rank();
        std::size_t r_image = image.rank();
        std::size_t r_join = s.basis[ii].augmented(image).rank();
        if (r_join != r_target)
            throw TowerCompatibilityError(
                "transition " + std::to_string(ii) +
                    " does not map the subspace into the next level",
                static_cast<int>(ii));
        if (r_image != dim_target)
            throw TowerCompatibilityError(
                "restricted transition " + std::to_string(ii) +
                    " is not surjective onto the subspace",
                static_cast<int>(ii));
        // express pi * U_{i+1} in the U_i basis
        ScalarMat x(f, dim_target, s.basis[ii + 1].cols());
        for (std::size_t j = 0; j < s.basis[ii + 1].cols(); ++j) {
            std::vector<Scalar> col;
            for (std::size_t k = 0; k < image.rows(); ++k)
                col.push_back(image.at(k, j));
            auto sol = s.basis[ii].solve(col);
            if (!sol)
                throw TowerCompatibilityError(
                    "transition " + std::to_string(ii) +
                        " leaves the subspace",
                    static_cast<int>(ii));
            for (std::size_t k = 0; k < dim_target; ++k)
                x.at(k, j) = (*sol)[k];
        }
        restricted[ii] =
            LinMap(FinVect::make(f, static_cast<int>(s.basis[ii + 1].cols())),
                   FinVect::make(f, static_cast<int>(dim_target)), x);
    }

    std::vector<FinVect> levels;
    for (std::size_t i = 0; i < L; ++i)
        levels.push_back(FinVect::make(f, static_cast<int>(s.basis[i].cols())));
    return Tower::make(std::move(levels), std::move(restricted));
}

std::pair<bool, bool> dual_exactness_check(const std::vector<LinMap>& seq) {
    auto exact = [](const std::vector<LinMap>& maps) {
        if (maps.empty()) return true;
        for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
            if (maps[i].codomain.dim != maps[i + 1].domain.dim ||
                !(maps[i].codomain.field == maps[i + 1].domain.field))
                throw DimensionError("sequence maps are not composable");
        }
        if (!maps.front().is_injective()) return false;
        if (!maps.back().is_surjective()) return false;
        for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
            if (!maps[i + 1].after(maps[i]).matrix.is_zero()) return false;
            std::size_t mid = maps[i].codomain.dim;
            if (maps[i].rank() + maps[i + 1].rank() != mid) return false;
        }
        return true;
    };

    bool ex = exact(seq);
    std::vector<LinMap> dual;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        dual.push_back(dual_map(*it));
    bool dex = exact(dual);
    return {ex, dex};
}

}  // namespace bhv
