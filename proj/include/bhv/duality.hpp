#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bhv/linalg.hpp"

namespace bhv {

/// Finite-dimensional vector space with an optional labeled basis.
struct FinVect {
    FieldSpec field;
    int dim;
    std::vector<std::string> labels;  // empty, or one label per basis vector

    static FinVect make(const FieldSpec& f, int dim);
    static FinVect make(const FieldSpec& f, std::vector<std::string> labels);
};

/// Linear map with explicit matrix, shape (dim codomain) x (dim domain).
struct LinMap {
    FinVect domain;
    FinVect codomain;
    ScalarMat matrix;

    LinMap(FinVect dom, FinVect cod, ScalarMat m);
    static LinMap identity(const FinVect& v);
    static LinMap zero(const FinVect& dom, const FinVect& cod);

    LinMap after(const LinMap& f) const;  // (*this) o f
    std::size_t rank() const { return matrix.rank(); }
    bool is_injective() const;
    bool is_surjective() const;
};

FinVect dual_finite(const FinVect& v);
/// Transpose on the dual spaces; contravariant.
LinMap dual_map(const LinMap& f);

/// Finite stage of an inverse system: transitions W_{i+1} ->> W_i, each
/// surjective (checked at construction).
struct Tower {
    std::vector<FinVect> levels;
    std::vector<LinMap> transitions;  // transitions[i] : W_{i+1} -> W_i

    static Tower make(std::vector<FinVect> levels,
                      std::vector<LinMap> transitions);
};

/// Increasing exhaustive filtration V_0 into V_1 into ..., inclusions
/// injective (checked at construction).
struct FilteredSpace {
    std::vector<FinVect> levels;
    std::vector<LinMap> inclusions;  // inclusions[i] : V_i -> V_{i+1}

    static FilteredSpace make(std::vector<FinVect> levels,
                              std::vector<LinMap> inclusions);
};

Tower dualize_filtered(const FilteredSpace& f);
FilteredSpace dualize_tower(const Tower& t);

/// Reflexivity at desk scale: the double dual of a filtration is the
/// filtration itself, with identity evaluation maps in the dual-basis
/// convention.
bool double_dual_check(const FilteredSpace& f);
/// Mirror round trip for towers.
bool tower_round_trip_check(const Tower& t);

/// Level subspaces U_i of a tower, each given by a basis matrix whose
/// columns are independent vectors of W_i.
struct TowerSubspace {
    Tower parent;
    std::vector<ScalarMat> basis;  // basis[i] : dim W_i x dim U_i
};

/// Restricts the tower transitions to the subspaces. Scans transitions
/// from the deepest level down and reports the first one whose restriction
/// fails to map U_{i+1} onto U_i.
Tower closed_subtower(const TowerSubspace& s);

/// (exact, dual_exact) for a finite sequence of composable maps, read as
/// padded with zero spaces at both ends.
std::pair<bool, bool> dual_exactness_check(const std::vector<LinMap>& seq);

}  // namespace bhv
