#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhv/groebner.hpp"
#include "bhv/linalg.hpp"
#include "bhv/smith.hpp"

namespace bhv {

/// Behavior presented as ker(.G): row trajectories w in (k^(N^n))^{r0}
/// with w * G = 0.
struct KernelRep {
    RingPtr ring;
    int r0 = 0, r1 = 0;
    PolyMatrix G;

    static KernelRep make(PolyMatrix g);
};

/// Finite box [0,T1] x ... x [0,Tn].
struct Window {
    std::vector<int> bounds;

    int n() const { return static_cast<int>(bounds.size()); }
    std::size_t npoints() const;
    bool operator==(const Window&) const = default;
};

/// Vector-valued function on the lattice points of a window, stored in
/// lexicographic point order.
class Trajectory {
public:
    Trajectory(const FieldSpec& f, Window w, int r0);

    const FieldSpec& field() const { return field_; }
    const Window& window() const { return window_; }
    int r0() const { return r0_; }

    const Scalar& at(const std::vector<int>& point, int i) const;
    Scalar& at(const std::vector<int>& point, int i);
    const Scalar& at_index(std::size_t point_index, int i) const;
    Scalar& at_index(std::size_t point_index, int i);

    std::size_t point_index(const std::vector<int>& point) const;
    std::vector<int> point_at(std::size_t index) const;

    bool is_zero() const;
    bool operator==(const Trajectory& o) const;

    /// Text form shared with the CLI.
    std::string to_string() const;

private:
    FieldSpec field_;
    Window window_;
    int r0_;
    std::vector<Scalar> values_;
};

/// sigma_j: value at t becomes the value at t + e_j; direction j is
/// 1-based. The window shrinks by one in direction j.
Trajectory shift(const Trajectory& w, int j);

/// Pairing of a trajectory with one relation column g (length r0):
/// scalar trajectory whose value at t is sum_i sum_a c_{i,a} w_i(t+a).
Trajectory apply_column(const Trajectory& w, const FreeVector& g);

struct Violation {
    int column;
    std::vector<int> point;
};

struct MembershipReport {
    bool pass;
    std::vector<Violation> violations;
    int columns_checked;
};

/// Truncated test of w * G = 0. Throws VacuousWindowError when no column
/// fits the window.
MembershipReport check_membership(const Trajectory& w, const KernelRep& rep);

struct SolutionSpace {
    int dim;
    std::vector<Trajectory> basis;
};

/// Exact nullspace of all windowed shift constraints.
SolutionSpace truncated_solution_space(const KernelRep& rep,
                                       const Window& win);

ModulePresentation dual_presentation(const KernelRep& rep);

/// [G1, ..., Gk] with G1 = rep.G, consecutive products zero, and each
/// matrix's columns generating the syzygies of the previous one. Empty
/// when G has no nonzero column.
std::vector<PolyMatrix> kernel_rep_complex(const KernelRep& rep);

/// B(outer) contains B(inner), decided through the dual relation modules.
bool behavior_contains(const KernelRep& outer, const KernelRep& inner);

struct Decomposition1D {
    int free_rank;                  // r0 - generic rank
    std::vector<Poly> factors;      // nonunit invariant factors
    int torsion_dim;                // sum of factor degrees
    int rank_count;                 // invariant factor count incl. units
};

Decomposition1D decompose_1d(const KernelRep& rep);

/// Solves H0 * F = G * H1 for H1 by columnwise division against the
/// relation module of G; nullopt when H0 induces no homomorphism.
std::optional<PolyMatrix> lift_hom(const KernelRep& repM,
                                   const KernelRep& repN,
                                   const PolyMatrix& h0);

/// One-variable codec between trajectories and inverse-power tails
/// c0*z^-1 + c1*z^-2 + ...
std::string laurent_encode(const Trajectory& w);
Trajectory laurent_decode(const FieldSpec& f, const std::string& text,
                          int window_bound);

/// Dimension of span{w, sigma w, sigma^2 w, ...} projected to the first
/// T+1 coordinates; the prefix must hold at least 2(T+1) points.
int orbit_truncation_rank(const Trajectory& prefix, int T);

}  // namespace bhv
