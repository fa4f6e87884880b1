#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhv/behavior.hpp"
#include "bhv/freealg.hpp"

namespace bhv {

enum class BodyKind { Matrix, Trajectory, SSet };

/// Parsed problem file: a field/variable header followed by one body
/// block (matrix, trajectory, or S-set).
struct ProblemFile {
    FieldSpec field = FieldSpec::rationals();
    bool noncommutative = false;
    std::vector<std::string> vars;
    RingPtr ring;  // commutative ring context (set when !noncommutative)
    BodyKind kind = BodyKind::Matrix;

    std::optional<PolyMatrix> matrix;
    std::optional<FreePolyMatrix> nc_matrix;
    std::optional<Trajectory> trajectory;
    std::optional<SSetTrunc> sset;
    std::optional<std::vector<std::vector<Scalar>>> sset_values;

    KernelRep as_kernel_rep() const;
    NCTrajectory as_nc_trajectory() const;
};

/// Parses the textual problem format; every failure is a ParseError with a
/// 1-based line/column position.
ProblemFile parse_problem(const std::string& text);

/// Canonical text rendering; parse . render is the identity on parsed
/// files after one normalization pass.
std::string render_problem(const ProblemFile& p);

std::string render_trajectory_file(const FieldSpec& field,
                                   const std::vector<std::string>& vars,
                                   const Trajectory& t);

}  // namespace bhv
