#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhv/fp_kernels.hpp"
#include "bhv/scalar.hpp"

namespace bhv {

/// Dense matrix over F_p with rows in contiguous uint64 storage, so the
/// elimination inner loops run through the runtime-selected row kernels.
class FpMat {
public:
    FpMat(std::uint64_t p, std::size_t rows, std::size_t cols);

    std::uint64_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, std::uint64_t v) {
        a_[i * cols_ + j] = v % p_;
    }

    std::uint64_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint64_t* row(std::size_t i) const {
        return a_.data() + i * cols_;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    /// Nullspace basis, one column per free variable, canonical RREF form.
    std::vector<std::vector<std::uint64_t>> nullspace() const;

    const char* kernel_name() const { return kernels_.name; }

private:
    std::uint64_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
    fpk::Kernels kernels_;
};

/// Dense matrix over an arbitrary exact field. Row reduction dispatches to
/// the FpMat fast path over prime fields and runs the generic exact
/// elimination over the rationals.
class ScalarMat {
public:
    ScalarMat() : field_(FieldSpec::rationals()) {}
    ScalarMat(const FieldSpec& f, std::size_t rows, std::size_t cols);

    static ScalarMat identity(const FieldSpec& f, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    ScalarMat operator*(const ScalarMat& o) const;
    ScalarMat operator-(const ScalarMat& o) const;
    ScalarMat transposed() const;
    bool is_zero() const;
    bool operator==(const ScalarMat& o) const;

    /// Horizontal concatenation [this | o].
    ScalarMat augmented(const ScalarMat& o) const;
    ScalarMat columns_subset(const std::vector<std::size_t>& cols) const;

    std::size_t rank() const;
    /// Pivot columns of the reduced row echelon form (in-place).
    std::vector<std::size_t> rref();
    /// Canonical nullspace basis as matrix columns.
    ScalarMat nullspace() const;
    /// One solution x of (*this) x = b, if consistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    void check_same_field(const ScalarMat& o) const;

private:
    std::vector<std::size_t> rref_generic();

    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Internal: forces the generic Scalar elimination even over prime fields.
/// Exposed so equivalence tests can pin the fast path against the reference.
std::size_t rank_generic_reference(const ScalarMat& m);

FpMat to_fp(const ScalarMat& m);
ScalarMat from_fp(const FieldSpec& f, const FpMat& m);

}  // namespace bhv
