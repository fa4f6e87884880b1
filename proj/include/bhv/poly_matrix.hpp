#pragma once

#include <vector>

#include "bhv/poly.hpp"

namespace bhv {

/// Element of the free module A^rank, stored as components.
class FreeVector {
public:
    FreeVector() = default;
    FreeVector(RingPtr ring, int rank);
    explicit FreeVector(std::vector<Poly> comps);

    int rank() const { return static_cast<int>(comps_.size()); }
    const RingPtr& ring() const { return ring_; }
    const Poly& operator[](int i) const { return comps_[i]; }
    Poly& operator[](int i) { return comps_[i]; }
    const std::vector<Poly>& components() const { return comps_; }

    bool is_zero() const;

    FreeVector operator+(const FreeVector& o) const;
    FreeVector operator-(const FreeVector& o) const;
    FreeVector operator-() const;
    FreeVector scaled(const Scalar& c) const;
    FreeVector times_term(const Monomial& m, const Scalar& c) const;
    FreeVector times_poly(const Poly& p) const;
    bool operator==(const FreeVector& o) const;

    /// Largest term across all components under `ord`; throws on zero.
    std::pair<ModTerm, Scalar> leading_term(const TermOrder& ord) const;

    void check_compatible(const FreeVector& o) const;
    std::string to_string(const TermOrder& ord = TermOrder()) const;

private:
    RingPtr ring_;
    std::vector<Poly> comps_;
};

/// Dense matrix of polynomials with a uniform ring context.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    const Poly& at(int i, int j) const { return a_[i * cols_ + j]; }
    Poly& at(int i, int j) { return a_[i * cols_ + j]; }

    static PolyMatrix identity(RingPtr ring, int n);
    static PolyMatrix from_columns(RingPtr ring, int rows,
                                   const std::vector<FreeVector>& cols);

    FreeVector column(int j) const;
    std::vector<FreeVector> columns() const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix transposed() const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;

    std::string to_string(const TermOrder& ord = TermOrder()) const;

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> a_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace bhv
