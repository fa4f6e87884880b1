#include "bhv/poly_matrix.hpp"

#include <sstream>

namespace bhv {

FreeVector::FreeVector(RingPtr ring, int rank) : ring_(std::move(ring)) {
    comps_.assign(rank, Poly::zero(ring_));
}

FreeVector::FreeVector(std::vector<Poly> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw DimensionError("free vector needs rank >= 1");
    ring_ = comps_.front().ring();
    for (const auto& p : comps_) comps_.front().check_same_ring(p);
}

bool FreeVector::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

void FreeVector::check_compatible(const FreeVector& o) const {
    if (rank() != o.rank())
        throw DimensionError("free vectors of different rank");
    if (!comps_.empty() && !o.comps_.empty())
        comps_.front().check_same_ring(o.comps_.front());
}

FreeVector FreeVector::operator+(const FreeVector& o) const {
    check_compatible(o);
    FreeVector r = *this;
    for (int i = 0; i < rank(); ++i) r.comps_[i] += o.comps_[i];
    return r;
}

FreeVector FreeVector::operator-(const FreeVector& o) const {
    check_compatible(o);
    FreeVector r = *this;
    for (int i = 0; i < rank(); ++i) r.comps_[i] -= o.comps_[i];
    return r;
}

FreeVector FreeVector::operator-() const {
    FreeVector r = *this;
    for (auto& p : r.comps_) p = -p;
    return r;
}

FreeVector FreeVector::scaled(const Scalar& c) const {
    FreeVector r = *this;
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
}

FreeVector FreeVector::times_term(const Monomial& m, const Scalar& c) const {
    FreeVector r = *this;
    for (auto& p : r.comps_) p = p.times_term(m, c);
    return r;
}

FreeVector FreeVector::times_poly(const Poly& p) const {
    FreeVector r = *this;
    for (auto& q : r.comps_) q = q * p;
    return r;
}

bool FreeVector::operator==(const FreeVector& o) const {
    return comps_ == o.comps_;
}

std::pair<ModTerm, Scalar> FreeVector::leading_term(
    const TermOrder& ord) const {
    bool found = false;
    ModTerm best{};
    Scalar coeff;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        auto [m, c] = comps_[i].leading_term(ord);
        ModTerm t{i, m};
        if (!found || ord.cmp(t, best) > 0) {
            best = std::move(t);
            coeff = c;
            found = true;
        }
    }
    if (!found) throw ZeroPolynomialError("leading term of zero vector");
    return {best, coeff};
}

std::string FreeVector::to_string(const TermOrder& ord) const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ", ";
        os << comps_[i].to_string(ord);
    }
    os << ")";
    return os.str();
}

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix shape");
    a_.assign(static_cast<std::size_t>(rows) * cols, Poly::zero(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
    PolyMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Poly::constant(ring, Scalar::one(ring->field));
    return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, int rows,
                                    const std::vector<FreeVector>& cols) {
    PolyMatrix m(ring, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (cols[j].rank() != rows)
            throw DimensionError("column rank != matrix rows");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

FreeVector PolyMatrix::column(int j) const {
    FreeVector v(ring_, rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<FreeVector> PolyMatrix::columns() const {
    std::vector<FreeVector> cs;
    cs.reserve(cols_);
    for (int j = 0; j < cols_; ++j) cs.push_back(column(j));
    return cs;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("matrix product: inner dimensions disagree");
    if (ring_ && o.ring_ && !ring_->same_as(*o.ring_))
        throw RingMismatchError("matrices over different rings");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix difference: shape mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string PolyMatrix::to_string(const TermOrder& ord) const {
    std::ostringstream os;
    os << "matrix " << rows_ << " " << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << "  ";
            os << at(i, j).to_string(ord);
        }
        os << "\n";
    }
    return os.str();
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

}  // namespace bhv
