#include "bhv/linalg.hpp"

#include <algorithm>

namespace bhv {

FpMat::FpMat(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p),
      rows_(rows),
      cols_(cols),
      a_(rows * cols, 0),
      kernels_(fpk::select_kernels(p)) {}

std::vector<std::size_t> FpMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pr = r;
        while (pr < rows_ && at(pr, c) == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a_[pr * cols_ + j], a_[r * cols_ + j]);
        std::uint64_t inv = invmod_u64(at(r, c), p_);
        kernels_.scal(row(r), inv, cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            std::uint64_t v = at(i, c);
            if (v == 0) continue;
            // subtract v * row(r): axpy with (p - v)
            kernels_.axpy(row(i), row(r), p_ - v, cols_, p_);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t FpMat::rank() const {
    FpMat tmp = *this;
    return tmp.rref().size();
}

std::vector<std::vector<std::uint64_t>> FpMat::nullspace() const {
    FpMat m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(cols_, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            std::uint64_t e = m.at(k, f);
            v[pivots[k]] = e == 0 ? 0 : p_ - e;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMat::ScalarMat(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    a_.assign(rows * cols, Scalar::zero(f));
}

ScalarMat ScalarMat::identity(const FieldSpec& f, std::size_t n) {
    ScalarMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

void ScalarMat::check_same_field(const ScalarMat& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("matrices over different fields");
}

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
    check_same_field(o);
    if (cols_ != o.rows_)
        throw DimensionError("matrix product: inner dimensions disagree");
    ScalarMat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

ScalarMat ScalarMat::operator-(const ScalarMat& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix difference: shape mismatch");
    ScalarMat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ScalarMat ScalarMat::transposed() const {
    ScalarMat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ScalarMat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool ScalarMat::operator==(const ScalarMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

ScalarMat ScalarMat::augmented(const ScalarMat& o) const {
    check_same_field(o);
    if (rows_ != o.rows_) throw DimensionError("augment: row mismatch");
    ScalarMat r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

ScalarMat ScalarMat::columns_subset(
    const std::vector<std::size_t>& cols) const {
    ScalarMat r(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r.at(i, j) = at(i, cols[j]);
    return r;
}

std::vector<std::size_t> ScalarMat::rref_generic() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pr = r;
        while (pr < rows_ && at(pr, c).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a_[pr * cols_ + j], a_[r * cols_ + j]);
        Scalar inv = at(r, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (std::size_t j = 0; j < cols_; ++j)
                at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> ScalarMat::rref() {
    if (field_.is_prime_field()) {
        FpMat m = to_fp(*this);
        auto pivots = m.rref();
        *this = from_fp(field_, m);
        return pivots;
    }
    return rref_generic();
}

std::size_t ScalarMat::rank() const {
    if (field_.is_prime_field()) return to_fp(*this).rank();
    ScalarMat tmp = *this;
    return tmp.rref_generic().size();
}

ScalarMat ScalarMat::nullspace() const {
    if (field_.is_prime_field()) {
        auto basis = to_fp(*this).nullspace();
        ScalarMat r(field_, cols_, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < cols_; ++i)
                r.at(i, j) = Scalar::from_residue(field_, basis[j][i]);
        return r;
    }
    ScalarMat m = *this;
    auto pivots = m.rref_generic();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t nfree = cols_ - pivots.size();
    ScalarMat r(field_, cols_, nfree);
    std::size_t jf = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        r.at(f, jf) = Scalar::one(field_);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            r.at(pivots[k], jf) = -m.at(k, f);
        ++jf;
    }
    return r;
}

std::optional<std::vector<Scalar>> ScalarMat::solve(
    const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw DimensionError("solve: rhs length mismatch");
    ScalarMat aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(k, cols_);
    return x;
}

std::size_t rank_generic_reference(const ScalarMat& m) {
    // elimination over Scalar values only, bypassing the FpMat fast path
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Scalar> r;
        r.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t pr = rank;
        while (pr < rows.size() && rows[pr][c].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[pr], rows[rank]);
        Scalar inv = rows[rank][c].inverse();
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = 0; j < m.cols(); ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

FpMat to_fp(const ScalarMat& m) {
    if (!m.field().is_prime_field())
        throw FieldMismatchError("to_fp needs a prime field");
    FpMat r(m.field().modulus(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.set(i, j, m.at(i, j).residue());
    return r;
}

ScalarMat from_fp(const FieldSpec& f, const FpMat& m) {
    ScalarMat r(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = Scalar::from_residue(f, m.at(i, j));
    return r;
}

}  // namespace bhv
