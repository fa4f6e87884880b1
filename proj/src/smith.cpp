#include "bhv/smith.hpp"

#include <algorithm>

namespace bhv {

namespace {

int deg1(const Poly& p) {
    auto d = p.total_degree();
    return d ? *d : -1;
}

}  // namespace

std::pair<Poly, Poly> poly_divrem_1d(const Poly& a, const Poly& b) {
    if (!a.ring() || a.ring()->nvars != 1)
        throw NotUnivariateError("univariate division needs one variable");
    if (b.is_zero()) throw ZeroDivisionError("division by zero polynomial");
    TermOrder ord;
    Poly q(a.ring());
    Poly r = a;
    auto [bm, bc] = b.leading_term(ord);
    int db = deg1(b);
    while (!r.is_zero() && deg1(r) >= db) {
        auto [rm, rc] = r.leading_term(ord);
        Monomial qm = mono_div(rm, bm);
        Scalar qc = rc / bc;
        q.add_term(qm, qc);
        r -= b.times_term(qm, qc);
    }
    return {q, r};
}

SmithForm smith_normal_form(const PolyMatrix& G) {
    if (!G.ring() || G.ring()->nvars != 1)
        throw NotUnivariateError("Smith normal form needs k[z]");
    const RingPtr& ring = G.ring();
    const int r = G.rows(), c = G.cols();

    SmithForm out;
    out.U = PolyMatrix::identity(ring, r);
    out.V = PolyMatrix::identity(ring, c);
    out.D = G;
    PolyMatrix& U = out.U;
    PolyMatrix& V = out.V;
    PolyMatrix& D = out.D;

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c; ++k) std::swap(D.at(i, k), D.at(j, k));
        for (int k = 0; k < r; ++k) std::swap(U.at(i, k), U.at(j, k));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r; ++k) std::swap(D.at(k, i), D.at(k, j));
        for (int k = 0; k < c; ++k) std::swap(V.at(k, i), V.at(k, j));
    };
    // row i += q * row j
    auto row_addmul = [&](int i, int j, const Poly& q) {
        for (int k = 0; k < c; ++k) D.at(i, k) += q * D.at(j, k);
        for (int k = 0; k < r; ++k) U.at(i, k) += q * U.at(j, k);
    };
    // col i += q * col j
    auto col_addmul = [&](int i, int j, const Poly& q) {
        for (int k = 0; k < r; ++k) D.at(k, i) += q * D.at(k, j);
        for (int k = 0; k < c; ++k) V.at(k, i) += q * V.at(k, j);
    };
    auto row_scale = [&](int i, const Scalar& s) {
        for (int k = 0; k < c; ++k) D.at(i, k) = D.at(i, k).scaled(s);
        for (int k = 0; k < r; ++k) U.at(i, k) = U.at(i, k).scaled(s);
    };

    const int steps = std::min(r, c);
    int t = 0;
    for (; t < steps; ++t) {
        // minimal-degree nonzero entry of the trailing submatrix,
        // ties by smallest (row, col)
        int pi = -1, pj = -1, pd = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (D.at(i, j).is_zero()) continue;
                int d = deg1(D.at(i, j));
                if (pi < 0 || d < pd) {
                    pi = i;
                    pj = j;
                    pd = d;
                }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (D.at(i, t).is_zero()) continue;
                auto [q, rem] = poly_divrem_1d(D.at(i, t), D.at(t, t));
                row_addmul(i, t, -q);
                if (!rem.is_zero()) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (D.at(t, j).is_zero()) continue;
                auto [q, rem] = poly_divrem_1d(D.at(t, j), D.at(t, t));
                col_addmul(j, t, -q);
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) {
                // a smaller-degree entry appeared; re-pivot on it
                int qi = -1, qj = -1, qd = -1;
                for (int i = t; i < r; ++i)
                    for (int j = t; j < c; ++j) {
                        if (D.at(i, j).is_zero()) continue;
                        int d = deg1(D.at(i, j));
                        if (qi < 0 || d < qd) {
                            qi = i;
                            qj = j;
                            qd = d;
                        }
                    }
                row_swap(t, qi);
                col_swap(t, qj);
                continue;
            }
            // pivot row and column are clear; enforce divisibility on the rest
            int bi = -1, bj = -1;
            for (int i = t + 1; i < r && bi < 0; ++i)
                for (int j = t + 1; j < c; ++j) {
                    if (D.at(i, j).is_zero()) continue;
                    auto [q, rem] = poly_divrem_1d(D.at(i, j), D.at(t, t));
                    if (!rem.is_zero()) {
                        bi = i;
                        bj = j;
                        break;
                    }
                }
            if (bi < 0) break;
            row_addmul(t, bi, Poly::constant(ring, Scalar::one(ring->field)));
        }

        // monic pivot; the unit is absorbed into U
        auto [m, lc] = D.at(t, t).leading_term(TermOrder());
        if (!lc.is_one()) row_scale(t, lc.inverse());
        out.invariant_factors.push_back(D.at(t, t));
    }
    return out;
}

int generic_rank(const PolyMatrix& G) {
    const int r = G.rows(), c = G.cols();
    if (r == 0 || c == 0) return 0;
    PolyMatrix M = G;
    TermOrder ord;
    Poly prev = Poly::constant(G.ring(), Scalar::one(G.ring()->field));
    int rank = 0;
    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < r && pi < 0; ++i)
            for (int j = t; j < c; ++j)
                if (!M.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != t)
            for (int k = 0; k < c; ++k) std::swap(M.at(t, k), M.at(pi, k));
        if (pj != t)
            for (int k = 0; k < r; ++k) std::swap(M.at(k, t), M.at(k, pj));
        for (int i = t + 1; i < r; ++i) {
            for (int j = t + 1; j < c; ++j) {
                Poly num = M.at(i, j) * M.at(t, t) - M.at(i, t) * M.at(t, j);
                M.at(i, j) = num.divide_exact(prev, ord);
            }
            M.at(i, t) = Poly::zero(G.ring());
        }
        prev = M.at(t, t);
        ++rank;
    }
    return rank;
}

Poly poly_mat_det(const PolyMatrix& G) {
    if (G.rows() != G.cols())
        throw DimensionError("determinant of a non-square matrix");
    const int n = G.rows();
    if (n == 0)
        return Poly::constant(G.ring(), Scalar::one(G.ring()->field));
    PolyMatrix M = G;
    TermOrder ord;
    Poly prev = Poly::constant(G.ring(), Scalar::one(G.ring()->field));
    bool negate = false;
    for (int t = 0; t < n; ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (!M.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) return Poly::zero(G.ring());
        if (pi != t) {
            for (int k = 0; k < n; ++k) std::swap(M.at(t, k), M.at(pi, k));
            negate = !negate;
        }
        if (pj != t) {
            for (int k = 0; k < n; ++k) std::swap(M.at(k, t), M.at(k, pj));
            negate = !negate;
        }
        for (int i = t + 1; i < n; ++i) {
            for (int j = t + 1; j < n; ++j) {
                Poly num = M.at(i, j) * M.at(t, t) - M.at(i, t) * M.at(t, j);
                M.at(i, j) = num.divide_exact(prev, ord);
            }
            M.at(i, t) = Poly::zero(G.ring());
        }
        prev = M.at(t, t);
    }
    Poly det = M.at(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

}  // namespace bhv
