#include "bhv/freealg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "bhv/linalg.hpp"

namespace bhv {

FreePoly FreePoly::zero(const FieldSpec& f, int nvars) {
    return FreePoly(f, nvars);
}

FreePoly FreePoly::one(const FieldSpec& f, int nvars) {
    FreePoly p(f, nvars);
    p.terms_.emplace(Word{}, Scalar::one(f));
    return p;
}

FreePoly FreePoly::variable(const FieldSpec& f, int nvars, int j) {
    if (j < 0 || j >= nvars) throw Error("letter index out of range");
    FreePoly p(f, nvars);
    p.terms_.emplace(Word{static_cast<std::uint8_t>(j)}, Scalar::one(f));
    return p;
}

FreePoly FreePoly::term(const FieldSpec& f, int nvars, Word w,
                        const Scalar& c) {
    FreePoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
}

std::optional<int> FreePoly::top_degree() const {
    if (terms_.empty()) return std::nullopt;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t len = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != len) return false;
    return true;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FreePoly::check_compatible(const FreePoly& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw RingMismatchError("free polynomials from different algebras");
}

FreePoly FreePoly::operator-() const {
    FreePoly r(field_, nvars_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    check_compatible(o);
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    check_compatible(o);
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    check_compatible(o);
    FreePoly r(field_, nvars_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
    FreePoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

FreePoly FreePoly::pow(std::uint32_t e) const {
    FreePoly r = one(field_, nvars_);
    FreePoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

bool FreePoly::operator==(const FreePoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string FreePoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const bool modp = field_.is_prime_field();
    bool first = true;
    // length-lexicographic, largest words first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        Scalar c = it->second;
        bool neg = false;
        if (!modp && sgn(c.rational()) < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (w.empty()) {
            os << c.to_string();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            os << c.to_string();
            printed = true;
        }
        for (auto l : w) {
            if (printed) os << "*";
            os << names.at(l);
            printed = true;
        }
    }
    return os.str();
}

FreePoly free_mul(const FreePoly& f, const FreePoly& g) { return f * g; }

Poly abelianize(const FreePoly& f, const RingPtr& ring) {
    if (ring->nvars != f.nvars() || !(ring->field == f.field()))
        throw RingMismatchError("abelianization target ring mismatch");
    Poly out(ring);
    for (const auto& [w, c] : f.terms()) {
        Monomial m = mono_one(ring->nvars);
        for (auto l : w) m[l] += 1;
        out.add_term(m, c);
    }
    return out;
}

namespace {

std::size_t pow_sz(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Word word_at(int n, int len, std::size_t index) {
    Word w(len);
    for (int i = len; i-- > 0;) {
        w[i] = static_cast<std::uint8_t>(index % n);
        index /= n;
    }
    return w;
}

std::size_t word_index(int n, const Word& w) {
    std::size_t idx = 0;
    for (auto l : w) idx = idx * n + l;
    return idx;
}

/// Monomial enumeration for degree m in n variables, lexicographic.
void enumerate_monomials(int n, int m, std::vector<Monomial>& out) {
    Monomial cur(n, 0);
    // recursive distribution of m among n slots
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    if (n == 0) {
        if (m == 0) out.push_back(cur);
        return;
    }
    rec(0, m);
}

}  // namespace

GradedKernel truncated_abelianization_kernel(const FieldSpec& f, int n,
                                             int d) {
    if (d < 0) throw DimensionError("negative degree bound");
    if (n < 1) throw DimensionError("need at least one letter");
    GradedKernel out;
    for (int m = 0; m <= d; ++m) {
        std::size_t nwords = pow_sz(n, m);
        std::vector<Monomial> monos;
        enumerate_monomials(n, m, monos);
        std::map<Monomial, std::size_t> mono_index;
        for (std::size_t i = 0; i < monos.size(); ++i)
            mono_index.emplace(monos[i], i);

        ScalarMat incidence(f, monos.size(), nwords);
        for (std::size_t wi = 0; wi < nwords; ++wi) {
            Word w = word_at(n, m, wi);
            Monomial mono = mono_one(n);
            for (auto l : w) mono[l] += 1;
            incidence.at(mono_index.at(mono), wi) += Scalar::one(f);
        }
        ScalarMat null = incidence.nullspace();
        out.dims.push_back(static_cast<int>(null.cols()));
        std::vector<FreePoly> basis;
        for (std::size_t j = 0; j < null.cols(); ++j) {
            FreePoly p(f, n);
            for (std::size_t wi = 0; wi < nwords; ++wi)
                p.add_term(word_at(n, m, wi), null.at(wi, j));
            basis.push_back(std::move(p));
        }
        out.bases.push_back(std::move(basis));
    }
    return out;
}

GradedSpan left_span_dim(const std::vector<FreePoly>& gens, int d) {
    if (d < 0) throw DimensionError("negative degree bound");
    int n = 0;
    FieldSpec f = FieldSpec::rationals();
    for (const auto& g : gens) {
        if (!g.is_zero()) {
            n = g.nvars();
            f = g.field();
            break;
        }
    }
    GradedSpan out;
    out.dims.assign(d + 1, 0);
    out.product_counts.assign(d + 1, 0);
    if (n == 0) return out;  // no usable generators

    // coordinates of the space of degree <= m: words grouped by length
    std::vector<std::size_t> offset(d + 2, 0);
    for (int k = 0; k <= d; ++k) offset[k + 1] = offset[k] + pow_sz(n, k);
    auto coord = [&](const Word& w) {
        return offset[w.size()] + word_index(n, w);
    };

    for (int m = 0; m <= d; ++m) {
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            int k = *g.top_degree();
            if (k > m) continue;
            int rest = m - k;
            for (int lw = 0; lw <= rest; ++lw) {
                int ls = rest - lw;
                for (std::size_t wi = 0; wi < pow_sz(n, lw); ++wi) {
                    Word w = word_at(n, lw, wi);
                    for (std::size_t si = 0; si < pow_sz(n, ls); ++si) {
                        Word s = word_at(n, ls, si);
                        FreePoly prod =
                            FreePoly::term(f, n, w, Scalar::one(f)) * g *
                            FreePoly::term(f, n, s, Scalar::one(f));
                        std::vector<std::pair<std::size_t, Scalar>> row;
                        for (const auto& [word, c] : prod.terms())
                            row.emplace_back(coord(word), c);
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
        out.product_counts[m] = static_cast<int>(rows.size());
        ScalarMat mat(f, rows.size(), offset[m + 1]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [idx, c] : rows[r]) mat.at(r, idx) += c;
        out.dims[m] = static_cast<int>(mat.rank());
    }
    return out;
}

bool NCFreeVector::is_zero() const {
    for (const auto& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

std::optional<int> NCFreeVector::top_degree() const {
    std::optional<int> d;
    for (const auto& p : comps) {
        auto pd = p.top_degree();
        if (pd && (!d || *pd > *d)) d = pd;
    }
    return d;
}

bool NCFreeVector::is_homogeneous() const {
    std::optional<int> deg;
    for (const auto& p : comps) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return false;
        int pd = *p.top_degree();
        if (deg && *deg != pd) return false;
        deg = pd;
    }
    return true;
}

NCGradedKernel nc_truncated_kernel(const std::vector<NCFreeVector>& relations,
                                   int r0, int d) {
    if (d < 0) throw DimensionError("negative degree bound");
    if (r0 < 0) throw DimensionError("negative rank");
    NCGradedKernel out;
    out.dims.assign(d + 1, 0);
    out.bases.assign(d + 1, {});

    int n = 0;
    FieldSpec f = FieldSpec::rationals();
    bool any = false;
    bool homogeneous = true;
    for (const auto& rel : relations) {
        if (rel.rank() != r0)
            throw DimensionError("relation rank != r0");
        if (rel.is_zero()) continue;
        for (const auto& p : rel.comps) {
            if (!p.is_zero()) {
                n = p.nvars();
                f = p.field();
            }
        }
        any = true;
        homogeneous = homogeneous && rel.is_homogeneous();
    }
    if (!any || r0 == 0) return out;

    std::vector<std::size_t> offset(d + 2, 0);
    for (int k = 0; k <= d; ++k) offset[k + 1] = offset[k] + pow_sz(n, k);
    const std::size_t words_total = offset[d + 1];
    // coordinate: component-major over the word blocks
    auto coord = [&](int compidx, const Word& w) {
        return static_cast<std::size_t>(compidx) * words_total +
               offset[w.size()] + word_index(n, w);
    };
    auto coord_degree = [&](std::size_t c) {
        std::size_t wpart = c % words_total;
        int k = 0;
        while (offset[k + 1] <= wpart) ++k;
        return k;
    };

    if (homogeneous) {
        // per-degree slices directly: products w * rel with matching degree
        for (int m = 0; m <= d; ++m) {
            std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
            std::size_t wdim = pow_sz(n, m);
            for (const auto& rel : relations) {
                if (rel.is_zero()) continue;
                int k = *rel.top_degree();
                if (k > m) continue;
                int lw = m - k;
                for (std::size_t wi = 0; wi < pow_sz(n, lw); ++wi) {
                    Word w = word_at(n, lw, wi);
                    FreePoly wp = FreePoly::term(f, n, w, Scalar::one(f));
                    std::vector<std::pair<std::size_t, Scalar>> row;
                    for (int ci = 0; ci < r0; ++ci) {
                        FreePoly prod = wp * rel.comps[ci];
                        for (const auto& [word, c] : prod.terms())
                            row.emplace_back(
                                static_cast<std::size_t>(ci) * wdim +
                                    word_index(n, word),
                                c);
                    }
                    rows.push_back(std::move(row));
                }
            }
            ScalarMat mat(f, rows.size(),
                          static_cast<std::size_t>(r0) * wdim);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (const auto& [idx, c] : rows[r]) mat.at(r, idx) += c;
            auto pivots = mat.rref();
            out.dims[m] = static_cast<int>(pivots.size());
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                NCFreeVector v;
                v.comps.assign(r0, FreePoly::zero(f, n));
                for (std::size_t cidx = 0; cidx < mat.cols(); ++cidx) {
                    if (mat.at(r, cidx).is_zero()) continue;
                    int ci = static_cast<int>(cidx / wdim);
                    Word w = word_at(n, m, cidx % wdim);
                    v.comps[ci].add_term(w, mat.at(r, cidx));
                }
                out.bases[m].push_back(std::move(v));
            }
        }
        return out;
    }

    // inhomogeneous relations: bounded products, then slice dims from
    // dim(S `intersect` deg<=m) = rank(M) - rank(M restricted to coords of
    // degree > m)
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (const auto& rel : relations) {
        if (rel.is_zero()) continue;
        int k = *rel.top_degree();
        for (int lw = 0; lw + k <= d; ++lw) {
            for (std::size_t wi = 0; wi < pow_sz(n, lw); ++wi) {
                Word w = word_at(n, lw, wi);
                FreePoly wp = FreePoly::term(f, n, w, Scalar::one(f));
                std::vector<std::pair<std::size_t, Scalar>> row;
                for (int ci = 0; ci < r0; ++ci) {
                    FreePoly prod = wp * rel.comps[ci];
                    for (const auto& [word, c] : prod.terms())
                        row.emplace_back(coord(ci, word), c);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    const std::size_t total = static_cast<std::size_t>(r0) * words_total;
    ScalarMat mat(f, rows.size(), total);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [idx, c] : rows[r]) mat.at(r, idx) += c;
    std::size_t full_rank = mat.rank();

    int prev_cum = 0;
    for (int m = 0; m <= d; ++m) {
        std::vector<std::size_t> high;
        for (std::size_t c = 0; c < total; ++c)
            if (coord_degree(c) > m) high.push_back(c);
        std::size_t proj_rank = mat.columns_subset(high).rank();
        int cum = static_cast<int>(full_rank - proj_rank);
        out.dims[m] = cum - prev_cum;
        prev_cum = cum;
    }
    return out;
}

std::vector<int> SSetTrunc::validate_depths() const {
    if (nstates < 0) throw DimensionError("negative state count");
    if (static_cast<int>(trans.size()) != nletters)
        throw DimensionError("one transition table per letter required");
    for (const auto& t : trans)
        if (static_cast<int>(t.size()) != nstates)
            throw DimensionError("transition table length != state count");
    for (const auto& t : trans)
        for (int v : t)
            if (v < -1 || v >= nstates)
                throw Error("transition target out of range");
    if (generators.empty() && nstates > 0)
        throw Error("S-set needs at least one seed state");
    std::vector<int> depth(nstates, -1);
    std::deque<int> queue;
    for (int g : generators) {
        if (g < 0 || g >= nstates) throw Error("seed state out of range");
        if (depth[g] < 0) {
            depth[g] = 0;
            queue.push_back(g);
        }
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int j = 0; j < nletters; ++j) {
            int t = trans[j][s];
            if (t >= 0 && depth[t] < 0) {
                depth[t] = depth[s] + 1;
                queue.push_back(t);
            }
        }
    }
    for (int s = 0; s < nstates; ++s)
        if (depth[s] < 0)
            throw Error("state " + std::to_string(s) +
                        " unreachable from the seed states");
    return depth;
}

std::optional<int> SSetTrunc::apply_word(const Word& w, int state) const {
    // left action: the last letter acts first
    int cur = state;
    for (std::size_t i = w.size(); i-- > 0;) {
        int t = trans[w[i]][cur];
        if (t < 0) return std::nullopt;
        cur = t;
    }
    return cur;
}

NCFreeVector FreePolyMatrix::column(int j) const {
    NCFreeVector v;
    v.comps.reserve(rows);
    for (int i = 0; i < rows; ++i) v.comps.push_back(at(i, j));
    return v;
}

NCMembershipReport nc_check_membership(const NCTrajectory& w,
                                       const FreePolyMatrix& g) {
    if (g.rows != w.r0)
        throw DimensionError("matrix rows != trajectory dimension");
    if (static_cast<int>(w.values.size()) != w.sset.nstates)
        throw DimensionError("one value vector per state required");
    w.sset.validate_depths();

    NCMembershipReport report{true, {}, 0};
    for (int j = 0; j < g.cols; ++j) {
        NCFreeVector col = g.column(j);
        for (int s = 0; s < w.sset.nstates; ++s) {
            bool evaluable = true;
            Scalar acc;
            bool acc_set = false;
            for (int i = 0; i < w.r0 && evaluable; ++i) {
                for (const auto& [word, c] : col.comps[i].terms()) {
                    auto target = w.sset.apply_word(word, s);
                    if (!target) {
                        evaluable = false;
                        break;
                    }
                    Scalar v = c * w.values[*target][i];
                    if (!acc_set) {
                        acc = v;
                        acc_set = true;
                    } else {
                        acc += v;
                    }
                }
            }
            if (!evaluable) continue;
            ++report.checks;
            if (acc_set && !acc.is_zero()) {
                report.pass = false;
                report.violations.push_back(NCViolation{j, s});
            }
        }
    }
    if (g.cols > 0 && report.checks == 0)
        throw VacuousWindowError(
            "vacuous check: no constraint is evaluable at any state");
    return report;
}

}  // namespace bhv
