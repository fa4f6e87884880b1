#include "bhv/behavior.hpp"

#include <algorithm>
#include <sstream>

namespace bhv {

KernelRep KernelRep::make(PolyMatrix g) {
    KernelRep rep;
    rep.ring = g.ring();
    rep.r0 = g.rows();
    rep.r1 = g.cols();
    rep.G = std::move(g);
    if (!rep.ring) throw RingMismatchError("kernel representation needs a ring");
    return rep;
}

std::size_t Window::npoints() const {
    std::size_t n = 1;
    for (int t : bounds) {
        if (t < 0) throw DimensionError("window bound must be nonnegative");
        n *= static_cast<std::size_t>(t) + 1;
    }
    return n;
}

Trajectory::Trajectory(const FieldSpec& f, Window w, int r0)
    : field_(f), window_(std::move(w)), r0_(r0) {
    if (r0 < 0) throw DimensionError("negative vector dimension");
    values_.assign(window_.npoints() * static_cast<std::size_t>(r0),
                   Scalar::zero(f));
}

std::size_t Trajectory::point_index(const std::vector<int>& point) const {
    if (point.size() != window_.bounds.size())
        throw DimensionError("point arity mismatch");
    std::size_t idx = 0;
    for (std::size_t j = 0; j < point.size(); ++j) {
        if (point[j] < 0 || point[j] > window_.bounds[j])
            throw WindowError("point outside window");
        idx = idx * (static_cast<std::size_t>(window_.bounds[j]) + 1) +
              static_cast<std::size_t>(point[j]);
    }
    return idx;
}

std::vector<int> Trajectory::point_at(std::size_t index) const {
    std::vector<int> pt(window_.bounds.size(), 0);
    for (std::size_t j = window_.bounds.size(); j-- > 0;) {
        std::size_t b = static_cast<std::size_t>(window_.bounds[j]) + 1;
        pt[j] = static_cast<int>(index % b);
        index /= b;
    }
    return pt;
}

const Scalar& Trajectory::at(const std::vector<int>& point, int i) const {
    return values_[point_index(point) * r0_ + i];
}

Scalar& Trajectory::at(const std::vector<int>& point, int i) {
    return values_[point_index(point) * r0_ + i];
}

const Scalar& Trajectory::at_index(std::size_t point_index, int i) const {
    return values_[point_index * r0_ + i];
}

Scalar& Trajectory::at_index(std::size_t point_index, int i) {
    return values_[point_index * r0_ + i];
}

bool Trajectory::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

bool Trajectory::operator==(const Trajectory& o) const {
    return field_ == o.field_ && window_ == o.window_ && r0_ == o.r0_ &&
           values_ == o.values_;
}

std::string Trajectory::to_string() const {
    std::ostringstream os;
    os << "window";
    for (int t : window_.bounds) os << " " << t;
    os << "\n";
    std::size_t np = window_.npoints();
    for (std::size_t k = 0; k < np; ++k) {
        auto pt = point_at(k);
        os << "point";
        for (int c : pt) os << " " << c;
        os << " :";
        for (int i = 0; i < r0_; ++i) os << " " << at_index(k, i).to_string();
        os << "\n";
    }
    return os.str();
}

Trajectory shift(const Trajectory& w, int j) {
    int n = w.window().n();
    if (j < 1 || j > n) throw DimensionError("shift direction out of range");
    if (w.window().bounds[j - 1] < 1)
        throw WindowError("window exhausted in shift direction " +
                          std::to_string(j));
    Window nw = w.window();
    nw.bounds[j - 1] -= 1;
    Trajectory out(w.field(), nw, w.r0());
    std::size_t np = nw.npoints();
    for (std::size_t k = 0; k < np; ++k) {
        auto pt = out.point_at(k);
        pt[j - 1] += 1;
        for (int i = 0; i < w.r0(); ++i) out.at_index(k, i) = w.at(pt, i);
    }
    return out;
}

namespace {

/// Per-direction maximum exponent over the support of a column.
std::vector<int> column_support(const FreeVector& g, int n) {
    std::vector<int> mx(n, 0);
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < n; ++j)
            mx[j] = std::max(mx[j], static_cast<int>(g[i].max_exponent(j)));
    return mx;
}

bool column_fits(const std::vector<int>& support, const Window& win) {
    for (std::size_t j = 0; j < support.size(); ++j)
        if (win.bounds[j] < support[j]) return false;
    return true;
}

}  // namespace

Trajectory apply_column(const Trajectory& w, const FreeVector& g) {
    if (!g.ring()) throw RingMismatchError("column without ring context");
    int n = g.ring()->nvars;
    if (n != w.window().n())
        throw DimensionError("column variable count != window arity");
    if (g.rank() != w.r0())
        throw DimensionError("column rank != trajectory dimension");
    std::vector<int> support = column_support(g, n);
    Window out_win = w.window();
    for (int j = 0; j < n; ++j) {
        out_win.bounds[j] -= support[j];
        if (out_win.bounds[j] < 0)
            throw WindowError("window too small for the column support");
    }
    Trajectory out(w.field(), out_win, 1);
    std::size_t np = out_win.npoints();
    for (std::size_t k = 0; k < np; ++k) {
        auto t = out.point_at(k);
        Scalar acc = Scalar::zero(w.field());
        std::vector<int> shifted(n);
        for (int i = 0; i < g.rank(); ++i) {
            for (const auto& [mono, c] : g[i].terms()) {
                for (int j = 0; j < n; ++j)
                    shifted[j] = t[j] + static_cast<int>(mono[j]);
                acc += c * w.at(shifted, i);
            }
        }
        out.at_index(k, 0) = acc;
    }
    return out;
}

MembershipReport check_membership(const Trajectory& w, const KernelRep& rep) {
    if (rep.r0 != w.r0())
        throw DimensionError("trajectory dimension != representation r0");
    if (rep.ring->nvars != w.window().n())
        throw DimensionError("variable count != window arity");
    if (!(rep.ring->field == w.field()))
        throw FieldMismatchError("trajectory field != representation field");

    MembershipReport report{true, {}, 0};
    for (int j = 0; j < rep.r1; ++j) {
        FreeVector col = rep.G.column(j);
        std::vector<int> support = column_support(col, rep.ring->nvars);
        if (!column_fits(support, w.window())) continue;
        ++report.columns_checked;
        Trajectory residual = apply_column(w, col);
        std::size_t np = residual.window().npoints();
        for (std::size_t k = 0; k < np; ++k) {
            if (residual.at_index(k, 0).is_zero()) continue;
            report.pass = false;
            report.violations.push_back(Violation{j, residual.point_at(k)});
        }
    }
    if (rep.r1 > 0 && report.columns_checked == 0)
        throw VacuousWindowError(
            "vacuous window: no constraint fits the window");
    return report;
}

SolutionSpace truncated_solution_space(const KernelRep& rep,
                                       const Window& win) {
    const int n = rep.ring->nvars;
    if (win.n() != n) throw DimensionError("window arity != variable count");
    const FieldSpec& f = rep.ring->field;
    Trajectory probe(f, win, rep.r0);
    const std::size_t np = win.npoints();
    const std::size_t unknowns = np * static_cast<std::size_t>(rep.r0);

    // one constraint row per (fitting column, admissible base point)
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (int j = 0; j < rep.r1; ++j) {
        FreeVector col = rep.G.column(j);
        std::vector<int> support = column_support(col, n);
        if (!column_fits(support, win)) continue;
        Window shifted = win;
        for (int d = 0; d < n; ++d) shifted.bounds[d] -= support[d];
        Trajectory base(f, shifted, 1);
        std::size_t cnp = shifted.npoints();
        for (std::size_t k = 0; k < cnp; ++k) {
            auto t = base.point_at(k);
            std::vector<std::pair<std::size_t, Scalar>> row;
            std::vector<int> pt(n);
            for (int i = 0; i < rep.r0; ++i) {
                for (const auto& [mono, c] : col[i].terms()) {
                    for (int d = 0; d < n; ++d)
                        pt[d] = t[d] + static_cast<int>(mono[d]);
                    row.emplace_back(
                        probe.point_index(pt) * rep.r0 + i, c);
                }
            }
            rows.push_back(std::move(row));
        }
    }

    ScalarMat m(f, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [idx, c] : rows[r]) m.at(r, idx) += c;

    ScalarMat null = m.nullspace();
    SolutionSpace out{static_cast<int>(null.cols()), {}};
    for (std::size_t j = 0; j < null.cols(); ++j) {
        Trajectory traj(f, win, rep.r0);
        for (std::size_t k = 0; k < np; ++k)
            for (int i = 0; i < rep.r0; ++i)
                traj.at_index(k, i) = null.at(k * rep.r0 + i, j);
        out.basis.push_back(std::move(traj));
    }
    return out;
}

ModulePresentation dual_presentation(const KernelRep& rep) {
    return ModulePresentation{rep.r0, rep.G};
}

std::vector<PolyMatrix> kernel_rep_complex(const KernelRep& rep) {
    return free_resolution(dual_presentation(rep), TermOrder());
}

bool behavior_contains(const KernelRep& outer, const KernelRep& inner) {
    if (!outer.ring->same_as(*inner.ring))
        throw RingMismatchError("behaviors over different rings");
    if (outer.r0 != inner.r0)
        throw DimensionError("behaviors with different ambient rank r0");
    return submodule_contains(inner.G.columns(), outer.G.columns(),
                              TermOrder());
}

Decomposition1D decompose_1d(const KernelRep& rep) {
    if (rep.ring->nvars != 1)
        throw NotUnivariateError("1-D decomposition needs n = 1");
    SmithForm snf = smith_normal_form(rep.G);
    Decomposition1D out{};
    out.rank_count = static_cast<int>(snf.invariant_factors.size());
    out.free_rank = rep.r0 - out.rank_count;
    out.torsion_dim = 0;
    for (const auto& d : snf.invariant_factors) {
        int deg = d.total_degree().value_or(0);
        if (deg >= 1) {
            out.factors.push_back(d);
            out.torsion_dim += deg;
        }
    }
    return out;
}

std::optional<PolyMatrix> lift_hom(const KernelRep& repM,
                                   const KernelRep& repN,
                                   const PolyMatrix& h0) {
    if (!repM.ring->same_as(*repN.ring))
        throw RingMismatchError("representations over different rings");
    if (h0.rows() != repM.r0 || h0.cols() != repN.r0)
        throw DimensionError("H0 must be r0 x s0");
    const PolyMatrix& g = repM.G;
    const PolyMatrix& f = repN.G;
    PolyMatrix target = h0 * f;  // r0 x s1

    GroebnerBasis gb = buchberger(g.columns(), TermOrder());
    PolyMatrix h1(repM.ring, repM.r1, repN.r1);
    for (int j = 0; j < target.cols(); ++j) {
        DivisionCertificate cert = normal_form(target.column(j), gb);
        if (!cert.remainder.is_zero()) return std::nullopt;
        // pull back basis quotients to the original columns of G
        for (std::size_t k = 0; k < gb.size(); ++k) {
            if (cert.quotients[k].is_zero()) continue;
            for (int i = 0; i < repM.r1; ++i)
                h1.at(i, j) += cert.quotients[k] * gb.expressions()[k][i];
        }
    }
    // exact commutativity of the lifted square
    if (!(g * h1 == target))
        throw std::logic_error("lift certificate failed to verify");
    return h1;
}

std::string laurent_encode(const Trajectory& w) {
    if (w.window().n() != 1)
        throw NotUnivariateError("Laurent codec needs n = 1");
    if (w.r0() != 1)
        throw DimensionError("Laurent codec needs scalar trajectories");
    std::ostringstream os;
    bool first = true;
    const bool modp = w.field().is_prime_field();
    for (int t = 0; t <= w.window().bounds[0]; ++t) {
        Scalar c = w.at({t}, 0);
        if (c.is_zero()) continue;
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
        if (!c.is_one()) os << c.to_string() << "*";
        os << "z^-" << (t + 1);
    }
    if (first) return "0";
    return os.str();
}

Trajectory laurent_decode(const FieldSpec& f, const std::string& text,
                          int window_bound) {
    Trajectory out(f, Window{{window_bound}}, 1);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(msg, 1, i + 1);
    };
    skip_ws();
    if (i < text.size() && text[i] == '0') {
        ++i;
        skip_ws();
        if (i != text.size()) throw fail("trailing input after 0");
        return out;
    }
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw fail("expected + or - between tail terms");
        }
        std::string digits;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            digits.push_back(text[i++]);
        std::string den;
        if (i < text.size() && text[i] == '/' && !digits.empty()) {
            ++i;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                den.push_back(text[i++]);
            if (den.empty()) throw fail("missing denominator");
        }
        Scalar coeff = Scalar::one(f);
        if (!digits.empty()) {
            coeff = Scalar::parse(f, den.empty() ? digits : digits + "/" + den);
            if (i < text.size() && text[i] == '*')
                ++i;
            else if (!(i < text.size() && text[i] == 'z'))
                throw fail("expected '*z' after coefficient");
        }
        if (i >= text.size() || text[i] != 'z') throw fail("expected z");
        ++i;
        if (i >= text.size() || text[i] != '^') throw fail("expected ^");
        ++i;
        if (i >= text.size() || text[i] != '-')
            throw fail("tail exponents are negative");
        ++i;
        std::string exp;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            exp.push_back(text[i++]);
        if (exp.empty()) throw fail("missing exponent");
        if (exp.size() > 9) throw fail("exponent too large");
        int e = std::stoi(exp);
        if (e < 1) throw fail("tail exponent must be <= -1");
        if (e - 1 > window_bound) throw fail("term outside the window");
        if (neg) coeff = -coeff;
        out.at({e - 1}, 0) += coeff;
        first = false;
        skip_ws();
    }
    if (first) throw fail("empty tail");
    return out;
}

int orbit_truncation_rank(const Trajectory& prefix, int T) {
    if (prefix.window().n() != 1)
        throw NotUnivariateError("orbit rank needs n = 1");
    if (prefix.r0() != 1)
        throw DimensionError("orbit rank needs scalar trajectories");
    if (T < 0) throw DimensionError("negative truncation length");
    const int len = prefix.window().bounds[0] + 1;
    if (len < 2 * (T + 1))
        throw WindowError("prefix shorter than 2(T+1): insufficient data "
                          "for all shifts");
    const int nshifts = len - T;  // s = 0 .. len-1-T
    ScalarMat m(prefix.field(), nshifts, T + 1);
    for (int s = 0; s < nshifts; ++s)
        for (int t = 0; t <= T; ++t) m.at(s, t) = prefix.at({s + t}, 0);
    return static_cast<int>(m.rank());
}

}  // namespace bhv
