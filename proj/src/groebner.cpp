#include "bhv/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace bhv {

namespace {

bool modterm_divides(const ModTerm& a, const ModTerm& b) {
    return a.comp == b.comp && mono_divides(a.mono, b.mono);
}

/// Full division of v by (gens, leads): every term of the remainder is
/// irreducible. Returns one quotient per basis element.
struct Reduction {
    std::vector<Poly> quotients;
    FreeVector remainder;
};

Reduction reduce_full(const FreeVector& v, const std::vector<FreeVector>& gens,
                      const std::vector<ModTerm>& leads, const TermOrder& ord,
                      const RingPtr& ring) {
    Reduction out;
    out.quotients.assign(gens.size(), Poly::zero(ring));
    out.remainder = FreeVector(ring, v.rank());
    FreeVector work = v;
    while (!work.is_zero()) {
        auto [t, c] = work.leading_term(ord);
        bool reduced = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (!modterm_divides(leads[k], t)) continue;
            Monomial q = mono_div(t.mono, leads[k].mono);
            // basis elements are monic, so the quotient coefficient is c
            out.quotients[k].add_term(q, c);
            work = work - gens[k].times_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder[t.comp].add_term(t.mono, c);
            Poly strip = Poly::term(ring, t.mono, c);
            work[t.comp] -= strip;
        }
    }
    return out;
}

/// True when every nonzero component of v is the single component c.
bool supported_in_component(const FreeVector& v, int c) {
    for (int i = 0; i < v.rank(); ++i)
        if (i != c && !v[i].is_zero()) return false;
    return true;
}

struct PairKey {
    int deg;
    int i, j;
    bool operator<(const PairKey& o) const {
        return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
    }
};

void sort_leads_descending(std::vector<FreeVector>& gens,
                           std::vector<ModTerm>& leads,
                           std::vector<std::vector<Poly>>& expr,
                           const TermOrder& ord) {
    std::vector<std::size_t> idx(gens.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return ord.cmp(leads[a], leads[b]) > 0;
    });
    std::vector<FreeVector> g2;
    std::vector<ModTerm> l2;
    std::vector<std::vector<Poly>> e2;
    for (auto k : idx) {
        g2.push_back(std::move(gens[k]));
        l2.push_back(std::move(leads[k]));
        e2.push_back(std::move(expr[k]));
    }
    gens = std::move(g2);
    leads = std::move(l2);
    expr = std::move(e2);
}

}  // namespace

GroebnerBasis buchberger(const std::vector<FreeVector>& input,
                         const TermOrder& ord) {
    RingPtr ring;
    int rank = -1;
    for (const auto& v : input) {
        if (!ring) ring = v.ring();
        if (rank < 0) rank = v.rank();
        if (v.rank() != rank)
            throw DimensionError("generators of different rank");
        if (v.ring() && ring && !v.ring()->same_as(*ring))
            throw RingMismatchError("generators from different rings");
    }
    if (!ring) ring = Ring::make(FieldSpec::rationals(), 1);
    if (rank < 0) rank = 0;

    GroebnerBasis gb(ord, ring, rank);
    gb.originals_ = input;

    const std::size_t m = input.size();
    auto unit_expr = [&](std::size_t i, const Scalar& scale) {
        std::vector<Poly> e(m, Poly::zero(ring));
        e[i] = Poly::constant(ring, scale);
        return e;
    };

    std::vector<FreeVector>& gens = gb.gens_;
    std::vector<ModTerm>& leads = gb.leads_;
    std::vector<std::vector<Poly>>& expr = gb.expr_;

    std::set<PairKey> queue;
    std::set<std::pair<int, int>> handled;

    auto push_pairs_for = [&](int s) {
        for (int i = 0; i < s; ++i) {
            if (leads[i].comp != leads[s].comp) continue;
            Monomial lcm = mono_lcm(leads[i].mono, leads[s].mono);
            queue.insert(PairKey{mono_total_degree(lcm), i, s});
        }
    };

    auto add_element = [&](FreeVector v, std::vector<Poly> e) {
        auto [t, c] = v.leading_term(ord);
        Scalar inv = c.inverse();
        v = v.scaled(inv);
        for (auto& q : e) q = q.scaled(inv);
        gens.push_back(std::move(v));
        leads.push_back(std::move(t));
        expr.push_back(std::move(e));
        push_pairs_for(static_cast<int>(gens.size()) - 1);
    };

    for (std::size_t i = 0; i < m; ++i) {
        if (input[i].is_zero()) continue;
        add_element(input[i], unit_expr(i, Scalar::one(ring->field)));
    }

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        int i = pk.i, j = pk.j;
        handled.insert({i, j});

        const ModTerm &li = leads[i], &lj = leads[j];
        Monomial lcm = mono_lcm(li.mono, lj.mono);

        // product criterion, valid only in the effectively scalar case
        if (mono_coprime(li.mono, lj.mono) &&
            supported_in_component(gens[i], li.comp) &&
            supported_in_component(gens[j], li.comp))
            continue;

        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < gens.size() && !chained; ++k) {
            int ki = static_cast<int>(k);
            if (ki == i || ki == j) continue;
            if (leads[k].comp != li.comp) continue;
            if (!mono_divides(leads[k].mono, lcm)) continue;
            auto done = [&](int a, int b) {
                if (a > b) std::swap(a, b);
                return handled.count({a, b}) > 0;
            };
            if (done(i, ki) && done(j, ki)) chained = true;
        }
        if (chained) continue;

        FreeVector spoly =
            gens[i].times_term(mono_div(lcm, li.mono), Scalar::one(ring->field)) -
            gens[j].times_term(mono_div(lcm, lj.mono), Scalar::one(ring->field));
        Reduction red = reduce_full(spoly, gens, leads, ord, ring);
        if (red.remainder.is_zero()) continue;

        std::vector<Poly> e(m, Poly::zero(ring));
        Poly ui = Poly::term(ring, mono_div(lcm, li.mono),
                             Scalar::one(ring->field));
        Poly uj = Poly::term(ring, mono_div(lcm, lj.mono),
                             Scalar::one(ring->field));
        for (std::size_t t = 0; t < m; ++t)
            e[t] = ui * expr[i][t] - uj * expr[j][t];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (red.quotients[k].is_zero()) continue;
            for (std::size_t t = 0; t < m; ++t)
                e[t] -= red.quotients[k] * expr[k][t];
        }
        add_element(std::move(red.remainder), std::move(e));
    }

    // minimalize: drop elements whose lead is divisible by another's
    {
        std::vector<std::size_t> order(gens.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) {
                      return ord.cmp(leads[a], leads[b]) < 0;
                  });
        std::vector<bool> keep(gens.size(), false);
        std::vector<std::size_t> kept;
        for (auto k : order) {
            bool divisible = false;
            for (auto pk2 : kept)
                if (modterm_divides(leads[pk2], leads[k])) {
                    divisible = true;
                    break;
                }
            if (!divisible) {
                keep[k] = true;
                kept.push_back(k);
            }
        }
        std::vector<FreeVector> g2;
        std::vector<ModTerm> l2;
        std::vector<std::vector<Poly>> e2;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (!keep[k]) continue;
            g2.push_back(std::move(gens[k]));
            l2.push_back(std::move(leads[k]));
            e2.push_back(std::move(expr[k]));
        }
        gens = std::move(g2);
        leads = std::move(l2);
        expr = std::move(e2);
    }

    // tail reduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::vector<FreeVector> others;
            std::vector<ModTerm> other_leads;
            std::vector<std::size_t> other_idx;
            for (std::size_t t = 0; t < gens.size(); ++t) {
                if (t == k) continue;
                others.push_back(gens[t]);
                other_leads.push_back(leads[t]);
                other_idx.push_back(t);
            }
            Reduction red = reduce_full(gens[k], others, other_leads, ord, ring);
            if (red.remainder == gens[k]) continue;
            changed = true;
            std::vector<Poly> e = expr[k];
            for (std::size_t t = 0; t < others.size(); ++t) {
                if (red.quotients[t].is_zero()) continue;
                for (std::size_t s = 0; s < m; ++s)
                    e[s] -= red.quotients[t] * expr[other_idx[t]][s];
            }
            gens[k] = red.remainder;
            expr[k] = std::move(e);
            // lead is untouched: it is not divisible by any other lead
        }
    }

    sort_leads_descending(gens, leads, expr, ord);
    return gb;
}

DivisionCertificate normal_form(const FreeVector& v, const GroebnerBasis& gb) {
    if (v.rank() != gb.rank())
        throw DimensionError("normal_form: rank mismatch");
    if (v.ring() && gb.ring() && !v.ring()->same_as(*gb.ring()))
        throw RingMismatchError("normal_form: ring mismatch");
    Reduction red = reduce_full(v, gb.generators(), gb.leads(), gb.order(),
                                gb.ring());
    return DivisionCertificate{std::move(red.quotients),
                               std::move(red.remainder)};
}

bool submodule_contains(const std::vector<FreeVector>& gensA,
                        const std::vector<FreeVector>& gensB,
                        const TermOrder& ord) {
    int rank = -1;
    for (const auto& v : gensA) rank = rank < 0 ? v.rank() : rank;
    for (const auto& v : gensB) {
        if (rank >= 0 && v.rank() != rank)
            throw DimensionError("submodule_contains: rank mismatch");
    }
    if (gensB.empty()) return true;
    if (gensA.empty()) {
        for (const auto& v : gensB)
            if (!v.is_zero()) return false;
        return true;
    }
    GroebnerBasis gb = buchberger(gensA, ord);
    for (const auto& v : gensB) {
        if (!normal_form(v, gb).remainder.is_zero()) return false;
    }
    return true;
}

namespace {

/// Syzygies of a reduced monic basis from all same-component S-pairs,
/// reduced with certificates against the basis itself.
std::vector<FreeVector> spair_syzygies(const std::vector<FreeVector>& gens,
                                       const std::vector<ModTerm>& leads,
                                       const TermOrder& ord,
                                       const RingPtr& ring) {
    std::vector<FreeVector> out;
    const int s = static_cast<int>(gens.size());
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            if (leads[i].comp != leads[j].comp) continue;
            Monomial lcm = mono_lcm(leads[i].mono, leads[j].mono);
            Monomial ui = mono_div(lcm, leads[i].mono);
            Monomial uj = mono_div(lcm, leads[j].mono);
            Scalar one = Scalar::one(ring->field);
            FreeVector spoly =
                gens[i].times_term(ui, one) - gens[j].times_term(uj, one);
            Reduction red = reduce_full(spoly, gens, leads, ord, ring);
            if (!red.remainder.is_zero())
                throw std::logic_error("S-pair of a Groebner basis did not "
                                       "reduce to zero");
            FreeVector tau(ring, s);
            tau[i] += Poly::term(ring, ui, one);
            tau[j] -= Poly::term(ring, uj, one);
            for (int k = 0; k < s; ++k) tau[k] -= red.quotients[k];
            out.push_back(std::move(tau));
        }
    }
    return out;
}

std::vector<FreeVector> sort_for_schreyer(std::vector<FreeVector> cols,
                                          const TermOrder& ord) {
    std::vector<std::pair<ModTerm, std::size_t>> keyed;
    for (std::size_t i = 0; i < cols.size(); ++i)
        keyed.emplace_back(cols[i].leading_term(ord).first, i);
    // component ascending, then lead monomial lexicographically descending;
    // the lex sort is what makes successive syzygy stages shed variables
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.comp != b.first.comp) return a.first.comp < b.first.comp;
        int c = mono_cmp(MonoOrder::Lex, a.first.mono, b.first.mono);
        if (c != 0) return c > 0;
        return a.second < b.second;
    });
    std::vector<FreeVector> out;
    out.reserve(cols.size());
    for (const auto& [t, i] : keyed) out.push_back(std::move(cols[i]));
    return out;
}

}  // namespace

PolyMatrix syzygies(const std::vector<FreeVector>& gens,
                    const TermOrder& ord) {
    const std::size_t m = gens.size();
    RingPtr ring = m ? gens.front().ring() : nullptr;
    if (!ring) return PolyMatrix();

    GroebnerBasis gb = buchberger(gens, ord);
    const std::size_t s = gb.size();

    std::vector<FreeVector> syz;
    // S-pair syzygies of the basis, pushed down to the original generators
    for (auto& tau : spair_syzygies(gb.generators(), gb.leads(), ord, ring)) {
        FreeVector w(ring, static_cast<int>(m));
        for (std::size_t k = 0; k < s; ++k) {
            if (tau[static_cast<int>(k)].is_zero()) continue;
            for (std::size_t i = 0; i < m; ++i)
                w[static_cast<int>(i)] +=
                    tau[static_cast<int>(k)] * gb.expressions()[k][i];
        }
        if (!w.is_zero()) syz.push_back(std::move(w));
    }
    // rows of I - B*A, where f_i = sum_k B_ik g_k and g_k = sum_i A_ki f_i
    for (std::size_t i = 0; i < m; ++i) {
        DivisionCertificate cert = normal_form(gens[i], gb);
        if (!cert.remainder.is_zero())
            throw std::logic_error("generator not in its own module");
        FreeVector row(ring, static_cast<int>(m));
        row[static_cast<int>(i)] =
            Poly::constant(ring, Scalar::one(ring->field));
        for (std::size_t k = 0; k < s; ++k) {
            if (cert.quotients[k].is_zero()) continue;
            for (std::size_t t = 0; t < m; ++t)
                row[static_cast<int>(t)] -=
                    cert.quotients[k] * gb.expressions()[k][t];
        }
        if (!row.is_zero()) syz.push_back(std::move(row));
    }

    GroebnerBasis sgb = buchberger(syz, ord);
    return PolyMatrix::from_columns(ring, static_cast<int>(m),
                                    sgb.generators());
}

std::vector<PolyMatrix> free_resolution(const ModulePresentation& p,
                                        const TermOrder& ord) {
    const PolyMatrix& g1 = p.relations;
    if (g1.rows() != p.ambient_rank)
        throw DimensionError("presentation: relation rows != ambient rank");
    bool has_nonzero = false;
    for (int j = 0; j < g1.cols() && !has_nonzero; ++j)
        has_nonzero = !g1.column(j).is_zero();
    if (!has_nonzero) return {};

    std::vector<PolyMatrix> res;
    res.push_back(g1);

    PolyMatrix s1 = syzygies(g1.columns(), ord);
    if (s1.cols() == 0) return res;

    std::vector<FreeVector> cur = sort_for_schreyer(s1.columns(), ord);
    TermOrder cur_ord = ord;
    res.push_back(PolyMatrix::from_columns(g1.ring(), g1.cols(), cur));

    for (int guard = 0; guard < 1000; ++guard) {
        std::vector<ModTerm> leads;
        for (const auto& v : cur)
            leads.push_back(v.leading_term(cur_ord).first);
        std::vector<FreeVector> taus =
            spair_syzygies(cur, leads, cur_ord, g1.ring());
        bool all_zero = true;
        for (const auto& t : taus) all_zero = all_zero && t.is_zero();
        if (taus.empty() || all_zero) return res;

        TermOrder next_ord = TermOrder::schreyer(cur_ord, leads);
        GroebnerBasis tgb = buchberger(taus, next_ord);
        if (tgb.size() == 0) return res;
        std::vector<FreeVector> next =
            sort_for_schreyer(tgb.gens_, next_ord);
        res.push_back(PolyMatrix::from_columns(
            g1.ring(), static_cast<int>(cur.size()), next));
        cur = std::move(next);
        cur_ord = next_ord;
    }
    throw std::logic_error("free resolution exceeded the stage guard");
}

}  // namespace bhv
