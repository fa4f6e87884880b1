#pragma once

#include <vector>

#include "bhv/poly_matrix.hpp"

namespace bhv {

/// Exact division record: input = sum quotients[i] * basis[i] + remainder,
/// and no term of the remainder is divisible by any basis leading term.
struct DivisionCertificate {
    std::vector<Poly> quotients;
    FreeVector remainder;
};

/// Reduced Groebner basis of a submodule of A^rank. Elements are monic and
/// inter-reduced; each one carries its expression in the original
/// generators so membership certificates can be pulled back.
class GroebnerBasis {
public:
    GroebnerBasis(TermOrder ord, RingPtr ring, int rank)
        : ord_(std::move(ord)), ring_(std::move(ring)), rank_(rank) {}

    const TermOrder& order() const { return ord_; }
    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }

    const std::vector<FreeVector>& generators() const { return gens_; }
    const std::vector<ModTerm>& leads() const { return leads_; }
    /// expression(k)[i] is the coefficient of original generator i in
    /// basis element k.
    const std::vector<std::vector<Poly>>& expressions() const {
        return expr_;
    }
    const std::vector<FreeVector>& originals() const { return originals_; }

    std::size_t size() const { return gens_.size(); }

    // populated by buchberger()
    std::vector<FreeVector> gens_;
    std::vector<ModTerm> leads_;
    std::vector<std::vector<Poly>> expr_;
    std::vector<FreeVector> originals_;

private:
    TermOrder ord_;
    RingPtr ring_;
    int rank_;
};

/// Buchberger completion with normal-strategy pair selection and sound
/// pair pruning; returns the canonical reduced basis.
GroebnerBasis buchberger(const std::vector<FreeVector>& gens,
                         const TermOrder& ord);

/// Full division of v by the basis, with certificate.
DivisionCertificate normal_form(const FreeVector& v, const GroebnerBasis& gb);

/// True iff span(gensB) is contained in span(gensA).
bool submodule_contains(const std::vector<FreeVector>& gensA,
                        const std::vector<FreeVector>& gensB,
                        const TermOrder& ord);

/// Generators (as matrix columns) of { a in A^m : sum a_i gens_i = 0 },
/// returned as the reduced Groebner basis of the syzygy module.
PolyMatrix syzygies(const std::vector<FreeVector>& gens, const TermOrder& ord);

struct ModulePresentation {
    int ambient_rank;       // r0
    PolyMatrix relations;   // r0 x r1, columns generate the relation module
};

/// Iterated syzygy resolution [G1, G2, ..., Gk] of coker(G1). Consecutive
/// products vanish and each matrix's columns generate the syzygies of the
/// previous one. Stages past the first run under Schreyer-induced orders,
/// which bounds the length and guarantees termination.
std::vector<PolyMatrix> free_resolution(const ModulePresentation& p,
                                        const TermOrder& ord);

}  // namespace bhv
