#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bhv/poly.hpp"

namespace bhv {

/// Word over letters 0..n-1; multiplication is concatenation.
using Word = std::vector<std::uint8_t>;

/// Length first, then lexicographic within a length.
struct WordLenLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Element of the free associative algebra k<z1..zn>.
class FreePoly {
public:
    using TermMap = std::map<Word, Scalar, WordLenLex>;

    FreePoly() : field_(FieldSpec::rationals()), nvars_(0) {}
    FreePoly(const FieldSpec& f, int nvars) : field_(f), nvars_(nvars) {}

    static FreePoly zero(const FieldSpec& f, int nvars);
    static FreePoly one(const FieldSpec& f, int nvars);
    static FreePoly variable(const FieldSpec& f, int nvars, int j);
    static FreePoly term(const FieldSpec& f, int nvars, Word w,
                         const Scalar& c);

    const FieldSpec& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// nullopt for the zero element.
    std::optional<int> top_degree() const;
    bool is_homogeneous() const;

    void add_term(const Word& w, const Scalar& c);

    FreePoly operator-() const;
    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator*(const FreePoly& o) const;  // noncommutative
    FreePoly& operator+=(const FreePoly& o) { return *this = *this + o; }
    FreePoly& operator-=(const FreePoly& o) { return *this = *this - o; }
    FreePoly scaled(const Scalar& c) const;
    FreePoly pow(std::uint32_t e) const;

    bool operator==(const FreePoly& o) const;
    bool operator!=(const FreePoly& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names) const;

    void check_compatible(const FreePoly& o) const;

private:
    FieldSpec field_;
    int nvars_;
    TermMap terms_;
};

FreePoly free_mul(const FreePoly& f, const FreePoly& g);

/// Word -> commutative monomial, extended linearly; a ring map onto
/// k[z1..zn].
Poly abelianize(const FreePoly& f, const RingPtr& ring);

struct GradedKernel {
    std::vector<int> dims;                        // dims[m], m = 0..d
    std::vector<std::vector<FreePoly>> bases;     // per-degree kernel basis
};

/// Degree-truncated kernel of the abelianization, one exact nullspace
/// computation per degree.
GradedKernel truncated_abelianization_kernel(const FieldSpec& f, int n,
                                             int d);

struct GradedSpan {
    std::vector<int> dims;            // dims[m]
    std::vector<int> product_counts;  // products w*g*s counted per degree
};

/// Per-degree dimension of span{w * g * s : w, s words, g in gens},
/// products bucketed by top degree.
GradedSpan left_span_dim(const std::vector<FreePoly>& gens, int d);

/// Element of the free left module k<z>^rank.
struct NCFreeVector {
    std::vector<FreePoly> comps;

    int rank() const { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    std::optional<int> top_degree() const;
    bool is_homogeneous() const;
};

struct NCGradedKernel {
    std::vector<int> dims;
    // bases are produced for homogeneous relation sets; empty otherwise
    std::vector<std::vector<NCFreeVector>> bases;
};

/// Graded slices of the left module generated by the relations inside
/// k<z>^r0, from products of word length bounded by d. Exact per degree
/// when the relations are homogeneous.
NCGradedKernel nc_truncated_kernel(const std::vector<NCFreeVector>& relations,
                                   int r0, int d);

/// Finitely generated left S-set truncated to explicitly enumerated
/// states. trans[j][s] is the state reached from s under generator j, or
/// -1 when the successor lies beyond the truncation (frontier).
struct SSetTrunc {
    int nletters = 0;
    int nstates = 0;
    std::vector<int> generators;             // seed states X0
    std::vector<std::vector<int>> trans;     // nletters x nstates

    /// BFS depth per state from X0; throws if some state is unreachable.
    std::vector<int> validate_depths() const;
    /// word(x) following the left action, nullopt when it leaves the
    /// enumerated part.
    std::optional<int> apply_word(const Word& w, int state) const;
};

struct NCTrajectory {
    SSetTrunc sset;
    int r0 = 0;
    std::vector<std::vector<Scalar>> values;  // per state, length r0
};

/// Matrix over the free algebra, columns as relation vectors.
struct FreePolyMatrix {
    int rows = 0, cols = 0;
    std::vector<FreePoly> entries;  // row-major

    const FreePoly& at(int i, int j) const { return entries[i * cols + j]; }
    FreePoly& at(int i, int j) { return entries[i * cols + j]; }
    NCFreeVector column(int j) const;
};

struct NCViolation {
    int column;
    int state;
};

struct NCMembershipReport {
    bool pass;
    std::vector<NCViolation> violations;
    int checks;
};

/// Truncated test of w * G = 0 on an enumerated S-set; constraints are
/// evaluated at every state whose needed successors exist. Throws
/// VacuousWindowError when no constraint is checkable anywhere.
NCMembershipReport nc_check_membership(const NCTrajectory& w,
                                       const FreePolyMatrix& g);

}  // namespace bhv
