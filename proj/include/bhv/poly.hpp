#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bhv/scalar.hpp"

namespace bhv {

/// Exponent vector; length equals the ring's variable count.
using Monomial = std::vector<std::uint32_t>;

Monomial mono_one(int nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, exact
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
int mono_total_degree(const Monomial& m);

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ring context: coefficient field, variable count, printable names.
struct Ring {
    FieldSpec field;
    int nvars;
    std::vector<std::string> vars;

    static RingPtr make(const FieldSpec& f, int nvars);
    static RingPtr make(const FieldSpec& f, std::vector<std::string> names);

    bool same_as(const Ring& o) const {
        return field == o.field && nvars == o.nvars;
    }
};

enum class MonoOrder { Lex, DegRevLex };

/// -1 / 0 / +1 comparison under the given monomial order.
int mono_cmp(MonoOrder o, const Monomial& a, const Monomial& b);

/// A term of a free module A^r: basis component plus monomial.
struct ModTerm {
    int comp;
    Monomial mono;
    bool operator==(const ModTerm&) const = default;
};

/// Term order on free-module terms. Base orders extend a monomial order
/// position-over-term, component 0 highest. A Schreyer level compares terms
/// through the lead terms of a previous basis, which is what keeps iterated
/// syzygy computations finite.
class TermOrder {
public:
    explicit TermOrder(MonoOrder base = MonoOrder::DegRevLex) : base_(base) {}
    static TermOrder lex() { return TermOrder(MonoOrder::Lex); }
    static TermOrder degrevlex() { return TermOrder(MonoOrder::DegRevLex); }
    static TermOrder schreyer(const TermOrder& prev,
                              std::vector<ModTerm> leads);

    MonoOrder base() const { return base_; }
    bool is_schreyer() const { return level_ != nullptr; }

    int cmp(const ModTerm& a, const ModTerm& b) const;
    int cmp_mono(const Monomial& a, const Monomial& b) const;
    bool less(const ModTerm& a, const ModTerm& b) const {
        return cmp(a, b) < 0;
    }

private:
    struct Level {
        TermOrder prev;
        std::vector<ModTerm> leads;
    };
    MonoOrder base_;
    std::shared_ptr<const Level> level_;
};

/// Sparse multivariate polynomial with exact coefficients. Terms are keyed
/// by exponent vector; zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly variable(RingPtr ring, int j);  // z_j, 0-based
    static Poly term(RingPtr ring, Monomial m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t nterms() const { return terms_.size(); }

    /// nullopt is the degree of the zero polynomial.
    std::optional<int> total_degree() const;
    std::uint32_t max_exponent(int var) const;

    std::pair<Monomial, Scalar> leading_term(const TermOrder& ord) const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    Poly scaled(const Scalar& c) const;
    Poly times_term(const Monomial& m, const Scalar& c) const;
    Poly pow(std::uint32_t e) const;

    /// Exact quotient; throws if the division leaves a remainder.
    Poly divide_exact(const Poly& divisor, const TermOrder& ord) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Canonical text form: terms descending under `ord`, explicit `*`.
    std::string to_string(const TermOrder& ord = TermOrder()) const;

    void check_same_ring(const Poly& o) const;

private:
    RingPtr ring_;
    TermMap terms_;
};

}  // namespace bhv
