#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "bhv/errors.hpp"

namespace bhv {

enum class FieldKind { Rationals, PrimeField };

/// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime_u64(std::uint64_t n);

/// Coefficient field descriptor: Q, or F_p for prime p < 2^62.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    std::uint64_t modulus() const;

    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const;

private:
    FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field residues live in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_mpq(mpq_class q);                    // rationals
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    /// Parses `[sign] digits [/ digits]`; the `/denominator` form is only
    /// accepted over the rationals.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    std::uint64_t residue() const;       // prime fields
    const mpq_class& rational() const;   // rationals

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    explicit Scalar(const FieldSpec& f) : field_(f) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::uint64_t res_ = 0;  // prime-field residue
    mpq_class rat_;          // rational value
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace bhv
