#include "bhv/scalar.hpp"

#include <cctype>
#include <utility>

namespace bhv {

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, p);
        b = mulmod_u64(b, b, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw ZeroDivisionError("division by zero in F_p");
    // extended Euclid on (a, p); p need not be prime here, a must be a unit
    std::int64_t t = 0, newt = 1;
    std::uint64_t r = p, newr = a % p;
    while (newr != 0) {
        std::uint64_t q = r / newr;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * newt;
        t = newt;
        newt = tmp_t;
        std::uint64_t tmp_r = r - q * newr;
        r = newr;
        newr = tmp_r;
    }
    if (r != 1) throw ZeroDivisionError("non-invertible residue");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
                 : static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for all n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p < 2) throw Error("prime-field modulus must be >= 2");
    if (p >= (1ull << 62))
        throw Error("prime-field modulus too large (must be < 2^62)");
    if (!is_prime_u64(p))
        throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
}

std::uint64_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::PrimeField)
        throw Error("modulus() on the rational field");
    return p_;
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "QQ" : "GF " + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec& f) {
    Scalar s(f);
    if (f.is_prime_field())
        s.res_ = 1 % f.modulus();
    else
        s.rat_ = 1;
    return s;
}

Scalar Scalar::from_int(const FieldSpec& f, long v) {
    Scalar s(f);
    if (f.is_prime_field()) {
        std::uint64_t p = f.modulus();
        if (v < 0) {
            std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
            s.res_ = (p - m % p) % p;
        } else {
            s.res_ = static_cast<std::uint64_t>(v) % p;
        }
    } else {
        s.rat_ = v;
    }
    return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
    Scalar s(FieldSpec::rationals());
    q.canonicalize();
    s.rat_ = std::move(q);
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (!f.is_prime_field())
        throw FieldMismatchError("residue constructor needs a prime field");
    Scalar s(f);
    s.res_ = r % f.modulus();
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == num_start) throw Error("malformed scalar '" + text + "'");
    std::string num = text.substr(num_start, i - num_start);
    std::string den;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == den_start) throw Error("malformed scalar '" + text + "'");
        den = text.substr(den_start, i - den_start);
    }
    if (i != text.size()) throw Error("malformed scalar '" + text + "'");

    if (f.is_prime_field()) {
        if (!den.empty())
            throw Error("'/denominator' is only valid over the rationals");
        std::uint64_t p = f.modulus();
        std::uint64_t r = 0;
        for (char c : num) r = (mulmod_u64(r, 10, p) + (c - '0')) % p;
        if (neg) r = (p - r) % p;
        return from_residue(f, r);
    }
    mpq_class q(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
    if (q.get_den() == 0) throw ZeroDivisionError("zero denominator");
    if (neg) q = -q;
    return from_mpq(std::move(q));
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 % field_.modulus() : rat_ == 1;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_field())
        throw FieldMismatchError("residue() on a rational scalar");
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (field_.is_prime_field())
        throw FieldMismatchError("rational() on a prime-field scalar");
    return rat_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("scalars from different fields: " +
                                 field_.to_string() + " vs " +
                                 o.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    else
        s.rat_ = -rat_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus();
        std::uint64_t t = res_ + o.res_;  // p < 2^62, no overflow
        s.res_ = t >= p ? t - p : t;
    } else {
        s.rat_ = rat_ + o.rat_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mulmod_u64(res_, o.res_, field_.modulus());
    else
        s.rat_ = rat_ * o.rat_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw ZeroDivisionError("division by zero");
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mulmod_u64(res_, invmod_u64(o.res_, field_.modulus()),
                            field_.modulus());
    else
        s.rat_ = rat_ / o.rat_;
    return s;
}

Scalar Scalar::inverse() const {
    return one(field_) / *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    return rat_.get_str();
}

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unknown ArithOp");
}

}  // namespace bhv
