#include "bhv/poly.hpp"

#include <algorithm>
#include <sstream>

namespace bhv {

Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

int mono_total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

int mono_cmp(MonoOrder o, const Monomial& a, const Monomial& b) {
    if (o == MonoOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    int da = mono_total_degree(a), db = mono_total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    // degrevlex tie-break: last nonzero of a-b negative means a > b
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

RingPtr Ring::make(const FieldSpec& f, int nvars) {
    std::vector<std::string> names;
    if (nvars == 1) {
        names.push_back("z");
    } else {
        for (int i = 1; i <= nvars; ++i)
            names.push_back("z" + std::to_string(i));
    }
    auto r = std::make_shared<Ring>();
    r->field = f;
    r->nvars = nvars;
    r->vars = std::move(names);
    return r;
}

RingPtr Ring::make(const FieldSpec& f, std::vector<std::string> names) {
    auto r = std::make_shared<Ring>();
    r->field = f;
    r->nvars = static_cast<int>(names.size());
    r->vars = std::move(names);
    return r;
}

TermOrder TermOrder::schreyer(const TermOrder& prev,
                              std::vector<ModTerm> leads) {
    TermOrder t(prev.base_);
    auto lvl = std::make_shared<Level>(Level{prev, std::move(leads)});
    t.level_ = std::move(lvl);
    return t;
}

int TermOrder::cmp_mono(const Monomial& a, const Monomial& b) const {
    return mono_cmp(base_, a, b);
}

int TermOrder::cmp(const ModTerm& a, const ModTerm& b) const {
    if (level_) {
        const ModTerm& la = level_->leads.at(a.comp);
        const ModTerm& lb = level_->leads.at(b.comp);
        ModTerm ia{la.comp, mono_mul(la.mono, a.mono)};
        ModTerm ib{lb.comp, mono_mul(lb.mono, b.mono)};
        int c = level_->prev.cmp(ia, ib);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return mono_cmp(base_, a.mono, b.mono);
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(mono_one(p.ring_->nvars), c);
    return p;
}

Poly Poly::variable(RingPtr ring, int j) {
    Poly p(std::move(ring));
    if (j < 0 || j >= p.ring_->nvars)
        throw Error("variable index out of range");
    Monomial m = mono_one(p.ring_->nvars);
    m[j] = 1;
    p.terms_.emplace(std::move(m), Scalar::one(p.ring_->field));
    return p;
}

Poly Poly::term(RingPtr ring, Monomial m, const Scalar& c) {
    Poly p(std::move(ring));
    if (static_cast<int>(m.size()) != p.ring_->nvars)
        throw RingMismatchError("monomial length != variable count");
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            mono_total_degree(terms_.begin()->first) == 0);
}

std::optional<int> Poly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
    return d;
}

std::uint32_t Poly::max_exponent(int var) const {
    std::uint32_t e = 0;
    for (const auto& [m, c] : terms_) e = std::max(e, m[var]);
    return e;
}

std::pair<Monomial, Scalar> Poly::leading_term(const TermOrder& ord) const {
    if (terms_.empty())
        throw ZeroPolynomialError("leading term of the zero polynomial");
    auto it = terms_.begin();
    auto best = it;
    for (++it; it != terms_.end(); ++it) {
        if (ord.cmp_mono(it->first, best->first) > 0) best = it;
    }
    return {best->first, best->second};
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
        throw RingMismatchError("polynomials from different rings");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    Poly r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::times_term(const Monomial& m, const Scalar& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [mm, v] : terms_) r.terms_.emplace(mono_mul(mm, m), v * c);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = constant(ring_, Scalar::one(ring_->field));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

Poly Poly::divide_exact(const Poly& divisor, const TermOrder& ord) const {
    check_same_ring(divisor);
    if (divisor.is_zero()) throw ZeroDivisionError("division by zero poly");
    auto [dm, dc] = divisor.leading_term(ord);
    Poly rem = *this;
    Poly quot(ring_);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term(ord);
        if (!mono_divides(dm, rm))
            throw Error("inexact polynomial division");
        Monomial qm = mono_div(rm, dm);
        Scalar qc = rc / dc;
        quot.add_term(qm, qc);
        rem -= divisor.times_term(qm, qc);
    }
    return quot;
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ && o.ring_ && !ring_->same_as(*o.ring_)) return false;
    return terms_ == o.terms_;
}

std::string Poly::to_string(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return ord.cmp_mono(a->first, b->first) > 0;
    });

    const bool modp = ring_->field.is_prime_field();
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const Monomial& m = t->first;
        Scalar c = t->second;
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
        bool has_mono = mono_total_degree(m) > 0;
        if (!has_mono) {
            os << c.to_string();
        } else {
            bool printed = false;
            if (!c.is_one()) {
                os << c.to_string();
                printed = true;
            }
            for (int j = 0; j < ring_->nvars; ++j) {
                if (m[j] == 0) continue;
                if (printed) os << "*";
                os << ring_->vars[j];
                if (m[j] > 1) os << "^" << m[j];
                printed = true;
            }
        }
    }
    return os.str();
}

}  // namespace bhv
