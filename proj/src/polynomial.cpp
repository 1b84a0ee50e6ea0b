#include "phylotoric/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace phylotoric {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::degrevlex();
    return o;
}

bool canonical_greater(const Term& a, const Term& b) {
    return canonical_order().greater(a.mono, b.mono);
}

} // namespace

std::string Ring::diff(const Ring& other) const {
    std::string only_a, only_b;
    for (const auto& v : vars_)
        if (other.var_index(v) < 0) only_a += (only_a.empty() ? "" : ",") + v;
    for (const auto& v : other.vars_)
        if (var_index(v) < 0) only_b += (only_b.empty() ? "" : ",") + v;
    if (only_a.empty() && only_b.empty()) return "same variables, different order";
    return "left-only {" + only_a + "}, right-only {" + only_b + "}";
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var, std::int32_t power) {
    if (var >= ring->nvars()) throw DomainError("variable index out of range");
    Polynomial p(ring);
    Monomial m(ring->nvars());
    m[var] = power;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    if (m.size() != ring->nvars()) throw DomainError("monomial arity mismatch");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), canonical_greater);
    Polynomial p(ring);
    for (auto& t : terms) {
        if (t.mono.size() != ring->nvars()) throw DomainError("monomial arity mismatch");
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

bool Polynomial::is_pure_difference_binomial() const {
    if (terms_.size() != 2) return false;
    return (terms_[0].coeff.is_one() && terms_[1].coeff == Rational(-1)) ||
           (terms_[1].coeff.is_one() && terms_[0].coeff == Rational(-1));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "poly add");
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && canonical_greater(terms_[i], o.terms_[j]))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || canonical_greater(o.terms_[j], terms_[i])) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_, "poly mul");
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, c});
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the degrevlex ordering
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (ring_ && point.size() != ring_->nvars())
        throw DomainError("evaluation point arity mismatch");
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            for (std::int32_t k = 0; k < t.mono[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<std::optional<Polynomial>>& images) const {
    Polynomial out = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (i >= images.size() || !images[i])
                throw DomainError("unassigned variable '" + ring_->var_name(i) +
                                  "' in substitution");
            for (std::int32_t k = 0; k < t.mono[i]; ++k) prod = prod * (*images[i]);
        }
        out = out + prod;
    }
    return out;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, const std::string& op) {
    if (op == "add") return a + b;
    if (op == "sub") return a - b;
    if (op == "mul") return a * b;
    throw DomainError("unknown arithmetic op '" + op + "'");
}

Polynomial substitute_linear(const Polynomial& f, const RingPtr& target,
                             const std::vector<std::optional<Polynomial>>& images) {
    for (const auto& img : images)
        if (img && img->total_degree() > 1)
            throw DomainError("substitute_linear image of degree > 1");
    return f.substitute(target, images);
}

// ---------------------------------------------------------------------------
// text form

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool printed_coeff = false;
        if (!c.is_one() || t.mono.is_constant()) {
            out << c.str();
            printed_coeff = true;
        }
        bool first_var = !printed_coeff;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!first_var) out << "*";
            out << ring_->var_name(i);
            if (t.mono[i] != 1) out << "^" << t.mono[i];
            first_var = false;
        }
    }
    return out.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number", start);
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            throw ParseError("expected identifier", start);
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    PolyLexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        first = false;

        Rational coeff(sign);
        Monomial mono(ring->nvars());
        bool have_factor = false;

        c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx.number();
            std::string den = "1";
            if (lx.peek() == '/') {
                ++lx.pos;
                den = lx.number();
            }
            coeff *= Rational::parse(num + "/" + den);
            have_factor = true;
            if (lx.peek() == '*') ++lx.pos; // optional before a variable
        }
        while (true) {
            c = lx.peek();
            if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) break;
            std::size_t at = lx.pos;
            std::string name = lx.ident();
            int idx = ring->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
            std::int32_t power = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                power = static_cast<std::int32_t>(std::stol(lx.number()));
            }
            mono[static_cast<std::size_t>(idx)] += power;
            have_factor = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!have_factor) throw ParseError("empty term", lx.pos);
        terms.push_back({std::move(mono), std::move(coeff)});
    }
    if (terms.empty()) throw ParseError("empty polynomial", 0);
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace phylotoric
