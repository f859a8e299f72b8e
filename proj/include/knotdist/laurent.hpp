#pragma once

// Exact arithmetic in the Laurent polynomial ring Z[t, t^-1] (and Q[t, t^-1]
// for intermediate division results).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "knotdist/error.hpp"

namespace knotdist {

using Integer = mpz_class;
using Rational = mpq_class;

// Sparse Laurent polynomial: exponent -> coefficient, zero coefficients never stored.
template <class Coeff>
class BasicLaurent {
public:
    using Terms = std::map<int, Coeff>;

    BasicLaurent() = default;
    BasicLaurent(const Coeff& constant) { add_term(0, constant); }  // NOLINT(implicit)
    BasicLaurent(long constant) : BasicLaurent(Coeff(constant)) {}  // NOLINT(implicit)
    BasicLaurent(int constant) : BasicLaurent(Coeff(constant)) {}   // NOLINT(implicit)

    static BasicLaurent monomial(const Coeff& c, int exponent) {
        BasicLaurent p;
        p.add_term(exponent, c);
        return p;
    }

    // t^k
    static BasicLaurent t(int exponent = 1) { return monomial(Coeff(1), exponent); }

    static BasicLaurent from_terms(const Terms& terms) {
        BasicLaurent p;
        for (const auto& [e, c] : terms) p.add_term(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    std::size_t term_count() const { return terms_.size(); }

    // Precondition for the next four: nonzero.
    int min_exponent() const { return terms_.begin()->first; }
    int max_exponent() const { return terms_.rbegin()->first; }
    const Coeff& leading_coeff() const { return terms_.rbegin()->second; }
    const Coeff& trailing_coeff() const { return terms_.begin()->second; }

    // Degree in the sense of max exponent - min exponent. The zero polynomial has breadth -1.
    int breadth() const { return is_zero() ? -1 : max_exponent() - min_exponent(); }

    Coeff coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    // Multiply by t^k.
    BasicLaurent shifted(int k) const {
        BasicLaurent p;
        for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
        return p;
    }

    // t -> t^-1
    BasicLaurent bar() const {
        BasicLaurent p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
        return p;
    }

    BasicLaurent& operator+=(const BasicLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BasicLaurent& operator-=(const BasicLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
        return *this;
    }
    BasicLaurent& operator*=(const BasicLaurent& o) {
        *this = *this * o;
        return *this;
    }
    BasicLaurent& operator*=(const Coeff& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
    friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }
    friend BasicLaurent operator-(BasicLaurent a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
        BasicLaurent p;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Coeff prod = ca * cb;
                p.add_term(ea + eb, prod);
            }
        }
        return p;
    }
    friend BasicLaurent operator*(BasicLaurent a, const Coeff& s) { return a *= s; }
    friend BasicLaurent operator*(const Coeff& s, BasicLaurent a) { return a *= s; }

    friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BasicLaurent& a, const BasicLaurent& b) { return !(a == b); }

private:
    void add_term(int exponent, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

using LaurentPoly = BasicLaurent<Integer>;
using RationalLaurent = BasicLaurent<Rational>;

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

inline bool is_bar_symmetric(const LaurentPoly& p) { return p == p.bar(); }

RationalLaurent to_rational(const LaurentPoly& p);

// Empty when some coefficient is not an integer.
std::optional<LaurentPoly> to_integral(const RationalLaurent& p);

// Exact substitution t := x. Throws InvalidArgument for x == 0.
Rational eval_int(const LaurentPoly& p, long x);

// Evaluation for polynomials with no negative exponents (x may be 0).
Integer eval_polynomial(const LaurentPoly& p, const Integer& x);

struct RationalDivMod {
    RationalLaurent quotient;
    RationalLaurent remainder;
};

// Division over Q with a = q*b + r, where r is supported on exponents
// [min_exp(b), max_exp(b) - 1], so breadth(r) < breadth(b). Throws DivisionByZero.
RationalDivMod divmod_rational(const LaurentPoly& a, const LaurentPoly& b);

// True iff a = q*b for some q with integer coefficients.
bool is_multiple(const LaurentPoly& a, const LaurentPoly& b);

// The integral quotient a/b when b divides a in Z[t, t^-1].
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

// Canonical text: decreasing exponents, `t^k`, `t`, `t^-k`; zero prints as `0`.
std::string to_string(const LaurentPoly& p);
std::string to_string(const RationalLaurent& p);

// Accepts e.g. `-3t^2+12t-17+12t^-1-3t^-2`; whitespace is ignored. Throws Parse.
LaurentPoly parse_laurent(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const RationalLaurent& p) { return os << to_string(p); }

}  // namespace knotdist
