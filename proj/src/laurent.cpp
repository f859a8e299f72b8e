#include "knotdist/laurent.hpp"

#include <cctype>
#include <climits>
#include <sstream>
#include <type_traits>

namespace knotdist {

RationalLaurent to_rational(const LaurentPoly& p) {
    RationalLaurent::Terms terms;
    for (const auto& [e, c] : p.terms()) terms.emplace(e, Rational(c));
    return RationalLaurent::from_terms(terms);
}

std::optional<LaurentPoly> to_integral(const RationalLaurent& p) {
    LaurentPoly::Terms terms;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1) return std::nullopt;
        terms.emplace(e, c.get_num());
    }
    return LaurentPoly::from_terms(terms);
}

Rational eval_int(const LaurentPoly& p, long x) {
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "cannot evaluate a Laurent polynomial at t = 0");
    Rational sum = 0;
    const Integer base = x;
    for (const auto& [e, c] : p.terms()) {
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e));
        if (e >= 0) {
            sum += Rational(c * power);
        } else {
            Rational term(c, power);
            term.canonicalize();
            sum += term;
        }
    }
    return sum;
}

Integer eval_polynomial(const LaurentPoly& p, const Integer& x) {
    if (p.is_zero()) return 0;
    if (p.min_exponent() < 0) throw std::logic_error("eval_polynomial: negative exponent");
    // Horner from the top exponent down.
    Integer acc = 0;
    int e = p.max_exponent();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        while (e > it->first) {
            acc *= x;
            --e;
        }
        acc += it->second;
    }
    while (e > 0) {
        acc *= x;
        --e;
    }
    return acc;
}

RationalDivMod divmod_rational(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const RationalLaurent divisor = to_rational(b);
    const int lo = b.min_exponent();
    const int hi = b.max_exponent();
    const Rational lead(b.leading_coeff());
    const Rational trail(b.trailing_coeff());

    RationalDivMod out{RationalLaurent{}, to_rational(a)};
    RationalLaurent& q = out.quotient;
    RationalLaurent& r = out.remainder;

    // Clear everything at or above hi from the top.
    while (!r.is_zero() && r.max_exponent() >= hi) {
        const int k = r.max_exponent() - hi;
        const Rational f = r.leading_coeff() / lead;
        q += RationalLaurent::monomial(f, k);
        r -= divisor.shifted(k) * f;
    }
    // Clear everything below lo from the bottom; this never reaches hi again.
    while (!r.is_zero() && r.min_exponent() < lo) {
        const int k = r.min_exponent() - lo;
        const Rational f = r.trailing_coeff() / trail;
        q += RationalLaurent::monomial(f, k);
        r -= divisor.shifted(k) * f;
    }
    return out;
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    const RationalDivMod dm = divmod_rational(a, b);
    if (!dm.remainder.is_zero()) return std::nullopt;
    return to_integral(dm.quotient);
}

bool is_multiple(const LaurentPoly& a, const LaurentPoly& b) { return exact_quotient(a, b).has_value(); }

namespace {

template <class Coeff>
void append_term(std::ostringstream& os, bool first, const Coeff& c, int e) {
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (negative) {
        os << '-';
    } else if (!first) {
        os << '+';
    }
    bool integral = true;
    if constexpr (std::is_same_v<Coeff, Rational>) integral = mag.get_den() == 1;
    if (e == 0) {
        os << mag;
        return;
    }
    if (!(integral && mag == 1)) {
        if (integral) {
            os << mag;
        } else {
            os << '(' << mag << ')';
        }
    }
    os << 't';
    if (e != 1) os << '^' << e;
}

template <class Coeff>
std::string format(const BasicLaurent<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        append_term(os, first, it->second, it->first);
        first = false;
    }
    return os.str();
}

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::Parse, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

}  // namespace

std::string to_string(const LaurentPoly& p) { return format(p); }
std::string to_string(const RationalLaurent& p) { return format(p); }

LaurentPoly parse_laurent(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) parse_error(text, "empty input");

    LaurentPoly result;
    std::size_t pos = 0;
    bool first = true;
    auto digits_at = [&](std::size_t from) {
        std::size_t end = from;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        return end;
    };

    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            parse_error(text, "expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;

        Integer coeff = 1;
        bool have_coeff = false;
        std::size_t end = digits_at(pos);
        if (end > pos) {
            coeff = Integer(s.substr(pos, end - pos));
            have_coeff = true;
            pos = end;
        }
        int exponent = 0;
        bool have_t = false;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_coeff) parse_error(text, "'*' without a coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 't') parse_error(text, "expected 't' after '*'");
        }
        if (pos < s.size() && s[pos] == 't') {
            have_t = true;
            exponent = 1;
            ++pos;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                bool exp_negative = false;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    exp_negative = s[pos] == '-';
                    ++pos;
                }
                end = digits_at(pos);
                if (end == pos) parse_error(text, "missing exponent after '^'");
                const std::string digits = s.substr(pos, end - pos);
                if (digits.size() > 9) parse_error(text, "exponent out of range");
                exponent = std::stoi(digits);
                if (exp_negative) exponent = -exponent;
                pos = end;
            }
        }
        if (!have_coeff && !have_t) parse_error(text, "empty term at offset " + std::to_string(pos));
        if (negative) coeff = -coeff;
        result += LaurentPoly::monomial(coeff, exponent);
    }
    return result;
}

}  // namespace knotdist
