#include "knotdist/obstruct.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace knotdist {

// ---------------------------------------------------------------------------
// Quadratic form

Integer quadform_value(const Integer& h, const Integer& x, const Integer& y) {
    return h * h * x * x + (2 * h - 1) * x * y + y * y;
}

namespace {

Integer floor_sqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Integer roots y of y^2 + (2h-1) x y + h^2 x^2 - target = 0, largest first.
std::vector<Integer> roots_in_y(const Integer& h, const Integer& x, const Integer& target) {
    const Integer mid = (2 * h - 1) * x;
    const Integer disc = mid * mid - 4 * (h * h * x * x - target);
    if (disc < 0) return {};
    const Integer r = floor_sqrt(disc);
    if (r * r != disc) return {};
    std::vector<Integer> out;
    for (const Integer& s : {Integer(r), Integer(-r)}) {
        const Integer numer = s - mid;
        if (mpz_even_p(numer.get_mpz_t())) {
            Integer y = numer / 2;
            if (out.empty() || out.back() != y) out.push_back(y);
        }
    }
    return out;
}

long mod_long(const Integer& v, long m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

bool solvable_mod(const Integer& h, const Integer& target, long m) {
    const long hm = mod_long(h, m);
    const long a = (hm * hm) % m;
    const long b = mod_long(2 * h - 1, m);
    const long want = mod_long(target, m);
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            if ((a * x % m * x + b * x % m * y + y * y) % m == want) return true;
    return false;
}

constexpr long kMaxLocalModulus = 64;

std::optional<long> first_local_obstruction(const Integer& h, const Integer& target) {
    for (long m = 2; m <= kMaxLocalModulus; ++m)
        if (!solvable_mod(h, target, m)) return m;
    return std::nullopt;
}

}  // namespace

QuadFormVerdict quadform_represents(const Integer& h, const Integer& d, const Integer& bound) {
    if (h == 0) throw Error(ErrorCode::ZeroH, "h must be nonzero");
    if (d == 0) throw Error(ErrorCode::ZeroD, "d must be nonzero");

    QuadFormVerdict v;
    const bool definite = h > 0;
    const Integer abs_d = abs(d);
    if (definite) {
        const Integer k = 4 * h - 1;
        v.box_x = floor_sqrt(4 * abs_d / k);
        v.box_y = floor_sqrt(4 * h * h * abs_d / k);
    } else {
        if (bound <= 0) throw Error(ErrorCode::InvalidArgument, "search bound must be positive");
        v.box_x = bound;
        v.box_y = bound;
    }

    // x = 0, 1, -1, 2, -2, ...
    for (Integer step = 0; step <= v.box_x; ++step) {
        for (int side = 0; side < (step == 0 ? 1 : 2); ++side) {
            const Integer x = side == 0 ? Integer(step) : Integer(-step);
            for (int sign : {1, -1}) {
                const Integer target = sign * d;
                for (const Integer& y : roots_in_y(h, x, target)) {
                    if (abs(y) > v.box_y) {
                        if (definite) throw std::logic_error("definite-form solution outside the proven box");
                        continue;
                    }
                    v.outcome = QuadOutcome::Witness;
                    v.x = x;
                    v.y = y;
                    v.sign = sign;
                    return v;
                }
            }
        }
    }

    if (definite) {
        v.outcome = QuadOutcome::Refuted;
        return v;
    }
    const auto plus = first_local_obstruction(h, d);
    const auto minus = first_local_obstruction(h, -d);
    if (plus && minus) {
        v.outcome = QuadOutcome::Refuted;
        v.local_moduli = {*plus, *minus};
    } else {
        v.outcome = QuadOutcome::Inconclusive;
    }
    return v;
}

std::string QuadFormVerdict::certificate() const {
    std::ostringstream os;
    switch (outcome) {
        case QuadOutcome::Witness:
            os << "witness (x, y) = (" << x << ", " << y << "), q(x, y) = " << (sign > 0 ? "+d" : "-d");
            break;
        case QuadOutcome::Refuted:
            if (local_moduli.empty()) {
                os << "no solution of q = +-d in the exhaustive box |x| <= " << box_x << ", |y| <= " << box_y;
            } else {
                os << "q = +d has no solution mod " << local_moduli[0] << ", q = -d has no solution mod "
                   << local_moduli[1];
            }
            break;
        case QuadOutcome::Inconclusive:
            os << "no solution with |x|, |y| <= " << box_x << " (indefinite form, search bounded)";
            break;
    }
    return os.str();
}

bool verify_quadform_verdict(const QuadFormVerdict& v, const Integer& h, const Integer& d) {
    if (v.outcome != QuadOutcome::Witness) return true;
    return (v.sign == 1 || v.sign == -1) && quadform_value(h, v.x, v.y) == v.sign * d;
}

// ---------------------------------------------------------------------------
// Residues modulo degree-two polynomials

LaurentPoly trefoil_polynomial() { return LaurentPoly::t(1) - LaurentPoly(1) + LaurentPoly::t(-1); }

ParityVerdict parity_criterion(const LaurentPoly& delta_prime) {
    ParityVerdict out;
    out.remainder = divmod_rational(delta_prime, trefoil_polynomial()).remainder;
    if (!out.remainder.is_constant()) return out;
    const Rational r = out.remainder.coeff(0);
    if (r.get_den() != 1) return out;
    Integer shifted = r.get_num() - 2;
    if (mpz_divisible_ui_p(shifted.get_mpz_t(), 4) == 0) return out;
    out.obstructs = true;
    out.m = shifted / 4;
    return out;
}

std::optional<Integer> constant_residue(const LaurentPoly& delta_prime, const LaurentPoly& delta) {
    const RationalDivMod dm = divmod_rational(delta_prime, delta);
    if (!dm.remainder.is_constant()) return std::nullopt;
    const Rational r = dm.remainder.coeff(0);
    if (r.get_den() != 1) return std::nullopt;
    const Integer d = r.get_num();
    if (!is_multiple(delta_prime - LaurentPoly(d), delta)) return std::nullopt;
    return d;
}

bool is_prime_or_one(const Integer& n) {
    if (n == 1) return true;
    if (n < 2) return false;
    for (Integer p = 2; p * p <= n; ++p)
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return false;
    return true;
}

// ---------------------------------------------------------------------------
// c conj(c) witnesses

bool verify_cc_bar_witness(const LaurentPoly& delta, const LaurentPoly& delta_prime, const CcBarWitness& w) {
    if (w.sign != 1 && w.sign != -1) return false;
    return is_multiple(delta_prime * Integer(w.sign) - w.c * w.c.bar(), delta);
}

namespace {

using Wide = __int128;
constexpr Wide kFastLimit = Wide(1) << 62;

struct Dense {
    int base = 0;  // exponent of c[0]
    std::vector<Wide> c;
};

std::optional<Dense> to_dense(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.base = p.min_exponent();
    d.c.assign(static_cast<std::size_t>(p.breadth()) + 1, 0);
    for (const auto& [e, coeff] : p.terms()) {
        if (!coeff.fits_slong_p()) return std::nullopt;
        const long v = coeff.get_si();
        if (Wide(v) >= kFastLimit || Wide(v) <= -kFastLimit) return std::nullopt;
        d.c[static_cast<std::size_t>(e - d.base)] = v;
    }
    return d;
}

// Integer long division from the top: every step must divide exactly. nullopt on overflow.
std::optional<bool> dense_is_multiple(std::vector<Wide>& r, const std::vector<Wide>& div) {
    std::size_t lo = 0;
    std::size_t hi = r.size();
    const Wide lead = div.back();
    for (;;) {
        while (hi > lo && r[hi - 1] == 0) --hi;
        while (lo < hi && r[lo] == 0) ++lo;
        if (lo == hi) return true;
        if (hi - lo < div.size()) return false;
        // both operands are below 2^62 here, so 64-bit division is exact
        const auto top = static_cast<std::int64_t>(r[hi - 1]);
        const auto lead64 = static_cast<std::int64_t>(lead);
        if (top % lead64 != 0) return false;
        const Wide f = top / lead64;
        const std::size_t start = hi - div.size();
        for (std::size_t k = 0; k < div.size(); ++k) {
            Wide& slot = r[start + k];
            slot -= f * div[k];
            if (slot >= kFastLimit || slot <= -kFastLimit) return std::nullopt;
        }
    }
}

LaurentPoly poly_from_coeffs(const std::vector<long>& a) {
    LaurentPoly::Terms terms;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) terms.emplace(static_cast<int>(i), Integer(a[i]));
    return LaurentPoly::from_terms(terms);
}

}  // namespace

std::optional<CcBarWitness> cc_bar_witness_search(const LaurentPoly& delta, const LaurentPoly& delta_prime,
                                                  int max_breadth, long max_coeff) {
    if (delta.is_zero()) throw Error(ErrorCode::DivisionByZero, "delta must be nonzero");
    if (max_breadth < 0 || max_coeff < 1) return std::nullopt;

    const auto dense_delta = to_dense(delta);
    const auto dense_prime = to_dense(delta_prime);
    const bool fast = dense_delta && dense_prime;

    // Coefficient orders: small magnitudes first, positive before negative.
    std::vector<long> middle{0};
    for (long k = 1; k <= max_coeff; ++k) {
        middle.push_back(k);
        middle.push_back(-k);
    }
    const std::vector<long> top(middle.begin() + 1, middle.end());

    auto exact_test = [&](const std::vector<long>& a, int sign) {
        const LaurentPoly c = poly_from_coeffs(a);
        return is_multiple(delta_prime * Integer(sign) - c * c.bar(), delta);
    };

    for (int b = 0; b <= max_breadth; ++b) {
        // Dense window covering both sign * delta' and c conj(c), whose exponents lie in [-b, b].
        int base = -b;
        int hi = b;
        if (fast && !dense_prime->c.empty()) {
            base = std::min(base, dense_prime->base);
            hi = std::max(hi, dense_prime->base + static_cast<int>(dense_prime->c.size()) - 1);
        }
        const auto width = static_cast<std::size_t>(hi - base + 1);
        std::vector<Wide> prime_window(width, 0);
        if (fast)
            for (std::size_t i = 0; i < dense_prime->c.size(); ++i)
                prime_window[static_cast<std::size_t>(dense_prime->base - base) + i] = dense_prime->c[i];
        std::vector<Wide> cc(2 * static_cast<std::size_t>(b) + 1);
        std::vector<Wide> work(width);

        // Odometer over positions; position 0 ranges over 1..max_coeff.
        std::vector<std::size_t> idx(static_cast<std::size_t>(b) + 1, 0);
        auto value = [&](int pos) -> long {
            if (pos == 0) return static_cast<long>(idx[0]) + 1;
            if (pos == b) return top[idx[pos]];
            return middle[idx[pos]];
        };
        auto limit = [&](int pos) -> std::size_t {
            if (pos == 0) return static_cast<std::size_t>(max_coeff);
            if (pos == b) return top.size();
            return middle.size();
        };
        std::vector<long> a(static_cast<std::size_t>(b) + 1);
        for (;;) {
            for (int p = 0; p <= b; ++p) a[p] = value(p);
            if (fast) {
                // coefficient of t^k in c conj(c) is sum_j a_{j+k} a_j
                for (int k = 0; k <= b; ++k) {
                    Wide sum = 0;
                    for (int j = 0; j + k <= b; ++j) sum += Wide(a[j + k]) * a[j];
                    cc[b + k] = sum;
                    cc[b - k] = sum;
                }
            }
            for (int sign : {1, -1}) {
                bool hit = false;
                std::optional<bool> quick;
                if (fast) {
                    for (std::size_t i = 0; i < width; ++i) work[i] = sign * prime_window[i];
                    for (int k = -b; k <= b; ++k) work[static_cast<std::size_t>(k - base)] -= cc[b + k];
                    quick = dense_is_multiple(work, dense_delta->c);
                }
                hit = quick ? *quick : exact_test(a, sign);
                if (hit) {
                    CcBarWitness w{poly_from_coeffs(a), sign};
                    if (!verify_cc_bar_witness(delta, delta_prime, w)) {
                        throw std::logic_error("c conj(c) witness failed exact re-verification");
                    }
                    return w;
                }
            }
            int pos = b;
            while (pos >= 0) {
                if (++idx[pos] < limit(pos)) break;
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

MurakamiVerdict murakami_obstruction(const Integer& d_knot, const Integer& d_other) {
    if (d_knot <= 0 || d_other <= 0) throw Error(ErrorCode::InvalidArgument, "knot determinants must be positive");
    if (mpz_even_p(d_knot.get_mpz_t()) || mpz_even_p(d_other.get_mpz_t())) {
        throw Error(ErrorCode::EvenDeterminant, "knot determinants are odd");
    }
    const Integer modulus = 2 * d_knot;
    Integer plus;
    Integer minus;
    const Integer diff = d_knot - d_other;
    const Integer neg_diff = -diff;
    mpz_fdiv_r(plus.get_mpz_t(), diff.get_mpz_t(), modulus.get_mpz_t());
    mpz_fdiv_r(minus.get_mpz_t(), neg_diff.get_mpz_t(), modulus.get_mpz_t());
    for (Integer d = 0; d < modulus; ++d) {
        const Integer lhs = (4 * d * d) % modulus;
        if (lhs == plus || lhs == minus) return {false, d};
    }
    return {true, 0};
}

int signature_bound(int sigma1, int sigma2) {
    if (sigma1 % 2 != 0 || sigma2 % 2 != 0) throw Error(ErrorCode::OddSignature, "knot signatures are even");
    return std::abs(sigma1 - sigma2) / 2;
}

// ---------------------------------------------------------------------------
// Report

KnotInput KnotInput::from_matrix(std::string label, const SeifertMatrix& v) {
    KnotInput in;
    in.label = std::move(label);
    in.alexander = knotdist::alexander(v);
    in.signature = knotdist::signature(v);
    in.matrix = v;
    return in;
}

KnotInput KnotInput::from_polynomial(std::string label, LaurentPoly delta) {
    if (delta.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial is not an Alexander polynomial");
    KnotInput in;
    in.label = std::move(label);
    in.alexander = std::move(delta);
    return in;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Obstructs:
            return "Obstructs";
        case Verdict::NoObstruction:
            return "NoObstruction";
        case Verdict::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

const CriterionResult* ObstructionReport::find(const std::string& name) const {
    for (const auto& c : criteria)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

struct UaKnowledge {
    bool one = false;
    bool every_realization = false;  // holds for every Seifert matrix with this polynomial
    std::string source;
};

UaKnowledge ua_knowledge(const KnotInput& in) {
    if (auto cert = ua_is_one(in.alexander)) return {true, true, cert->reason};
    if (in.ua && *in.ua == 1) return {true, false, "user-supplied u_a = 1"};
    if (in.matrix) {
        if (auto cert = ua_is_one(*in.matrix)) return {true, false, cert->reason};
    }
    return {};
}

std::optional<int> ua_upper(const KnotInput& in, const UaKnowledge& k) {
    if (in.ua) return *in.ua;
    if (k.one) return 1;
    return std::nullopt;
}

std::string orientation(int from, int to) { return "[" + std::to_string(from) + "->" + std::to_string(to) + "]"; }

}  // namespace

ObstructionReport build_report(const KnotInput& first, const KnotInput& second, const SearchBounds& bounds) {
    ObstructionReport rep;
    rep.label1 = first.label;
    rep.label2 = second.label;
    const KnotInput* inputs[2] = {&first, &second};

    for (const KnotInput* in : inputs) {
        if (in->alexander.is_zero()) throw Error(ErrorCode::InvalidArgument, in->label + ": zero polynomial");
        if (!satisfies_seifert_conditions(in->alexander)) {
            rep.warnings.push_back(in->label + ": " + to_string(in->alexander) +
                                   " is not an Alexander polynomial (needs symmetry and value 1 at t = 1)");
        }
        if (in->ua && *in->ua < 0) throw Error(ErrorCode::InvalidArgument, in->label + ": u_a must be nonnegative");
    }
    const bool equal = first.alexander == second.alexander;
    const UaKnowledge ua[2] = {ua_knowledge(first), ua_knowledge(second)};
    for (int i = 0; i < 2; ++i) {
        const KnotInput& in = *inputs[i];
        if (!in.ua) continue;
        if (*in.ua == 0 && in.alexander != LaurentPoly(1)) {
            throw Error(ErrorCode::Inconsistent, in.label + ": u_a = 0 requires a trivial Alexander polynomial");
        }
        if (*in.ua != 1 && ua[i].one && ua[i].source.rfind("user", 0) != 0) {
            throw Error(ErrorCode::Inconsistent, in.label + ": u_a = " + std::to_string(*in.ua) +
                                                     " contradicts certificate: " + ua[i].source);
        }
    }

    // Signature bound.
    int sig_bound = 0;
    {
        CriterionResult c{"signature", false, Verdict::Inconclusive, ""};
        if (first.signature && second.signature) {
            sig_bound = signature_bound(*first.signature, *second.signature);
            c.applicable = true;
            c.verdict = sig_bound >= 2 ? Verdict::Obstructs : Verdict::NoObstruction;
            c.certificate = "|(" + std::to_string(*first.signature) + ") - (" + std::to_string(*second.signature) +
                            ")| / 2 = " + std::to_string(sig_bound);
        } else {
            c.certificate = "signature not known for both inputs";
        }
        rep.criteria.push_back(c);
    }

    // Double branched cover obstruction, in both directions.
    const Integer det[2] = {determinant_of_knot(first.alexander), determinant_of_knot(second.alexander)};
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        CriterionResult c{"murakami" + orientation(i + 1, j + 1), false, Verdict::Inconclusive, ""};
        if (det[i] > 0 && det[j] > 0 && mpz_odd_p(det[i].get_mpz_t()) && mpz_odd_p(det[j].get_mpz_t())) {
            const MurakamiVerdict mv = murakami_obstruction(det[i], det[j]);
            c.applicable = true;
            if (mv.obstructs) {
                c.verdict = Verdict::Obstructs;
                c.certificate = "no d in [0, " + Integer(2 * det[i]).get_str() + ") with 4d^2 = +-(" + det[i].get_str() +
                                " - " + det[j].get_str() + ") mod " + Integer(2 * det[i]).get_str() +
                                "; u(K" + std::to_string(i + 1) + ") = d_G = 1 is impossible";
            } else {
                c.verdict = Verdict::NoObstruction;
                c.certificate = "d = " + mv.witness.get_str() + " satisfies 4d^2 = +-(" + det[i].get_str() + " - " +
                                det[j].get_str() + ") mod " + Integer(2 * det[i]).get_str();
            }
        } else {
            c.certificate = "knot determinants must be odd";
        }
        rep.criteria.push_back(c);
    }

    bool rho_two = false;
    bool dga_two = false;

    // 2 + 4m parity criterion against t - 1 + t^-1.
    {
        CriterionResult c{"parity", false, Verdict::Inconclusive, "neither polynomial is t-1+t^-1"};
        const LaurentPoly trefoil = trefoil_polynomial();
        for (int i = 0; i < 2 && !equal; ++i) {
            if (inputs[i]->alexander != trefoil) continue;
            const ParityVerdict pv = parity_criterion(inputs[1 - i]->alexander);
            if (pv.obstructs) {
                c.applicable = true;
                c.verdict = Verdict::Obstructs;
                c.certificate = "delta" + std::to_string(2 - i) + " mod (t-1+t^-1) = " + to_string(pv.remainder) +
                                " = 2 + 4*(" + pv.m.get_str() + "); rho = 2";
                rho_two = true;
            } else {
                c.certificate = "remainder " + to_string(pv.remainder) + " is not 2 mod 4";
            }
            break;
        }
        rep.criteria.push_back(c);
    }

    // Quadratic-form criterion, then the c conj(c) search, per orientation.
    std::optional<QuadOutcome> quad_outcome[2];
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        const LaurentPoly& dv = inputs[i]->alexander;
        const LaurentPoly& dw = inputs[j]->alexander;
        CriterionResult c{"quadratic-form" + orientation(i + 1, j + 1), false, Verdict::Inconclusive, ""};
        const auto h = degree_two_parameter(dv);
        const auto d = (h && !equal) ? constant_residue(dw, dv) : std::nullopt;
        if (equal) {
            c.certificate = "polynomials are equal";
        } else if (!h) {
            c.certificate = "delta" + std::to_string(i + 1) + " is not of the form h t + h t^-1 + 1 - 2h";
        } else if (!is_prime_or_one(abs(*h))) {
            c.certificate = "|h| = " + Integer(abs(*h)).get_str() + " is neither 1 nor prime";
        } else if (!d || *d == 0) {
            c.certificate = "delta" + std::to_string(j + 1) + " is not congruent to a nonzero integer mod delta" +
                            std::to_string(i + 1);
        } else if (!ua[i].one) {
            c.certificate = "u_a = 1 not established for input " + std::to_string(i + 1);
        } else {
            const QuadFormVerdict qv = quadform_represents(*h, *d, bounds.quad_bound);
            if (!verify_quadform_verdict(qv, *h, *d)) throw std::logic_error("quadratic-form witness failed");
            quad_outcome[i] = qv.outcome;
            c.applicable = true;
            c.verdict = qv.outcome == QuadOutcome::Refuted   ? Verdict::Obstructs
                        : qv.outcome == QuadOutcome::Witness ? Verdict::NoObstruction
                                                             : Verdict::Inconclusive;
            c.certificate = "h = " + h->get_str() + ", d = " + d->get_str() + ": " + qv.certificate() +
                            "; u_a = 1 from " + ua[i].source;
            if (qv.outcome == QuadOutcome::Refuted) {
                dga_two = true;
                if (ua[i].every_realization) rho_two = true;
            }
        }
        rep.criteria.push_back(c);
    }

    std::future<std::optional<CcBarWitness>> searches[2];
    for (int i = 0; i < 2; ++i) {
        if (equal || !ua[i].one) continue;
        searches[i] = std::async(std::launch::async, [&, i] {
            return cc_bar_witness_search(inputs[i]->alexander, inputs[1 - i]->alexander, bounds.cc_max_breadth,
                                         bounds.cc_max_coeff);
        });
    }
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        CriterionResult c{"cc-bar" + orientation(i + 1, j + 1), false, Verdict::Inconclusive, ""};
        if (equal) {
            c.certificate = "polynomials are equal";
        } else if (!ua[i].one) {
            c.certificate = "u_a = 1 not established for input " + std::to_string(i + 1);
        } else {
            c.applicable = true;
            const auto w = searches[i].get();
            if (w) {
                if (!verify_cc_bar_witness(inputs[i]->alexander, inputs[j]->alexander, *w)) {
                    throw std::logic_error("c conj(c) witness failed re-verification");
                }
                if (quad_outcome[i] == QuadOutcome::Refuted) {
                    throw std::logic_error("c conj(c) witness contradicts a refuted quadratic form");
                }
                c.verdict = Verdict::NoObstruction;
                c.certificate = "c = " + to_string(w->c) + ", " + (w->sign > 0 ? "+" : "-") + "delta" +
                                std::to_string(j + 1) + " = c conj(c) mod delta" + std::to_string(i + 1);
            } else {
                c.certificate = "no c with breadth <= " + std::to_string(bounds.cc_max_breadth) +
                                " and |coefficients| <= " + std::to_string(bounds.cc_max_coeff) +
                                " (search is not a refutation)";
            }
        }
        rep.criteria.push_back(c);
    }

    // Aggregate: d_G >= d_G^a >= rho.
    if (equal) {
        rep.rho_lower = 0;
        rep.rho_upper = 0;
        rep.dga_lower = 0;
    } else {
        rep.rho_lower = rho_two ? 2 : 1;
        rep.rho_upper = 2;
        rep.dga_lower = std::max(rep.rho_lower, dga_two ? 2 : 0);
    }
    const auto u1 = ua_upper(first, ua[0]);
    const auto u2 = ua_upper(second, ua[1]);
    if (u1 && u2) rep.dga_upper = *u1 + *u2;
    if (equal && first.matrix && second.matrix && *first.matrix == *second.matrix) rep.dga_upper = 0;
    if (rep.dga_upper) {
        rep.rho_upper = std::min(rep.rho_upper, *rep.dga_upper);
        if (*rep.dga_upper < rep.dga_lower) {
            throw Error(ErrorCode::Inconsistent, "supplied u_a values give d_G^a <= " + std::to_string(*rep.dga_upper) +
                                                     " but the certified lower bound is " +
                                                     std::to_string(rep.dga_lower));
        }
    }
    rep.dg_lower = std::max(rep.dga_lower, sig_bound);

    if (rep.rho_lower > rep.rho_upper || rep.rho_upper > 2 || rep.dga_lower < rep.rho_lower ||
        rep.dg_lower < rep.dga_lower) {
        throw std::logic_error("distance chain invariant violated");
    }
    return rep;
}

std::string serialize(const ObstructionReport& report) {
    std::ostringstream os;
    os << "pair: " << report.label1 << " | " << report.label2 << '\n';
    for (const auto& w : report.warnings) os << "warning: " << w << '\n';
    os << '\n';
    for (const auto& c : report.criteria) {
        os << "criterion: " << c.name << '\n';
        os << "applicable: " << (c.applicable ? "true" : "false") << '\n';
        os << "verdict: " << (c.applicable ? to_string(c.verdict) : "NotApplicable") << '\n';
        os << "certificate: " << c.certificate << "\n\n";
    }
    os << "rho_lower: " << report.rho_lower << '\n';
    os << "rho_upper: " << report.rho_upper << '\n';
    os << "dga_lower: " << report.dga_lower << '\n';
    os << "dga_upper: " << (report.dga_upper ? std::to_string(*report.dga_upper) : "unknown") << '\n';
    os << "dg_lower: " << report.dg_lower << '\n';
    return os.str();
}

std::string serialize_json(const ObstructionReport& report) {
    nlohmann::ordered_json j;
    j["pair"] = {report.label1, report.label2};
    j["warnings"] = report.warnings;
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& c : report.criteria) {
        j["criteria"].push_back({{"criterion", c.name},
                                 {"applicable", c.applicable},
                                 {"verdict", c.applicable ? to_string(c.verdict) : "NotApplicable"},
                                 {"certificate", c.certificate}});
    }
    j["rho_lower"] = report.rho_lower;
    j["rho_upper"] = report.rho_upper;
    j["dga_lower"] = report.dga_lower;
    j["dga_upper"] = report.dga_upper ? nlohmann::ordered_json(*report.dga_upper) : nlohmann::ordered_json(nullptr);
    j["dg_lower"] = report.dg_lower;
    return j.dump(2);
}

}  // namespace knotdist
