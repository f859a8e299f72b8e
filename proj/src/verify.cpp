#include "knotdist/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "knotdist/blanchfield.hpp"
#include "knotdist/obstruct.hpp"

namespace knotdist {

long GeneSource::draw(long lo, long hi) {
    if (rng_) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const long v = lo + static_cast<long>((*rng_)() % span);
        genes_.push_back(v);
        return v;
    }
    const long v = pos_ < genes_.size() ? genes_[pos_] : 0;
    ++pos_;
    return std::clamp(v, lo, hi);
}

SeifertMatrix random_seifert(GeneSource& g, std::size_t size, long max_entry) {
    IntMatrix v(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            // keep the entry that receives the +1 inside the range
            const bool bumped = i % 2 == 0 && j == i + 1;
            const long s = g.draw(-max_entry, bumped ? max_entry - 1 : max_entry);
            v(i, j) = s + (bumped ? 1 : 0);
            if (j != i) v(j, i) = s;
        }
    }
    if (g.draw(0, 1) == 1) v = v.transposed();
    return SeifertMatrix::validate(std::move(v));
}

IntMatrix random_unimodular(GeneSource& g, std::size_t size) {
    IntMatrix p = IntMatrix::identity(size);
    if (size == 0) return p;
    const long steps = g.draw(0, static_cast<long>(2 * size));
    for (long s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(g.draw(0, static_cast<long>(size) - 1));
        const auto j = static_cast<std::size_t>(g.draw(0, static_cast<long>(size) - 1));
        const long k = g.draw(-2, 2);
        if (i == j) {
            if (k < 0)
                for (std::size_t c = 0; c < size; ++c) p(i, c) = -p(i, c);
            continue;
        }
        for (std::size_t c = 0; c < size; ++c) p(i, c) += k * p(j, c);
    }
    return p;
}

LaurentPoly random_laurent(GeneSource& g, int min_exp, int max_exp, long max_coeff) {
    LaurentPoly p;
    for (int e = min_exp; e <= max_exp; ++e) p += LaurentPoly::monomial(Integer(g.draw(-max_coeff, max_coeff)), e);
    return p;
}

namespace {

std::vector<Integer> draw_vector(GeneSource& g, std::size_t n, long bound) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(g.draw(-bound, bound));
    return out;
}

std::string vec_string(const std::vector<Integer>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "]";
}

std::string genome_string(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

struct Border {
    SeifertMatrix inner;
    int eps = 1;
    Integer x;
    std::vector<Integer> m, n;

    std::string describe() const {
        return "inner = " + to_string(inner.entries()) + ", eps = " + std::to_string(eps) + ", x = " + x.get_str() +
               ", M = " + vec_string(m) + ", N = " + vec_string(n);
    }
};

Border draw_border(GeneSource& g, long max_half_size) {
    Border b;
    const auto size = static_cast<std::size_t>(2 * g.draw(0, max_half_size));
    b.inner = random_seifert(g, size);
    b.eps = g.draw(0, 1) == 0 ? 1 : -1;
    b.x = g.draw(-3, 3);
    b.m = draw_vector(g, size, 3);
    b.n = draw_vector(g, size, 3);
    return b;
}

std::optional<std::string> check_eq5(GeneSource& g) {
    const Border b = draw_border(g, 2);
    const SeifertMatrix w = unknotting_border(b.inner, b.eps, b.x, b.m, b.n, BorderVariant::APlus);
    const LaurentPoly t = LaurentPoly::t(1);
    const LaurentPoly one_minus_t = LaurentPoly(1) - t;
    const std::size_t n = b.inner.size();

    PolyMatrix block(n + 1, n + 1);
    block(0, 0) = LaurentPoly(b.x) * one_minus_t;
    for (std::size_t j = 0; j < n; ++j) {
        block(0, j + 1) = LaurentPoly(b.m[j]) - t * LaurentPoly(b.n[j]);
        block(j + 1, 0) = LaurentPoly(b.n[j]) - t * LaurentPoly(b.m[j]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) block(i + 1, j + 1) = LaurentPoly(b.inner(i, j)) - t * LaurentPoly(b.inner(j, i));

    const LaurentPoly lhs = determinant(pairing_matrix(w), DetMethod::Interpolation);
    const LaurentPoly rhs = one_minus_t * Integer(b.eps) * determinant(block, DetMethod::Bareiss) +
                            t * determinant(pairing_matrix(b.inner), DetMethod::Bareiss);
    if (lhs == rhs) return std::nullopt;
    return b.describe() + ": det(W - tW^T) = " + to_string(lhs) + " but the expansion gives " + to_string(rhs);
}

std::string inv_string(const KnotInvariants& k) {
    return "(" + to_string(k.alexander) + ", " + std::to_string(k.signature) + ", " + k.determinant.get_str() + ")";
}

std::optional<std::string> check_sequiv(GeneSource& g) {
    const auto size = static_cast<std::size_t>(2 * g.draw(1, 3));
    const SeifertMatrix v = random_seifert(g, size);
    const KnotInvariants base = invariants(v);
    const std::string where = "V = " + to_string(v.entries());

    if (!satisfies_seifert_conditions(base.alexander)) {
        return where + ": delta = " + to_string(base.alexander) + " violates the Seifert conditions";
    }

    const IntMatrix p = random_unimodular(g, size);
    const SeifertMatrix moved = congruent_transform(v, p);
    if (!(invariants(moved) == base)) {
        return where + ", P = " + to_string(p) + ": congruence changed " + inv_string(base) + " to " +
               inv_string(invariants(moved));
    }

    const BorderKind kind = g.draw(0, 1) == 0 ? BorderKind::Row : BorderKind::Column;
    const Integer x = g.draw(-3, 3);
    const auto m = draw_vector(g, size, 3);
    const auto n = draw_vector(g, size, 3);
    const SeifertMatrix big = enlarge(v, kind, x, m, n);
    const std::string border = std::string(kind == BorderKind::Row ? "row" : "column") + " border x = " + x.get_str() +
                               ", M = " + vec_string(m) + ", N = " + vec_string(n);
    if (!(invariants(big) == base)) {
        return where + ", " + border + ": enlargement changed " + inv_string(base) + " to " + inv_string(invariants(big));
    }
    const auto back = try_reduce(big);
    if (!back || *back != v) return where + ", " + border + ": reduction does not undo the enlargement";

    const int eps = g.draw(0, 1) == 0 ? 1 : -1;
    const Integer bx = g.draw(-3, 3);
    const auto bm = draw_vector(g, size, 3);
    const auto bn = draw_vector(g, size, 3);
    const KnotInvariants ref = invariants(unknotting_border(v, eps, bx, bm, bn, BorderVariant::APlus));
    for (BorderVariant variant : {BorderVariant::AMinus, BorderVariant::BPlus, BorderVariant::BMinus}) {
        const KnotInvariants other = invariants(unknotting_border(v, eps, bx, bm, bn, variant));
        if (!(other == ref)) {
            return where + ", eps = " + std::to_string(eps) + ", x = " + bx.get_str() + ", M = " + vec_string(bm) +
                   ", N = " + vec_string(bn) + ": variant " + to_string(variant) + " gives " + inv_string(other) +
                   ", a+ gives " + inv_string(ref);
        }
    }
    return std::nullopt;
}

ModuleElement draw_element(GeneSource& g, std::size_t size) {
    ModuleElement e;
    for (std::size_t i = 0; i < size; ++i) e.coords.push_back(random_laurent(g, -1, 1, 2));
    return e;
}

std::string element_string(const ModuleElement& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.coords.size(); ++i) s += (i ? ", " : "") + to_string(e.coords[i]);
    return s + ")";
}

std::optional<std::string> check_sesquilinear(GeneSource& g) {
    const auto size = static_cast<std::size_t>(2 * g.draw(1, 2));
    const SeifertMatrix v = random_seifert(g, size);
    const ModuleElement x = draw_element(g, size);
    const ModuleElement y = draw_element(g, size);
    const LaurentPoly a = random_laurent(g, -1, 1, 2);
    const LaurentPoly b = random_laurent(g, -1, 1, 2);
    const std::string where = "V = " + to_string(v.entries()) + ", x = " + element_string(x) +
                              ", y = " + element_string(y) + ", a = " + to_string(a) + ", b = " + to_string(b);

    const BlanchfieldForm form(v);
    const TorsionFraction base = form.pairing(x, y);
    const TorsionFraction scaled = form.pairing(x.scaled(a), y.scaled(b));
    const TorsionFraction expected{a * b.bar() * base.num, base.den};
    if (!fractions_equal(scaled, expected)) {
        return where + ": beta(ax, by) = " + to_string(scaled) + " but a conj(b) beta(x, y) = " + to_string(expected);
    }
    const TorsionFraction swapped = form.pairing(y, x);
    if (!fractions_equal(swapped, conjugate(base))) {
        return where + ": beta(y, x) = " + to_string(swapped) + " is not conj(beta(x, y)) = " + to_string(conjugate(base));
    }
    if (!is_integral({alexander(v) * base.num, base.den})) {
        return where + ": delta * beta(x, y) is not in Z[t, t^-1]";
    }
    return std::nullopt;
}

std::optional<std::string> check_main_theorem(GeneSource& g) {
    const Border b = draw_border(g, 2);
    const SeifertMatrix w = unknotting_border(b.inner, b.eps, b.x, b.m, b.n, BorderVariant::APlus);
    if (!main_theorem_check(w, b.inner)) {
        return b.describe() + ": beta(a1, a1) = " + to_string(first_generator_self_pairing(w)) +
               " differs from eps delta_inner / delta = " + to_string(Integer(b.eps) * alexander(b.inner)) + " / " +
               to_string(alexander(w));
    }
    const LaurentPoly dw = alexander(w);
    const LaurentPoly di = alexander(b.inner);
    const TorsionFraction right{di * Integer(b.eps), dw};
    const TorsionFraction wrong{di * Integer(-b.eps), dw};
    if (!fractions_equal(right, wrong) && fractions_equal(first_generator_self_pairing(w), wrong)) {
        return b.describe() + ": self-pairing also matches the opposite sign";
    }
    return std::nullopt;
}

std::optional<std::string> check_ring_axioms(GeneSource& g) {
    const LaurentPoly a = random_laurent(g, -3, 3, 5);
    const LaurentPoly b = random_laurent(g, -3, 3, 5);
    const LaurentPoly c = random_laurent(g, -3, 3, 5);
    const std::string where = "a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c);
    auto fail = [&](const std::string& what) { return std::optional<std::string>(where + ": " + what); };

    if ((a + b) + c != a + (b + c)) return fail("addition is not associative");
    if (a + b != b + a) return fail("addition is not commutative");
    if (a * b != b * a) return fail("multiplication is not commutative");
    if ((a * b) * c != a * (b * c)) return fail("multiplication is not associative");
    if (a * (b + c) != a * b + a * c) return fail("distributivity fails");
    if (!(a - a).is_zero()) return fail("a - a is not zero");
    if ((a * b).bar() != a.bar() * b.bar()) return fail("bar is not multiplicative");
    if (a.bar().bar() != a) return fail("bar is not an involution");
    if (parse_laurent(to_string(a)) != a) return fail("text round trip fails for a");
    if (eval_int(a * b, 2) != eval_int(a, 2) * eval_int(b, 2)) return fail("evaluation at 2 is not multiplicative");
    if (!b.is_zero()) {
        const RationalDivMod dm = divmod_rational(a, b);
        if (dm.quotient * to_rational(b) + dm.remainder != to_rational(a)) return fail("a != q b + r");
        if (!is_multiple(a * b, b)) return fail("a b is not a multiple of b");
        const auto q = exact_quotient(a * b, b);
        if (!q || *q != a) return fail("exact quotient of a b by b is not a");
    }
    return std::nullopt;
}

}  // namespace

SuiteResult run_property(const std::string& name, const PropertyCheck& check, std::uint64_t seed, std::size_t iters) {
    SuiteResult r{name, 0, 0, ""};
    std::mt19937_64 rng(seed);
    auto run = [&](GeneSource& g) -> std::optional<std::string> {
        try {
            return check(g);
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };
    for (std::size_t i = 0; i < iters; ++i) {
        GeneSource g(rng);
        auto failure = run(g);
        if (!failure) {
            ++r.passed;
            continue;
        }
        ++r.failed;
        // Greedy shrinking toward zero, gene by gene.
        std::vector<long> genome = g.genes();
        bool progress = true;
        std::size_t budget = 2000;
        while (progress && budget > 0) {
            progress = false;
            for (std::size_t k = 0; k < genome.size() && budget > 0; ++k) {
                const long cur = genome[k];
                for (long cand : {0L, cur / 2, cur > 0 ? cur - 1 : cur + 1}) {
                    if (cand == cur || budget == 0) continue;
                    --budget;
                    std::vector<long> trial = genome;
                    trial[k] = cand;
                    GeneSource replay(trial);
                    if (auto f = run(replay)) {
                        genome = std::move(trial);
                        failure = std::move(f);
                        progress = true;
                        break;
                    }
                }
            }
        }
        r.counterexample = "iteration " + std::to_string(i) + ", genome " + genome_string(genome) + "\n" + *failure;
        break;
    }
    return r;
}

namespace {

SuiteResult run_quadform_oracle(std::uint64_t seed, std::size_t iters) {
    SuiteResult r{"quadform-oracle", 0, 0, ""};
    constexpr long kBox = 60;
    constexpr long kMaxD = 50;
    auto brute = [](long h) {
        std::set<long> values;
        for (long x = -kBox; x <= kBox; ++x)
            for (long y = -kBox; y <= kBox; ++y) {
                const long q = h * h * x * x + (2 * h - 1) * x * y + y * y;
                if (q >= -kMaxD && q <= kMaxD) values.insert(q);
            }
        return values;
    };
    auto record = [&](bool ok, const std::string& what) {
        if (ok) {
            ++r.passed;
        } else {
            ++r.failed;
            if (r.counterexample.empty()) r.counterexample = what;
        }
    };

    for (long h : {1L, 2L, 3L, 5L, 7L}) {
        const std::set<long> values = brute(h);
        for (long d = -kMaxD; d <= kMaxD; ++d) {
            if (d == 0) continue;
            const bool oracle = values.count(d) || values.count(-d);
            const QuadFormVerdict v = quadform_represents(h, d, 10000);
            const std::string where = "h = " + std::to_string(h) + ", d = " + std::to_string(d) + ": ";
            if (v.outcome == QuadOutcome::Witness) {
                record(oracle && verify_quadform_verdict(v, h, d), where + "witness " + v.certificate() +
                                                                       " disagrees with brute force");
            } else {
                record(v.outcome == QuadOutcome::Refuted && !oracle, where + "verdict " + v.certificate() +
                                                                          " but brute force finds a solution");
            }
        }
    }

    // Indefinite forms: witnesses must substitute, congruence refutations must survive brute force.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < iters; ++i) {
        const long h = -1 - static_cast<long>(rng() % 7);
        long d = static_cast<long>(rng() % (2 * kMaxD + 1)) - kMaxD;
        if (d == 0) d = 1;
        const QuadFormVerdict v = quadform_represents(h, d, 200);
        const std::string where = "h = " + std::to_string(h) + ", d = " + std::to_string(d) + ": ";
        if (v.outcome == QuadOutcome::Witness) {
            record(verify_quadform_verdict(v, h, d), where + "witness does not substitute");
        } else if (v.outcome == QuadOutcome::Refuted) {
            const std::set<long> values = brute(h);
            record(!values.count(d) && !values.count(-d), where + "refuted but brute force finds a solution");
        } else {
            ++r.passed;
        }
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"eq5",          "sequiv",          "sesquilinear",
                                                "main-theorem", "quadform-oracle", "ring-axioms"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t iters) {
    if (name == "eq5") return run_property(name, check_eq5, seed, iters);
    if (name == "sequiv") return run_property(name, check_sequiv, seed, iters);
    if (name == "sesquilinear") return run_property(name, check_sesquilinear, seed, iters);
    if (name == "main-theorem") return run_property(name, check_main_theorem, seed, iters);
    if (name == "ring-axioms") return run_property(name, check_ring_axioms, seed, iters);
    if (name == "quadform-oracle") return run_quadform_oracle(seed, iters);
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::string format(const SuiteResult& r) {
    std::ostringstream os;
    os << "suite: " << r.suite << '\n' << "passed: " << r.passed << '\n' << "failed: " << r.failed << '\n';
    if (!r.counterexample.empty()) os << "counterexample: " << r.counterexample << '\n';
    return os.str();
}

}  // namespace knotdist
