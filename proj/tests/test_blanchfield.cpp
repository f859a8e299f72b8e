#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "knotdist/blanchfield.hpp"
#include "knotdist/verify.hpp"

using namespace knotdist;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }
SeifertMatrix S(IntMatrix m) { return SeifertMatrix::validate(std::move(m)); }

const SeifertMatrix trefoil = S(IntMatrix{{-1, 1}, {0, -1}});
const LaurentPoly t_minus_one = LaurentPoly::t(1) - LaurentPoly(1);

// Cramer's rule: solve (V - tV^T) z = conj(w) column by column with determinants,
// without touching the adjugate.
TorsionFraction cramer_pairing(const SeifertMatrix& v, const ModuleElement& x, const ModuleElement& y) {
    const PolyMatrix a = pairing_matrix(v);
    const std::size_t n = a.rows();
    LaurentPoly num;
    for (std::size_t i = 0; i < n; ++i) {
        PolyMatrix ai = a;
        for (std::size_t r = 0; r < n; ++r) ai(r, i) = y.coords[r].bar();
        num += x.coords[i] * determinant(ai, DetMethod::Laplace);
    }
    return {t_minus_one * num, determinant(a, DetMethod::Laplace)};
}

ModuleElement random_element(std::mt19937_64& rng, std::size_t n) {
    ModuleElement e;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly c;
        for (int k = -1; k <= 1; ++k) c += LaurentPoly::monomial(Integer(static_cast<long>(rng() % 5) - 2), k);
        e.coords.push_back(c);
    }
    return e;
}

}  // namespace

TEST_CASE("presentation") {
    const ModulePresentation p = presentation(trefoil);
    CHECK(p.matrix == PolyMatrix{{P("-t+1"), P("t")}, {P("-1"), P("-t+1")}});
    CHECK(determinant(p.matrix) == P("t^2-t+1"));
    CHECK(determinant(p.matrix) == P("t") * alexander(trefoil));
    try {
        presentation(SeifertMatrix());
        FAIL("empty matrix has no presentation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyMatrix);
    }
    std::mt19937_64 rng(1);
    for (int k = 0; k < 500; ++k) {
        GeneSource g(rng);
        REQUIRE_NOTHROW(presentation(random_seifert(g, 2 * (1 + k % 3))));
    }
}

TEST_CASE("fraction equality in Q(L)/L") {
    CHECK(fractions_equal({P("t^2-2t+1"), P("t^2-t+1")}, {LaurentPoly(-1), P("t+t^-1-1")}));
    CHECK(fractions_equal({LaurentPoly(), P("t+3")}, {P("t+3"), P("t+3")}));
    CHECK_FALSE(fractions_equal({LaurentPoly(1), P("t+t^-1-1")}, {LaurentPoly(2), P("t+t^-1-1")}));
    CHECK(is_integral({P("2t^2-2t+2"), P("t+t^-1-1")}));
    CHECK_FALSE(is_integral({LaurentPoly(1), LaurentPoly(2)}));
    CHECK(to_string(TorsionFraction{LaurentPoly(-1), P("t+t^-1-1")}) == "-1 / t-1+t^-1");
}

TEST_CASE("trefoil pairing") {
    const auto e1 = ModuleElement::basis(2, 0);
    const TorsionFraction b = pairing(trefoil, e1, e1);
    CHECK(b.num == t_minus_one * t_minus_one);
    CHECK(b.den == P("t^2-t+1"));
    CHECK(fractions_equal(b, {LaurentPoly(-1), P("t+t^-1-1")}));
    CHECK(fractions_equal(diagonal_pairing_matrix(trefoil)(0, 0), {LaurentPoly(-1), P("t+t^-1-1")}));

    const ModuleElement zero{std::vector<LaurentPoly>(2)};
    CHECK(is_integral(pairing(trefoil, zero, e1)));
    const ModuleElement v{{P("1+t"), P("-2")}};
    const ModuleElement w{{P("t^-1"), P("3")}};
    CHECK(fractions_equal(pairing(trefoil, v.scaled(LaurentPoly::t(1)), w.scaled(LaurentPoly::t(1))),
                          pairing(trefoil, v, w)));
    CHECK_THROWS_AS(pairing(trefoil, ModuleElement::basis(4, 0), e1), Error);
}

TEST_CASE("adjugate route agrees with Cramer's rule; Hermitian; annihilated by delta") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 40; ++k) {
        GeneSource g(rng);
        const std::size_t n = 2 * (1 + k % 2);
        const SeifertMatrix v = random_seifert(g, n);
        const BlanchfieldForm form(v);
        const ModuleElement x = random_element(rng, n);
        const ModuleElement y = random_element(rng, n);
        const TorsionFraction b = form.pairing(x, y);
        CAPTURE(to_string(v.entries()));
        REQUIRE(b.den == determinant(pairing_matrix(v), DetMethod::Laplace));
        REQUIRE(fractions_equal(b, cramer_pairing(v, x, y)));
        REQUIRE(fractions_equal(form.pairing(y, x), conjugate(b)));
        REQUIRE(is_integral({alexander(v) * b.num, b.den}));

        const auto gram = form.gram();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) REQUIRE(fractions_equal(gram(j, i), conjugate(gram(i, j))));
    }
}

TEST_CASE("both adjugate methods give the same form") {
    std::mt19937_64 rng(4);
    GeneSource g(rng);
    const SeifertMatrix v = random_seifert(g, 4);
    const BlanchfieldForm laplace(v, DetMethod::Laplace);
    const BlanchfieldForm interp(v, DetMethod::Interpolation);
    CHECK(laplace.adjugate() == interp.adjugate());
}

TEST_CASE("enlargement keeps the trefoil's torsion on the embedded generators") {
    const std::vector<Integer> zero(2, 0);
    const SeifertMatrix big = enlarge(trefoil, BorderKind::Row, 0, zero, zero);
    const auto small = diagonal_pairing_matrix(trefoil);
    const auto large = diagonal_pairing_matrix(big);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(fractions_equal(large(i + 2, j + 2), small(i, j)));
}

TEST_CASE("first generator of an a+ border") {
    const std::vector<Integer> none;
    const SeifertMatrix w = unknotting_border(SeifertMatrix(), -1, -1, none, none, BorderVariant::APlus);
    CHECK(main_theorem_check(w, SeifertMatrix()));
    CHECK(fractions_equal(first_generator_self_pairing(w), {LaurentPoly(-1), P("t+t^-1-1")}));
    CHECK(a_plus_border_epsilon(w, SeifertMatrix()) == -1);
    try {
        main_theorem_check(trefoil, SeifertMatrix());
        FAIL("trefoil matrix is not an a+ border");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
    }

    std::mt19937_64 rng(12);
    for (int k = 0; k < 200; ++k) {
        GeneSource g(rng);
        const std::size_t n = 2 * static_cast<std::size_t>(g.draw(0, 2));
        const SeifertMatrix inner = random_seifert(g, n);
        const int eps = g.draw(0, 1) ? 1 : -1;
        std::vector<Integer> m, nn;
        for (std::size_t i = 0; i < n; ++i) {
            m.emplace_back(g.draw(-3, 3));
            nn.emplace_back(g.draw(-3, 3));
        }
        const SeifertMatrix outer = unknotting_border(inner, eps, g.draw(-3, 3), m, nn, BorderVariant::APlus);
        REQUIRE(main_theorem_check(outer, inner));
        // opposite sign only matches when both signs coincide mod L
        const TorsionFraction plus{alexander(inner) * Integer(eps), alexander(outer)};
        const TorsionFraction minus{alexander(inner) * Integer(-eps), alexander(outer)};
        if (!fractions_equal(plus, minus)) REQUIRE_FALSE(fractions_equal(first_generator_self_pairing(outer), minus));
    }
}
