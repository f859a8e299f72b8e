#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "knotdist/seifert.hpp"
#include "knotdist/verify.hpp"

using namespace knotdist;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }
SeifertMatrix S(IntMatrix m) { return SeifertMatrix::validate(std::move(m)); }

const SeifertMatrix trefoil = S(IntMatrix{{-1, 1}, {0, -1}});
const SeifertMatrix figure8 = S(IntMatrix{{1, 1}, {0, -1}});

// Signature oracle: the characteristic polynomial of a symmetric matrix is
// real-rooted, so Descartes' rule counts its positive and negative roots exactly.
int descartes_signature(const IntMatrix& a) {
    const std::size_t n = a.rows();
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = LaurentPoly(Integer(-a(i, j))) + (i == j ? LaurentPoly::t(1) : LaurentPoly());
    const LaurentPoly chi = determinant(m, DetMethod::Laplace);
    auto changes = [](const LaurentPoly& p) {
        int count = 0;
        int last = 0;
        for (const auto& [e, c] : p.terms()) {
            const int s = sgn(c);
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    LaurentPoly flipped;
    for (const auto& [e, c] : chi.terms()) flipped += LaurentPoly::monomial(e % 2 ? Integer(-c) : c, e);
    return changes(chi) - changes(flipped);
}

IntMatrix symmetrized(const SeifertMatrix& v) { return v.entries() + v.entries().transposed(); }

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(S(IntMatrix{{-1, 1}, {0, -1}}));
    CHECK(S(IntMatrix()).size() == 0);
    try {
        S(IntMatrix{{0, 0}, {0, 0}});
        FAIL("accepted a singular antisymmetrization");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotUnimodularAntisymmetrization);
    }
    try {
        S(IntMatrix{{1}});
        FAIL("accepted an odd size");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OddSize);
        CHECK(std::string(e.what()).find("size must be even") != std::string::npos);
    }
    // det(V - V^T) = 4
    CHECK_THROWS_AS(S(IntMatrix{{0, 2}, {0, 0}}), Error);
}

TEST_CASE("Alexander polynomial") {
    CHECK(alexander(trefoil) == P("t+t^-1-1"));
    CHECK(alexander(SeifertMatrix()) == LaurentPoly(1));
    CHECK(alexander(figure8) == P("-t+3-t^-1"));
    for (DetMethod method : {DetMethod::Bareiss, DetMethod::Laplace}) CHECK(alexander(trefoil, method) == alexander(trefoil));
}

TEST_CASE("signature and determinant") {
    CHECK(signature(trefoil) == -2);
    CHECK(signature(SeifertMatrix()) == 0);
    CHECK(signature(figure8) == 0);
    CHECK(determinant_of_knot(trefoil) == 3);
    CHECK(determinant_of_knot(SeifertMatrix()) == 1);
    CHECK(determinant_of_knot(figure8) == 5);
    CHECK(determinant_of_knot(P("-3t^2+12t-17+12t^-1-3t^-2")) == 47);
    // zero pivots on the diagonal
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(signature(IntMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(signature(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}) == 1);
}

TEST_CASE("random matrices: Seifert conditions and signature oracle") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        GeneSource g(rng);
        const std::size_t size = 2 * (1 + k % 3);
        const SeifertMatrix v = random_seifert(g, size);
        const LaurentPoly delta = alexander(v);
        REQUIRE(is_bar_symmetric(delta));
        REQUIRE(eval_int(delta, 1) == 1);
        REQUIRE(signature(v) % 2 == 0);
        REQUIRE(mpz_odd_p(determinant_of_knot(v).get_mpz_t()));
        if (size <= 4) {
            CAPTURE(to_string(v.entries()));
            REQUIRE(signature(v) == descartes_signature(symmetrized(v)));
        }
    }
}

TEST_CASE("congruence") {
    CHECK(congruent_transform(trefoil, IntMatrix::identity(2)) == trefoil);
    const SeifertMatrix v = S(IntMatrix{{1, 1}, {0, 1}});
    CHECK(congruent_transform(v, IntMatrix{{1, 0}, {1, 1}}).entries() == IntMatrix{{1, 2}, {1, 3}});
    try {
        congruent_transform(v, IntMatrix{{2, 0}, {0, 1}});
        FAIL("accepted a non-unimodular transform");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotUnimodular);
    }
    CHECK_THROWS_AS(congruent_transform(v, IntMatrix::identity(3)), Error);
}

TEST_CASE("enlargement and reduction") {
    const std::vector<Integer> none;
    const SeifertMatrix e = enlarge(SeifertMatrix(), BorderKind::Row, 5, none, none);
    CHECK(e.entries() == IntMatrix{{0, 0}, {1, 5}});
    CHECK(alexander(e) == LaurentPoly(1));
    const SeifertMatrix c = enlarge(SeifertMatrix(), BorderKind::Column, 0, none, none);
    CHECK(c.entries() == IntMatrix{{0, 1}, {0, 0}});
    CHECK(alexander(c) == LaurentPoly(1));

    const std::vector<Integer> m{2, -1};
    const std::vector<Integer> n{0, 3};
    for (BorderKind kind : {BorderKind::Row, BorderKind::Column}) {
        const SeifertMatrix big = enlarge(trefoil, kind, -2, m, n);
        CHECK(big.size() == 4);
        CHECK(alexander(big) == P("t+t^-1-1"));
        REQUIRE(try_reduce(big).has_value());
        CHECK(*try_reduce(big) == trefoil);
    }
    CHECK(try_reduce(e).value() == SeifertMatrix());
    CHECK_FALSE(try_reduce(trefoil).has_value());
    CHECK_THROWS_AS(enlarge(trefoil, BorderKind::Row, 0, none, none), Error);
}

TEST_CASE("algebraic unknotting borders") {
    const std::vector<Integer> none;
    const SeifertMatrix a = unknotting_border(SeifertMatrix(), -1, -1, none, none, BorderVariant::APlus);
    CHECK(a.entries() == IntMatrix{{-1, 0}, {1, -1}});
    CHECK(alexander(a) == P("t+t^-1-1"));
    const SeifertMatrix b = unknotting_border(SeifertMatrix(), 1, 0, none, none, BorderVariant::BPlus);
    CHECK(b.entries() == IntMatrix{{1, 1}, {0, 0}});
    CHECK(alexander(b) == LaurentPoly(1));
    CHECK(unknotting_border(SeifertMatrix(), 1, 2, none, none, BorderVariant::AMinus).entries() == IntMatrix{{1, 0}, {-1, 2}});
    CHECK(unknotting_border(SeifertMatrix(), 1, 2, none, none, BorderVariant::BMinus).entries() == IntMatrix{{1, -1}, {0, 2}});
    try {
        unknotting_border(SeifertMatrix(), 0, 0, none, none, BorderVariant::APlus);
        FAIL("accepted epsilon 0");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadEpsilon);
    }
    CHECK_THROWS_AS(unknotting_border(trefoil, 1, 0, none, none, BorderVariant::APlus), Error);
    CHECK(to_string(BorderVariant::APlus) == "a+");
}

TEST_CASE("definite 2x2 normal form") {
    auto check_form = [](const SeifertMatrix& v, const DefiniteNormalForm& f) {
        const IntMatrix lhs = f.transform * v.entries() * f.transform.transposed();
        IntMatrix signed_lhs = lhs;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) signed_lhs(i, j) *= f.sign;
        CHECK(signed_lhs == f.normal.entries());
        CHECK(abs(determinant(f.transform)) == 1);
        CHECK(f.normal(0, 0) == f.a);
        CHECK(f.normal(0, 1) == f.b + 1);
        CHECK(f.normal(1, 0) == f.b);
        CHECK(f.normal(1, 1) == f.c);
        CHECK(2 * f.b + 1 > 0);
        CHECK(2 * f.b + 1 <= f.a);
        CHECK(2 * f.b + 1 <= f.c);
    };
    const DefiniteNormalForm t = definite_2x2_normal_form(trefoil);
    CHECK(t.sign == -1);
    CHECK(t.normal.entries() == IntMatrix{{1, 1}, {0, 1}});
    check_form(trefoil, t);

    const SeifertMatrix swapped = S(IntMatrix{{1, 0}, {1, 1}});
    const DefiniteNormalForm s = definite_2x2_normal_form(swapped);
    CHECK(s.sign == 1);
    CHECK(s.a == 1);
    CHECK(s.b == 0);
    CHECK(s.c == 1);
    check_form(swapped, s);

    try {
        definite_2x2_normal_form(figure8);
        FAIL("figure-eight matrix is indefinite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDefinite);
    }

    // random definite matrices hidden behind congruences
    std::mt19937_64 rng(8);
    int seen = 0;
    for (int k = 0; k < 400 && seen < 100; ++k) {
        GeneSource g(rng);
        const SeifertMatrix v = congruent_transform(random_seifert(g, 2), random_unimodular(g, 2));
        const IntMatrix sym = symmetrized(v);
        if (determinant(sym) <= 0) continue;
        ++seen;
        check_form(v, definite_2x2_normal_form(v));
    }
    CHECK(seen > 20);
}

TEST_CASE("algebraic unknotting number one certificates") {
    CHECK(ua_is_one(trefoil).has_value());
    CHECK(ua_is_one(P("2t+2t^-1-3")).has_value());
    CHECK_FALSE(ua_is_one(P("-3t^2+12t-17+12t^-1-3t^-2")).has_value());
    CHECK_FALSE(ua_is_one(P("4t+4t^-1-7")).has_value());
    CHECK(degree_two_parameter(P("5t+5t^-1-9")) == Integer(5));
    CHECK(degree_two_parameter(P("-t+3-t^-1")) == Integer(-1));
    CHECK_FALSE(degree_two_parameter(P("t^2+t^-2-1")).has_value());
    CHECK_FALSE(degree_two_parameter(LaurentPoly(1)).has_value());
    // matrix-level: positive definite with det V = 1
    CHECK(ua_is_one(S(IntMatrix{{1, 1}, {0, 1}})).has_value());
    // the certificate never mentions anything but the reason
    CHECK_FALSE(ua_is_one(trefoil)->reason.empty());
}
