#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "knotdist/poly_det.hpp"

using namespace knotdist;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

// Leibniz formula over all permutations, independent of every production route.
template <class T>
T leibniz(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term(1);
        for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
        if (inversions % 2) total = total - term;
        else total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int e = -1; e <= 1; ++e)
                m(i, j) += LaurentPoly::monomial(Integer(static_cast<long>(rng() % 7) - 3), e);
    return m;
}

}  // namespace

TEST_CASE("integer determinant") {
    CHECK(determinant(IntMatrix()) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {-1, 0}}) == 1);
    CHECK(determinant(IntMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(determinant(IntMatrix{{0, 2, 1}, {3, 0, 0}, {1, 1, 1}}) == leibniz(IntMatrix{{0, 2, 1}, {3, 0, 0}, {1, 1, 1}}));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + rng() % 6;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 11) - 5;
        REQUIRE(determinant(m) == leibniz(m));
    }
}

TEST_CASE("polynomial determinant: three routes against Leibniz") {
    const PolyMatrix tref{{P("1-t"), P("t")}, {P("-1"), P("1-t")}};
    for (DetMethod method : {DetMethod::Interpolation, DetMethod::Bareiss, DetMethod::Laplace}) {
        CHECK(determinant(tref, method) == P("t^2-t+1"));
        CHECK(determinant(PolyMatrix(), method) == LaurentPoly(1));
    }
    std::mt19937_64 rng(11);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 1 + rng() % 5;
        const PolyMatrix m = random_poly_matrix(rng, n);
        const LaurentPoly expected = leibniz(m);
        CAPTURE(n);
        REQUIRE(determinant(m, DetMethod::Interpolation) == expected);
        REQUIRE(determinant(m, DetMethod::Bareiss) == expected);
        REQUIRE(determinant(m, DetMethod::Laplace) == expected);
    }
}

TEST_CASE("singular polynomial matrices") {
    const PolyMatrix m{{P("t"), P("t^2")}, {LaurentPoly(1), P("t")}};
    for (DetMethod method : {DetMethod::Interpolation, DetMethod::Bareiss, DetMethod::Laplace})
        CHECK(determinant(m, method).is_zero());
}

TEST_CASE("adjugate convention adj(M) M = det(M) I") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 1 + rng() % 4;
        const PolyMatrix m = random_poly_matrix(rng, n);
        const LaurentPoly det = determinant(m);
        PolyMatrix scaled(n, n);
        for (std::size_t i = 0; i < n; ++i) scaled(i, i) = det;
        const PolyMatrix laplace = adjugate(m, DetMethod::Laplace);
        CHECK(laplace * m == scaled);
        CHECK(m * laplace == scaled);
        CHECK(adjugate(m, DetMethod::Interpolation) == laplace);
        CHECK(adjugate(m, DetMethod::Bareiss) == laplace);
    }
    // the 2x2 case written out
    const PolyMatrix m{{P("1-t"), P("t")}, {P("-1"), P("1-t")}};
    const PolyMatrix adj = adjugate(m);
    CHECK(adj(0, 0) == P("1-t"));
    CHECK(adj(0, 1) == P("-t"));
    CHECK(adj(1, 0) == LaurentPoly(1));
    CHECK(adj(1, 1) == P("1-t"));
}

TEST_CASE("cofactor routes agree beyond the Laplace limit") {
    std::mt19937_64 rng(17);
    const PolyMatrix m = random_poly_matrix(rng, kLaplaceAdjugateLimit + 1);
    const PolyMatrix adj = adjugate(m);
    CHECK(adj(0, 0) == cofactor(m, 0, 0, DetMethod::Bareiss));
    CHECK(adj(2, 1) == cofactor(m, 1, 2, DetMethod::Bareiss));
    CHECK(adj * m == [&] {
        PolyMatrix d(m.rows(), m.rows());
        const LaurentPoly det = determinant(m, DetMethod::Bareiss);
        for (std::size_t i = 0; i < m.rows(); ++i) d(i, i) = det;
        return d;
    }());
}
