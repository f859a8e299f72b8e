#include "knotdist/poly_det.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace knotdist {

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_rows(PolyMatrix& a, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
}

LaurentPoly bareiss(PolyMatrix a) {
    const std::size_t n = a.rows();
    LaurentPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return {};
            swap_rows(a, k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly numer = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                auto q = exact_quotient(numer, prev);
                if (!q) throw std::logic_error("Bareiss step is not an exact division over Z[t, t^-1]");
                a(i, j) = std::move(*q);
            }
            a(i, k) = LaurentPoly{};
        }
        prev = a(k, k);
    }
    LaurentPoly det = n == 0 ? LaurentPoly(1) : a(n - 1, n - 1);
    return negate ? -det : det;
}

LaurentPoly laplace(const PolyMatrix& m, std::size_t row, std::vector<bool>& used) {
    const std::size_t n = m.rows();
    if (row == n) return LaurentPoly(1);
    LaurentPoly sum;
    std::size_t free_before = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        if (!m(row, j).is_zero()) {
            used[j] = true;
            LaurentPoly term = m(row, j) * laplace(m, row + 1, used);
            used[j] = false;
            if (free_before % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        ++free_before;
    }
    return sum;
}

LaurentPoly interpolate_determinant(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);

    // Shift every row to an ordinary polynomial row; det picks up t^(sum of shifts).
    PolyMatrix shifted(n, n);
    long total_shift = 0;
    long degree_bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        int lo = 0;
        int hi = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly& e = m(i, j);
            if (e.is_zero()) continue;
            if (!any) {
                lo = e.min_exponent();
                hi = e.max_exponent();
                any = true;
            } else {
                lo = std::min(lo, e.min_exponent());
                hi = std::max(hi, e.max_exponent());
            }
        }
        if (!any) return {};
        total_shift += lo;
        degree_bound += hi - lo;
        for (std::size_t j = 0; j < n; ++j) shifted(i, j) = m(i, j).shifted(-lo);
    }

    const std::size_t points = static_cast<std::size_t>(degree_bound) + 1;
    std::vector<Integer> xs(points);
    std::vector<Rational> coef(points);
    for (std::size_t k = 0; k < points; ++k) {
        // 0, 1, -1, 2, -2, ...
        const long step = static_cast<long>((k + 1) / 2);
        xs[k] = (k % 2 == 1) ? step : -step;
        IntMatrix at(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) at(i, j) = eval_polynomial(shifted(i, j), xs[k]);
        coef[k] = Rational(determinant(at));
    }

    // Newton divided differences, in place.
    for (std::size_t level = 1; level < points; ++level) {
        for (std::size_t k = points - 1; k >= level; --k) {
            coef[k] = (coef[k] - coef[k - 1]) / Rational(xs[k] - xs[k - level]);
            if (k == level) break;
        }
    }

    RationalLaurent poly = RationalLaurent::monomial(coef[points - 1], 0);
    for (std::size_t k = points - 1; k-- > 0;) {
        RationalLaurent linear = RationalLaurent::t(1) - RationalLaurent::monomial(Rational(xs[k]), 0);
        poly = poly * linear + RationalLaurent::monomial(coef[k], 0);
    }
    auto integral = to_integral(poly);
    if (!integral) throw std::logic_error("interpolated determinant has non-integral coefficients");
    return integral->shifted(static_cast<int>(total_shift));
}

}  // namespace

Integer determinant(const IntMatrix& m) {
    require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            swap_rows(a, k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer numer = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), numer.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

LaurentPoly determinant(const PolyMatrix& m, DetMethod method) {
    require_square(m.rows(), m.cols());
    switch (method) {
        case DetMethod::Interpolation:
            return interpolate_determinant(m);
        case DetMethod::Bareiss:
            return bareiss(m);
        case DetMethod::Laplace: {
            std::vector<bool> used(m.cols(), false);
            return laplace(m, 0, used);
        }
    }
    throw std::logic_error("unknown determinant method");
}

LaurentPoly cofactor(const PolyMatrix& m, std::size_t i, std::size_t j, DetMethod method) {
    LaurentPoly minor_det = determinant(m.minor(i, j), method);
    return (i + j) % 2 == 0 ? minor_det : -minor_det;
}

PolyMatrix adjugate(const PolyMatrix& m, DetMethod method) {
    require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = LaurentPoly(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj(j, i) = cofactor(m, i, j, method);
    return adj;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    return adjugate(m, m.rows() <= kLaplaceAdjugateLimit ? DetMethod::Laplace : DetMethod::Interpolation);
}

}  // namespace knotdist
