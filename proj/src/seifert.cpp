#include "knotdist/seifert.hpp"

#include <sstream>
#include <stdexcept>

namespace knotdist {

SeifertMatrix SeifertMatrix::validate(IntMatrix m) {
    if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "Seifert matrix must be square");
    if (m.rows() % 2 != 0) throw Error(ErrorCode::OddSize, "size must be even");
    const Integer det = determinant(m - m.transposed());
    if (det != 1) {
        throw Error(ErrorCode::NotUnimodularAntisymmetrization,
                    "det(V - V^T) must be 1, got " + det.get_str());
    }
    return SeifertMatrix(std::move(m));
}

PolyMatrix alexander_matrix(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    PolyMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = LaurentPoly::monomial(v(i, j), 1) - LaurentPoly(v(j, i));
    return p;
}

PolyMatrix pairing_matrix(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    PolyMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = LaurentPoly(v(i, j)) - LaurentPoly::monomial(v(j, i), 1);
    return p;
}

bool satisfies_seifert_conditions(const LaurentPoly& delta) {
    return is_bar_symmetric(delta) && eval_int(delta, 1) == 1;
}

LaurentPoly alexander(const SeifertMatrix& v, DetMethod method) {
    if (v.size() == 0) return LaurentPoly(1);
    LaurentPoly delta = determinant(alexander_matrix(v), method).shifted(-static_cast<int>(v.genus()));
    if (!satisfies_seifert_conditions(delta)) {
        throw std::logic_error("Alexander polynomial " + to_string(delta) + " violates symmetry or normalization");
    }
    return delta;
}

int signature(const IntMatrix& symmetric) {
    if (!symmetric.is_square()) throw Error(ErrorCode::SizeMismatch, "signature of a non-square matrix");
    const std::size_t n = symmetric.rows();
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(symmetric(i, j));

    std::vector<bool> done(n, false);
    int sig = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (!done[i] && a(i, i) != 0) pivot = i;

        if (pivot == n) {
            // Zero diagonal: fold a nonzero off-diagonal entry onto the diagonal
            // with the congruence e_i <- e_i + e_j, giving a(i,i) = 2 a(i,j).
            std::size_t pi = n;
            std::size_t pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!done[j] && j != i && a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
            for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
            pivot = pi;
        }

        const Rational p = a(pivot, pivot);
        sig += p > 0 ? 1 : -1;
        done[pivot] = true;
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r] || a(r, pivot) == 0) continue;
            const Rational f = a(r, pivot) / p;
            for (std::size_t c = 0; c < n; ++c) {
                if (done[c]) continue;
                a(r, c) -= f * a(pivot, c);
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r]) continue;
            a(r, pivot) = 0;
            a(pivot, r) = 0;
        }
    }
    return sig;
}

int signature(const SeifertMatrix& v) { return signature(v.entries() + v.entries().transposed()); }

Integer determinant_of_knot(const LaurentPoly& delta) {
    const Rational at_minus_one = eval_int(delta, -1);
    return abs(at_minus_one.get_num());
}

Integer determinant_of_knot(const SeifertMatrix& v) {
    Integer d = determinant_of_knot(alexander(v));
    if (d % 2 == 0) throw std::logic_error("knot determinant must be odd, got " + d.get_str());
    return d;
}

KnotInvariants invariants(const SeifertMatrix& v) {
    KnotInvariants inv;
    inv.alexander = alexander(v);
    inv.signature = signature(v);
    inv.determinant = determinant_of_knot(inv.alexander);
    if (inv.determinant % 2 == 0) throw std::logic_error("knot determinant must be odd");
    if (inv.signature % 2 != 0) throw std::logic_error("knot signature must be even");
    return inv;
}

SeifertMatrix congruent_transform(const SeifertMatrix& v, const IntMatrix& p) {
    if (!p.is_square() || p.rows() != v.size()) {
        throw Error(ErrorCode::SizeMismatch, "congruence matrix must be square of the Seifert matrix size");
    }
    const Integer det = determinant(p);
    if (det != 1 && det != -1) throw Error(ErrorCode::NotUnimodular, "congruence matrix has det " + det.get_str());
    return SeifertMatrix::validate(p * v.entries() * p.transposed());
}

namespace {

void check_border_lengths(const SeifertMatrix& v, std::span<const Integer> m, std::span<const Integer> n) {
    if (m.size() != v.size() || n.size() != v.size()) {
        throw Error(ErrorCode::SizeMismatch, "border vectors M and N must have length " + std::to_string(v.size()));
    }
}

// Shared lower-right part of every bordered matrix: [[*, *, 0], [*, x, M], [0, N^T, V]].
IntMatrix bordered_skeleton(const SeifertMatrix& v, const Integer& x, std::span<const Integer> m,
                            std::span<const Integer> n) {
    const std::size_t size = v.size();
    IntMatrix w(size + 2, size + 2);
    w(1, 1) = x;
    for (std::size_t j = 0; j < size; ++j) w(1, 2 + j) = m[j];
    for (std::size_t i = 0; i < size; ++i) {
        w(2 + i, 1) = n[i];
        for (std::size_t j = 0; j < size; ++j) w(2 + i, 2 + j) = v(i, j);
    }
    return w;
}

}  // namespace

SeifertMatrix enlarge(const SeifertMatrix& v, BorderKind kind, const Integer& x, std::span<const Integer> m,
                      std::span<const Integer> n) {
    check_border_lengths(v, m, n);
    IntMatrix w = bordered_skeleton(v, x, m, n);
    if (kind == BorderKind::Row) {
        w(1, 0) = 1;
    } else {
        w(0, 1) = 1;
    }
    return SeifertMatrix::validate(std::move(w));
}

std::optional<SeifertMatrix> try_reduce(const SeifertMatrix& w) {
    const std::size_t size = w.size();
    if (size < 2) return std::nullopt;
    if (w(0, 0) != 0) return std::nullopt;
    for (std::size_t k = 2; k < size; ++k) {
        if (w(0, k) != 0 || w(k, 0) != 0) return std::nullopt;
    }
    const bool row_pattern = w(0, 1) == 0 && w(1, 0) == 1;
    const bool column_pattern = w(0, 1) == 1 && w(1, 0) == 0;
    if (!row_pattern && !column_pattern) return std::nullopt;
    return SeifertMatrix::validate(w.entries().block(2, 2, size - 2, size - 2));
}

std::string to_string(BorderVariant variant) {
    switch (variant) {
        case BorderVariant::APlus:
            return "a+";
        case BorderVariant::AMinus:
            return "a-";
        case BorderVariant::BPlus:
            return "b+";
        case BorderVariant::BMinus:
            return "b-";
    }
    return "?";
}

SeifertMatrix unknotting_border(const SeifertMatrix& w, int epsilon, const Integer& x, std::span<const Integer> m,
                                std::span<const Integer> n, BorderVariant variant) {
    if (epsilon != 1 && epsilon != -1) throw Error(ErrorCode::BadEpsilon, "epsilon must be +1 or -1");
    check_border_lengths(w, m, n);
    IntMatrix b = bordered_skeleton(w, x, m, n);
    b(0, 0) = epsilon;
    switch (variant) {
        case BorderVariant::APlus:
            b(1, 0) = 1;
            break;
        case BorderVariant::AMinus:
            b(1, 0) = -1;
            break;
        case BorderVariant::BPlus:
            b(0, 1) = 1;
            break;
        case BorderVariant::BMinus:
            b(0, 1) = -1;
            break;
    }
    return SeifertMatrix::validate(std::move(b));
}

DefiniteNormalForm definite_2x2_normal_form(const SeifertMatrix& v) {
    if (v.size() != 2) throw Error(ErrorCode::SizeMismatch, "definite normal form needs a 2x2 Seifert matrix");
    const IntMatrix sym = v.entries() + v.entries().transposed();
    const Integer det_sym = sym(0, 0) * sym(1, 1) - sym(0, 1) * sym(1, 0);
    if (det_sym <= 0) throw Error(ErrorCode::NotDefinite, "V + V^T is not definite");

    DefiniteNormalForm out{SeifertMatrix{}, IntMatrix::identity(2), sym(0, 0) > 0 ? 1 : -1, 0, 0, 0};
    IntMatrix u = v.entries();
    if (out.sign < 0) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) u(i, j) = -u(i, j);
    }
    IntMatrix& p = out.transform;
    auto apply = [&](const IntMatrix& e) {
        u = e * u * e.transposed();
        p = e * p;
    };
    const IntMatrix swap{{0, 1}, {1, 0}};

    // Binary form a x^2 + B xy + c y^2 with a = u00, B = u01 + u10, c = u11.
    for (;;) {
        const Integer a = u(0, 0);
        const Integer c = u(1, 1);
        const Integer mid = u(0, 1) + u(1, 0);
        if (a > c) {
            apply(swap);
            continue;
        }
        if (abs(mid) > a) {
            // k = floor((B + a) / 2a) puts B - 2ka in (-a, a].
            Integer k;
            const Integer numer = mid + a;
            const Integer denom = 2 * a;
            mpz_fdiv_q(k.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
            apply(IntMatrix{{1, 0}, {-k, 1}});
            continue;
        }
        break;
    }
    if (u(0, 1) + u(1, 0) < 0) apply(IntMatrix{{1, 0}, {0, -1}});
    if (u(0, 1) - u(1, 0) == -1) apply(swap);

    out.a = u(0, 0);
    out.b = u(1, 0);
    out.c = u(1, 1);
    const Integer odd = 2 * out.b + 1;
    if (u(0, 1) != out.b + 1 || odd <= 0 || odd > out.a || odd > out.c) {
        throw std::logic_error("definite normal form reduction did not converge to the expected shape");
    }
    out.normal = SeifertMatrix::validate(u);
    return out;
}

std::optional<Integer> degree_two_parameter(const LaurentPoly& delta) {
    if (delta.is_zero() || delta.min_exponent() < -1 || delta.max_exponent() > 1) return std::nullopt;
    const Integer h = delta.coeff(1);
    if (h == 0 || delta.coeff(-1) != h || delta.coeff(0) != 1 - 2 * h) return std::nullopt;
    return h;
}

namespace {

bool in_small_set(const Integer& h) { return h == 1 || h == 2 || h == 3 || h == 5; }

}  // namespace

std::optional<UnknottingCertificate> ua_is_one(const LaurentPoly& delta) {
    auto h = degree_two_parameter(delta);
    if (!h || !in_small_set(*h)) return std::nullopt;
    return UnknottingCertificate{"alexander polynomial h t + h t^-1 + 1 - 2h with h = " + h->get_str() +
                                 " in {1,2,3,5}"};
}

std::optional<UnknottingCertificate> ua_is_one(const SeifertMatrix& v) {
    if (auto cert = ua_is_one(alexander(v))) return cert;
    if (v.size() != 2) return std::nullopt;
    const Integer det = determinant(v.entries());
    if (!in_small_set(det)) return std::nullopt;
    const DefiniteNormalForm nf = definite_2x2_normal_form(v);
    return UnknottingCertificate{"2x2 definite matrix with det V = " + det.get_str() + " in {1,2,3,5}, normal form " +
                                 to_string(nf.normal.entries())};
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace knotdist
