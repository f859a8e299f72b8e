#pragma once

// Seifert matrices, their classical invariants, and S-equivalence /
// algebraic unknotting moves on them.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knotdist/laurent.hpp"
#include "knotdist/matrix.hpp"
#include "knotdist/poly_det.hpp"

namespace knotdist {

// Even-size integer matrix V with det(V - V^T) = 1. The 0x0 matrix is allowed.
class SeifertMatrix {
public:
    SeifertMatrix() = default;  // 0x0

    // Throws OddSize or NotUnimodularAntisymmetrization.
    static SeifertMatrix validate(IntMatrix m);

    const IntMatrix& entries() const { return m_; }
    std::size_t size() const { return m_.rows(); }
    std::size_t genus() const { return m_.rows() / 2; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.m_ == b.m_; }
    friend bool operator!=(const SeifertMatrix& a, const SeifertMatrix& b) { return !(a == b); }

private:
    explicit SeifertMatrix(IntMatrix m) : m_(std::move(m)) {}

    IntMatrix m_;
};

struct KnotInvariants {
    LaurentPoly alexander;
    int signature = 0;
    Integer determinant = 1;

    friend bool operator==(const KnotInvariants& a, const KnotInvariants& b) {
        return a.alexander == b.alexander && a.signature == b.signature && a.determinant == b.determinant;
    }
};

// tV - V^T, the presentation matrix of the Alexander module.
PolyMatrix alexander_matrix(const SeifertMatrix& v);

// V - tV^T, the matrix whose inverse carries the Blanchfield pairing.
PolyMatrix pairing_matrix(const SeifertMatrix& v);

// t^-n det(tV - V^T) for V of size 2n; symmetric with value 1 at t = 1.
LaurentPoly alexander(const SeifertMatrix& v, DetMethod method = DetMethod::Interpolation);

// Signature of a symmetric integer matrix by exact congruence diagonalization over Q.
int signature(const IntMatrix& symmetric);
int signature(const SeifertMatrix& v);

// |delta(-1)|.
Integer determinant_of_knot(const LaurentPoly& delta);
Integer determinant_of_knot(const SeifertMatrix& v);

KnotInvariants invariants(const SeifertMatrix& v);

// Seifert's realization conditions for a knot polynomial: delta(t^-1) = delta(t), delta(1) = 1.
bool satisfies_seifert_conditions(const LaurentPoly& delta);

// P V P^T for unimodular P. Throws SizeMismatch or NotUnimodular.
SeifertMatrix congruent_transform(const SeifertMatrix& v, const IntMatrix& p);

enum class BorderKind { Row, Column };

//   Row:    [[0, 0, 0], [1, x, M], [0, N^T, V]]
//   Column: [[0, 1, 0], [0, x, M], [0, N^T, V]]
SeifertMatrix enlarge(const SeifertMatrix& v, BorderKind kind, const Integer& x, std::span<const Integer> m,
                      std::span<const Integer> n);

// Inverse of enlarge on the literal block pattern only.
std::optional<SeifertMatrix> try_reduce(const SeifertMatrix& w);

enum class BorderVariant { APlus, AMinus, BPlus, BMinus };

std::string to_string(BorderVariant variant);

//   a±: [[eps, 0, 0], [±1, x, M], [0, N^T, W]]
//   b±: [[eps, ±1, 0], [0, x, M], [0, N^T, W]]
// a+ is the algebraic unknotting operation. Throws SizeMismatch or BadEpsilon.
SeifertMatrix unknotting_border(const SeifertMatrix& w, int epsilon, const Integer& x, std::span<const Integer> m,
                                std::span<const Integer> n, BorderVariant variant);

struct DefiniteNormalForm {
    SeifertMatrix normal;  // [[a, b+1], [b, c]] with 0 < 2b+1 <= min(a, c)
    IntMatrix transform;   // unimodular P with P (sign V) P^T == normal
    int sign = 1;
    Integer a, b, c;
};

// Gauss reduction of the definite binary form attached to a 2x2 Seifert matrix.
// Throws SizeMismatch for size != 2, NotDefinite for indefinite V + V^T.
DefiniteNormalForm definite_2x2_normal_form(const SeifertMatrix& v);

// h when delta = h t + h t^-1 + 1 - 2h with h != 0.
std::optional<Integer> degree_two_parameter(const LaurentPoly& delta);

// Sufficient conditions for algebraic unknotting number one. Never answers "no".
struct UnknottingCertificate {
    std::string reason;
};

// From the polynomial alone: delta = h t + h t^-1 + 1 - 2h with h in {1, 2, 3, 5}.
std::optional<UnknottingCertificate> ua_is_one(const LaurentPoly& delta);
std::optional<UnknottingCertificate> ua_is_one(const SeifertMatrix& v);

std::string to_string(const IntMatrix& m);

}  // namespace knotdist
