#pragma once

// Alexander module presentations and the Blanchfield pairing with values in
// Q(Z[t, t^-1]) / Z[t, t^-1], kept as exact fractions.

#include <cstddef>
#include <string>
#include <vector>

#include "knotdist/laurent.hpp"
#include "knotdist/matrix.hpp"
#include "knotdist/seifert.hpp"

namespace knotdist {

struct ModulePresentation {
    PolyMatrix matrix;  // tV - V^T
    SeifertMatrix source;
};

// Throws EmptyMatrix for the 0x0 matrix (its module is trivial).
ModulePresentation presentation(const SeifertMatrix& v);

// num / den read modulo Z[t, t^-1]. Fractions are never reduced.
struct TorsionFraction {
    LaurentPoly num;
    LaurentPoly den;
};

std::string to_string(const TorsionFraction& f);

// Equality in Q(L)/L: f.num g.den - g.num f.den is a multiple of f.den g.den.
bool fractions_equal(const TorsionFraction& f, const TorsionFraction& g);

// True when f is zero modulo Z[t, t^-1].
bool is_integral(const TorsionFraction& f);

TorsionFraction conjugate(const TorsionFraction& f);

struct ModuleElement {
    std::vector<LaurentPoly> coords;

    static ModuleElement basis(std::size_t size, std::size_t index);
    ModuleElement scaled(const LaurentPoly& a) const;
};

// (v, w) -> v^T (t - 1) (V - tV^T)^-1 conj(w), via the adjugate. Caches the
// adjugate and determinant of V - tV^T for repeated evaluation.
class BlanchfieldForm {
public:
    explicit BlanchfieldForm(const SeifertMatrix& v);
    BlanchfieldForm(const SeifertMatrix& v, DetMethod adjugate_method);

    const SeifertMatrix& seifert() const { return v_; }
    const PolyMatrix& adjugate() const { return adj_; }
    // det(V - tV^T), the denominator of every pairing value.
    const LaurentPoly& denominator() const { return det_; }

    // Throws SizeMismatch.
    TorsionFraction pairing(const ModuleElement& v, const ModuleElement& w) const;

    // Gram matrix of the standard generators e_i.
    Matrix<TorsionFraction> gram() const;

private:
    SeifertMatrix v_;
    PolyMatrix adj_;
    LaurentPoly det_;
};

TorsionFraction pairing(const SeifertMatrix& v, const ModuleElement& x, const ModuleElement& y);

Matrix<TorsionFraction> diagonal_pairing_matrix(const SeifertMatrix& v);

// For V_bordered = [[eps, 0, 0], [1, x, M], [0, N^T, V_inner]], true iff the
// self-pairing of the first generator equals eps * delta(V_inner) / delta(V_bordered)
// modulo Z[t, t^-1]. Throws ShapeMismatch if V_bordered is not such a border.
bool main_theorem_check(const SeifertMatrix& v_bordered, const SeifertMatrix& v_inner);

// The first generator's self-pairing (t - 1) adj(V - tV^T)_{1,1} / det(V - tV^T).
TorsionFraction first_generator_self_pairing(const SeifertMatrix& v);

// Epsilon of an a+ border of v_inner, or throws ShapeMismatch.
int a_plus_border_epsilon(const SeifertMatrix& v_bordered, const SeifertMatrix& v_inner);

}  // namespace knotdist
