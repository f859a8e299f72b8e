#include "knotdist/blanchfield.hpp"

namespace knotdist {

ModulePresentation presentation(const SeifertMatrix& v) {
    if (v.size() == 0) throw Error(ErrorCode::EmptyMatrix, "the empty Seifert matrix has a trivial Alexander module");
    ModulePresentation p{alexander_matrix(v), v};
    const LaurentPoly det = determinant(p.matrix);
    const LaurentPoly expected = alexander(v).shifted(static_cast<int>(v.genus()));
    if (det != expected && det != -expected) {
        throw std::logic_error("presentation determinant " + to_string(det) + " is not a unit multiple of delta");
    }
    return p;
}

std::string to_string(const TorsionFraction& f) { return to_string(f.num) + " / " + to_string(f.den); }

bool fractions_equal(const TorsionFraction& f, const TorsionFraction& g) {
    const LaurentPoly cross = f.num * g.den - g.num * f.den;
    return is_multiple(cross, f.den * g.den);
}

bool is_integral(const TorsionFraction& f) { return is_multiple(f.num, f.den); }

TorsionFraction conjugate(const TorsionFraction& f) { return {f.num.bar(), f.den.bar()}; }

ModuleElement ModuleElement::basis(std::size_t size, std::size_t index) {
    ModuleElement e{std::vector<LaurentPoly>(size)};
    e.coords.at(index) = LaurentPoly(1);
    return e;
}

ModuleElement ModuleElement::scaled(const LaurentPoly& a) const {
    ModuleElement out{coords};
    for (auto& c : out.coords) c = a * c;
    return out;
}

BlanchfieldForm::BlanchfieldForm(const SeifertMatrix& v)
    : BlanchfieldForm(v, v.size() <= kLaplaceAdjugateLimit ? DetMethod::Laplace : DetMethod::Interpolation) {}

BlanchfieldForm::BlanchfieldForm(const SeifertMatrix& v, DetMethod adjugate_method) : v_(v) {
    const PolyMatrix m = pairing_matrix(v);
    adj_ = knotdist::adjugate(m, adjugate_method);
    det_ = determinant(m);
}

TorsionFraction BlanchfieldForm::pairing(const ModuleElement& v, const ModuleElement& w) const {
    const std::size_t n = v_.size();
    if (v.coords.size() != n || w.coords.size() != n) {
        throw Error(ErrorCode::SizeMismatch, "module elements must have length " + std::to_string(n));
    }
    LaurentPoly sum;
    for (std::size_t j = 0; j < n; ++j) {
        if (w.coords[j].is_zero()) continue;
        LaurentPoly column;
        for (std::size_t i = 0; i < n; ++i) {
            if (v.coords[i].is_zero() || adj_(i, j).is_zero()) continue;
            column += v.coords[i] * adj_(i, j);
        }
        sum += column * w.coords[j].bar();
    }
    return {(LaurentPoly::t(1) - LaurentPoly(1)) * sum, det_};
}

Matrix<TorsionFraction> BlanchfieldForm::gram() const {
    const std::size_t n = v_.size();
    const LaurentPoly t_minus_one = LaurentPoly::t(1) - LaurentPoly(1);
    Matrix<TorsionFraction> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = TorsionFraction{t_minus_one * adj_(i, j), det_};
    return g;
}

TorsionFraction pairing(const SeifertMatrix& v, const ModuleElement& x, const ModuleElement& y) {
    return BlanchfieldForm(v).pairing(x, y);
}

Matrix<TorsionFraction> diagonal_pairing_matrix(const SeifertMatrix& v) { return BlanchfieldForm(v).gram(); }

TorsionFraction first_generator_self_pairing(const SeifertMatrix& v) {
    if (v.size() == 0) throw Error(ErrorCode::EmptyMatrix, "the empty Seifert matrix has no generators");
    const PolyMatrix m = pairing_matrix(v);
    const DetMethod method = v.size() <= kLaplaceAdjugateLimit ? DetMethod::Laplace : DetMethod::Interpolation;
    const LaurentPoly adj11 = v.size() == 1 ? LaurentPoly(1) : cofactor(m, 0, 0, method);
    return {(LaurentPoly::t(1) - LaurentPoly(1)) * adj11, determinant(m)};
}

int a_plus_border_epsilon(const SeifertMatrix& v_bordered, const SeifertMatrix& v_inner) {
    const std::size_t n = v_bordered.size();
    auto shape_error = [](const std::string& why) {
        return Error(ErrorCode::ShapeMismatch, "not an a+ border of the inner matrix: " + why);
    };
    if (n != v_inner.size() + 2) throw shape_error("size must be inner size + 2");
    const Integer& eps = v_bordered(0, 0);
    if (eps != 1 && eps != -1) throw shape_error("corner entry must be +1 or -1");
    if (v_bordered(1, 0) != 1) throw shape_error("entry (2,1) must be 1");
    for (std::size_t k = 1; k < n; ++k)
        if (v_bordered(0, k) != 0) throw shape_error("first row must vanish off the corner");
    for (std::size_t k = 2; k < n; ++k)
        if (v_bordered(k, 0) != 0) throw shape_error("first column must vanish below row 2");
    if (v_bordered.entries().block(2, 2, n - 2, n - 2) != v_inner.entries()) {
        throw shape_error("lower-right block differs from the inner matrix");
    }
    return eps.get_si() > 0 ? 1 : -1;
}

bool main_theorem_check(const SeifertMatrix& v_bordered, const SeifertMatrix& v_inner) {
    const int eps = a_plus_border_epsilon(v_bordered, v_inner);
    const TorsionFraction self = first_generator_self_pairing(v_bordered);
    const TorsionFraction predicted{alexander(v_inner) * Integer(eps), alexander(v_bordered)};
    return fractions_equal(self, predicted);
}

}  // namespace knotdist
