#pragma once

// Lower-bound criteria for the polynomial distance rho, the algebraic Gordian
// distance, and the Gordian distance, plus their aggregation into a report.

#include <optional>
#include <string>
#include <vector>

#include "knotdist/laurent.hpp"
#include "knotdist/seifert.hpp"

namespace knotdist {

// ---------------------------------------------------------------------------
// Representation of +-d by q(x, y) = h^2 x^2 + (2h - 1) xy + y^2.
//
// The discriminant is 1 - 4h. For h >= 1 the form is positive definite and
// completing the square gives
//   4 q = (2y + (2h-1) x)^2 + (4h-1) x^2,
//   4h^2 q = (2h^2 x + (2h-1) y)^2 + (4h-1) y^2,
// so every solution of q = |d| has (4h-1) x^2 <= 4|d| and (4h-1) y^2 <= 4h^2 |d|.
// For each x in that box the equation is a quadratic in y, solved exactly,
// which makes the search exhaustive. For h <= -1 the form is indefinite and
// the search is bounded; a miss is only reported as Refuted when the
// congruence q = +-d has no solution modulo some small m.

enum class QuadOutcome { Witness, Refuted, Inconclusive };

struct QuadFormVerdict {
    QuadOutcome outcome = QuadOutcome::Inconclusive;
    Integer x, y;  // Witness: q(x, y) == sign * d
    int sign = 0;
    Integer box_x, box_y;              // searched |x|, |y| ranges
    std::vector<long> local_moduli;    // Refuted by congruences: modulus per sign (+d, -d)

    std::string certificate() const;
};

Integer quadform_value(const Integer& h, const Integer& x, const Integer& y);

// Throws ZeroH or ZeroD. `bound` only matters for indefinite forms.
QuadFormVerdict quadform_represents(const Integer& h, const Integer& d, const Integer& bound);

// Re-substitutes a witness; true for non-witness verdicts.
bool verify_quadform_verdict(const QuadFormVerdict& v, const Integer& h, const Integer& d);

// ---------------------------------------------------------------------------

// t - 1 + t^-1
LaurentPoly trefoil_polynomial();

struct ParityVerdict {
    bool obstructs = false;
    Integer m;                  // remainder == 2 + 4m when obstructs
    RationalLaurent remainder;  // delta' mod (t - 1 + t^-1) over Q
};

// Obstructs iff delta' = 2 + 4m modulo t - 1 + t^-1; then rho(t - 1 + t^-1, delta') = 2.
ParityVerdict parity_criterion(const LaurentPoly& delta_prime);

// d with delta' - d a multiple of delta in Z[t, t^-1], if such an integer exists.
std::optional<Integer> constant_residue(const LaurentPoly& delta_prime, const LaurentPoly& delta);

bool is_prime_or_one(const Integer& n);

// ---------------------------------------------------------------------------

struct CcBarWitness {
    LaurentPoly c;
    int sign = 1;  // sign * delta' - c conj(c) is a multiple of delta
};

bool verify_cc_bar_witness(const LaurentPoly& delta, const LaurentPoly& delta_prime, const CcBarWitness& w);

// Enumerates c = a_0 + a_1 t + ... + a_b t^b with b <= max_breadth, |a_i| <= max_coeff,
// a_0 > 0, a_b != 0. c conj(c) is unchanged by c -> +-t^k c, so this covers every
// class of that size. Returns nullopt when nothing is found, which refutes nothing.
std::optional<CcBarWitness> cc_bar_witness_search(const LaurentPoly& delta, const LaurentPoly& delta_prime,
                                                  int max_breadth, long max_coeff);

// ---------------------------------------------------------------------------

struct MurakamiVerdict {
    bool obstructs = false;
    Integer witness;  // least d in [0, 2D) when not obstructing
};

// 2d^2/D = +-(D - D')/(2D) (mod 1) is equivalent to 4d^2 = +-(D - D') (mod 2D);
// only d mod 2D matters. Throws EvenDeterminant, InvalidArgument for D <= 0.
MurakamiVerdict murakami_obstruction(const Integer& d_knot, const Integer& d_other);

// |s1 - s2| / 2. Throws OddSignature.
int signature_bound(int sigma1, int sigma2);

// ---------------------------------------------------------------------------

struct KnotInput {
    std::string label;
    LaurentPoly alexander;
    std::optional<SeifertMatrix> matrix;
    std::optional<int> signature;
    std::optional<int> ua;  // user-supplied algebraic unknotting number

    static KnotInput from_matrix(std::string label, const SeifertMatrix& v);
    static KnotInput from_polynomial(std::string label, LaurentPoly delta);
};

struct SearchBounds {
    int cc_max_breadth = 4;
    long cc_max_coeff = 8;
    Integer quad_bound = 10000;
};

enum class Verdict { Obstructs, NoObstruction, Inconclusive };

std::string to_string(Verdict v);

struct CriterionResult {
    std::string name;
    bool applicable = false;
    Verdict verdict = Verdict::Inconclusive;
    std::string certificate;
};

struct ObstructionReport {
    std::string label1, label2;
    std::vector<CriterionResult> criteria;
    std::vector<std::string> warnings;
    int rho_lower = 0;
    int rho_upper = 2;
    int dga_lower = 0;
    std::optional<int> dga_upper;
    int dg_lower = 0;

    const CriterionResult* find(const std::string& name) const;
};

// Throws Inconsistent when user-supplied unknotting numbers contradict a certified lower bound.
ObstructionReport build_report(const KnotInput& first, const KnotInput& second, const SearchBounds& bounds = {});

// `key: value` lines; criteria blocks first, then the distance bounds.
std::string serialize(const ObstructionReport& report);
std::string serialize_json(const ObstructionReport& report);

}  // namespace knotdist
