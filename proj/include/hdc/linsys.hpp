#ifndef HDC_LINSYS_HPP
#define HDC_LINSYS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hdc/divisor.hpp"
#include "hdc/linalg.hpp"
#include "hdc/mgcd.hpp"

namespace hdc {

// Degree-n monomials in x, y, z, canonical (graded-lex descending) order.
std::vector<Mono> monomials_of_degree(int n);

// One row per (family, partial derivative of order < mult, power of t mod m);
// columns are the degree-n monomials in canonical order.
Matrix<Rational> condition_matrix(int n, const EffectiveDivisor& D);
std::vector<std::vector<Rational>> condition_rows(int n, const ConjugateFamily& f);

struct LinearSystem {
    int degree = 0;
    std::vector<MPoly<Rational>> basis;      // canonical span basis
    MPoly<Rational> defining;                // sum_i lambda_{i+1} * basis_i
    int dim() const { return static_cast<int>(basis.size()) - 1; }
};

// Canonical basis of a span: reduced row echelon over the degree-n monomial
// coordinates, primitive integer scaling, positive leading coefficient,
// ordered by descending leading monomial. Unique per subspace.
template <class K>
std::vector<std::vector<K>> canonical_span(std::vector<std::vector<K>> vectors);

LinearSystem system_from_forms(int n, std::vector<MPoly<Rational>> forms);

// Exact nullspace of the condition matrix; EmptySystem when it is trivial.
LinearSystem compute_system(int n, const EffectiveDivisor& D);

// Coefficients of `form` in L's basis, or nullopt if not a member.
std::optional<std::vector<Rational>> membership(const LinearSystem& L, const MPoly<Rational>& form);

// Subsystem of L cut out by additional point conditions.
LinearSystem add_point_conditions(const LinearSystem& L, const std::vector<ConjugateFamily>& pts);

// z(bx - ay)^{n-1} - prod(b_i x - a_i y): an absolutely irreducible member of
// the Hausdorff system, for a direction (a:b:0) off the divisor.
MPoly<Rational> witness_irreducible_member(const EffectiveDivisor& D, const Rational& a,
                                           const Rational& b);

// Number of absolutely irreducible factors of a squarefree bivariate
// polynomial in x, y (solution-space dimension of the log-derivative PDE).
template <class K>
int absolute_factor_count(const MPoly<K>& f);

struct IrreducibilityReport {
    enum class Verdict { Irreducible, Reducible, Undetermined };
    struct Trial {
        std::vector<Rational> lambda_values;
        bool degree_preserved = false;
        bool squarefree = false;
        int factor_count = -1;  // -1: not countable (degenerate specialization)
    };
    Verdict verdict = Verdict::Undetermined;
    bool certified = false;            // content/fixed-factor/irreducible-witness proof
    MPoly<Rational> content;           // parameter content of the defining polynomial
    std::optional<MPoly<Rational>> fixed_factor;  // reducibility certificate
    std::vector<Trial> trials;
};

// Monte Carlo on specializations: one absolutely irreducible
// degree-preserving specialization proves irreducibility over closure(C(L));
// a parameter content or a fixed (lambda-free) factor proves reducibility;
// consistently reducible specializations give a heuristic Reducible verdict.
IrreducibilityReport is_irreducible_system(const LinearSystem& L, int trials = 7,
                                           uint64_t seed = 1);

// small deterministic rational specialization stream
struct RationalSampler {
    uint64_t state;
    explicit RationalSampler(uint64_t seed) : state(seed ? seed : 1) {}
    uint64_t bits() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    Rational small_rational(long num_bound = 997, long den_bound = 31) {
        long n = static_cast<long>(bits() % (2 * num_bound + 1)) - num_bound;
        long d = 1 + static_cast<long>(bits() % den_bound);
        return Rational(n, d);
    }
};

} // namespace hdc

#endif
