#ifndef HDC_FACTOR_HPP
#define HDC_FACTOR_HPP

#include <utility>
#include <vector>

#include "hdc/upoly.hpp"

namespace hdc {

// Factorization over Q: monic irreducible factors with multiplicities.
// leading coefficient * product(factor^mult) reconstructs the input exactly.
// Degree is capped at 24 (DegreeOutOfScope beyond).
std::vector<std::pair<UPoly<Rational>, int>> factor_over_Q(const UPoly<Rational>& p);

bool is_irreducible_over_Q(const UPoly<Rational>& p);

// Squarefree decomposition (Yun): list of (factor, multiplicity) with the
// factors pairwise coprime and squarefree, monic.
std::vector<std::pair<UPoly<Rational>, int>> squarefree_decomposition(const UPoly<Rational>& p);

} // namespace hdc

#endif
