#pragma once

#include "moduli/quotient.hpp"

namespace moduli {

struct MacaulayReport {
    long monomials = 0;
    long rank = 0;
    long dimension = 0;  // monomials - rank
};

// Graded dimension of the quotient at a real degree, computed as
// (#monomials of that degree) minus the rank of the matrix whose rows are
// all relation * monomial products of that degree, by exact fraction-free
// elimination. Verification oracle: shares nothing with the normal-form
// engine beyond the presentation data itself.
MacaulayReport macaulay_rank(const Presentation& p, int real_degree);

long macaulay_dimension(const Presentation& p, int real_degree);

}  // namespace moduli
