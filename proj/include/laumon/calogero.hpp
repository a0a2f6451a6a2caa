#pragma once

#include <string>
#include <vector>

#include "laumon/params.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Candidate readings of the non-stationary deformed Calogero-Moser
// hamiltonian. The conventional displays of this operator are mutually
// inconsistent in the loop term, so we carry three variants and resolve them
// against localization once, then freeze the winner (see ConventionLedger):
//   Direct           -- Delta + eta*D plus the two potentials taken at face
//                       value, loop coefficient m*n*((m+1)*n + eta)/(n + eta).
//   CharacterMassive -- the operator annihilating the graded character,
//                       conjugated by F = prod z^b * delta, with loop
//                       coefficient m*n + n - (m n)^2/c.
//   CharacterLoopN   -- the same conjugated operator with loop coefficient n;
//                       the unique member of the family whose eigenfunction
//                       reproduces the localization series.
enum class CalogeroVariant { Direct, CharacterMassive, CharacterLoopN };

std::string to_string(CalogeroVariant v);

struct CMOperatorSpec {
    EquivParams params;
    int D = 0;
    CalogeroVariant variant = CalogeroVariant::CharacterLoopN;
};

struct EigenData {
    std::vector<Rational> b;
    Rational lambda;
    OffsetSeries Y;
};

// b_k = [k*sum(xi) - n*(xi_1+...+xi_k)]/n - k(n-k)/2 * eta.
std::vector<Rational> b_exponents(const EquivParams& params);

// lambda = -(n-1)n(n+1)/24 * eta^2 - (sum xi)^2/(2n) + sum xi_k^2 / 2.
Rational eigenvalue_lambda(const EquivParams& params);

// Quadratic symbol Q(v) = sum v_k^2 - sum v_k v_{k+1 (cyclic)} + eta * sum v_k.
Rational cm_symbol(const EquivParams& params, const std::vector<Rational>& v);

// Apply the hamiltonian of the chosen variant to an offset series, exactly,
// truncated at spec.D.
OffsetSeries hamiltonian_apply(const CMOperatorSpec& spec, const OffsetSeries& f);

// Unique eigenfunction Y = z^b (1 + higher), H Y = lambda Y through degree D.
EigenData solve_eigenfunction(const CMOperatorSpec& spec);

// Z = (Y.body) * delta^{-m-1}.
TruncatedSeries reference_partition_function(const CMOperatorSpec& spec);

} // namespace laumon
