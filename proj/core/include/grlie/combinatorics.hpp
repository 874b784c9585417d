#pragma once

#include <string>
#include <vector>

#include "grlie/scalar.hpp"

namespace grlie {

// Lower central series ranks phi_1..phi_K of a group (or graded Lie
// algebra); phi[k-1] = phi_k.
struct RankTable {
  std::string label;
  std::vector<long long> phi;
};

enum class SpecialKind { stirling1, stirling2, lah };

// Unsigned Stirling numbers of the first/second kind and Lah numbers,
// by the standard recurrences.  Requires 0 <= k <= n.
Int special_number(SpecialKind kind, int n, int k);

Int binomial(int n, int k);
Int factorial(int n);

// Moebius function, n >= 1.
int mobius(long long n);

// Necklace/Witt number: (1/k) sum_{d|k} mu(k/d) n^d.
Int witt(long long n, int k);

// The three rank-extraction routes.  Input: coefficients b_1..b_n of
// f(t) = 1 + sum b_i t^i with Hilb(U(gr G), -t) * f(t) = 1.
//
// Moebius/multinomial closed form.
RankTable lcs_ranks_mobius(const std::vector<long long>& b, int K);
// Iteratively strip factors (1 - t^k)^{phi_k} from 1/f(-t).
// Throws DomainError("series is not a PBW series") on a negative phi_k.
RankTable lcs_ranks_pbw(const std::vector<long long>& b, int K);
// Weigel's formula with power sums of inverse roots of f(-t), computed
// from the coefficients by Newton's identities (no root-finding).
RankTable lcs_ranks_powersum(const std::vector<long long>& b, int K);

}  // namespace grlie
