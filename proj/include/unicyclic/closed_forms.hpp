#pragma once

#include <string>
#include <vector>

#include "unicyclic/invariants.hpp"

namespace unicyclic {
namespace closed_form {

// F_1 = F_2 = 1, so sigma(P_n) = F_{n+2} and Z(P_n) = F_{n+1}.
BigInt fibonacci(long long n);
BigInt binomial(long long n, long long k);

// Per-size subtree counts of the elementary families.
BigInt nk_path(long long n, long long k);   // n - k + 1
BigInt nk_cycle(long long n, long long k);  // n
BigInt nk_star(long long n, long long k);   // C(n-1, k-1) for k >= 2

// Catalog families:
//   n_path          (n^2+n+2)/2               n_cycle   n^2+1
//   n_star          n + 2^(n-1)               n_us      2^(n-1)+2^(n-2)+n+1
//   n_up_inline     (n^2+7n-16)/2  -- quoted closed form that disagrees
//                   with enumeration, kept for the discrepancy report
//   n_u1_pair       n(U_1(l1,l2)) = n(P_{l1+l2}) + (l1^2 l2 - l1 l2 + l1^2 - l1)/2
//   rooted_u1_pair  n(u, U_1(l1,l2)) = (l2+1)(l1+1)l1/2 at the branch vertex
//   sigma_path      F_{n+2}                   hosoya_path  F_{n+1}
//   fibonacci       F_n
BigInt value(const std::string& family, const std::vector<long long>& params);

}  // namespace closed_form
}  // namespace unicyclic
