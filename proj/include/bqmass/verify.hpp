#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bqmass/arith.hpp"

namespace bqm {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::string> ledger;  // documented, non-fatal discrepancies
  double seconds = 0;
};

CheckResult verify_odd_closed_forms(const std::vector<Int>& primes, int numax);
// Local pipeline at 2 against the tabulated rows (counts, p-masses, densities, A/B).
CheckResult verify_table_2(int numax);
// p = 2 closed forms: the enumeration variant must match; the other variants are ledgered.
CheckResult verify_p2_closed_forms(int terms);
CheckResult verify_decomposition(Int max_det);
CheckResult verify_decomposition_random(int instances, std::uint64_t seed, Int max_det);
CheckResult verify_siegel(Int max_det);
CheckResult verify_kappa(Int max_det, Int bound, double tol);
CheckResult verify_class_numbers(Int dmax, Int bound, double tol);
CheckResult verify_kneser(Int dmax);

// Timings are omitted unless asked for, keeping reports reproducible.
std::string format_result(const CheckResult& r, bool with_time = false);

}  // namespace bqm
