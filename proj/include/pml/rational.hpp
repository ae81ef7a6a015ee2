#pragma once

#include <gmpxx.h>

#include <atomic>
#include <string>
#include <vector>

namespace pml {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Every coordinate in {0, 1/2, 1}.
bool is_half_integral(const RationalVector& x);
bool is_integral(const RationalVector& x);
std::string to_string(const Rational& q);

IntVector to_int_vector(const std::vector<int>& v);

/// Process-wide exactness counters; read by the acceptance suite.
struct ExactnessStats {
  std::atomic<long> lp_vertices{0};
  std::atomic<long> relaxation_vertices{0};       // vertices of P(G)-type LPs
  std::atomic<long> non_half_integral_vertices{0};
  std::atomic<long> free_variable_vertices{0};   // LPs with an unbounded variable (LP1)
  std::atomic<long> free_non_half_integral{0};
  std::atomic<long> transforms_checked{0};
  std::atomic<long> bad_determinants{0};
};
ExactnessStats& exactness_stats();

}  // namespace pml
