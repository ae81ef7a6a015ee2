#include "pml/rational.hpp"

namespace pml {

bool is_half_integral(const RationalVector& x) {
  static const Rational half(1, 2);
  for (const auto& q : x)
    if (q != 0 && q != 1 && q != half) return false;
  return true;
}

bool is_integral(const RationalVector& x) {
  for (const auto& q : x)
    if (q.get_den() != 1) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

IntVector to_int_vector(const std::vector<int>& v) {
  IntVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

ExactnessStats& exactness_stats() {
  static ExactnessStats stats;
  return stats;
}

}  // namespace pml
