#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hinv/abelian.hpp"

namespace hinv::testing {

inline std::filesystem::path fixture(const std::string& relative) {
  return std::filesystem::path(HINV_FIXTURE_DIR) / relative;
}

inline FgAbelianGroup group(std::size_t free, std::vector<long> factors) {
  FgAbelianGroup a{free, {}};
  for (long d : factors) a.invariant_factors.emplace_back(d);
  return a;
}

// Z^2 + Z/n with B = q^{xy' - yx'} zeta_n^{xa' - ax'} on generators (x, y, a).
inline AlternatingBicharacter q_zeta_bicharacter(long n) {
  Value q = Value::q_power(0, 1), z = Value::root_of_unity(Rational(1, n));
  return AlternatingBicharacter(group(2, {n}), {{Value(), q, z}, {-q, Value(), Value()}, {-z, Value(), Value()}});
}

}  // namespace hinv::testing
