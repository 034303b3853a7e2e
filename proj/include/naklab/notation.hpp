#pragma once

// Text syntax for Fock vectors: `1/2*a[-2](h) a[-1](x) |0> + (1-i)*|0>`.
// Creation factors use the side's letter (a: Hilbert, p: orbifold).

#include "naklab/fock.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace naklab {

std::string format_monomial(const GradedFrobeniusAlgebra& alg, CentralSign sign, const NakajimaMonomial& m);
std::string format_vector(const GradedFrobeniusAlgebra& alg, CentralSign sign, const FockVector& v);

/// Throws InputError on malformed text, unknown basis names or a wrong letter.
FockVector parse_vector(const GradedFrobeniusAlgebra& alg, CentralSign sign, std::string_view text);

/// Generator class reference `O[k](α)` (orbifold) or `G[k](α)` (Hilbert).
struct ClassRef {
  int k = 0;
  int basis = 0;
};

/// Either a class reference or an explicit vector.
std::variant<ClassRef, FockVector> parse_operand(const GradedFrobeniusAlgebra& alg, CentralSign sign,
                                                 std::string_view text);

}  // namespace naklab
