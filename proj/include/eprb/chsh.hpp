#pragma once

#include <array>
#include <cstddef>

namespace eprb {

enum class Semantics { single_space, contextual };

/// The four correlations entering a CHSH combination, in joint-context
/// order AB, AB', A'B, A'B'.
struct CorrelationQuad {
  double ab = 0;
  double ab_prime = 0;
  double a_prime_b = 0;
  double a_prime_b_prime = 0;
  Semantics semantics = Semantics::single_space;

  double operator[](std::size_t i) const {
    return i == 0 ? ab : i == 1 ? ab_prime : i == 2 ? a_prime_b : a_prime_b_prime;
  }
};

/// f = <AB> + <AB'> - <A'B> + <A'B'>, signed. Entries must lie in [-1,1].
double chsh_f(const CorrelationQuad& q);

/// All eight CHSH-family combinations: variants 0..3 put the single minus
/// sign at position i of (AB, AB', A'B, A'B'); variants 4..7 are their
/// negations. chsh_f equals variant 2.
std::array<double, 8> chsh_all_variants(const CorrelationQuad& q);

double chsh_max_abs(const CorrelationQuad& q);

/// Index into chsh_all_variants of the largest signed value.
std::size_t chsh_argmax_variant(const CorrelationQuad& q);

}  // namespace eprb
