#ifndef QUINTIC_OUTCOME_HPP
#define QUINTIC_OUTCOME_HPP

#include <optional>
#include <variant>

#include "quintic/arith.hpp"

namespace quintic {

struct Prime {};
struct NoFactorsFound {};

// A nontrivial split p*q = N with p <= q.
struct Factors {
  Natural p;
  Natural q;
};

// Result of the search routines: Prime | Factors | NoFactorsFound.
using FactorOutcome = std::variant<Prime, Factors, NoFactorsFound>;

inline Factors make_factors(const Natural& g, const Natural& n) {
  Natural h = n / g;
  return g <= h ? Factors{g, h} : Factors{h, g};
}

inline const Factors* get_factors(const FactorOutcome& o) {
  return std::get_if<Factors>(&o);
}
inline bool is_prime_outcome(const FactorOutcome& o) {
  return std::holds_alternative<Prime>(o);
}
inline bool is_no_factors(const FactorOutcome& o) {
  return std::holds_alternative<NoFactorsFound>(o);
}

}  // namespace quintic

#endif  // QUINTIC_OUTCOME_HPP
