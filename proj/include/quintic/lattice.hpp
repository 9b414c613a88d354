#ifndef QUINTIC_LATTICE_HPP
#define QUINTIC_LATTICE_HPP

#include "quintic/arith.hpp"

namespace quintic {

struct Vec2 {
  SignedInt x1;
  SignedInt x2;
};

// Two linearly independent vectors spanning a rank-2 integer lattice.
struct Basis2 {
  Vec2 u;
  Vec2 v;
};

// |u1*v2 - u2*v1|, the area of the fundamental parallelogram. Zero is
// returned as-is; callers reject degenerate bases.
Natural det2(const Basis2& b);

// Exact squared Euclidean norm.
Natural norm2(const Vec2& v);

// A nonzero lattice vector of minimal Euclidean norm, found by repeatedly
// subtracting the rounded projection of the longer vector onto the shorter
// one. In particular norm2(w) <= 4 * det2(b). Degenerate bases are rejected.
Vec2 lagrange_gauss(const Basis2& b);

}  // namespace quintic

#endif  // QUINTIC_LATTICE_HPP
