#pragma once

#include <string>
#include <vector>

#include "cfk/big.hpp"
#include "cfk/expansions.hpp"

namespace cfk {

// Chord of the unit circle between angles a <= b in [0,1).
struct Leaf {
  BigRational a;
  BigRational b;

  Leaf() = default;
  /// Reduces both angles mod 1 and orders them.
  Leaf(BigRational x, BigRational y);

  bool degenerate() const { return a == b; }
  friend bool operator==(const Leaf&, const Leaf&) = default;
  std::string to_string() const;
};

BigRational leaf_length(const Leaf& L);

/// Image under angle doubling.
Leaf leaf_image(const Leaf& L);

/// True iff the chords cross in the open disk (strictly interleaved endpoints).
bool leaves_cross(const Leaf& x, const Leaf& y);

/// (x/2, 1 - x/2) for x in Lambda; throws DomainError otherwise.
Leaf minor_leaf_from_lambda(const BinaryExpansion& x);

/// Forward orbit L, f(L), f^2(L), ... up to the first repeat.
std::vector<Leaf> forward_orbit(const Leaf& L);

/// Thurston's criterion for rational angles: forward images pairwise
/// unlinked, none shorter than L, and none crossing the two major leaves
/// (the longer pair of preimages of L).
bool is_minor_leaf(const Leaf& L);

/// is_minor_leaf plus symmetry under conjugation (b = 1 - a).
bool is_real_minor_leaf(const Leaf& L);

/// theta is the angle of a real parameter ray: 2 theta or 2 (1 - theta) in Lambda.
bool real_ray_member(const BigRational& theta);

}  // namespace cfk
