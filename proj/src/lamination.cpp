#include "cfk/lamination.hpp"

#include <algorithm>

#include "cfk/bifurcation.hpp"
#include "cfk/errors.hpp"

namespace cfk {

namespace {

BigRational mod1(const BigRational& x) { return x - BigRational(floor_of(x)); }

// x strictly inside the arc (a, b) with a < b.
bool strictly_between(const BigRational& x, const BigRational& a, const BigRational& b) {
  return a < x && x < b;
}

}  // namespace

Leaf::Leaf(BigRational x, BigRational y) : a(mod1(x)), b(mod1(y)) {
  if (b < a) std::swap(a, b);
}

std::string Leaf::to_string() const {
  return "(" + to_fraction_string(a) + ", " + to_fraction_string(b) + ")";
}

BigRational leaf_length(const Leaf& L) {
  BigRational d = L.b - L.a;
  return std::min(d, BigRational(1 - d));
}

Leaf leaf_image(const Leaf& L) { return Leaf(2 * L.a, 2 * L.b); }

bool leaves_cross(const Leaf& x, const Leaf& y) {
  if (x.degenerate() || y.degenerate()) return false;
  bool c_in = strictly_between(y.a, x.a, x.b);
  bool d_in = strictly_between(y.b, x.a, x.b);
  bool c_out = y.a < x.a || y.a > x.b;
  bool d_out = y.b < x.a || y.b > x.b;
  return (c_in && d_out) || (d_in && c_out);
}

Leaf minor_leaf_from_lambda(const BinaryExpansion& x) {
  if (!lambda_member(x)) throw DomainError(x.to_string() + " is not in Lambda");
  BigRational v = x.to_rational();
  return Leaf(v / 2, 1 - v / 2);
}

std::vector<Leaf> forward_orbit(const Leaf& L) {
  std::vector<Leaf> orbit{L};
  while (true) {
    Leaf next = leaf_image(orbit.back());
    if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) return orbit;
    orbit.push_back(next);
  }
}

bool is_minor_leaf(const Leaf& L) {
  const BigRational len = leaf_length(L);
  auto orbit = forward_orbit(L);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (leaf_length(orbit[i]) < len) return false;
    for (std::size_t j = i + 1; j < orbit.size(); ++j)
      if (leaves_cross(orbit[i], orbit[j])) return false;
  }
  const BigRational half(1, 2);
  Leaf p1(L.a / 2, L.b / 2), p2(L.a / 2 + half, L.b / 2 + half);
  Leaf q1(L.a / 2, L.b / 2 + half), q2(L.a / 2 + half, L.b / 2);
  const bool q_longer = leaf_length(q1) >= leaf_length(p1);
  const Leaf& M1 = q_longer ? q1 : p1;
  const Leaf& M2 = q_longer ? q2 : p2;
  for (const Leaf& leaf : orbit)
    if (leaves_cross(leaf, M1) || leaves_cross(leaf, M2)) return false;
  return true;
}

bool is_real_minor_leaf(const Leaf& L) {
  if (mod1(1 - L.a) != L.b) return false;
  return is_minor_leaf(L);
}

bool real_ray_member(const BigRational& theta) {
  BigRational t = mod1(theta);
  auto in_lambda = [](const BigRational& x) {
    return x >= 0 && x <= 1 && lambda_member(BinaryExpansion::from_rational(x));
  };
  return in_lambda(2 * t) || in_lambda(2 * (1 - t));
}

}  // namespace cfk
