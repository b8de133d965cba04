// The truncated loop path coalgebra: deconcatenation comultiplication,
// counit, primitives, components, Verschiebung, truncation, rendering.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <stdexcept>
#include <tuple>

#include "doctest.h"
#include "loophopf/loop.hpp"

using namespace loophopf;

namespace {

const GfPtr f5 = Gf::make(Prime(5), 1);
const GfPtr f2 = Gf::make(Prime(2), 1);
const GfPtr f3 = Gf::make(Prime(3), 1);

LoopElement a(const GfPtr& f, std::size_t bound, std::size_t m) {
  return LoopElement::basis(f, bound, m);
}

}  // namespace

TEST_CASE("element construction and structural equality") {
  LoopElement x(f5, 6);
  CHECK(x.is_zero());
  x.set_coeff(3, f5->from_int(2));
  x.set_coeff(0, f5->one());
  CHECK(x.coeff(3) == f5->from_int(2));
  CHECK(x.coeff(1).is_zero());
  x.set_coeff(3, f5->zero());  // zeros are never stored
  CHECK(x.terms().size() == 1);
  x.add_term(0, -f5->one());
  CHECK(x.is_zero());
  CHECK_THROWS_AS(x.set_coeff(6, f5->one()), std::out_of_range);
  CHECK_THROWS_AS(LoopElement(f5, 0), std::invalid_argument);

  // Equality identifies elements across truncation bounds by support.
  CHECK(a(f5, 4, 1) == a(f5, 8, 1));
  CHECK(a(f5, 4, 1) != a(f5, 4, 2));
}

TEST_CASE("scalar action and linearity") {
  LoopElement x = a(f5, 5, 1) + a(f5, 5, 3);
  LoopElement y = f5->from_int(3) * x;
  CHECK(y.coeff(1) == f5->from_int(3));
  CHECK(y.coeff(3) == f5->from_int(3));
  CHECK(x - x == LoopElement(f5, 5));
  CHECK(-x + x == LoopElement(f5, 5));
}

TEST_CASE("comultiplication deconcatenates") {
  CHECK(comult(a(f5, 4, 0)) == tensor_of(a(f5, 4, 0), a(f5, 4, 0)));

  TensorElement d2 = comult(a(f5, 4, 2));
  CHECK(d2.terms().size() == 3);
  CHECK(d2 == tensor_of(a(f5, 4, 0), a(f5, 4, 2)) + tensor_of(a(f5, 4, 1), a(f5, 4, 1)) +
                  tensor_of(a(f5, 4, 2), a(f5, 4, 0)));

  TensorElement d3 = comult(a(f5, 4, 3));
  CHECK(d3.terms().size() == 4);
  for (std::size_t i = 0; i <= 3; ++i)
    CHECK(d3.terms().at({i, 3 - i}) == f5->one());

  // Linearity.
  LoopElement x = f5->from_int(2) * a(f5, 4, 1) + a(f5, 4, 3);
  TensorElement dx = comult(x);
  TensorElement expected = f5->from_int(2) * comult(a(f5, 4, 1)) + comult(a(f5, 4, 3));
  CHECK(dx == expected);
}

TEST_CASE("coassociativity and the counit axioms on every basis path") {
  const std::size_t N = 9;
  for (std::size_t m = 0; m < N; ++m) {
    LoopElement x = a(f3, N, m);
    // (Delta (x) id)Delta = (id (x) Delta)Delta, expanded to triple tensors.
    // Each triple key arises exactly once per side, so emplace never collides.
    const TensorElement dx = comult(x);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Fe> left, right;
    for (const auto& [ij, c] : dx.terms()) {
      const TensorElement d_first = comult(a(f3, N, ij.first));
      for (const auto& [uv, e] : d_first.terms())
        left.emplace(std::make_tuple(uv.first, uv.second, ij.second), c * e);
      const TensorElement d_second = comult(a(f3, N, ij.second));
      for (const auto& [uv, e] : d_second.terms())
        right.emplace(std::make_tuple(ij.first, uv.first, uv.second), c * e);
    }
    CHECK(left == right);

    // (eps (x) id)Delta = id = (id (x) eps)Delta.
    LoopElement from_left(f3, N), from_right(f3, N);
    for (const auto& [ij, c] : dx.terms()) {
      if (ij.first == 0) from_left.add_term(ij.second, c);
      if (ij.second == 0) from_right.add_term(ij.first, c);
    }
    CHECK(from_left == x);
    CHECK(from_right == x);
  }
}

TEST_CASE("counit extracts the empty-path coefficient") {
  CHECK(counit(a(f5, 8, 0)) == f5->one());
  CHECK(counit(a(f5, 8, 5)).is_zero());
  LoopElement x = f5->from_int(3) * a(f5, 8, 0) + a(f5, 8, 2);
  CHECK(counit(x) == f5->from_int(3));
}

TEST_CASE("the primitive space is spanned by the length-one path") {
  CHECK(is_primitive(a(f5, 4, 1)));
  CHECK(is_primitive(f5->from_int(4) * a(f5, 4, 1)));
  CHECK(is_primitive(LoopElement(f5, 4)));
  CHECK_FALSE(is_primitive(a(f5, 4, 2)));
  CHECK_FALSE(is_primitive(a(f5, 4, 0)));
  CHECK_FALSE(is_primitive(a(f5, 4, 1) + a(f5, 4, 2)));
  // Exhaustive over GF(2), bound 4: primitives are exactly {0, a_1}.
  for (unsigned mask = 0; mask < 16; ++mask) {
    LoopElement x(f2, 4);
    for (std::size_t m = 0; m < 4; ++m)
      if (mask & (1u << m)) x.set_coeff(m, f2->one());
    CHECK(is_primitive(x) == (mask == 0 || mask == 2));
  }
}

TEST_CASE("components reconstruct the comultiplication") {
  CHECK(component(a(f5, 5, 3), 1) == a(f5, 5, 2));
  CHECK(component(a(f5, 5, 3), 0) == a(f5, 5, 3));
  CHECK(component(a(f5, 5, 1), 1) == a(f5, 5, 0));
  CHECK(component(a(f5, 5, 2), 3).is_zero());

  LoopElement x = f5->from_int(2) * a(f5, 5, 1) + a(f5, 5, 4);
  TensorElement rebuilt(f5, 5);
  for (std::size_t i = 0; i < 5; ++i) rebuilt += tensor_of(a(f5, 5, i), component(x, i));
  CHECK(rebuilt == comult(x));
}

TEST_CASE("Verschiebung divides path lengths by p") {
  CHECK(verschiebung(a(f2, 8, 2)) == a(f2, 8, 1));
  CHECK(verschiebung(a(f3, 9, 3)) == a(f3, 9, 1));
  CHECK(verschiebung(a(f5, 6, 5)) == a(f5, 6, 1));
  CHECK(verschiebung(a(f5, 6, 1)).is_zero());
  CHECK(verschiebung(a(f5, 6, 0)) == a(f5, 6, 0));
  CHECK(verschiebung(a(f3, 9, 6)) == a(f3, 9, 2));
  CHECK(verschiebung(a(f3, 9, 7)).is_zero());

  // V is a coalgebra map: (V (x) V)Delta = Delta V on every basis path.
  for (std::size_t m = 0; m < 9; ++m) {
    TensorElement lhs(f3, 9);
    const TensorElement dm = comult(a(f3, 9, m));
    for (const auto& [ij, c] : dm.terms())
      lhs += c * tensor_of(verschiebung(a(f3, 9, ij.first)), verschiebung(a(f3, 9, ij.second)));
    CHECK(lhs == comult(verschiebung(a(f3, 9, m))));
  }
}

TEST_CASE("truncation drops high-degree terms") {
  CHECK(truncate(a(f5, 6, 0) + a(f5, 6, 3), 2) == a(f5, 6, 0));
  CHECK(truncate(a(f5, 6, 1), 4) == a(f5, 6, 1));
  LoopElement all(f5, 8), low(f5, 8);
  for (std::size_t m = 0; m < 8; ++m) all.set_coeff(m, f5->one());
  for (std::size_t m = 0; m < 4; ++m) low.set_coeff(m, f5->one());
  CHECK(truncate(all, 4) == low);
  CHECK_THROWS_AS(truncate(low, 9), std::invalid_argument);

  // Grading: comult of a degree-< M element lands in the M-truncated square.
  const TensorElement dlow = comult(low);
  for (const auto& [ij, c] : dlow.terms()) {
    CHECK(ij.first + ij.second < 4);
    CHECK_FALSE(c.is_zero());
  }
}

TEST_CASE("tensor arithmetic") {
  TensorElement t = tensor_of(a(f5, 4, 1) + a(f5, 4, 2), f5->from_int(2) * a(f5, 4, 0));
  CHECK(t.terms().size() == 2);
  CHECK(t.terms().at({1, 0}) == f5->from_int(2));
  CHECK(t.terms().at({2, 0}) == f5->from_int(2));
  CHECK(t - t == TensorElement(f5, 4));
  TensorElement sum = t + t;
  CHECK(sum.terms().at({1, 0}) == f5->from_int(4));
  CHECK_THROWS_AS(TensorElement(f5, 4).add_term(4, 0, f5->one()), std::out_of_range);
  // Bilinearity of tensor_of.
  CHECK(tensor_of(a(f5, 4, 1), a(f5, 4, 2) + a(f5, 4, 3)) ==
        tensor_of(a(f5, 4, 1), a(f5, 4, 2)) + tensor_of(a(f5, 4, 1), a(f5, 4, 3)));
}

TEST_CASE("rendering") {
  LoopElement x(f5, 6);
  x.set_coeff(0, f5->one());
  x.set_coeff(3, f5->from_int(2));
  CHECK(render(x) == "1*a0 + 2*a3");
  CHECK(render(LoopElement(f5, 6)) == "0");
  CHECK(render(a(f5, 6, 4)) == "1*a4");

  GfPtr f4 = Gf::make(Prime(2), 2);
  LoopElement y(f4, 3);
  y.set_coeff(1, f4->element(2));
  CHECK(render(y) == "[0,1]*a1");
}
