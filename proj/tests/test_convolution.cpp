#include "fixtures.hpp"
#include "hopfcore/convolution.hpp"
#include "hopfcore/errors.hpp"

#include <doctest.h>

using namespace hopfcore;

namespace {

using RingPtr = std::shared_ptr<const CoefficientRing>;

RingPtr ring(const std::string& name) {
  return std::make_shared<const CoefficientRing>(builtin_ring(name));
}

Vector el(const CoefficientRing& R, const std::string& label) {
  for (std::size_t i = 0; i < R.dim(); ++i)
    if (R.label(i) == label)
      return R.basis_element(i);
  FAIL("no label " << label);
  return {};
}

Vector scalar(const Rational& q) { return Vector{q}; }

} // namespace

TEST_CASE("convolution examples") {
  const auto p = fixtures::line(3);
  const auto Q = ring("q");
  const MultiIndex t = MultiIndex::delta(0);
  const Rational a(2, 3), b(-5);
  ConvElement f(p.pbw, Q), g(p.pbw, Q);
  f.set(t, scalar(a));
  g.set(t, scalar(b));
  const ConvElement fg = convolve(f, g);
  CHECK(is_zero(fg.value(MultiIndex())));
  CHECK(is_zero(fg.value(t)));
  CHECK(fg.value(MultiIndex::delta(0, 2)) == scalar(a * b));
  CHECK(is_zero(fg.value(MultiIndex::delta(0, 3))));

  CHECK(convolve(f, unit_conv(p.pbw, Q)) == f);
  CHECK(convolve(unit_conv(p.pbw, Q), unit_conv(p.pbw, Q)) == unit_conv(p.pbw, Q));

  const auto M = ring("m2q");
  Rng rng(4);
  const Vector r = el(*M, "E12") + el(*M, "E21");
  const ConvElement h = random_element(p.pbw, M, rng, 3);
  const ConvElement eh = convolve(epsilon_pullback(p.pbw, M, r), h);
  for (std::size_t i = 0; i < p.pbw->size(); ++i)
    CHECK(eh.value_at(i) == M->multiply(r, h.value_at(i)));
}

TEST_CASE("unit, leading and u_star examples") {
  const auto p = fixtures::line(3);
  const auto Q = ring("q");
  const ConvElement u = unit_conv(p.pbw, Q);
  CHECK(u.value(MultiIndex()) == scalar(1));
  for (std::size_t i = 1; i < p.pbw->size(); ++i)
    CHECK(is_zero(u.value_at(i)));
  CHECK(leading(u).index.is_zero());
  CHECK(leading(u).value == scalar(1));
  CHECK(u_star(u) == scalar(1));

  ConvElement f(p.pbw, Q);
  f.set(MultiIndex::delta(0, 2), scalar(7));
  f.set(MultiIndex::delta(0), scalar(3));
  CHECK(leading(f).index == MultiIndex::delta(0));
  CHECK(leading(f).value == scalar(3));
  CHECK(is_zero(u_star(f)));
  CHECK(u_star(epsilon_pullback(p.pbw, Q, scalar(5))) == scalar(5));
  CHECK_THROWS_AS(leading(ConvElement(p.pbw, Q)), ZeroElement);

  const auto two = fixtures::pipeline(build_ueg(LieAlgebra::abelian({"a", "b"}), 3));
  const auto& g = two.pbw->gens();
  ConvElement k(two.pbw, Q);
  k.set(g.delta("a") + g.delta("b"), scalar(1));
  k.set(g.delta("a", 2), scalar(2));
  CHECK(leading(k).index == g.delta("a", 2));
}

TEST_CASE("tech2 examples") {
  const auto p = fixtures::line(4);
  const auto Q = ring("q");
  ConvElement f(p.pbw, Q), g(p.pbw, Q);
  f.set(MultiIndex::delta(0), scalar(2));
  g.set(MultiIndex::delta(0), scalar(3));
  const Report r = check_tech2(f, g);
  CHECK(r.passed());
  CHECK(r.count(Status::pass) == 1);
  CHECK(leading(convolve(f, g)).value == scalar(6));

  const auto M = ring("m2q");
  Rng rng(8);
  ConvElement fm(p.pbw, M), gm(p.pbw, M);
  fm.set(MultiIndex::delta(0), el(*M, "E11"));
  fm.set(MultiIndex::delta(0, 2), el(*M, "E21"));
  gm.set(MultiIndex::delta(0), el(*M, "E22"));
  gm.set(MultiIndex::delta(0, 2), el(*M, "E12") + el(*M, "E11"));
  const Report rm = check_tech2(fm, gm);
  CHECK(rm.passed());
  CHECK(rm.lines()[0].detail.find("not applicable") != std::string::npos);
  CHECK(is_zero(convolve(fm, gm).value(MultiIndex::delta(0, 2))));

  const ConvElement h = random_element(p.pbw, M, rng, 2);
  CHECK(leading(convolve(unit_conv(p.pbw, M), h)).index == leading(h).index);
  CHECK(check_tech2(unit_conv(p.pbw, M), h).passed());

  ConvElement high(p.pbw, Q);
  high.set(MultiIndex::delta(0, 3), scalar(1));
  CHECK(check_tech2(high, high).count(Status::inconclusive) == 1);
}

TEST_CASE("prime and semiprime witness examples") {
  const auto p = fixtures::heis(4);
  const auto& g = p.pbw->gens();
  const auto M = ring("m2q");
  ConvElement s(p.pbw, M), t(p.pbw, M);
  s.set(g.delta("x"), el(*M, "E11"));
  t.set(g.delta("y"), el(*M, "E22"));
  const Witness w = prime_witness(s, t);
  CHECK(w.r == el(*M, "E12"));
  CHECK(w.proof.index == g.delta("x") + g.delta("y"));
  CHECK(w.proof.value == el(*M, "E12"));

  const auto Q = ring("q");
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const ConvElement a = random_element(p.pbw, Q, rng, 2);
    const ConvElement b = random_element(p.pbw, Q, rng, 2);
    const Witness wq = prime_witness(a, b);
    CHECK(wq.r == scalar(1));
    CHECK(wq.proof.value == Q->multiply(leading(a).value, leading(b).value));
  }

  const auto P = ring("qxq");
  ConvElement s1(p.pbw, P), t1(p.pbw, P);
  s1.set(g.delta("x"), el(*P, "(1,0)"));
  t1.set(g.delta("y"), el(*P, "(0,1)"));
  CHECK_THROWS_AS(prime_witness(s1, t1), NoWitnessFound);
  const Witness ws = semiprime_witness(s1);
  CHECK_FALSE(is_zero(ws.proof.value));
  const Vector r11 = el(*P, "(1,0)") + el(*P, "(0,1)");
  CHECK(P->multiply(P->multiply(el(*P, "(1,0)"), r11), el(*P, "(1,0)")) == el(*P, "(1,0)"));

  const auto N = ring("qx2");
  const ConvElement nx = epsilon_pullback(p.pbw, N, el(*N, "x"));
  CHECK_THROWS_AS(semiprime_witness(nx), NoWitnessFound);
  CHECK(convolve(nx, nx).is_zero());

  for (int i = 0; i < 20; ++i)
    CHECK_NOTHROW(semiprime_witness(random_element(p.pbw, M, rng, 2)));
}

TEST_CASE("ring_check examples") {
  const RingCheck m = ring_check(builtin_ring("m2q"));
  CHECK(m.found.prime);
  CHECK(m.found.semiprime);
  CHECK_FALSE(m.found.domain);
  CHECK(m.report.passed());
  const RingCheck q = ring_check(builtin_ring("qxq"));
  CHECK(q.found.semiprime);
  CHECK_FALSE(q.found.prime);
  CHECK(q.prime_refutation == "((1,0), (0,1))");
  const RingCheck n = ring_check(builtin_ring("qx2"));
  CHECK_FALSE(n.found.semiprime);
  CHECK(ring_check(builtin_ring("q")).found.domain);
  CHECK_THROWS_AS(builtin_ring("zz"), FormatError);

  // A declared flag that the scan refutes is a failing line.
  const CoefficientRing liar(builtin_ring("qxq"), RingFlags{true, true, true});
  CHECK_FALSE(ring_check(liar).report.passed());
}

TEST_CASE("convolution laws on random elements") {
  const auto p = fixtures::xyw(4);
  Rng rng(21);
  for (const char* name : {"q", "m2q", "qxq", "qx2"}) {
    const auto R = ring(name);
    for (int i = 0; i < 40; ++i) {
      const ConvElement f = random_element(p.pbw, R, rng, 1);
      const ConvElement g = random_element(p.pbw, R, rng, 1);
      const ConvElement h = random_element(p.pbw, R, rng, 2);
      CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
      CHECK(u_star(convolve(f, g)) == R->multiply(u_star(f), u_star(g)));
      const ConvElement a = random_element(p.pbw, R, rng, 2);
      const ConvElement b = random_element(p.pbw, R, rng, 2);
      const Report r = check_tech2(a, b);
      CHECK(r.passed());
      CHECK(r.count(Status::inconclusive) == 0);
    }
  }
  const auto Q = ring("q");
  for (int i = 0; i < 200; ++i)
    CHECK_FALSE(convolve(random_element(p.pbw, Q, rng, 2), random_element(p.pbw, Q, rng, 2))
                    .is_zero());
}

TEST_CASE("mismatched operands are rejected") {
  const auto a = fixtures::line(3);
  const auto b = fixtures::line(3);
  const auto Q = ring("q"), M = ring("m2q");
  CHECK_THROWS_AS(convolve(unit_conv(a.pbw, Q), unit_conv(b.pbw, Q)), HostMismatch);
  CHECK_THROWS_AS(convolve(unit_conv(a.pbw, Q), unit_conv(a.pbw, M)), RingMismatch);
}
