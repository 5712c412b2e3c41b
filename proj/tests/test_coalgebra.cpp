#include "fixtures.hpp"
#include "hopfcore/coradical.hpp"
#include "hopfcore/errors.hpp"

#include <doctest.h>

using namespace hopfcore;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::size_t idx(const FilteredBialgebra& h, const std::string& label) {
  auto i = h.find_label(label);
  REQUIRE(i);
  return *i;
}

Vector e(const FilteredBialgebra& h, const std::string& label) {
  return unit_vector(h.dim(), idx(h, label));
}

FilteredBialgebra bad_counit() {
  BialgebraTables t;
  t.labels = {"1", "t"};
  t.degree_bound = 1;
  t.mult.assign(4, std::nullopt);
  t.mult[0] = unit_vector(2, 0);
  t.mult[1] = unit_vector(2, 1);
  t.mult[2] = unit_vector(2, 1);
  t.comult = {{{0, 0, 1}}, {{1, 1, 1}}};
  t.counit = unit_vector(2, 0);
  return FilteredBialgebra(t);
}

} // namespace

TEST_CASE("verify_axioms examples") {
  CHECK(verify_axioms(build_ueg(LieAlgebra::abelian({"t"}), 3)).passed());
  const Report bad = verify_axioms(bad_counit());
  CHECK(bad.count(Status::fail, "counit") == 1);
  CHECK(verify_axioms(build_grouplike()).passed());
  CHECK(verify_axioms(build_xyw(4)).passed());
  CHECK(verify_axioms(build_ueg(LieAlgebra::sl2(), 3)).passed());
}

TEST_CASE("coradical filtration examples") {
  CHECK(coradical_filtration(build_ueg(LieAlgebra::abelian({"t"}), 3)).dims() ==
        std::vector<std::size_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(coradical_filtration(build_grouplike()), NotExhaustive);
  const auto g = filtration_layers(build_grouplike());
  CHECK_FALSE(g.exhaustive);
  CHECK(g.dims() == std::vector<std::size_t>{1, 1});
  CHECK(coradical_filtration(build_xyw(2)).dims() == std::vector<std::size_t>{1, 3, 7});
  // C(n+3, 3) monomials of degree ≤ n in three variables.
  const auto heis = coradical_filtration(build_ueg(LieAlgebra::heisenberg(), 4)).dims();
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(heis[n] == binomial(n + 3, 3));
}

TEST_CASE("check_connected examples") {
  CHECK(check_connected(build_ueg(LieAlgebra::abelian({"t"}), 3)));
  CHECK_FALSE(check_connected(build_grouplike()));
  CHECK(check_connected(build_xyw(3)));
}

TEST_CASE("graded splitting examples") {
  const auto h = build_ueg(LieAlgebra::abelian({"t"}), 3);
  const auto split = graded_splitting(coradical_filtration(h), h);
  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(split.components[n].dim() == 1);
    CHECK(split.components[n].contains(unit_vector(4, n)));
  }
  CHECK(split.components[0].contains(h.unit()));

  const auto x = build_xyw(2);
  const auto sx = graded_splitting(coradical_filtration(x), x);
  CHECK(sx.components[2].dim() == 4);
  for (const char* l : {"x^2", "x*y", "y^2", "w"})
    CHECK(sx.components[2].contains(e(x, l)));
}

TEST_CASE("gr structure examples") {
  const auto h = build_ueg(LieAlgebra::abelian({"t"}), 3);
  const auto split = graded_splitting(coradical_filtration(h), h);
  const auto gr = gr_structure(split, h);
  CHECK(gr.tables().mult == h.tables().mult);
  for (std::size_t i = 0; i < h.dim(); ++i)
    CHECK(gr.comultiply(unit_vector(4, i)) == h.comultiply(unit_vector(4, i)));

  const auto x = build_xyw(2);
  const auto sx = graded_splitting(coradical_filtration(x), x);
  const auto gx = gr_structure(sx, x);
  const QMatrix dw = gx.comultiply(e(gx, "w"));
  CHECK(dw(idx(gx, "w"), idx(gx, "1")) == 1);
  CHECK(dw(idx(gx, "1"), idx(gx, "w")) == 1);
  CHECK(dw(idx(gx, "x"), idx(gx, "y")) == 1);
  CHECK(dw(idx(gx, "y"), idx(gx, "x")) == 0);

  const auto p = fixtures::heis(4);
  CHECK(p.gr_facts.passed());
  CHECK(p.gr_facts.count(Status::pass, "gr_commutative") > 0);
  CHECK(p.gr->dim() == 35);
}

TEST_CASE("verify_gr_facts passes on every instance") {
  for (auto p : {fixtures::heis(4), fixtures::sl2(4), fixtures::xyw(4), fixtures::line(4)}) {
    CHECK(p.gr_facts.passed());
    CHECK(p.gr_facts.count(Status::pass, "coradically_graded") > 0);
  }
}

TEST_CASE("enveloping algebra builder") {
  CHECK(build_ueg(LieAlgebra::heisenberg(), 2).dim() == 10);
  const auto s = build_ueg(LieAlgebra::sl2(), 2);
  CHECK(s.dim() == 10);
  CHECK(s.multiply(e(s, "f"), e(s, "e")) == e(s, "e*f") - e(s, "h"));
  CHECK(s.multiply(e(s, "e"), e(s, "f")) == e(s, "e*f"));
  CHECK(s.multiply(e(s, "h"), e(s, "e")) == e(s, "e*h") + Rational(2) * e(s, "e"));
  CHECK_THROWS_AS(s.multiply(e(s, "e*f"), e(s, "h")), TruncationError);

  LieAlgebra broken = LieAlgebra::abelian({"a", "b"});
  broken.bracket[0][1] = unit_vector(2, 0);
  CHECK_THROWS_AS(check_lie(broken), NotALieAlgebra);
}

TEST_CASE("xyw builder") {
  const auto x = build_xyw(2);
  CHECK(x.dim() == 7);
  const QMatrix dw = x.comultiply(e(x, "w"));
  CHECK(dw != dw.transpose());
  CHECK(x.counit(e(x, "w")) == 0);
}

TEST_CASE("comH, delta defect and primitive closure on every instance") {
  Rng rng(1);
  for (auto p : {fixtures::heis(4), fixtures::sl2(4), fixtures::xyw(4), fixtures::line(4)}) {
    const Report c = check_comH(*p.h, p.filt, p.split);
    CHECK(c.passed());
    CHECK(c.count(Status::pass) > 0);
    CHECK(check_delta_defect(p.split).passed());
    CHECK(check_primitive_closure(*p.gr, rng, 50).passed());
  }
}

TEST_CASE("filtered tensor sum membership") {
  // degrees of a split basis {1, t, t2}
  const std::vector<unsigned> deg{0, 1, 2};
  QMatrix t(3, 3);
  t(1, 1) = 1;  // t⊗t ∈ H_1⊗H_1
  CHECK(in_filtered_tensor_sum(deg, t, 2));
  CHECK_FALSE(in_filtered_tensor_sum(deg, t, 1));
  QMatrix u(3, 3);
  u(0, 2) = 1;  // 1⊗t2 needs i = 0
  CHECK_FALSE(in_filtered_tensor_sum(deg, u, 2));
}
