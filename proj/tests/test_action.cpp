#include "fixtures.hpp"
#include "hopfcore/action.hpp"
#include "hopfcore/errors.hpp"

#include <doctest.h>

using namespace hopfcore;

namespace {

using APtr = std::shared_ptr<const DeskAlgebra>;

APtr poly(std::vector<std::string> vars, unsigned E) {
  return std::make_shared<const DeskAlgebra>(DeskAlgebra::polynomial(std::move(vars), E));
}

Vector mono(const DeskAlgebra& A, const std::string& label) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.label(i) == label)
      return A.basis_element(i);
  FAIL("no monomial " << label);
  return {};
}

struct Sl2Action {
  Pipeline host;
  APtr A;
  QMatrix E, F, H;
  ModuleAlgebraAction act;
};

Sl2Action sl2_action(unsigned D, unsigned Edeg = 6) {
  auto host = fixtures::sl2(D);
  auto A = poly({"x", "y"}, Edeg);
  QMatrix E = A->differential_operator({{1, {1, 0}, {0, 1}}});
  QMatrix F = A->differential_operator({{1, {0, 1}, {1, 0}}});
  QMatrix H = A->differential_operator({{1, {1, 0}, {1, 0}}, {-1, {0, 1}, {0, 1}}});
  ModuleAlgebraAction act(host.pbw, A, {{"e", E}, {"f", F}, {"h", H}});
  return {std::move(host), A, E, F, H, std::move(act)};
}

ModuleAlgebraAction d_action(const Pipeline& host, const APtr& A) {
  return ModuleAlgebraAction(host.pbw, A, {{"d", A->differential_operator({{1, {0}, {1}}})}});
}

// The truncated core recomputed from words of length ≤ D in the generator
// operators, which span U_{≤D} without reference to any PBW basis.
std::vector<std::size_t> core_dims_by_words(const std::vector<QMatrix>& gens,
                                            const IdealOracle& I, const DeskAlgebra& A,
                                            unsigned d_A, unsigned D) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) <= d_A)
      cols.push_back(i);
  const QMatrix Q = annihilator(I.space());
  std::vector<QMatrix> layer{QMatrix::identity(A.dim())};
  QMatrix stacked(0, cols.size());
  std::vector<std::size_t> dims;
  for (unsigned len = 0; len <= D; ++len) {
    if (len > 0) {
      std::vector<QMatrix> next;
      for (const auto& w : layer)
        for (const auto& g : gens)
          next.push_back(g * w);
      layer = std::move(next);
    }
    for (const auto& w : layer) {
      const QMatrix c = Q * w;
      for (std::size_t r = 0; r < c.rows(); ++r) {
        Vector row(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k)
          row[k] = c(r, cols[k]);
        stacked.append_row(row);
      }
    }
    dims.push_back(kernel(stacked).dim());
  }
  return dims;
}

Subspace low_part(const Subspace& s, const DeskAlgebra& A, unsigned d_A) {
  std::vector<Vector> low;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) <= d_A)
      low.push_back(A.basis_element(i));
  return s.intersect(Subspace::span(low, A.dim()));
}

} // namespace

TEST_CASE("polynomial desk algebra") {
  const auto A = poly({"x", "y"}, 3);
  CHECK(A->dim() == 10);
  CHECK(A->label(0) == "1");
  CHECK(A->label(3) == "x^2");
  CHECK(A->label(4) == "x*y");
  CHECK(A->check_laws().passed());
  CHECK(A->multiply(mono(*A, "x"), mono(*A, "x*y")) == mono(*A, "x^2*y"));
  CHECK_THROWS_AS(A->multiply(mono(*A, "x^2"), mono(*A, "y^2")), TruncationError);
  CHECK_THROWS_AS(A->differential_operator({{1, {1, 0}, {0, 0}}}), TruncationError);
  CHECK_THROWS_AS(A->differential_operator({{1, {1}, {0}}}), FormatError);
}

TEST_CASE("act examples") {
  const auto host = fixtures::line(4, "d");
  const auto A = poly({"x"}, 6);
  const ModuleAlgebraAction act = d_action(host, A);
  for (std::size_t i = 0; i < A->dim(); ++i)
    CHECK(act.act(MultiIndex(), A->basis_element(i)) == A->basis_element(i));
  // Divided derivatives: e_{kδ}.x^n = C(n,k) x^{n-k}.
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned k = 0; k <= 4; ++k) {
      Vector want(A->dim());
      if (k <= n) {
        Rational c = 1;
        for (unsigned i = 0; i < k; ++i)
          c = c * (n - i) / (i + 1);
        want[n - k] = c;
      }
      CHECK(act.act(MultiIndex::delta(0, k), A->basis_element(n)) == want);
    }

  const auto s = sl2_action(3);
  const auto& g = s.host.pbw->gens();
  CHECK(s.act.act(g.delta("e"), mono(*s.A, "y^2")) == Rational(2) * mono(*s.A, "x*y"));
}

TEST_CASE("module and module-algebra laws") {
  const auto s = sl2_action(4);
  CHECK(s.act.verify_module().passed());
  CHECK(s.act.verify_module_algebra().passed());
  CHECK(s.act.verify_module_algebra().count(Status::pass) == s.host.pbw->size());

  // xyw on Q[s,t]: x, y act as ∂_s and w as ∂_s²/2 + ∂_t, so that
  // w.(ab) = (w.a)b + a(w.b) + (x.a)(y.b).
  const auto xyw = fixtures::xyw(4);
  const auto B = poly({"s", "t"}, 6);
  const QMatrix ds = B->differential_operator({{1, {0, 0}, {1, 0}}});
  const QMatrix w = B->differential_operator({{Rational(1, 2), {0, 0}, {2, 0}}, {1, {0, 0}, {0, 1}}});
  const ModuleAlgebraAction good(xyw.pbw, B, {{"x", ds}, {"y", ds}, {"w", w}});
  CHECK(good.verify_module().passed());
  CHECK(good.verify_module_algebra().passed());
  // Dropping the cross term breaks the law at w.
  const QMatrix dt = B->differential_operator({{1, {0, 0}, {0, 1}}});
  const ModuleAlgebraAction bad(xyw.pbw, B, {{"x", ds}, {"y", ds}, {"w", dt}});
  const Report rb = bad.verify_module_algebra();
  CHECK_FALSE(rb.passed());
  bool w_failed = false;
  for (const auto& l : rb.lines())
    if (l.status == Status::fail && l.subject == "w")
      w_failed = true;
  CHECK(w_failed);

  // An operator that moves 1 fails the unit law.
  const auto host = fixtures::line(3, "d");
  const auto A = poly({"x"}, 4);
  QMatrix op = A->differential_operator({{1, {0}, {1}}});
  op(1, 0) = 1;
  const ModuleAlgebraAction moved(host.pbw, A, {{"d", op}});
  const Report rm = moved.verify_module_algebra();
  CHECK_FALSE(rm.passed());
  CHECK(rm.lines()[1].detail == "e.1 != eps(e) 1");

  CHECK_THROWS_AS(ModuleAlgebraAction(host.pbw, A, {}), FormatError);
}

TEST_CASE("module check catches broken relations") {
  auto s = sl2_action(3);
  // e and f swapped with a sign: [e,f] = -h instead of h.
  const ModuleAlgebraAction wrong(s.host.pbw, s.A, {{"e", s.F}, {"f", s.E}, {"h", s.H}});
  CHECK_FALSE(wrong.verify_module().passed());
}

TEST_CASE("ideal oracles") {
  const auto A = poly({"x", "y"}, 4);
  const IdealOracle I = IdealOracle::monomial(A, {{1, 0}});
  CHECK(I.contains(mono(*A, "x*y")));
  CHECK_FALSE(I.contains(mono(*A, "y^3")));
  CHECK(I.check_ideal().passed());
  const auto R = I.quotient();
  CHECK(R->labels() == std::vector<std::string>{"1", "y", "y^2", "y^3", "y^4"});
  CHECK(I.project(mono(*A, "x^2") + mono(*A, "y")) == unit_vector(5, 1));
  CHECK(I.lift(unit_vector(5, 2)) == mono(*A, "y^2"));

  // Principal (x - y): normal forms replace x by y, never raising degree.
  const IdealOracle P = IdealOracle::principal(A, mono(*A, "x") - mono(*A, "y"));
  CHECK(P.contains(mono(*A, "x^2") - mono(*A, "y^2")));
  CHECK_FALSE(P.contains(mono(*A, "x")));
  CHECK(P.check_ideal().passed());
  CHECK(P.quotient()->dim() == 5);
  CHECK(P.project(mono(*A, "x*y")) == P.project(mono(*A, "y^2")));

  CHECK(IdealOracle::zero(A).quotient()->dim() == A->dim());
  CHECK(IdealOracle::whole(A).is_whole());

  const auto QxQ = std::make_shared<const DeskAlgebra>(TableAlgebra(builtin_ring("qxq")));
  CHECK_THROWS_AS(IdealOracle::subspace(QxQ, {Vector{1, 1}}), FormatError);
  const IdealOracle S = IdealOracle::subspace(QxQ, {Vector{1, 0}});
  CHECK(S.quotient()->dim() == 1);
}

TEST_CASE("rho examples and laws") {
  const auto host = fixtures::line(4, "d");
  const auto A = poly({"x"}, 6);
  const ModuleAlgebraAction act = d_action(host, A);
  const IdealOracle I = IdealOracle::monomial(A, {{1}});
  const ConvElement rx = rho(act, I, mono(*A, "x"));
  CHECK(is_zero(rx.value(MultiIndex())));
  CHECK(rx.value(MultiIndex::delta(0)) == unit_vector(1, 0));
  const ConvElement r1 = rho(act, I, A->one());
  CHECK(r1.value(MultiIndex()) == unit_vector(1, 0));
  for (std::size_t p = 1; p < host.pbw->size(); ++p)
    CHECK(is_zero(r1.value_at(p)));

  auto s = sl2_action(4);
  const IdealOracle m = IdealOracle::monomial(s.A, {{1, 0}, {0, 1}});
  CHECK(rho(s.act, m, mono(*s.A, "x*y")).is_zero());

  const IdealOracle Ix = IdealOracle::monomial(s.A, {{1, 0}});
  Rng rng(6);
  for (std::size_t i = 0; i < s.A->dim(); ++i) {
    const Vector a = s.A->basis_element(i);
    CHECK(u_star(rho(s.act, Ix, a)) == Ix.project(a));
  }
  for (int t = 0; t < 30; ++t) {
    Vector a(s.A->dim()), b(s.A->dim());
    for (std::size_t i = 0; i < s.A->dim(); ++i) {
      if (s.A->degree(i) <= 2 && rng.below(3) == 0)
        a[i] = rng.small_rational();
      if (s.A->degree(i) <= 2 && rng.below(3) == 0)
        b[i] = rng.small_rational();
    }
    CHECK(rho(s.act, Ix, s.A->multiply(a, b)) ==
          convolve(rho(s.act, Ix, a), rho(s.act, Ix, b)));
  }
}

TEST_CASE("hcore examples") {
  auto s = sl2_action(5);
  const unsigned d_A = 4;
  CHECK(hcore(s.act, IdealOracle::zero(s.A), d_A, 4).core.dim() == 0);
  const HCore whole = hcore(s.act, IdealOracle::whole(s.A), d_A, 4);
  CHECK(whole.core.dim() == 15);
  CHECK(whole.stabilized);

  const IdealOracle Ix = IdealOracle::monomial(s.A, {{1, 0}});
  const HCore c4 = hcore(s.act, Ix, d_A, 4);
  CHECK(c4.core.dim() == 0);
  const HCore c5 = hcore(s.act, Ix, d_A, 5);
  CHECK(c5.dims_by_cap ==
        core_dims_by_words({s.E, s.F, s.H}, Ix, *s.A, d_A, 5));
  CHECK(c5.stabilized);
  REQUIRE(c5.stable_from);
  CHECK(*c5.stable_from == 4);
  // At cap 3 only x^4 survives: f^k.x^4 stays in (x) for k ≤ 3.
  const HCore c3 = hcore(s.act, Ix, d_A, 3);
  CHECK(c3.core.dim() == 1);
  CHECK(c3.core.contains(mono(*s.A, "x^4")));
  CHECK_FALSE(c3.stabilized);
  CHECK_THROWS_AS(hcore(s.act, Ix, d_A, 6), TruncationError);
  CHECK_THROWS_AS(hcore(s.act, Ix, 7, 3), TruncationError);

  const auto host = fixtures::line(4, "d");
  const auto A = poly({"x"}, 6);
  const ModuleAlgebraAction act = d_action(host, A);
  CHECK(hcore(act, IdealOracle::monomial(A, {{1}}), 4, 4).core.dim() == 0);
}

TEST_CASE("hcore properties") {
  auto s = sl2_action(5);
  const unsigned d_A = 4;
  for (const IdealOracle& I :
       {IdealOracle::monomial(s.A, {{1, 0}}), IdealOracle::monomial(s.A, {{2, 0}, {0, 3}}),
        IdealOracle::principal(s.A, mono(*s.A, "x*y")), IdealOracle::monomial(s.A, {{1, 0}, {0, 1}}),
        IdealOracle::zero(s.A), IdealOracle::whole(s.A)}) {
    Subspace prev = Subspace::full(s.A->dim());
    for (unsigned D = 0; D <= 5; ++D) {
      const HCore c = hcore(s.act, I, d_A, D);
      CHECK(I.space().contains(c.core));
      CHECK(prev.contains(c.core));
      prev = c.core;
      for (std::size_t k = 1; k < c.dims_by_cap.size(); ++k)
        CHECK(c.dims_by_cap[k] <= c.dims_by_cap[k - 1]);
      // Closed under products that stay inside the algebra cap.
      for (const auto& v : c.core.basis_vectors())
        for (std::size_t i = 0; i < s.A->dim(); ++i) {
          auto p = s.A->try_multiply(v, s.A->basis_element(i));
          bool low = p.has_value();
          if (p)
            for (std::size_t j = 0; j < p->size() && low; ++j)
              low = is_zero((*p)[j]) || s.A->degree(j) <= d_A;
          if (low)
            CHECK(c.core.contains(*p));
        }
    }
  }
  // H-stable ideals are their own core.
  for (const IdealOracle& I : {IdealOracle::monomial(s.A, {{1, 0}, {0, 1}}),
                               IdealOracle::monomial(s.A, {{2, 0}, {1, 1}, {0, 2}}),
                               IdealOracle::zero(s.A), IdealOracle::whole(s.A)})
    CHECK(hcore(s.act, I, d_A, 5).core == low_part(I.space(), *s.A, d_A));
}

TEST_CASE("primeness probes") {
  auto s = sl2_action(6);
  const IdealOracle Ix = IdealOracle::monomial(s.A, {{1, 0}});
  const HCore c = hcore(s.act, Ix, 4, 6);
  const Report r = core_primeness_probe(s.act, c.core, Ix, ProbeMode::domain, 3);
  CHECK(r.passed());
  CHECK(r.count(Status::inconclusive) == 0);
  CHECK(r.count(Status::pass) == 100);

  const Report prime = core_primeness_probe(s.act, c.core, Ix, ProbeMode::prime, 2);
  CHECK(prime.passed());
  CHECK(prime.count(Status::pass) == 36);
  CHECK(core_primeness_probe(s.act, c.core, Ix, ProbeMode::semiprime, 2).count(Status::pass) == 6);

  const Report degenerate =
      core_primeness_probe(s.act, c.core, IdealOracle::whole(s.A), ProbeMode::domain, 3);
  REQUIRE(degenerate.lines().size() == 1);
  CHECK(degenerate.lines()[0].status == Status::skipped);
  CHECK(degenerate.lines()[0].detail.find("DegenerateIdeal") != std::string::npos);

  const auto host = fixtures::line(6, "d");
  const auto A = poly({"x"}, 6);
  const ModuleAlgebraAction act = d_action(host, A);
  const IdealOracle I = IdealOracle::monomial(A, {{1}});
  const HCore cd = hcore(act, I, 4, 6);
  CHECK(cd.core.dim() == 0);
  CHECK(core_primeness_probe(act, cd.core, I, ProbeMode::domain, 3).passed());

  // Truncation honesty: a small host bound leaves high pairs inconclusive.
  auto small = sl2_action(3);
  const IdealOracle Is = IdealOracle::monomial(small.A, {{1, 0}});
  const Report rs = core_primeness_probe(small.act, hcore(small.act, Is, 4, 3).core, Is,
                                         ProbeMode::domain, 3);
  CHECK(rs.passed());
  CHECK(rs.count(Status::inconclusive) > 0);
}

TEST_CASE("finite-dimensional module algebra") {
  // Q[ε]/(ε²) with the derivation ε ↦ ε.
  std::vector<std::optional<Vector>> table(4);
  table[0] = Vector{1, 0};
  table[1] = Vector{0, 1};
  table[2] = Vector{0, 1};
  table[3] = Vector{0, 0};
  const auto A = std::make_shared<const DeskAlgebra>(
      TableAlgebra("dual numbers", {"1", "eps"}, table, Vector{1, 0}));
  QMatrix D(2, 2);
  D(1, 1) = 1;
  const auto host = fixtures::line(3, "d");
  const ModuleAlgebraAction act(host.pbw, A, {{"d", D}});
  CHECK(act.verify_module().passed());
  CHECK(act.verify_module_algebra().passed());
  const IdealOracle I = IdealOracle::subspace(A, {Vector{0, 1}});
  const HCore c = hcore(act, I, 0, 3);
  CHECK(c.core == I.space());
}
