#include "hopfcore/action.hpp"

#include "hopfcore/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hopfcore {

namespace {

void monomials_of_degree(std::size_t nvars, unsigned d, std::vector<std::uint32_t>& cur,
                         std::size_t pos, std::vector<std::vector<std::uint32_t>>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur[pos] = k;
    monomials_of_degree(nvars, d - k, cur, pos + 1, out);
  }
}

std::string monomial_label(const std::vector<std::string>& vars,
                           const std::vector<std::uint32_t>& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += vars[i];
    if (e[i] > 1)
      s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

} // namespace

DeskAlgebra DeskAlgebra::polynomial(std::vector<std::string> variables, unsigned E) {
  if (variables.empty())
    throw FormatError("polynomial algebra needs at least one variable");
  const std::size_t nv = variables.size();
  std::vector<std::vector<std::uint32_t>> exps;
  std::vector<std::uint32_t> cur(nv, 0);
  for (unsigned d = 0; d <= E; ++d)
    monomials_of_degree(nv, d, cur, 0, exps);

  const std::size_t n = exps.size();
  std::map<std::vector<std::uint32_t>, std::size_t> where;
  std::vector<std::string> labels;
  std::vector<unsigned> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    where[exps[i]] = i;
    labels.push_back(monomial_label(variables, exps[i]));
    degrees.push_back(std::accumulate(exps[i].begin(), exps[i].end(), 0u));
  }
  std::vector<std::optional<Vector>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (degrees[i] + degrees[j] > E)
        continue;
      std::vector<std::uint32_t> s(nv);
      for (std::size_t v = 0; v < nv; ++v)
        s[v] = exps[i][v] + exps[j][v];
      table[i * n + j] = unit_vector(n, where.at(s));
    }
  std::string name = "Q[";
  for (std::size_t v = 0; v < nv; ++v)
    name += (v ? "," : "") + variables[v];
  name += "]_<=" + std::to_string(E);

  DeskAlgebra A(TableAlgebra(name, std::move(labels), std::move(table), unit_vector(n, 0),
                             std::move(degrees)));
  A.polynomial_ = true;
  A.variables_ = std::move(variables);
  A.E_ = E;
  A.exps_ = std::move(exps);
  return A;
}

std::optional<std::size_t> DeskAlgebra::index_of(const std::vector<std::uint32_t>& e) const {
  auto it = std::find(exps_.begin(), exps_.end(), e);
  if (it == exps_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - exps_.begin());
}

QMatrix DeskAlgebra::differential_operator(const std::vector<DiffTerm>& terms) const {
  if (!polynomial_)
    throw FormatError("differential operators need a polynomial algebra");
  const std::size_t nv = variables_.size();
  for (const auto& t : terms)
    if (t.mul.size() != nv || t.diff.size() != nv)
      throw FormatError("operator term has wrong number of exponents");
  QMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const auto& a = exps_[j];
    for (const auto& t : terms) {
      Rational c = t.coeff;
      std::vector<std::uint32_t> e(nv);
      bool vanishes = false;
      for (std::size_t v = 0; v < nv && !vanishes; ++v) {
        if (t.diff[v] > a[v]) {
          vanishes = true;
          break;
        }
        for (std::uint32_t k = 0; k < t.diff[v]; ++k)
          c *= a[v] - k;
        e[v] = a[v] - t.diff[v] + t.mul[v];
      }
      if (vanishes || sgn(c) == 0)
        continue;
      auto i = index_of(e);
      if (!i)
        throw TruncationError("operator maps " + label(j) + " beyond degree " +
                              std::to_string(E_));
      m(*i, j) += c;
    }
  }
  return m;
}

const char* ideal_kind_name(IdealKind k) {
  switch (k) {
  case IdealKind::subspace:
    return "subspace";
  case IdealKind::monomial:
    return "monomial";
  case IdealKind::principal:
    return "principal";
  case IdealKind::zero:
    return "zero";
  case IdealKind::whole:
    return "whole";
  }
  return "?";
}

IdealOracle::IdealOracle(IdealKind kind, std::shared_ptr<const DeskAlgebra> A, Subspace space)
    : kind_(kind), A_(std::move(A)), space_(std::move(space)) {
  const DeskAlgebra& alg = *A_;
  const std::size_t n = alg.dim();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return alg.degree(a) > alg.degree(b);
  });
  QMatrix permuted(space_.dim(), n);
  for (std::size_t r = 0; r < space_.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      permuted(r, c) = space_.basis()(r, order_[c]);
  Echelon e = row_reduce(std::move(permuted));
  e.reduced.truncate_rows(e.rank());
  reduced_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots_)
    is_pivot[order_[p]] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i])
      standard_.push_back(i);

  const std::size_t q = standard_.size();
  std::vector<std::string> labels;
  std::vector<unsigned> degrees;
  for (auto i : standard_) {
    labels.push_back(alg.label(i));
    degrees.push_back(alg.degree(i));
  }
  std::vector<std::optional<Vector>> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      if (const auto& p = alg.product(standard_[a], standard_[b]))
        table[a * q + b] = project(*p);
  quotient_ = std::make_shared<const CoefficientRing>(
      TableAlgebra(alg.name() + "/I", std::move(labels), std::move(table), project(alg.one()),
                   std::move(degrees)),
      std::nullopt);
}

Vector IdealOracle::project(std::span<const Rational> a) const {
  const std::size_t n = A_->dim();
  Vector r(n);
  for (std::size_t c = 0; c < n; ++c)
    r[c] = a[order_[c]];
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational coeff = r[pivots_[i]];
    if (sgn(coeff) != 0)
      axpy(r, -coeff, reduced_.row(i));
  }
  std::vector<std::size_t> slot(n);
  for (std::size_t c = 0; c < n; ++c)
    slot[order_[c]] = c;
  Vector q(standard_.size());
  for (std::size_t k = 0; k < standard_.size(); ++k)
    q[k] = r[slot[standard_[k]]];
  return q;
}

Vector IdealOracle::lift(std::span<const Rational> q) const {
  Vector a(A_->dim());
  for (std::size_t k = 0; k < standard_.size(); ++k)
    a[standard_[k]] = q[k];
  return a;
}

Report IdealOracle::check_ideal() const {
  Report rep;
  std::string bad;
  for (std::size_t r = 0; r < space_.dim() && bad.empty(); ++r) {
    const Vector v = space_.basis_vector(r);
    for (std::size_t i = 0; i < A_->dim(); ++i) {
      const Vector e = A_->basis_element(i);
      auto l = A_->try_multiply(e, v);
      auto rr = A_->try_multiply(v, e);
      if ((l && !contains(*l)) || (rr && !contains(*rr))) {
        bad = A_->label(i) + " * (" + A_->format(v) + ")";
        break;
      }
    }
  }
  rep.check(bad.empty(), "ideal_closed", ideal_kind_name(kind_), bad);
  return rep;
}

IdealOracle IdealOracle::subspace(std::shared_ptr<const DeskAlgebra> A, std::vector<Vector> span) {
  for (const auto& v : span)
    if (v.size() != A->dim())
      throw FormatError("ideal generator has wrong length");
  Subspace s = Subspace::span(span, A->dim());
  IdealOracle I(IdealKind::subspace, std::move(A), std::move(s));
  Report r = I.check_ideal();
  if (!r.passed())
    throw FormatError("subspace is not a two-sided ideal: " + r.lines().back().detail);
  return I;
}

IdealOracle IdealOracle::monomial(std::shared_ptr<const DeskAlgebra> A,
                                  const std::vector<std::vector<std::uint32_t>>& generators) {
  if (!A->is_polynomial())
    throw FormatError("monomial ideals need a polynomial algebra");
  const std::size_t nv = A->variables().size();
  for (const auto& g : generators)
    if (g.size() != nv)
      throw FormatError("monomial generator has wrong number of exponents");
  std::vector<Vector> span;
  for (std::size_t i = 0; i < A->dim(); ++i) {
    const auto& e = A->exponents()[i];
    for (const auto& g : generators) {
      bool divides = true;
      for (std::size_t v = 0; v < nv; ++v)
        divides = divides && g[v] <= e[v];
      if (divides) {
        span.push_back(A->basis_element(i));
        break;
      }
    }
  }
  Subspace s = Subspace::span(span, A->dim());
  return IdealOracle(IdealKind::monomial, std::move(A), std::move(s));
}

IdealOracle IdealOracle::principal(std::shared_ptr<const DeskAlgebra> A, const Vector& g) {
  if (g.size() != A->dim())
    throw FormatError("ideal generator has wrong length");
  std::vector<Vector> span;
  if (A->is_polynomial()) {
    // A domain: deg(fg) = deg f + deg g, so these products exhaust (g) ∩ A.
    for (std::size_t i = 0; i < A->dim(); ++i)
      if (auto p = A->try_multiply(g, A->basis_element(i)))
        span.push_back(std::move(*p));
  } else {
    for (std::size_t i = 0; i < A->dim(); ++i)
      for (std::size_t j = 0; j < A->dim(); ++j)
        span.push_back(A->multiply(A->multiply(A->basis_element(i), g), A->basis_element(j)));
  }
  Subspace s = Subspace::span(span, A->dim());
  return IdealOracle(IdealKind::principal, std::move(A), std::move(s));
}

IdealOracle IdealOracle::zero(std::shared_ptr<const DeskAlgebra> A) {
  const std::size_t n = A->dim();
  return IdealOracle(IdealKind::zero, std::move(A), Subspace(n));
}

IdealOracle IdealOracle::whole(std::shared_ptr<const DeskAlgebra> A) {
  const std::size_t n = A->dim();
  return IdealOracle(IdealKind::whole, std::move(A), Subspace::full(n));
}

ModuleAlgebraAction::ModuleAlgebraAction(std::shared_ptr<const PbwStructure> host,
                                         std::shared_ptr<const DeskAlgebra> A,
                                         std::map<std::string, QMatrix> gen_ops)
    : host_(std::move(host)), A_(std::move(A)) {
  const GeneratorSet& gens = host_->gens();
  const std::size_t n = A_->dim();
  std::vector<QMatrix> by_position;
  for (std::size_t l = 0; l < gens.size(); ++l) {
    auto it = gen_ops.find(gens[l].id);
    if (it == gen_ops.end())
      throw FormatError("no operator given for generator '" + gens[l].id + "'");
    if (it->second.rows() != n || it->second.cols() != n)
      throw FormatError("operator for '" + gens[l].id + "' has wrong shape");
    by_position.push_back(it->second);
  }
  if (gen_ops.size() != gens.size()) {
    for (const auto& [id, m] : gen_ops)
      gens.index_of(id);
  }
  for (const auto& m : host_->monomials()) {
    QMatrix op = QMatrix::identity(n);
    for (const auto& [p, k] : m.entries()) {
      QMatrix power = QMatrix::identity(n);
      for (std::uint32_t i = 0; i < k; ++i)
        power = power * by_position[p];
      power *= 1 / factorial(k);
      op = op * power;
    }
    ops_.push_back(std::move(op));
  }
}

Vector ModuleAlgebraAction::act(const MultiIndex& n, std::span<const Rational> a) const {
  return ops_[host_->position(n)] * a;
}

Report ModuleAlgebraAction::verify_module() const {
  Report rep;
  const PbwStructure& P = *host_;
  const GeneratorSet& gens = P.gens();
  const unsigned D = P.degree_bound();
  for (std::uint32_t l = 0; l < gens.size(); ++l) {
    const MultiIndex dl = MultiIndex::delta(l);
    const std::size_t pl = P.position(dl);
    std::string bad;
    for (std::size_t pm = 0; pm < P.size() && bad.empty(); ++pm) {
      const MultiIndex& m = P.monomials()[pm];
      if (gens[l].degree + gens.degree(m) > D)
        continue;
      const Vector prod = P.to_pbw(P.bialgebra().multiply(P.monomial_at(pl), P.monomial_at(pm)));
      QMatrix rhs(A_->dim(), A_->dim());
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (sgn(prod[k]) != 0) {
          QMatrix t = ops_[k];
          t *= prod[k];
          rhs += t;
        }
      if (ops_[pl] * ops_[pm] != rhs)
        bad = "e[" + gens[l].id + "] e[" + P.format(m) + "]";
    }
    rep.check(bad.empty(), "module", gens[l].id, bad);
  }
  return rep;
}

Report ModuleAlgebraAction::verify_module_algebra() const {
  Report rep;
  const PbwStructure& P = *host_;
  const DeskAlgebra& A = *A_;
  const std::size_t n = A.dim();
  // cols[p][a] = e_p . (basis element a)
  std::vector<std::vector<Vector>> cols(P.size());
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t a = 0; a < n; ++a)
      cols[p].push_back(ops_[p].column(a));

  for (std::size_t p = 0; p < P.size(); ++p) {
    const MultiIndex& m = P.monomials()[p];
    std::string bad;
    const Rational eps = P.bialgebra().counit(P.monomial_at(p));
    if (ops_[p] * A.one() != eps * A.one())
      bad = "e.1 != eps(e) 1";
    const auto& terms = P.comult_table()[p];
    for (std::size_t a = 0; a < n && bad.empty(); ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& ab = A.product(a, b);
        if (!ab)
          continue;
        Vector rhs(n);
        bool defined = true;
        for (const auto& t : terms) {
          auto q = A.try_multiply(cols[t.left][a], cols[t.right][b]);
          if (!q) {
            defined = false;
            break;
          }
          axpy(rhs, t.coeff, *q);
        }
        if (defined && ops_[p] * *ab != rhs) {
          bad = "e.(" + A.label(a) + "*" + A.label(b) + ")";
          break;
        }
      }
    rep.check(bad.empty(), "module_algebra", P.format(m), bad);
  }
  return rep;
}

ConvElement rho(const ModuleAlgebraAction& act, const IdealOracle& ideal,
                std::span<const Rational> a) {
  std::vector<Vector> values;
  for (std::size_t p = 0; p < act.host().size(); ++p)
    values.push_back(ideal.project(act.op(p) * a));
  return ConvElement(act.host_ptr(), ideal.quotient(), std::move(values));
}

HCore hcore(const ModuleAlgebraAction& act, const IdealOracle& ideal, unsigned d_A, unsigned D) {
  const PbwStructure& P = act.host();
  const DeskAlgebra& A = act.algebra();
  if (D > P.degree_bound())
    throw TruncationError("H-core cap " + std::to_string(D) + " exceeds the degree bound " +
                          std::to_string(P.degree_bound()));
  if (A.is_polynomial() && d_A > A.degree_bound())
    throw TruncationError("algebra cap exceeds the algebra truncation");

  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) <= d_A)
      vars.push_back(i);
  const QMatrix Q = annihilator(ideal.space());

  HCore out;
  QMatrix stacked(0, vars.size());
  Subspace core_small(vars.size());
  for (unsigned c = 0; c <= D; ++c) {
    for (std::size_t p = 0; p < P.size(); ++p) {
      if (P.gens().degree(P.monomials()[p]) != c)
        continue;
      const QMatrix qo = Q * act.op(p);
      for (std::size_t r = 0; r < qo.rows(); ++r) {
        Vector row(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k)
          row[k] = qo(r, vars[k]);
        if (!is_zero(row))
          stacked.append_row(row);
      }
    }
    Echelon e = row_reduce(stacked);
    e.reduced.truncate_rows(e.rank());
    stacked = std::move(e.reduced);
    core_small = kernel(stacked);
    out.dims_by_cap.push_back(core_small.dim());
  }
  std::vector<Vector> embedded;
  for (const auto& v : core_small.basis_vectors()) {
    Vector a(A.dim());
    for (std::size_t k = 0; k < vars.size(); ++k)
      a[vars[k]] = v[k];
    embedded.push_back(std::move(a));
  }
  out.core = Subspace::span(embedded, A.dim());
  out.stabilized = D >= 1 && out.dims_by_cap[D] == out.dims_by_cap[D - 1];
  unsigned from = D;
  while (from > 0 && out.dims_by_cap[from - 1] == out.dims_by_cap[D])
    --from;
  if (from < D)
    out.stable_from = from;
  return out;
}

const char* probe_mode_name(ProbeMode m) {
  switch (m) {
  case ProbeMode::prime:
    return "prime";
  case ProbeMode::semiprime:
    return "semiprime";
  case ProbeMode::domain:
    return "domain";
  }
  return "?";
}

Report core_primeness_probe(const ModuleAlgebraAction& act, const Subspace& core,
                            const IdealOracle& ideal, ProbeMode mode, unsigned bound) {
  Report rep;
  const std::string check = std::string("probe_") + probe_mode_name(mode);
  if (ideal.is_whole()) {
    rep.add(check, "", Status::skipped, "DegenerateIdeal: I = A");
    return rep;
  }
  const DeskAlgebra& A = act.algebra();
  const PbwStructure& P = act.host();
  std::vector<Vector> low;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) <= bound)
      low.push_back(A.basis_element(i));
  const Subspace span_low = Subspace::span(low, A.dim());
  const Subspace reps = complement(core.intersect(span_low), span_low);
  const auto vecs = reps.basis_vectors();
  std::vector<ConvElement> images;
  for (const auto& a : vecs)
    images.push_back(rho(act, ideal, a));

  Lift lift = [&](const Vector& r) { return rho(act, ideal, ideal.lift(r)); };
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      if (mode == ProbeMode::semiprime && i != j)
        continue;
      const std::string subject = "(" + A.format(vecs[i]) + ", " + A.format(vecs[j]) + ")";
      const ConvElement& s = images[i];
      const ConvElement& t = images[j];
      if (s.is_zero() || t.is_zero()) {
        rep.add(check, subject, Status::inconclusive, "rho vanishes up to the degree bound");
        continue;
      }
      const MultiIndex top = leading(s).index + leading(t).index;
      if (P.gens().degree(top) > P.degree_bound()) {
        rep.add(check, subject, Status::inconclusive, "|s+t| exceeds the degree bound");
        continue;
      }
      try {
        if (mode == ProbeMode::domain) {
          const ConvElement h = convolve(s, t);
          rep.check(!h.is_zero(), check, subject, h.is_zero() ? "rho(a)*rho(b) = 0" : "");
        } else {
          const Witness w = prime_witness(s, t, lift);
          rep.pass(check, subject, "r = " + ideal.quotient()->format(w.r));
        }
      } catch (const NoWitnessFound& e) {
        rep.fail(check, subject, std::string("NoWitnessFound: ") + e.what());
      } catch (const TruncationError& e) {
        rep.add(check, subject, Status::inconclusive, e.what());
      }
    }
  return rep;
}

} // namespace hopfcore
