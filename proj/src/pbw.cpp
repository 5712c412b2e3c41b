#include "hopfcore/pbw.hpp"

#include "hopfcore/errors.hpp"

#include <algorithm>
#include <variant>

namespace hopfcore {

namespace {

Rational multi_factorial(const MultiIndex& m) {
  Rational f = 1;
  for (const auto& [p, k] : m.entries())
    f *= factorial(k);
  return f;
}

} // namespace

GrGenerators extract_generators(const FilteredBialgebra& gr,
                                const std::optional<std::vector<std::string>>& order) {
  const std::size_t N = gr.dim();
  const auto& deg = gr.degrees();
  if (deg.size() != N)
    throw NotPolynomial("gr carries no degree labels");
  const unsigned D = gr.degree_bound();

  struct Found {
    Generator g;
    Vector z;
  };
  std::vector<Found> found;
  for (unsigned d = 1; d <= D; ++d) {
    std::vector<Vector> top, dec;
    for (std::size_t k = 0; k < N; ++k)
      if (deg[k] == d)
        top.push_back(unit_vector(N, k));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (deg[a] >= 1 && deg[b] >= 1 && deg[a] + deg[b] == d)
          if (const auto& p = gr.product(a, b))
            dec.push_back(*p);
    const Subspace outer = Subspace::span(top, N);
    const Subspace inner = Subspace::span(dec, N);
    if (!outer.contains(inner))
      throw NotPolynomial("products of positive-degree elements leave degree " +
                          std::to_string(d));
    const Subspace w = complement(inner, outer);
    for (std::size_t k = 0; k < w.dim(); ++k) {
      Vector z = w.basis_vector(k);
      std::string id = "z" + std::to_string(d) + "_" + std::to_string(k);
      for (std::size_t i = 0; i < N; ++i)
        if (z == unit_vector(N, i)) {
          id = gr.label(i);
          break;
        }
      found.push_back({{id, d}, std::move(z)});
    }
  }

  if (order) {
    auto rank_of = [&](const std::string& id) -> std::size_t {
      auto it = std::find(order->begin(), order->end(), id);
      if (it == order->end())
        throw ForeignGenerator("generator order does not mention '" + id + "'");
      return static_cast<std::size_t>(it - order->begin());
    };
    if (order->size() != found.size())
      throw ForeignGenerator("generator order has " + std::to_string(order->size()) +
                             " ids, gr has " + std::to_string(found.size()) + " generators");
    std::stable_sort(found.begin(), found.end(), [&](const Found& a, const Found& b) {
      if (a.g.degree != b.g.degree)
        return a.g.degree < b.g.degree;
      return rank_of(a.g.id) < rank_of(b.g.id);
    });
  }

  GrGenerators out;
  std::vector<Generator> gens;
  for (auto& f : found) {
    gens.push_back(f.g);
    out.gr_vectors.push_back(std::move(f.z));
  }
  out.gens = GeneratorSet(std::move(gens));
  for (unsigned d = 0; d <= D; ++d) {
    const auto have = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), d));
    const std::size_t want = out.gens.count_of_degree(d);
    if (have != want)
      throw NotPolynomial("degree " + std::to_string(d) + ": gr has dimension " +
                          std::to_string(have) + " but the generators give " +
                          std::to_string(want) + " monomials");
  }
  return out;
}

std::vector<Vector> lift_generators(const GradedSplitting& split, const GrGenerators& g) {
  std::vector<Vector> lifts;
  for (const auto& z : g.gr_vectors)
    lifts.push_back(split.from_gr(z));
  return lifts;
}

namespace {

// Matrix of {e_m : |m| ≤ n} in the echelon basis of H_n, or the reason it
// is not a square invertible matrix.
std::variant<QMatrix, std::string> basis_change_at(const Subspace& layer,
                                                   const std::vector<Vector>& e,
                                                   const std::vector<unsigned>& degrees,
                                                   unsigned n) {
  std::vector<Vector> coords;
  for (std::size_t p = 0; p < e.size(); ++p) {
    if (degrees[p] > n)
      continue;
    auto c = layer.coordinates(e[p]);
    if (!c)
      return "e_" + std::to_string(p) + " is not in H_" + std::to_string(n);
    coords.push_back(std::move(*c));
  }
  if (coords.size() != layer.dim())
    return std::to_string(coords.size()) + " monomials for dim H_" + std::to_string(n) +
           " = " + std::to_string(layer.dim());
  QMatrix m = QMatrix::from_columns(coords, layer.dim());
  if (!inverse(m))
    return "monomials of degree <= " + std::to_string(n) + " are linearly dependent";
  return m;
}

} // namespace

std::shared_ptr<const PbwStructure>
PbwStructure::build(std::shared_ptr<const FilteredBialgebra> h, const CoradicalFiltration& filt,
                    const GradedSplitting& split, const FilteredBialgebra& gr,
                    const std::optional<std::vector<std::string>>& order) {
  std::shared_ptr<PbwStructure> p(new PbwStructure);
  p->h_ = std::move(h);
  const FilteredBialgebra& H = *p->h_;
  const unsigned D = H.degree_bound();
  p->layers_ = filt.layers;

  GrGenerators g = extract_generators(gr, order);
  p->gens_ = g.gens;
  p->gr_vectors_ = g.gr_vectors;
  p->lifts_ = lift_generators(split, g);
  for (std::size_t l = 0; l < p->gens_.size(); ++l) {
    const unsigned d = p->gens_[l].degree;
    p->lift_report_.check(split.project(p->lifts_[l], d) == p->gr_vectors_[l], "lift",
                          p->gens_[l].id);
  }

  p->monomials_ = p->gens_.enumerate_up_to(D);
  std::vector<unsigned> degrees;
  for (std::size_t k = 0; k < p->monomials_.size(); ++k) {
    const MultiIndex& m = p->monomials_[k];
    p->where_[m] = k;
    degrees.push_back(p->gens_.degree(m));
    Vector e = H.unit();
    Vector z = gr.unit();
    for (const auto& [pos, mult] : m.entries())
      for (std::uint32_t i = 0; i < mult; ++i) {
        e = H.multiply(e, p->lifts_[pos]);
        z = gr.multiply(z, p->gr_vectors_[pos]);
      }
    const Rational scale = 1 / multi_factorial(m);
    p->e_.push_back(scale * e);
    p->lift_report_.check(split.project(p->e_.back(), degrees.back()) == scale * z,
                          "monomial_lift", p->gens_.format(m));
  }

  for (unsigned n = 0; n <= D; ++n) {
    auto r = basis_change_at(p->layers_[n], p->e_, degrees, n);
    if (auto* why = std::get_if<std::string>(&r))
      throw BasisDefect(n, "basis defect at degree " + std::to_string(n) + ": " + *why);
    p->basis_change_[n] = std::get<QMatrix>(std::move(r));
  }

  p->from_pbw_ = QMatrix::from_columns(p->e_, H.dim());
  auto inv = inverse(p->from_pbw_);
  if (!inv)
    throw BasisDefect(D, "PBW monomials do not form a basis of the truncated space");
  p->to_pbw_ = std::move(*inv);

  // Sparse columns of to_pbw, then Δ(e_n) in PBW⊗PBW coordinates.
  const std::size_t N = H.dim();
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> col(N);
  for (std::size_t l = 0; l < N; ++l)
    for (std::size_t i = 0; i < N; ++i)
      if (sgn(p->to_pbw_(i, l)) != 0)
        col[l].emplace_back(static_cast<std::uint32_t>(i), p->to_pbw_(i, l));
  p->comult_table_.resize(p->monomials_.size());
  for (std::size_t k = 0; k < p->monomials_.size(); ++k) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> acc;
    for (const auto& [key, c] : H.comultiply_sparse(p->e_[k]))
      for (const auto& [i, a] : col[key.first])
        for (const auto& [j, b] : col[key.second])
          acc[{i, j}] += c * a * b;
    for (auto& [key, c] : acc)
      if (sgn(c) != 0)
        p->comult_table_[k].push_back({key.first, key.second, std::move(c)});
  }
  return p;
}

std::size_t PbwStructure::position(const MultiIndex& n) const {
  auto it = where_.find(n);
  if (it == where_.end()) {
    gens_.validate(n);
    throw TruncationError("multi-index " + gens_.format(n) + " has degree " +
                          std::to_string(gens_.degree(n)) + " > " +
                          std::to_string(degree_bound()));
  }
  return it->second;
}

const Vector& PbwStructure::monomial(const MultiIndex& n) const { return e_[position(n)]; }

Report PbwStructure::verify_basis(unsigned n) const {
  if (n > degree_bound())
    throw TruncationError("verify_basis beyond the degree bound");
  std::vector<unsigned> degrees;
  for (const auto& m : monomials_)
    degrees.push_back(gens_.degree(m));
  auto r = basis_change_at(layers_[n], e_, degrees, n);
  if (auto* why = std::get_if<std::string>(&r))
    throw BasisDefect(n, "basis defect at degree " + std::to_string(n) + ": " + *why);
  Report rep;
  rep.pass("basis", "n=" + std::to_string(n),
           "dim " + std::to_string(layers_[n].dim()));
  return rep;
}

StructureConstant PbwStructure::structure_constant(const MultiIndex& n,
                                                   const MultiIndex& m) const {
  const MultiIndex s = gens_.add(n, m);
  const std::size_t ps = position(s);
  StructureConstant out;
  out.c = multi_factorial(s) / (multi_factorial(n) * multi_factorial(m));
  const Vector prod = h_->multiply(monomial(n), monomial(m));
  out.measured = to_pbw(prod)[ps];
  out.defect = prod - out.c * e_[ps];
  const unsigned k = gens_.degree(s);
  out.defect_in_lower = k == 0 ? is_zero(out.defect) : layers_[k - 1].contains(out.defect);
  return out;
}

std::vector<PbwTerm> PbwStructure::expand_comult(const MultiIndex& n) const {
  std::vector<PbwTerm> out;
  for (const auto& t : comult_table_[position(n)])
    out.push_back({monomials_[t.left], monomials_[t.right], t.coeff});
  return out;
}

namespace {

std::optional<std::string> tech1_violation(const PbwStructure& p, const MultiIndex& n) {
  const auto& gens = p.gens();
  std::map<MultiIndex, bool, StructuralLess> seen;  // left factor of each splitting
  for (const auto& t : p.expand_comult(n)) {
    const MultiIndex s = t.left + t.right;
    const std::string term =
        to_string(t.coeff) + "*e[" + p.format(t.left) + "]⊗e[" + p.format(t.right) + "]";
    if (s == n) {
      if (t.coeff != 1)
        return "splitting with coefficient != 1: " + term;
      if (seen[t.left])
        return "splitting repeated: " + term;
      seen[t.left] = true;
    } else if (gens.compare(s, n) > 0) {
      return "term above n: " + term;
    }
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    const MultiIndex& m = p.monomials()[k];
    if (m.divides(n) && !seen[m])
      return "missing splitting e[" + p.format(m) + "]⊗e[" + p.format(n - m) + "]";
  }
  return std::nullopt;
}

} // namespace

Report PbwStructure::check_tech1(const MultiIndex& n) const {
  Report rep;
  auto v = tech1_violation(*this, n);
  rep.check(!v, "tech1", format(n), v ? "Tech1Violation: " + *v : "");
  return rep;
}

void PbwStructure::require_tech1(const MultiIndex& n) const {
  if (auto v = tech1_violation(*this, n))
    throw Tech1Violation("at " + format(n) + ": " + *v);
}

Report PbwStructure::check_prelim_closure(std::size_t pairs, Rng& rng) const {
  Report rep;
  const unsigned D = degree_bound();
  const std::size_t N = monomials_.size();
  for (std::size_t s = 0; s < pairs; ++s) {
    const std::size_t pn = rng.below(N);
    const unsigned dn = gens_.degree(monomials_[pn]);
    std::vector<std::size_t> fit;
    for (std::size_t k = 0; k < N; ++k)
      if (dn + gens_.degree(monomials_[k]) <= D)
        fit.push_back(k);
    const std::size_t pm = fit[rng.below(fit.size())];
    auto sample = [&](std::size_t top) {
      Vector coords(N);
      for (std::size_t k = 0; k < top; ++k)
        coords[k] = rng.small_rational();
      coords[top] = rng.nonzero_rational();
      return from_pbw(coords);
    };
    const Vector x = sample(pn), y = sample(pm);
    const Vector prod = to_pbw(h_->multiply(x, y));
    const MultiIndex bound = monomials_[pn] + monomials_[pm];
    std::string bad;
    for (std::size_t k = 0; k < N; ++k)
      if (sgn(prod[k]) != 0 && gens_.compare(monomials_[k], bound) > 0) {
        bad = "support contains " + format(monomials_[k]);
        break;
      }
    rep.check(bad.empty(), "prelim_closure",
              format(monomials_[pn]) + " ; " + format(monomials_[pm]), bad);
  }
  return rep;
}

} // namespace hopfcore
