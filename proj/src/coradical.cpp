#include "hopfcore/coradical.hpp"

#include "hopfcore/errors.hpp"

#include <algorithm>

namespace hopfcore {

std::vector<std::size_t> CoradicalFiltration::dims() const {
  std::vector<std::size_t> d;
  for (const auto& l : layers)
    d.push_back(l.dim());
  return d;
}

CoradicalFiltration filtration_layers(const FilteredBialgebra& h) {
  const std::size_t n = h.dim();
  CoradicalFiltration f;
  std::vector<Vector> one{h.unit()};
  f.layers.push_back(Subspace::span(one, n));
  const QMatrix q0 = annihilator(f.layers[0]);

  for (unsigned j = 0; j < h.degree_bound(); ++j) {
    const Subspace& cj = f.layers.back();
    if (cj.dim() == n) {
      f.layers.push_back(cj);
      continue;
    }
    // C_{j+1} = ker (Q_j ⊗ Q_0)∘Δ, where Q_j cuts out C_j.
    const QMatrix qj = annihilator(cj);
    const std::size_t rb = q0.rows();
    QMatrix phi(qj.rows() * rb, n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : h.comult(i))
        for (std::size_t a = 0; a < qj.rows(); ++a) {
          if (sgn(qj(a, t.left)) == 0)
            continue;
          const Rational ca = t.coeff * qj(a, t.left);
          for (std::size_t b = 0; b < rb; ++b)
            if (sgn(q0(b, t.right)) != 0)
              phi(a * rb + b, i) += ca * q0(b, t.right);
        }
    f.layers.push_back(kernel(phi));
  }
  f.exhaustive = f.layers.back().dim() == n;
  return f;
}

CoradicalFiltration coradical_filtration(const FilteredBialgebra& h) {
  CoradicalFiltration f = filtration_layers(h);
  if (!f.exhaustive)
    throw NotExhaustive("coradical filtration stops at dimension " +
                        std::to_string(f.layers.back().dim()) + " of " +
                        std::to_string(h.dim()));
  return f;
}

bool check_connected(const FilteredBialgebra& h) { return filtration_layers(h).exhaustive; }

Vector GradedSplitting::project(std::span<const Rational> raw, unsigned n) const {
  Vector v = to_split * raw;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (degrees[k] != n)
      v[k] = 0;
  return v;
}

QMatrix GradedSplitting::delta(std::size_t k) const {
  QMatrix d = comult[k];
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t s = 0; s < d.cols(); ++s)
      if (degrees[r] + degrees[s] != degrees[k])
        d(r, s) = 0;
  return d;
}

QMatrix GradedSplitting::tensor_to_split(const QMatrix& raw) const {
  return to_split * raw * to_split.transpose();
}

GradedSplitting graded_splitting(const CoradicalFiltration& filt, const FilteredBialgebra& h) {
  if (!filt.exhaustive)
    throw NotExhaustive("graded splitting needs an exhaustive filtration");
  GradedSplitting s;
  const std::size_t dim = h.dim();
  const Vector one = h.unit();
  s.components.push_back(filt.layers[0]);
  for (std::size_t n = 1; n < filt.layers.size(); ++n)
    s.components.push_back(
        complement(filt.layers[n - 1], filt.layers[n], h.counit_vector(), one));

  std::vector<Vector> columns;
  for (unsigned n = 0; n < s.components.size(); ++n) {
    const Subspace& c = s.components[n];
    for (std::size_t k = 0; k < c.dim(); ++k) {
      Vector v = c.basis_vector(k);
      std::string label = "h" + std::to_string(n) + "_" + std::to_string(k);
      for (std::size_t i = 0; i < dim; ++i)
        if (v == unit_vector(dim, i)) {
          label = h.label(i);
          break;
        }
      columns.push_back(std::move(v));
      s.degrees.push_back(n);
      s.labels.push_back(std::move(label));
    }
  }
  s.basis = QMatrix::from_columns(columns, dim);
  auto inv = inverse(s.basis);
  if (!inv)
    throw NotExhaustive("split basis is not a basis of the truncated space");
  s.to_split = std::move(*inv);
  for (std::size_t k = 0; k < dim; ++k)
    s.comult.push_back(s.tensor_to_split(h.comultiply(columns[k])));
  return s;
}

FilteredBialgebra gr_structure(const GradedSplitting& split, const FilteredBialgebra& h) {
  const std::size_t n = split.dim();
  const unsigned D = h.degree_bound();
  BialgebraTables t;
  t.labels = split.labels;
  t.degrees = split.degrees;
  t.degree_bound = D;
  t.mult.resize(n * n);
  std::vector<Vector> cols(n);
  for (std::size_t k = 0; k < n; ++k)
    cols[k] = split.basis_vector(k);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const unsigned d = split.degrees[a] + split.degrees[b];
      if (d > D)
        continue;
      auto p = h.try_multiply(cols[a], cols[b]);
      if (!p)
        throw TruncationError("gr product " + t.labels[a] + " * " + t.labels[b] +
                              " needs an undefined product in H");
      Vector q = split.to_split * *p;
      for (std::size_t k = 0; k < n; ++k)
        if (split.degrees[k] != d)
          q[k] = 0;
      t.mult[a * n + b] = std::move(q);
    }

  t.comult.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const QMatrix d = split.delta(k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        if (sgn(d(r, s)) != 0)
          t.comult[k].push_back({r, s, d(r, s)});
  }

  t.counit = Vector(n);
  for (std::size_t k = 0; k < n; ++k)
    t.counit[k] = h.counit(cols[k]);
  t.unit_index = 0;

  if (h.has_antipode()) {
    std::vector<Vector> S(n);
    for (std::size_t k = 0; k < n; ++k)
      S[k] = split.project(h.antipode(cols[k]), split.degrees[k]);
    t.antipode = std::move(S);
  }
  return FilteredBialgebra(std::move(t));
}

Report verify_gr_facts(const FilteredBialgebra& h, const GradedSplitting& split,
                       const FilteredBialgebra& gr) {
  Report rep;
  const std::size_t n = split.dim();
  const unsigned D = h.degree_bound();
  std::vector<Vector> cols(n);
  for (std::size_t k = 0; k < n; ++k)
    cols[k] = split.basis_vector(k);
  auto max_degree = [&](const Vector& split_coords) {
    unsigned m = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(split_coords[k]) != 0)
        m = std::max(m, split.degrees[k]);
    return m;
  };

  for (std::size_t a = 0; a < n; ++a) {
    std::string bad;
    for (std::size_t b = 0; b < n && bad.empty(); ++b) {
      const unsigned d = split.degrees[a] + split.degrees[b];
      if (d > D)
        continue;
      auto p = h.try_multiply(cols[a], cols[b]);
      if (p && max_degree(split.to_gr(*p)) > d)
        bad = split.labels[a] + " * " + split.labels[b];
    }
    rep.check(bad.empty(), "algebra_filtration", split.labels[a], bad);
  }

  if (h.has_antipode()) {
    for (std::size_t a = 0; a < n; ++a)
      rep.check(max_degree(split.to_gr(h.antipode(cols[a]))) <= split.degrees[a],
                "antipode_stability", split.labels[a]);
  } else {
    rep.add("antipode_stability", "", Status::skipped, "no antipode table");
  }

  for (std::size_t a = 0; a < gr.dim(); ++a) {
    std::string bad;
    for (std::size_t b = 0; b < gr.dim(); ++b) {
      const auto& ab = gr.product(a, b);
      const auto& ba = gr.product(b, a);
      if (ab && ba && *ab != *ba) {
        bad = "[" + gr.label(a) + ", " + gr.label(b) + "] != 0";
        break;
      }
    }
    rep.check(bad.empty(), "gr_commutative", gr.label(a), bad);
  }

  const CoradicalFiltration gf = filtration_layers(gr);
  for (unsigned d = 0; d < gf.layers.size(); ++d) {
    std::vector<Vector> low;
    for (std::size_t k = 0; k < gr.dim(); ++k)
      if (gr.degrees()[k] <= d)
        low.push_back(unit_vector(gr.dim(), k));
    rep.check(gf.layers[d] == Subspace::span(low, gr.dim()), "coradically_graded",
              "n=" + std::to_string(d));
  }
  return rep;
}

bool in_filtered_tensor_sum(const std::vector<unsigned>& degrees, const QMatrix& t,
                            unsigned n) {
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t s = 0; s < t.cols(); ++s) {
      if (sgn(t(r, s)) == 0)
        continue;
      // Some i in [1, n-1] with deg r ≤ i and deg s ≤ n - i.
      const int lo = std::max<int>(static_cast<int>(degrees[r]), 1);
      const int hi = std::min<int>(static_cast<int>(n) - 1,
                                   static_cast<int>(n) - static_cast<int>(degrees[s]));
      if (lo > hi)
        return false;
    }
  return true;
}

namespace {

// Δ(v) - 1⊗v - v⊗1 in split⊗split coordinates.
QMatrix reduced_comult_split(const FilteredBialgebra& h, const GradedSplitting& split,
                             const Vector& v) {
  QMatrix x = h.comultiply(v);
  const Vector one = h.unit();
  add_outer(x, Rational(-1), one, v);
  add_outer(x, Rational(-1), v, one);
  return split.tensor_to_split(x);
}

std::string first_bad_term(const GradedSplitting& split, const QMatrix& t, unsigned n) {
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t s = 0; s < t.cols(); ++s) {
      if (sgn(t(r, s)) == 0)
        continue;
      QMatrix single(t.rows(), t.cols());
      single(r, s) = t(r, s);
      if (!in_filtered_tensor_sum(split.degrees, single, n))
        return to_string(t(r, s)) + "*" + split.labels[r] + "⊗" + split.labels[s];
    }
  return {};
}

} // namespace

Report check_comH(const FilteredBialgebra& h, const CoradicalFiltration& filt,
                  const GradedSplitting& split) {
  Report rep;
  for (unsigned n = 1; n < filt.layers.size(); ++n) {
    Subspace layer = filt.layers[n];
    if (n == 1) {
      QMatrix eps(1, h.dim());
      for (std::size_t i = 0; i < h.dim(); ++i)
        eps(0, i) = h.counit_vector()[i];
      layer = layer.intersect(kernel(eps));
    }
    for (std::size_t k = 0; k < layer.dim(); ++k) {
      const Vector v = layer.basis_vector(k);
      const QMatrix x = reduced_comult_split(h, split, v);
      const bool ok = in_filtered_tensor_sum(split.degrees, x, n);
      rep.check(ok, "comH", "n=" + std::to_string(n) + " " + format_vector(h.labels(), v),
                ok ? "" : first_bad_term(split, x, n));
    }
  }
  return rep;
}

Report check_delta_defect(const GradedSplitting& split) {
  Report rep;
  for (std::size_t k = 0; k < split.dim(); ++k) {
    const QMatrix& t = split.comult[k];
    std::string bad;
    for (std::size_t r = 0; r < t.rows() && bad.empty(); ++r)
      for (std::size_t s = 0; s < t.cols(); ++s)
        if (sgn(t(r, s)) != 0 && split.degrees[r] + split.degrees[s] > split.degrees[k]) {
          bad = to_string(t(r, s)) + "*" + split.labels[r] + "⊗" + split.labels[s];
          break;
        }
    rep.check(bad.empty(), "delta_defect", split.labels[k], bad);
  }
  return rep;
}

Report check_primitive_closure(const FilteredBialgebra& gr, Rng& rng, std::size_t samples) {
  Report rep;
  const unsigned D = gr.degree_bound();
  const auto& deg = gr.degrees();
  const std::size_t dim = gr.dim();

  auto in_P = [&](const Vector& v, unsigned n) {
    for (std::size_t k = 0; k < dim; ++k)
      if (sgn(v[k]) != 0 && deg[k] > n)
        return false;
    QMatrix x = gr.comultiply(v);
    const Vector one = gr.unit();
    add_outer(x, Rational(-1), one, v);
    add_outer(x, Rational(-1), v, one);
    return in_filtered_tensor_sum(deg, x, n);
  };
  auto sample = [&](unsigned n) {
    Vector v(dim);
    while (is_zero(v))
      for (std::size_t k = 0; k < dim; ++k)
        if (deg[k] >= 1 && deg[k] <= n)
          v[k] = rng.small_rational();
    return v;
  };

  if (D == 0) {
    rep.add("primitive_closure", "", Status::skipped, "degree bound 0");
    return rep;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const unsigned n = static_cast<unsigned>(rng.range(1, D));
    const unsigned m = static_cast<unsigned>(rng.range(1, D));
    const Vector b = sample(n), c = sample(m);
    std::string subject = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    std::string bad;
    if (!in_P(b, n) || !in_P(c, m))
      bad = "sample not in P";
    else if (!in_P(b + c, std::max(n, m)))
      bad = "sum";
    else if (n + m <= D) {
      auto p = gr.try_multiply(b, c);
      if (!p || !in_P(*p, n + m))
        bad = "product";
    }
    rep.check(bad.empty(), "primitive_closure", subject, bad);
  }
  return rep;
}

} // namespace hopfcore
