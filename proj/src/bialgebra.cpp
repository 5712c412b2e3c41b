#include "hopfcore/bialgebra.hpp"

#include "hopfcore/errors.hpp"

#include <tuple>

namespace hopfcore {

namespace {

using Tensor3 = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational>;

template <class Map>
void prune(Map& m) {
  for (auto it = m.begin(); it != m.end();)
    it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
}

// a ⊗ b accumulated into t with factor s, iterating nonzero entries only.
void add_tensor(Tensor2& t, const Rational& s, const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0)
        t[{i, j}] += s * a[i] * b[j];
  }
}

} // namespace

FilteredBialgebra::FilteredBialgebra(BialgebraTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.labels.size();
  if (n == 0)
    throw FormatError("bialgebra has an empty basis");
  if (t_.mult.size() != n * n)
    throw FormatError("multiplication table has wrong size");
  for (const auto& p : t_.mult)
    if (p && p->size() != n)
      throw FormatError("multiplication entry has wrong length");
  if (t_.comult.size() != n)
    throw FormatError("comultiplication table has wrong size");
  for (const auto& terms : t_.comult)
    for (const auto& term : terms)
      if (term.left >= n || term.right >= n)
        throw FormatError("comultiplication term refers to a missing basis element");
  if (t_.counit.size() != n)
    throw FormatError("counit has wrong length");
  if (t_.unit_index >= n)
    throw FormatError("unit index out of range");
  if (!t_.degrees.empty() && t_.degrees.size() != n)
    throw FormatError("degree labels have wrong length");
  if (t_.antipode) {
    if (t_.antipode->size() != n)
      throw FormatError("antipode table has wrong size");
    for (const auto& v : *t_.antipode)
      if (v.size() != n)
        throw FormatError("antipode entry has wrong length");
  }
}

std::optional<std::size_t> FilteredBialgebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (t_.labels[i] == label)
      return i;
  return std::nullopt;
}

std::optional<Vector> FilteredBialgebra::try_multiply(std::span<const Rational> a,
                                                      std::span<const Rational> b) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(b[j]) == 0)
        continue;
      const auto& p = product(i, j);
      if (!p)
        return std::nullopt;
      axpy(out, a[i] * b[j], *p);
    }
  }
  return out;
}

Vector FilteredBialgebra::multiply(std::span<const Rational> a,
                                   std::span<const Rational> b) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(b[j]) == 0)
        continue;
      const auto& p = product(i, j);
      if (!p)
        throw TruncationError("product " + label(i) + " * " + label(j) +
                              " exceeds the degree bound " + std::to_string(degree_bound()));
      axpy(out, a[i] * b[j], *p);
    }
  }
  return out;
}

Tensor2 FilteredBialgebra::comultiply_sparse(std::span<const Rational> a) const {
  Tensor2 t;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (const auto& term : comult(i))
      t[{term.left, term.right}] += a[i] * term.coeff;
  }
  prune(t);
  return t;
}

QMatrix FilteredBialgebra::comultiply(std::span<const Rational> a) const {
  QMatrix m(dim(), dim());
  for (const auto& [key, c] : comultiply_sparse(a))
    m(key.first, key.second) = c;
  return m;
}

Vector FilteredBialgebra::antipode(std::span<const Rational> a) const {
  if (!t_.antipode)
    throw FormatError("no antipode table supplied");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(a[i]) != 0)
      axpy(out, a[i], (*t_.antipode)[i]);
  return out;
}

Report verify_axioms(const FilteredBialgebra& h) {
  Report rep;
  const std::size_t n = h.dim();
  const auto& eps = h.counit_vector();

  for (std::size_t i = 0; i < n; ++i) {
    Vector left(n), right(n);
    for (const auto& t : h.comult(i)) {
      left[t.right] += eps[t.left] * t.coeff;
      right[t.left] += eps[t.right] * t.coeff;
    }
    const Vector e = unit_vector(n, i);
    std::string detail;
    if (left != e)
      detail = "(eps⊗id)Δ differs";
    else if (right != e)
      detail = "(id⊗eps)Δ differs";
    rep.check(detail.empty(), "counit", h.label(i), detail);
  }

  for (std::size_t i = 0; i < n; ++i) {
    Tensor3 a, b;
    for (const auto& t : h.comult(i)) {
      for (const auto& u : h.comult(t.left))
        a[{u.left, u.right, t.right}] += t.coeff * u.coeff;
      for (const auto& u : h.comult(t.right))
        b[{t.left, u.left, u.right}] += t.coeff * u.coeff;
    }
    prune(a);
    prune(b);
    rep.check(a == b, "coassociativity", h.label(i));
  }

  {
    const std::size_t u = h.unit_index();
    const Vector one = h.unit();
    Tensor2 expect{{{u, u}, Rational(1)}};
    bool ok = eps[u] == 1 && h.comultiply_sparse(one) == expect;
    std::string detail = ok ? "" : "eps(1) != 1 or Δ(1) != 1⊗1";
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Vector e = unit_vector(n, i);
      const auto& l = h.product(u, i);
      const auto& r = h.product(i, u);
      if (!l || !r || *l != e || *r != e) {
        ok = false;
        detail = "1 is not a unit for " + h.label(i);
      }
    }
    rep.check(ok, "unit", h.label(u), detail);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t checked = 0;
    std::string bad;
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      const auto& ij = h.product(i, j);
      if (!ij)
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& jk = h.product(j, k);
        if (!jk)
          continue;
        auto lhs = h.try_multiply(*ij, unit_vector(n, k));
        auto rhs = h.try_multiply(unit_vector(n, i), *jk);
        if (!lhs || !rhs)
          continue;
        ++checked;
        if (*lhs != *rhs) {
          bad = "(" + h.label(i) + "*" + h.label(j) + ")*" + h.label(k);
          break;
        }
      }
    }
    if (!bad.empty())
      rep.fail("associativity", h.label(i), bad);
    else if (checked == 0)
      rep.add("associativity", h.label(i), Status::skipped, "no defined triples");
    else
      rep.pass("associativity", h.label(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t checked = 0;
    std::string bad;
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      const auto& ij = h.product(i, j);
      if (!ij)
        continue;
      Tensor2 rhs;
      bool defined = true;
      for (const auto& s : h.comult(i)) {
        for (const auto& t : h.comult(j)) {
          const auto& a = h.product(s.left, t.left);
          const auto& b = h.product(s.right, t.right);
          if (!a || !b) {
            defined = false;
            break;
          }
          add_tensor(rhs, s.coeff * t.coeff, *a, *b);
        }
        if (!defined)
          break;
      }
      if (!defined)
        continue;
      ++checked;
      prune(rhs);
      if (h.comultiply_sparse(*ij) != rhs)
        bad = "Δ(" + h.label(i) + "*" + h.label(j) + ")";
    }
    if (!bad.empty())
      rep.fail("comult_multiplicative", h.label(i), bad);
    else if (checked == 0)
      rep.add("comult_multiplicative", h.label(i), Status::skipped, "no defined pairs");
    else
      rep.pass("comult_multiplicative", h.label(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::string bad;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = h.product(i, j);
      if (ij && h.counit(*ij) != eps[i] * eps[j]) {
        bad = "eps(" + h.label(i) + "*" + h.label(j) + ")";
        break;
      }
    }
    rep.check(bad.empty(), "counit_multiplicative", h.label(i), bad);
  }

  if (!h.has_antipode()) {
    rep.add("antipode", "", Status::skipped, "no antipode table");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector left(n), right(n);
    bool defined = true;
    for (const auto& t : h.comult(i)) {
      auto l = h.try_multiply(h.antipode(unit_vector(n, t.left)), unit_vector(n, t.right));
      auto r = h.try_multiply(unit_vector(n, t.left), h.antipode(unit_vector(n, t.right)));
      if (!l || !r) {
        defined = false;
        break;
      }
      axpy(left, t.coeff, *l);
      axpy(right, t.coeff, *r);
    }
    if (!defined) {
      rep.add("antipode", h.label(i), Status::skipped, "products beyond truncation");
      continue;
    }
    const Vector expect = eps[i] * h.unit();
    rep.check(left == expect && right == expect, "antipode", h.label(i));
  }
  return rep;
}

} // namespace hopfcore

namespace hopfcore {

std::string format_vector(const std::vector<std::string>& labels,
                          std::span<const Rational> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0)
      continue;
    Rational c = v[i];
    if (out.empty()) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (c != 1)
      out += to_string(c) + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

} // namespace hopfcore
