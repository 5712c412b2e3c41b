#include "hopfcore/bialgebra.hpp"

#include "hopfcore/errors.hpp"

#include <algorithm>
#include <array>

namespace hopfcore {

namespace {

Vector bracket_of(const LieAlgebra& lie, const Vector& a, const Vector& b) {
  Vector out(lie.dim());
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < lie.dim(); ++j)
      if (sgn(b[j]) != 0)
        axpy(out, a[i] * b[j], lie.bracket[i][j]);
  }
  return out;
}

Rational multi_factorial(const MultiIndex& m) {
  Rational f = 1;
  for (const auto& [p, k] : m.entries())
    f *= factorial(k);
  return f;
}

using Word = std::vector<std::uint32_t>;
using WordPoly = std::map<Word, Rational>;

Word word_of(const MultiIndex& m) {
  Word w;
  for (const auto& [p, k] : m.entries())
    w.insert(w.end(), k, p);
  return w;
}

MultiIndex index_of_sorted(const Word& w) {
  MultiIndex m;
  for (auto p : w)
    m = m + MultiIndex::delta(p);
  return m;
}

// Rewrites words in U(g) into nondecreasing order: at the first descent
// ab with a > b, ab = ba + [a,b].
class Straightener {
public:
  explicit Straightener(const LieAlgebra& lie) : lie_(lie) {}

  const WordPoly& normal(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end())
      return it->second;
    WordPoly result;
    std::size_t p = 0;
    while (p + 1 < w.size() && w[p] <= w[p + 1])
      ++p;
    if (p + 1 >= w.size()) {
      result[w] = 1;
    } else {
      Word swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      result = normal(swapped);
      const Vector& br = lie_.bracket[w[p]][w[p + 1]];
      for (std::uint32_t k = 0; k < br.size(); ++k) {
        if (sgn(br[k]) == 0)
          continue;
        Word shorter(w.begin(), w.begin() + p);
        shorter.push_back(k);
        shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
        for (const auto& [u, c] : normal(shorter))
          result[u] += br[k] * c;
      }
      for (auto it = result.begin(); it != result.end();)
        it = sgn(it->second) == 0 ? result.erase(it) : std::next(it);
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

private:
  const LieAlgebra& lie_;
  std::map<Word, WordPoly> memo_;
};

std::vector<std::optional<Vector>> undefined_table(std::size_t n) {
  return std::vector<std::optional<Vector>>(n * n);
}

} // namespace

LieAlgebra LieAlgebra::abelian(std::vector<std::string> generators) {
  LieAlgebra lie;
  const std::size_t n = generators.size();
  lie.generators = std::move(generators);
  lie.bracket.assign(n, std::vector<Vector>(n, Vector(n)));
  return lie;
}

LieAlgebra LieAlgebra::heisenberg() {
  LieAlgebra lie = abelian({"x", "y", "z"});
  lie.bracket[0][1][2] = 1;
  lie.bracket[1][0][2] = -1;
  return lie;
}

LieAlgebra LieAlgebra::sl2(std::vector<std::string> order) {
  LieAlgebra lie = abelian(order);
  auto pos = [&](const char* id) -> std::size_t {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == id)
        return i;
    throw FormatError("sl2 order must be a permutation of e, f, h");
  };
  if (order.size() != 3)
    throw FormatError("sl2 order must be a permutation of e, f, h");
  const std::size_t e = pos("e"), f = pos("f"), h = pos("h");
  auto set = [&](std::size_t a, std::size_t b, std::size_t k, int c) {
    lie.bracket[a][b][k] = c;
    lie.bracket[b][a][k] = -c;
  };
  set(h, e, e, 2);
  set(h, f, f, -2);
  set(e, f, h, 1);
  return lie;
}

void check_lie(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  if (lie.bracket.size() != n)
    throw NotALieAlgebra("bracket table has wrong size");
  for (const auto& row : lie.bracket) {
    if (row.size() != n)
      throw NotALieAlgebra("bracket table has wrong size");
    for (const auto& v : row)
      if (v.size() != n)
        throw NotALieAlgebra("bracket value has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lie.bracket[i][j] + lie.bracket[j][i] != Vector(n))
        throw NotALieAlgebra("antisymmetry fails for [" + lie.generators[i] + "," +
                             lie.generators[j] + "]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector a = unit_vector(n, i), b = unit_vector(n, j), c = unit_vector(n, k);
        Vector s = bracket_of(lie, a, lie.bracket[j][k]) +
                   bracket_of(lie, b, lie.bracket[k][i]) +
                   bracket_of(lie, c, lie.bracket[i][j]);
        if (!is_zero(s))
          throw NotALieAlgebra("Jacobi identity fails for (" + lie.generators[i] + "," +
                               lie.generators[j] + "," + lie.generators[k] + ")");
      }
}

GeneratorSet ueg_generators(const LieAlgebra& lie) {
  std::vector<Generator> g;
  for (const auto& id : lie.generators)
    g.push_back({id, 1});
  return GeneratorSet(std::move(g));
}

GeneratorSet xyw_generators() { return GeneratorSet({{"x", 1}, {"y", 1}, {"w", 2}}); }

FilteredBialgebra build_ueg(const LieAlgebra& lie, unsigned D) {
  check_lie(lie);
  const GeneratorSet gens = ueg_generators(lie);
  const auto basis = gens.enumerate_up_to(D);
  const std::size_t n = basis.size();
  std::map<MultiIndex, std::size_t, StructuralLess> where;
  for (std::size_t i = 0; i < n; ++i)
    where[basis[i]] = i;

  Straightener st(lie);
  // Σ c·(sorted word) ↦ coordinates, using x^κ = κ! e_κ.
  auto to_coords = [&](const WordPoly& p, const Rational& scale) {
    Vector v(n);
    for (const auto& [w, c] : p) {
      MultiIndex k = index_of_sorted(w);
      v[where.at(k)] += scale * c * multi_factorial(k);
    }
    return v;
  };

  BialgebraTables t;
  t.degree_bound = D;
  for (const auto& m : basis) {
    t.labels.push_back(gens.format_monomial(m, true));
    t.degrees.push_back(gens.degree(m));
  }
  t.mult = undefined_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t.degrees[i] + t.degrees[j] > D)
        continue;
      Word w = word_of(basis[i]);
      Word wj = word_of(basis[j]);
      w.insert(w.end(), wj.begin(), wj.end());
      const Rational scale = 1 / (multi_factorial(basis[i]) * multi_factorial(basis[j]));
      t.mult[i * n + j] = to_coords(st.normal(w), scale);
    }

  t.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (basis[l].divides(basis[i]))
        t.comult[i].push_back({l, where.at(basis[i] - basis[l]), Rational(1)});

  t.counit = unit_vector(n, 0);
  t.unit_index = 0;

  std::vector<Vector> S(n);
  for (std::size_t i = 0; i < n; ++i) {
    Word w = word_of(basis[i]);
    std::reverse(w.begin(), w.end());
    Rational scale = 1 / multi_factorial(basis[i]);
    if (t.degrees[i] % 2 == 1)
      scale = -scale;
    S[i] = to_coords(st.normal(w), scale);
  }
  t.antipode = std::move(S);
  return FilteredBialgebra(std::move(t));
}

FilteredBialgebra build_xyw(unsigned D) {
  using Exp = std::array<std::uint32_t, 3>;
  using Poly = std::map<Exp, Rational>;
  using Tens = std::map<std::pair<Exp, Exp>, Rational>;

  const GeneratorSet gens = xyw_generators();
  const auto basis = gens.enumerate_up_to(D);
  const std::size_t n = basis.size();
  std::map<Exp, std::size_t> where;
  std::vector<Exp> exps(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto e = basis[i].exponents(3);
    exps[i] = {e[0], e[1], e[2]};
    where[exps[i]] = i;
  }
  auto add = [](const Exp& a, const Exp& b) {
    return Exp{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  };
  auto wdeg = [](const Exp& a) { return a[0] + a[1] + 2 * a[2]; };

  const Exp one{0, 0, 0}, X{1, 0, 0}, Y{0, 1, 0}, W{0, 0, 1};
  const Tens dx{{{X, one}, 1}, {{one, X}, 1}};
  const Tens dy{{{Y, one}, 1}, {{one, Y}, 1}};
  const Tens dw{{{W, one}, 1}, {{one, W}, 1}, {{X, Y}, 1}};
  auto tmul = [&](const Tens& a, const Tens& b) {
    Tens r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b)
        r[{add(ka.first, kb.first), add(ka.second, kb.second)}] += ca * cb;
    return r;
  };
  const Poly sx{{X, -1}}, sy{{Y, -1}};
  const Poly sw{{add(X, Y), 1}, {W, -1}};
  auto pmul = [&](const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b)
        r[add(ka, kb)] += ca * cb;
    return r;
  };

  BialgebraTables t;
  t.degree_bound = D;
  for (const auto& m : basis) {
    t.labels.push_back(gens.format_monomial(m, false));
    t.degrees.push_back(gens.degree(m));
  }
  t.mult = undefined_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exp s = add(exps[i], exps[j]);
      if (wdeg(s) <= D)
        t.mult[i * n + j] = unit_vector(n, where.at(s));
    }

  t.comult.resize(n);
  std::vector<Vector> S(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    Tens d{{{one, one}, 1}};
    Poly s{{one, 1}};
    for (std::uint32_t k = 0; k < exps[i][0]; ++k) {
      d = tmul(d, dx);
      s = pmul(s, sx);
    }
    for (std::uint32_t k = 0; k < exps[i][1]; ++k) {
      d = tmul(d, dy);
      s = pmul(s, sy);
    }
    for (std::uint32_t k = 0; k < exps[i][2]; ++k) {
      d = tmul(d, dw);
      s = pmul(s, sw);
    }
    for (const auto& [k, c] : d)
      if (sgn(c) != 0)
        t.comult[i].push_back({where.at(k.first), where.at(k.second), c});
    for (const auto& [k, c] : s)
      S[i][where.at(k)] += c;
  }
  t.counit = unit_vector(n, 0);
  t.unit_index = 0;
  t.antipode = std::move(S);
  return FilteredBialgebra(std::move(t));
}

FilteredBialgebra build_grouplike() {
  BialgebraTables t;
  t.labels = {"1", "g"};
  t.degree_bound = 1;
  t.mult = {unit_vector(2, 0), unit_vector(2, 1), unit_vector(2, 1), unit_vector(2, 0)};
  t.comult = {{{0, 0, Rational(1)}}, {{1, 1, Rational(1)}}};
  t.counit = {Rational(1), Rational(1)};
  t.unit_index = 0;
  t.antipode = std::vector<Vector>{unit_vector(2, 0), unit_vector(2, 1)};
  return FilteredBialgebra(std::move(t));
}

} // namespace hopfcore
