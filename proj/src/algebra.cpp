#include "hopfcore/algebra.hpp"

#include "hopfcore/bialgebra.hpp"
#include "hopfcore/errors.hpp"

namespace hopfcore {

TableAlgebra::TableAlgebra(std::string name, std::vector<std::string> labels,
                           std::vector<std::optional<Vector>> table, Vector one,
                           std::vector<unsigned> degrees)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)),
      one_(std::move(one)), degrees_(std::move(degrees)) {
  const std::size_t n = labels_.size();
  if (table_.size() != n * n)
    throw FormatError("algebra '" + name_ + "': multiplication table has wrong size");
  for (const auto& p : table_)
    if (p && p->size() != n)
      throw FormatError("algebra '" + name_ + "': product has wrong length");
  if (one_.size() != n)
    throw FormatError("algebra '" + name_ + "': unit has wrong length");
  if (!degrees_.empty() && degrees_.size() != n)
    throw FormatError("algebra '" + name_ + "': degree labels have wrong length");
}

std::optional<Vector> TableAlgebra::try_multiply(std::span<const Rational> a,
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

Vector TableAlgebra::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
  auto p = try_multiply(a, b);
  if (!p)
    throw TruncationError("product in '" + name_ + "' exceeds its truncation: (" +
                          format(a) + ") * (" + format(b) + ")");
  return std::move(*p);
}

std::string TableAlgebra::format(std::span<const Rational> v) const {
  return format_vector(labels_, v);
}

Report TableAlgebra::check_laws() const {
  Report rep;
  const std::size_t n = dim();
  bool unit_ok = true;
  std::string unit_bad;
  for (std::size_t i = 0; i < n && unit_ok; ++i) {
    const Vector e = basis_element(i);
    auto l = try_multiply(one_, e);
    auto r = try_multiply(e, one_);
    if (!l || !r || *l != e || *r != e) {
      unit_ok = false;
      unit_bad = labels_[i];
    }
  }
  rep.check(unit_ok, "ring_unit", name_, unit_bad);

  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      const auto& ij = product(i, j);
      if (!ij)
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& jk = product(j, k);
        if (!jk)
          continue;
        auto l = try_multiply(*ij, basis_element(k));
        auto r = try_multiply(basis_element(i), *jk);
        if (l && r && *l != *r) {
          bad = "(" + labels_[i] + "*" + labels_[j] + ")*" + labels_[k];
          break;
        }
      }
    }
  rep.check(bad.empty(), "ring_associative", name_, bad);
  return rep;
}

namespace {

TableAlgebra make_table(std::string name, std::vector<std::string> labels,
                        const std::vector<std::vector<Vector>>& rows, Vector one) {
  std::vector<std::optional<Vector>> table;
  for (const auto& row : rows)
    for (const auto& v : row)
      table.emplace_back(v);
  return TableAlgebra(std::move(name), std::move(labels), std::move(table), std::move(one));
}

} // namespace

CoefficientRing builtin_ring(const std::string& name) {
  if (name == "q")
    return {make_table("q", {"1"}, {{unit_vector(1, 0)}}, unit_vector(1, 0)),
            RingFlags{true, true, true}};
  if (name == "m2q") {
    // E_ab E_cd = δ_bc E_ad, with E11, E12, E21, E22 at positions 0..3.
    std::vector<std::vector<Vector>> rows(4, std::vector<Vector>(4, Vector(4)));
    for (unsigned a = 0; a < 2; ++a)
      for (unsigned b = 0; b < 2; ++b)
        for (unsigned c = 0; c < 2; ++c)
          for (unsigned d = 0; d < 2; ++d)
            if (b == c)
              rows[2 * a + b][2 * c + d] = unit_vector(4, 2 * a + d);
    Vector one = unit_vector(4, 0) + unit_vector(4, 3);
    return {make_table("m2q", {"E11", "E12", "E21", "E22"}, rows, one),
            RingFlags{true, true, false}};
  }
  if (name == "qxq") {
    std::vector<std::vector<Vector>> rows = {{unit_vector(2, 0), Vector(2)},
                                             {Vector(2), unit_vector(2, 1)}};
    return {make_table("qxq", {"(1,0)", "(0,1)"}, rows, Vector{Rational(1), Rational(1)}),
            RingFlags{false, true, false}};
  }
  if (name == "qx2") {
    std::vector<std::vector<Vector>> rows = {{unit_vector(2, 0), unit_vector(2, 1)},
                                             {unit_vector(2, 1), Vector(2)}};
    return {make_table("qx2", {"1", "x"}, rows, unit_vector(2, 0)),
            RingFlags{false, false, false}};
  }
  throw FormatError("unknown ring '" + name + "' (expected q, m2q, qxq, qx2)");
}

std::vector<Vector> scan_candidates(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i)
    out.push_back(unit_vector(dim, i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      out.push_back(unit_vector(dim, i) + unit_vector(dim, j));
      out.push_back(unit_vector(dim, i) - unit_vector(dim, j));
    }
  return out;
}

RingCheck ring_check(const CoefficientRing& ring) {
  RingCheck rc;
  rc.report = ring.check_laws();
  const std::size_t n = ring.dim();
  const auto cands = scan_candidates(n);

  // a·e_r·b = 0 for every basis r; products beyond truncation count as
  // unknown and never refute.
  auto annihilates = [&](const Vector& a, const Vector& b) {
    for (std::size_t r = 0; r < n; ++r) {
      auto ar = ring.try_multiply(a, ring.basis_element(r));
      if (!ar)
        return false;
      auto arb = ring.try_multiply(*ar, b);
      if (!arb || !is_zero(*arb))
        return false;
    }
    return true;
  };

  for (const auto& a : cands) {
    for (const auto& b : cands)
      if (annihilates(a, b)) {
        rc.prime_refutation = "(" + ring.format(a) + ", " + ring.format(b) + ")";
        break;
      }
    if (!rc.prime_refutation.empty())
      break;
  }
  for (const auto& a : cands)
    if (annihilates(a, a)) {
      rc.semiprime_refutation = ring.format(a);
      break;
    }
  for (const auto& a : cands) {
    for (const auto& b : cands) {
      auto ab = ring.try_multiply(a, b);
      if (ab && is_zero(*ab)) {
        rc.zero_divisor = "(" + ring.format(a) + ", " + ring.format(b) + ")";
        break;
      }
    }
    if (!rc.zero_divisor.empty())
      break;
  }
  rc.found = {rc.prime_refutation.empty(), rc.semiprime_refutation.empty(),
              rc.zero_divisor.empty()};

  auto flag_line = [&](const char* check, bool declared, bool found,
                       const std::string& witness) {
    std::string detail = found ? "no refutation in scan" : "refuted by " + witness;
    if (!ring.declared()) {
      rc.report.pass(check, ring.name(), detail);
    } else if (declared == found) {
      rc.report.pass(check, ring.name(), (found ? "confirmed: " : "confirmed false: ") + detail);
    } else {
      rc.report.fail(check, ring.name(),
                     std::string("declared ") + (declared ? "true" : "false") +
                         ", corrected: " + detail);
    }
  };
  const RingFlags d = ring.declared().value_or(RingFlags{});
  flag_line("ring_prime", d.prime, rc.found.prime, rc.prime_refutation);
  flag_line("ring_semiprime", d.semiprime, rc.found.semiprime, rc.semiprime_refutation);
  flag_line("ring_domain", d.domain, rc.found.domain, rc.zero_divisor);
  return rc;
}

} // namespace hopfcore
