#include "hopfcore/convolution.hpp"

#include "hopfcore/errors.hpp"

namespace hopfcore {

ConvElement::ConvElement(std::shared_ptr<const PbwStructure> host,
                         std::shared_ptr<const CoefficientRing> ring)
    : host_(std::move(host)), ring_(std::move(ring)),
      values_(host_->size(), Vector(ring_->dim())) {}

ConvElement::ConvElement(std::shared_ptr<const PbwStructure> host,
                         std::shared_ptr<const CoefficientRing> ring, std::vector<Vector> values)
    : host_(std::move(host)), ring_(std::move(ring)), values_(std::move(values)) {
  if (values_.size() != host_->size())
    throw FormatError("convolution element needs one value per PBW monomial");
  for (const auto& v : values_)
    if (v.size() != ring_->dim())
      throw FormatError("convolution value has wrong length for ring '" + ring_->name() + "'");
}

void ConvElement::set(const MultiIndex& n, Vector v) {
  if (v.size() != ring_->dim())
    throw FormatError("convolution value has wrong length for ring '" + ring_->name() + "'");
  values_[host_->position(n)] = std::move(v);
}

bool ConvElement::is_zero() const {
  for (const auto& v : values_)
    if (!hopfcore::is_zero(v))
      return false;
  return true;
}

std::vector<MultiIndex> ConvElement::support() const {
  std::vector<MultiIndex> s;
  for (std::size_t p = 0; p < values_.size(); ++p)
    if (!hopfcore::is_zero(values_[p]))
      s.push_back(host_->monomials()[p]);
  return s;
}

bool ConvElement::operator==(const ConvElement& other) const {
  return host_ == other.host_ && *ring_ == *other.ring_ && values_ == other.values_;
}

namespace {

void require_compatible(const ConvElement& f, const ConvElement& g) {
  if (f.host() != g.host())
    throw HostMismatch("convolution of elements over different PBW structures");
  if (f.ring() != g.ring() && !(*f.ring() == *g.ring()))
    throw RingMismatch("convolution of elements over rings '" + f.ring()->name() +
                       "' and '" + g.ring()->name() + "'");
}

} // namespace

ConvElement convolve(const ConvElement& f, const ConvElement& g, Exec exec) {
  require_compatible(f, g);
  const auto& table = f.host()->comult_table();
  const CoefficientRing& R = *f.ring();
  auto mul = [&R](const Vector& a, const Vector& b) { return R.multiply(a, b); };
  std::size_t work = 0;
  for (const auto& terms : table)
    work += terms.size();
  work *= R.dim() * R.dim();
  auto out = kernels::use_parallel(exec, work)
                 ? kernels::convolve_parallel(table, f.values(), g.values(), R.dim(), mul)
                 : kernels::convolve_serial(table, f.values(), g.values(), R.dim(), mul);
  return ConvElement(f.host(), f.ring(), std::move(out));
}

ConvElement unit_conv(std::shared_ptr<const PbwStructure> host,
                      std::shared_ptr<const CoefficientRing> ring) {
  Vector one = ring->one();
  return epsilon_pullback(std::move(host), std::move(ring), std::move(one));
}

ConvElement epsilon_pullback(std::shared_ptr<const PbwStructure> host,
                             std::shared_ptr<const CoefficientRing> ring, Vector r) {
  ConvElement f(std::move(host), std::move(ring));
  f.set(MultiIndex{}, std::move(r));
  return f;
}

LeadingTerm leading(const ConvElement& f) {
  // PBW positions are sorted by the monoid order, so the first nonzero
  // value sits at the minimum of the support.
  for (std::size_t p = 0; p < f.values().size(); ++p)
    if (!is_zero(f.values()[p]))
      return {f.host()->monomials()[p], p, f.values()[p]};
  throw ZeroElement("leading term of the zero element");
}

Vector u_star(const ConvElement& f) { return f.value_at(0); }

Report check_tech2(const ConvElement& f, const ConvElement& g, Exec exec) {
  Report rep;
  const PbwStructure& host = *f.host();
  const LeadingTerm lf = leading(f), lg = leading(g);
  const MultiIndex s = lf.index + lg.index;
  const std::string subject = host.format(lf.index) + " + " + host.format(lg.index);
  if (host.gens().degree(s) > host.degree_bound()) {
    rep.add("tech2", subject, Status::inconclusive,
            "|f+g| = " + std::to_string(host.gens().degree(s)) + " exceeds D");
    return rep;
  }
  const ConvElement h = convolve(f, g, exec);
  const std::size_t ps = host.position(s);
  for (std::size_t p = 0; p < ps; ++p)
    if (!is_zero(h.value_at(p))) {
      rep.fail("tech2", subject,
               "(f*g)(e[" + host.format(host.monomials()[p]) + "]) != 0 below f+g");
      return rep;
    }
  auto prod = f.ring()->try_multiply(lf.value, lg.value);
  if (!prod) {
    rep.add("tech2", subject, Status::inconclusive, "f_min g_min beyond ring truncation");
    return rep;
  }
  if (h.value_at(ps) != *prod) {
    rep.fail("tech2", subject, "(f*g)(e[f+g]) != f_min g_min");
    return rep;
  }
  if (is_zero(*prod)) {
    rep.pass("tech2", subject, "f_min g_min = 0; leading clause not applicable");
    return rep;
  }
  const LeadingTerm lh = leading(h);
  if (!(lh.index == s) || lh.value != *prod) {
    rep.fail("tech2", subject, "leading(f*g) != (f+g, f_min g_min)");
    return rep;
  }
  rep.pass("tech2", subject);
  return rep;
}

Witness prime_witness(const ConvElement& s, const ConvElement& t, const Lift& lift) {
  require_compatible(s, t);
  const PbwStructure& host = *s.host();
  const CoefficientRing& R = *s.ring();
  const LeadingTerm ls = leading(s), lt = leading(t);
  const MultiIndex target = ls.index + lt.index;
  if (host.gens().degree(target) > host.degree_bound())
    throw TruncationError("|s+t| exceeds the degree bound");
  for (const auto& r : scan_candidates(R.dim())) {
    const Vector v = R.multiply(R.multiply(ls.value, r), lt.value);
    if (is_zero(v))
      continue;
    ConvElement u = lift ? lift(r) : epsilon_pullback(s.host(), s.ring(), r);
    const LeadingTerm proof = leading(convolve(convolve(s, u), t));
    if (!(proof.index == target) || proof.value != v)
      throw Error("leading term of s*u*t is not (s+t, s_min r t_min)");
    return {r, std::move(u), proof};
  }
  throw NoWitnessFound("no r with s_min r t_min != 0 among basis elements and pairs: s_min = " +
                       R.format(ls.value) + ", t_min = " + R.format(lt.value));
}

Witness semiprime_witness(const ConvElement& s, const Lift& lift) {
  return prime_witness(s, s, lift);
}

ConvElement random_element(std::shared_ptr<const PbwStructure> host,
                           std::shared_ptr<const CoefficientRing> ring, Rng& rng,
                           unsigned max_degree) {
  ConvElement f(host, ring);
  std::vector<std::size_t> allowed;
  for (std::size_t p = 0; p < host->size(); ++p)
    if (host->gens().degree(host->monomials()[p]) <= max_degree)
      allowed.push_back(p);
  auto random_value = [&] {
    Vector v(ring->dim());
    while (is_zero(v))
      for (auto& x : v)
        x = rng.coin() ? rng.small_rational() : Rational(0);
    return v;
  };
  while (f.is_zero())
    for (auto p : allowed)
      if (rng.below(3) == 0)
        f.set(host->monomials()[p], random_value());
  return f;
}

} // namespace hopfcore
