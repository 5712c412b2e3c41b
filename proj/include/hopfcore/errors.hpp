#pragma once

#include <stdexcept>
#include <string>

namespace hopfcore {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input files, bad rational literals, unknown names.
class FormatError : public Error { using Error::Error; };

class InnerNotContained : public Error { using Error::Error; };
class ConstraintUnsatisfiable : public Error { using Error::Error; };
class ForeignGenerator : public Error { using Error::Error; };
class EmptySet : public Error { using Error::Error; };

// A product or comultiplication would need structure constants beyond the
// truncation degree.
class TruncationError : public Error { using Error::Error; };

class NotExhaustive : public Error { using Error::Error; };
class NotALieAlgebra : public Error { using Error::Error; };
class NotPolynomial : public Error { using Error::Error; };

class BasisDefect : public Error {
public:
  BasisDefect(unsigned degree, const std::string& what)
      : Error(what), degree_(degree) {}
  unsigned degree() const noexcept { return degree_; }

private:
  unsigned degree_;
};

class Tech1Violation : public Error { using Error::Error; };
class HostMismatch : public Error { using Error::Error; };
class RingMismatch : public Error { using Error::Error; };
class ZeroElement : public Error { using Error::Error; };
class NoWitnessFound : public Error { using Error::Error; };
class DegenerateIdeal : public Error { using Error::Error; };

} // namespace hopfcore
