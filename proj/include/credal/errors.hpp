#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// kernel
class MalformedSystem : public Error { public: using Error::Error; };
class Infeasible : public Error { public: using Error::Error; };
class Unbounded : public Error { public: using Error::Error; };
class InvalidInterval : public Error { public: using Error::Error; };

// logic
class UnboundAtom : public Error { public: using Error::Error; };
class AtomLimitExceeded : public Error { public: using Error::Error; };

// deduction
class ShapeMismatch : public Error { public: using Error::Error; };
class SentenceMismatch : public Error { public: using Error::Error; };
class InconsistentPremises : public Error { public: using Error::Error; };

// worlds
class DegenerateConditions : public Error { public: using Error::Error; };
class LeafLimitExceeded : public Error { public: using Error::Error; };

// decide
class InfeasibleCredal : public Error { public: using Error::Error; };
class EmptyAdmissible : public Error { public: using Error::Error; };

// maxent
class InconsistentInputs : public Error { public: using Error::Error; };
class DegenerateSegment : public Error { public: using Error::Error; };
class PointNotInSet : public Error { public: using Error::Error; };
class UnsupportedDimension : public Error { public: using Error::Error; };

// pdb
class NotASubset : public Error { public: using Error::Error; };
class InconsistentDatabase : public Error { public: using Error::Error; };
class NotARefinement : public Error { public: using Error::Error; };
class AmbiguousProjection : public Error { public: using Error::Error; };
class UncoveredCondition : public Error { public: using Error::Error; };
class InvalidTable : public Error { public: using Error::Error; };

// io
class ParseError : public Error { public: using Error::Error; };

}  // namespace credal
