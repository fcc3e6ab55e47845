// arglab :: error types

#pragma once

#include <stdexcept>
#include <string>

namespace arglab {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Framework construction violated an invariant (duplicate argument,
// undeclared defeat endpoint, bad argument name).
class FrameworkError : public Error {
public:
  using Error::Error;
};

// A labeling was paired with a framework it does not belong to, or two
// labelings/profiles of different frameworks were combined.
class MismatchError : public Error {
public:
  using Error::Error;
};

// Exhaustive machinery refused an input that is too large to sweep.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

// up_complete was called on a labeling that is not admissible.
class NotAdmissibleError : public Error {
public:
  using Error::Error;
};

// Profile construction violated an invariant (no ballots, non-complete
// ballot under the default policy, id/ballot count mismatch).
class ProfileError : public Error {
public:
  using Error::Error;
};

// Supermajority threshold outside [majority, unanimity].
class InvalidThresholdError : public Error {
public:
  using Error::Error;
};

// A postulate check was asked about a profile on which the rule is
// undefined (e.g. a plurality tie).
class RuleUndefinedError : public Error {
public:
  using Error::Error;
};

class UnknownScenarioError : public Error {
public:
  using Error::Error;
};

// Text input rejected; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace arglab
