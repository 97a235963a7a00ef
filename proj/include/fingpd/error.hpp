#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fingpd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group, groupoid or action table breaks one of its axioms.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error(axiom + " violated: " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class PointNotInCarrier : public Error {
 public:
  explicit PointNotInCarrier(std::uint32_t p)
      : Error("point " + std::to_string(p) + " is not in the carrier") {}
};

class PointNotInBase : public Error {
 public:
  explicit PointNotInBase(std::uint32_t p)
      : Error("point " + std::to_string(p) + " is not in the base") {}
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

// Exhaustive search would visit more states than the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::uint64_t estimated)
      : Error(what + ": search exceeds cap (" + std::to_string(estimated)
              + " states visited)"),
        estimated_(estimated) {}
  std::uint64_t estimated() const noexcept { return estimated_; }

 private:
  std::uint64_t estimated_;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class MixedGroupoids : public Error {
 public:
  MixedGroupoids() : Error("bisections belong to different groupoids") {}
};

class NotSliceMorphism : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

// A morphism of transitive pairs fails one of its defining conditions.
class ConditionViolated : public Error {
 public:
  ConditionViolated(std::string which, std::string witness)
      : Error(which + " condition violated: " + witness),
        which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

// Raised when a statement that holds as a theorem fails; always a bug.
class InternalLawViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string msg, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":"
              + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name)
      : Error("unknown fixture '" + name + "'") {}
};

// Outcome of a validate_* call: either every axiom holds, or the first
// violated axiom together with a witness.
struct ValidationReport {
  std::string failed;
  std::string witness;

  bool ok() const noexcept { return failed.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string axiom, std::string witness) {
    return {std::move(axiom), std::move(witness)};
  }
  void raise_if_failed() const {
    if (!ok()) {
      throw AxiomViolation(failed, witness);
    }
  }
};

}  // namespace fingpd
