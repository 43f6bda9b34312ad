#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverknot {

enum class ErrorKind {
  invalid_input,
  axiom_violation,
  malformed_token,
  open_diagram,
  orientation_conflict,
  bad_component_index,
  bad_arc,
  not_an_endomorphism,
  unknown_link,
  cap_exceeded,
  overflow,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. `kind()` is stable and is what
/// the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Axiom { idempotency, right_invertibility, distributivity };

const char* to_string(Axiom axiom);

/// A table failed one of the quandle axioms. Witnesses are 1-based elements:
/// {x} for idempotency, {y, x1, x2} (two rows with equal entries in column y)
/// for right invertibility, {x, y, z} for distributivity.
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::vector<int> witnesses);

  Axiom axiom() const noexcept { return axiom_; }
  const std::vector<int>& witnesses() const noexcept { return witnesses_; }

 private:
  Axiom axiom_;
  std::vector<int> witnesses_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap);

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace quiverknot
