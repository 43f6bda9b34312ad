#include "quiverknot/error.hpp"

#include <sstream>

namespace quiverknot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::axiom_violation: return "AxiomViolation";
    case ErrorKind::malformed_token: return "MalformedToken";
    case ErrorKind::open_diagram: return "OpenDiagram";
    case ErrorKind::orientation_conflict: return "OrientationConflict";
    case ErrorKind::bad_component_index: return "BadComponentIndex";
    case ErrorKind::bad_arc: return "BadArc";
    case ErrorKind::not_an_endomorphism: return "NotAnEndomorphism";
    case ErrorKind::unknown_link: return "UnknownLink";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::overflow: return "Overflow";
  }
  return "Unknown";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::idempotency: return "idempotency";
    case Axiom::right_invertibility: return "right-invertibility";
    case Axiom::distributivity: return "distributivity";
  }
  return "unknown";
}

namespace {

std::string axiom_message(Axiom axiom, const std::vector<int>& witnesses) {
  std::ostringstream out;
  out << "quandle axiom violated: " << to_string(axiom) << " (witnesses";
  for (int w : witnesses) out << ' ' << w;
  out << ')';
  return out.str();
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<int> witnesses)
    : Error(ErrorKind::axiom_violation, axiom_message(axiom, witnesses)),
      axiom_(axiom),
      witnesses_(std::move(witnesses)) {}

CapExceeded::CapExceeded(const std::string& what, std::uint64_t cap)
    : Error(ErrorKind::cap_exceeded, what + " exceeded cap of " + std::to_string(cap)),
      cap_(cap) {}

}  // namespace quiverknot
