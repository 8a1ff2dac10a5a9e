#ifndef NOETHER_ERROR_HPP
#define NOETHER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace noether {

// Error taxonomy shared by the whole library. The C API and the CLI exit
// codes are derived from the kind, so every throw site picks one. "negative"
// mathematical answers (non-membership, infeasible solve) are ordinary return
// values, never exceptions.
enum class ErrorKind {
  usage,             // bad invocation / bad argument combination
  parse,             // expression or JSON syntax error
  context_mismatch,  // operands live in different variable contexts
  domain,            // precondition violated (non-homogeneous input, ...)
  resource,          // configured degree/step/size cap exceeded
  genericity,        // randomized choice failed its a-posteriori checks
  linkage,           // double-link identity failed (ideal not unmixed)
  io,                // file system problem
  internal,          // invariant violated inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position)
      : Error(ErrorKind::parse,
              message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace noether

#endif
