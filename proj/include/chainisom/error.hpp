#ifndef CHAINISOM_ERROR_HPP
#define CHAINISOM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainisom {

  enum class ErrorKind {
    out_of_range,
    not_functional,
    not_injective,
    mismatched_chain,
    limit_exceeded,
    domain_error,
    not_closed,
    not_associative,
    no_zero,
    parse_error
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so
  // callers (the CLI in particular) can map it to an exit code.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace chainisom

#endif
