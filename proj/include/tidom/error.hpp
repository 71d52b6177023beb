#ifndef TIDOM_ERROR_HPP
#define TIDOM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tidom {

/// Argument outside an operation's precondition (bad vertex, bad size, wrong input kind).
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The requested object cannot exist on this digraph, e.g. a total variant on a
/// digraph with an isolated vertex.
class InfeasibleStructure : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Input larger than a configured exhaustive-search cap.
class SizeLimitExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

}  // namespace tidom

#endif
