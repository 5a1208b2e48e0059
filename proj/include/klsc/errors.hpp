#ifndef KLSC_ERRORS_HPP
#define KLSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace klsc {

/// Malformed user input; `where` locates the offending field.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// A generator was found at the top computed degree, so higher generators
/// may have been missed.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A boundary module generator in half-degree h with 2h >= r over Q.
class DegreeBoundError : public std::runtime_error {
 public:
  DegreeBoundError(const std::string& what, int element, int degree, int rank_gap)
      : std::runtime_error(what), element(element), degree(degree), rank_gap(rank_gap) {}
  int element;
  int degree;
  int rank_gap;
};

/// An internal identity that must hold failed (kernel axioms, solver
/// consistency, surjectivity of a cover).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klsc

#endif  // KLSC_ERRORS_HPP
