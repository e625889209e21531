#ifndef JK_ERRORS_HPP
#define JK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jk {

// Invalid input: violated precondition or malformed value.
class domain_error : public std::invalid_argument {
  public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A cross-check inside an algorithm failed; signals a bug, not bad input.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Input exceeds the combinatorial size guard (see JK_MAX_DIM).
class size_error : public domain_error {
  public:
    explicit size_error(const std::string& what) : domain_error(what) {}
};

}  // namespace jk

#endif
