// errors.hpp -- exception taxonomy shared by the core modules.
//
// The C boundary maps these onto status codes, and the CLI maps status codes
// onto process exit codes, so every failure class needs its own type:
//
//   std::invalid_argument  -> bad input (rejected preconditions)
//   GuardError             -> a size guard on an intentionally-bounded
//                             brute-force routine was exceeded
//   CacheError             -> unusable cache file (I/O or malformed record)
//   InternalError          -> a mathematical invariant failed; a bug, never
//                             a user error

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtc {

class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

class CacheError : public std::runtime_error {
public:
    CacheError(const std::string& what, std::size_t line_no)
        : std::runtime_error(line_no ? ("cache line " + std::to_string(line_no) + ": " + what)
                                     : what),
          line_no_(line_no) {}

    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rtc
