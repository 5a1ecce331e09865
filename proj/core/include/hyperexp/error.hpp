#pragma once

#include <stdexcept>
#include <string>

namespace hyperexp {

/// Failure classes, ordered to match the CLI exit codes.
enum class ErrorClass {
    parse = 2,      ///< malformed input text
    domain = 3,     ///< arguments outside the supported domain
    tolerance = 4,  ///< a requested accuracy could not be certified
    internal = 5,   ///< invariant violation inside the engine
};

class Error : public std::runtime_error {
  public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass cls() const noexcept { return cls_; }
    int exit_code() const noexcept { return static_cast<int>(cls_); }

  private:
    ErrorClass cls_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(ErrorClass::parse, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorClass::domain, msg); }
[[noreturn]] inline void throw_tolerance(const std::string& msg) { throw Error(ErrorClass::tolerance, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorClass::internal, msg); }

}  // namespace hyperexp
