// Copyright (c) 2026 lfdepth authors
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace lfd {

/// Raised for malformed user input: files, manifests, scene specs, CLI values.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an internal invariant is violated. Maps to exit code 2 in the CLI.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

namespace detail {
[[noreturn]] inline void throw_internal(const char* expr, const char* file, int line,
                                        const std::string& msg) {
    std::ostringstream os;
    os << "invariant failed: " << expr << " at " << file << ":" << line;
    if (!msg.empty()) os << " (" << msg << ")";
    throw InternalError(os.str());
}
}  // namespace detail

}  // namespace lfd

#define LFD_CHECK(expr)                                                          \
    do {                                                                         \
        if (!(expr)) ::lfd::detail::throw_internal(#expr, __FILE__, __LINE__, ""); \
    } while (0)

#define LFD_CHECK_MSG(expr, msg)                                                \
    do {                                                                        \
        if (!(expr)) {                                                          \
            std::ostringstream os_;                                            \
            os_ << msg;                                                        \
            ::lfd::detail::throw_internal(#expr, __FILE__, __LINE__, os_.str()); \
        }                                                                       \
    } while (0)
