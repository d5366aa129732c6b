#pragma once

#include <stdexcept>
#include <string>

namespace mbf {

/// Invalid arguments or domain violations. The CLI maps these to exit code 2.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A violated internal cross-check (two formula routes disagreeing, a count
/// that fails an exactness check). The CLI maps these to exit code 3.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace mbf
