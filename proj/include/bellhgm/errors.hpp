#ifndef BELLHGM_ERRORS_HPP
#define BELLHGM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellhgm {

// Support enumeration would exceed the configured cap.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A pivot or denominator degenerated while assembling/inverting a Pfaffian block.
struct singular_error : std::runtime_error {
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed its own consistency check (growth guard,
// series truncation, probability normalization, iteration limit).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellhgm

#endif
