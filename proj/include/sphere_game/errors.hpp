#pragma once

#include <source_location>
#include <stdexcept>
#include <string>

namespace sphere_game {

/// Raised when a numerical procedure cannot produce a trustworthy answer,
/// e.g. a root bracket without a sign change near a degenerate configuration.
/// The message carries the throw site so CLI diagnostics point at the code.
class NumericalBreakdown : public std::runtime_error {
 public:
  explicit NumericalBreakdown(const std::string& what,
                              std::source_location where = std::source_location::current());

  const std::source_location& where() const noexcept { return where_; }

 private:
  std::source_location where_;
};

/// A policy produced controls outside the admissible set.
class InadmissibleControl : public std::runtime_error {
 public:
  InadmissibleControl(const std::string& what, std::size_t step);

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Scenario documents that fail validation. `key_path` is dotted, e.g. "params.mu".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& key_path, const std::string& what);

  const std::string& key_path() const noexcept { return key_path_; }

 private:
  std::string key_path_;
};

}  // namespace sphere_game
