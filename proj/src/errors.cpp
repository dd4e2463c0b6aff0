#include "sphere_game/errors.hpp"

#include <fmt/format.h>

namespace sphere_game {

NumericalBreakdown::NumericalBreakdown(const std::string& what, std::source_location where)
    : std::runtime_error(fmt::format("{} [{}:{}]", what, where.file_name(), where.line())),
      where_(where) {}

InadmissibleControl::InadmissibleControl(const std::string& what, std::size_t step)
    : std::runtime_error(fmt::format("step {}: {}", step, what)), step_(step) {}

ParseError::ParseError(const std::string& key_path, const std::string& what)
    : std::runtime_error(key_path.empty() ? what : fmt::format("{}: {}", key_path, what)),
      key_path_(key_path) {}

}  // namespace sphere_game
