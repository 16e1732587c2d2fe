#pragma once

#include <functional>
#include <optional>

#include "stringgrass/error.hpp"

// Runs fn and reports the Errc it threw, if any. Lets tests assert on the
// error code rather than on message text.
inline std::optional<stringgrass::Errc> thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const stringgrass::Error& err) {
    return err.code();
  }
  return std::nullopt;
}
