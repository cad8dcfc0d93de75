#pragma once

#include <span>
#include <string_view>

namespace catjac::oeis::detail {

struct EmbeddedFile {
  std::string_view name;  // e.g. "b007179.txt"
  std::string_view text;
};

// Defined in the generated bundled_data.cpp.
std::span<const EmbeddedFile> embedded_files();

}  // namespace catjac::oeis::detail
