#pragma once

#include <cstdint>
#include <string>

namespace jue {

/// Shortest 17-significant-digit decimal form, '.' separator, locale-free.
std::string format_double(double v);

/// RFC-4180 field quoting (quotes fields containing comma, quote, CR or LF).
std::string csv_field(const std::string& s);

/// Writes to a temporary file in the target directory, then renames over
/// `path`; interrupted runs never leave a partial file at `path`.
void write_text_atomic(const std::string& path, const std::string& content);

std::uint64_t fnv1a64(const std::string& s);

} // namespace jue
