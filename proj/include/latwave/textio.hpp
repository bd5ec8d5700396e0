#pragma once

#include <optional>
#include <string>
#include <vector>

namespace latwave {

/** Shortest exact decimal: %.17g round-trips every double bit-exactly and is
 * used for all emitted numbers so identical runs produce identical bytes. */
std::string g17(double x);

/** CSV field list -> RFC-4180 row (quotes fields containing separators). */
std::string csv_row(const std::vector<std::string>& fields);

std::string opt_field(const std::optional<double>& v);
std::string opt_field(const std::optional<bool>& v);

/** Write a file atomically enough for our purposes ('\n' endings, no locale). */
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace latwave
