// Ideal files and the command-line front end.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropcm/ideal.hpp"

namespace tropcm {

/// Parses .ideal text: a "vars: x1 x2 ..." line, an optional "field: Q | Fp:<p>"
/// line, then one generator per line. '#' starts a comment. Errors are
/// ParseError with the 1-based line (and column where known). A field
/// override replaces the file's field line.
Ideal parse_ideal_text(const std::string& text, const std::optional<Field>& field_override = std::nullopt);
Ideal load_ideal_file(const std::string& path, const std::optional<Field>& field_override = std::nullopt);

/// Text that parse_ideal_text reads back to the same ideal.
std::string format_ideal(const Ideal& ideal, const std::vector<std::string>& comments = {});
void save_ideal_file(const std::string& path, const Ideal& ideal, const std::vector<std::string>& comments = {});

/// Entry point behind the tropcm binary. argv[0] is the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcm
