#pragma once

#include <string>
#include <string_view>

#include "sjt/algebra.hpp"
#include "sjt/supermodule.hpp"

namespace sjt {

inline constexpr const char* kModuleFormat = "sjt-module/1";

/// Reads a module file. With check_relations the relations are verified and
/// violations raise ValidationError; a "valid" field, when present, must
/// agree with the outcome. Malformed content raises ParseError naming the
/// offending field.
Supermodule parse_module(std::string_view text, bool check_relations = true);
/// Canonical text: fixed key order, generators in algebra order, triplets
/// sorted by (row, col), one per line. parse_module(serialize_module(m)) == m.
std::string serialize_module(const Supermodule& m);

Supermodule read_module_file(const std::string& path, bool check_relations = true);
void write_module_file(const std::string& path, const Supermodule& m);

/// expr := term (('+'|'-') term)*, term := [rational '*'] generator.
/// Duplicate generators accumulate.
OddPoint parse_point(std::string_view text, const AlgebraSpec& algebra, bool require_nonzero = true);

std::string to_string(Parity p);
Parity parse_parity(std::string_view text);

}  // namespace sjt
