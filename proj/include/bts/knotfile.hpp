#pragma once

// Plain-text knot presentations:
//
//   knot trefoil
//   gens x y
//   rel x y x Y X Y
//   meridian x
//   longitude x Y X X Y x x x
//
// A lowercase token is a generator, the uppercased token its inverse.
// Blank lines and text after '#' are ignored.

#include <filesystem>
#include <istream>
#include <string>

#include "bts/fpgroup.hpp"

namespace bts {

struct Knot {
  std::string name;
  GroupPresentation group;
};

/// Throws ParseError (with line number) on malformed input and
/// DomainError(MissingPeripheral) when the meridian or longitude is absent.
Knot parse_knot(std::istream& in);
Knot parse_knot_file(const std::filesystem::path& path);

}  // namespace bts
