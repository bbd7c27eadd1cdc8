#include "bts/knotfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bts {

namespace {

bool valid_generator_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

}  // namespace

Knot parse_knot(std::istream& in) {
  Knot knot;
  bool have_gens = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);

    if (keyword == "knot") {
      std::istringstream rs(rest);
      if (!(rs >> knot.name)) throw ParseError(lineno, "knot needs a name");
      continue;
    }
    if (keyword == "gens") {
      if (have_gens) throw ParseError(lineno, "duplicate gens line");
      std::istringstream rs(rest);
      std::string g;
      while (rs >> g) {
        if (!valid_generator_name(g)) throw ParseError(lineno, "bad generator name '" + g + "'");
        if (knot.group.find(g)) throw ParseError(lineno, "generator '" + g + "' declared twice");
        knot.group.add_generator(g);
      }
      have_gens = true;
      continue;
    }
    if (keyword != "rel" && keyword != "meridian" && keyword != "longitude") {
      throw ParseError(lineno, "unknown directive '" + keyword + "'");
    }
    if (!have_gens) throw ParseError(lineno, keyword + " before gens");
    Word w;
    try {
      w = parse_word(rest, knot.group.generators);
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
    if (keyword == "rel") {
      knot.group.relators.push_back(std::move(w));
    } else if (keyword == "meridian") {
      if (knot.group.meridian) throw ParseError(lineno, "duplicate meridian");
      knot.group.meridian = std::move(w);
    } else {
      if (knot.group.longitude) throw ParseError(lineno, "duplicate longitude");
      knot.group.longitude = std::move(w);
    }
  }
  if (!have_gens) throw ParseError(lineno, "no gens line");
  if (!knot.group.meridian) throw DomainError(ErrorCode::MissingPeripheral, "knot file has no meridian");
  if (!knot.group.longitude) throw DomainError(ErrorCode::MissingPeripheral, "knot file has no longitude");
  return knot;
}

Knot parse_knot_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_knot(in);
}

}  // namespace bts
