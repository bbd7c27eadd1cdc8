#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "bts/assembly.hpp"
#include "bts/knotfile.hpp"
#include "test_support.hpp"

using namespace bts;

namespace {

Knot parse(const std::string& text) {
  std::istringstream in(text);
  return parse_knot(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no parse error");
  return 0;
}

const std::vector<std::array<int, 4>> kTrefoilPD = {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
const std::vector<std::array<int, 4>> kFigure8PD = {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};

// Every homomorphism into S_k sends meridian and longitude to commuting elements.
bool peripheral_commutes(const GroupPresentation& p, int k) {
  const auto perms = oracle::all_perms(k);
  const auto rels = support::expand(p.relators);
  const auto mer = support::expand(*p.meridian);
  const auto lon = support::expand(*p.longitude);
  const std::size_t g = p.generators.size();
  std::vector<std::size_t> idx(g, 0);
  std::vector<oracle::Perm> img(g);
  for (;;) {
    for (std::size_t i = 0; i < g; ++i) img[i] = perms[idx[i]];
    bool hom = true;
    for (const auto& r : rels) hom = hom && oracle::is_identity(oracle::evaluate(r, img, k));
    if (hom) {
      const auto a = oracle::evaluate(mer, img, k);
      const auto b = oracle::evaluate(lon, img, k);
      if (oracle::compose(a, b) != oracle::compose(b, a)) return false;
    }
    std::size_t i = 0;
    for (; i < g; ++i) {
      if (++idx[i] < perms.size()) break;
      idx[i] = 0;
    }
    if (i == g) return true;
  }
}

}  // namespace

TEST_CASE("shipped knot files") {
  const Knot t = support::knot("trefoil");
  CHECK(t.name == "trefoil");
  CHECK(t.group.generators.size() == 2);
  CHECK(t.group.relators.size() == 1);
  CHECK(format_word(*t.group.meridian, t.group.generators) == "x");

  const Knot u = support::knot("unknot");
  CHECK(u.group.generators.size() == 1);
  CHECK(u.group.relators.empty());
  CHECK(u.group.longitude->empty());

  CHECK(support::knot("figure8").group.generators.size() == 4);
}

TEST_CASE("knot group invariants") {
  for (const char* name : {"unknot", "trefoil", "figure8"}) {
    const GroupPresentation g = support::knot(name).group;
    CHECK(abelianization(g).infinite_cyclic());
    const std::vector<Word> mer{*g.meridian};
    CHECK(abelianization(add_relators(g, mer)).trivial());
    // the longitude dies in homology
    const std::vector<Word> lon{*g.longitude};
    CHECK(abelianization(add_relators(g, lon)).infinite_cyclic());
    Int total = 0;
    for (Int s : g.longitude->exponent_sums(g.generators.size())) total += s;
    CHECK(total == 0);
  }
  CHECK(peripheral_commutes(support::knot("trefoil").group, 4));
  CHECK(peripheral_commutes(support::knot("figure8").group, 4));
}

TEST_CASE("trefoil file agrees with the diagram") {
  const oracle::Wirtinger w = oracle::wirtinger(kTrefoilPD);
  REQUIRE(w.arcs == 3);
  CHECK(w.writhe == -3);
  // arcs 0, 1 are x, y; arc 2 is eliminated through the relator that defines it
  const oracle::Word c = {{0, 1}, {1, 1}, {0, -1}};
  const GroupPresentation g = support::knot("trefoil").group;
  std::vector<oracle::Word> rels;
  for (const auto& r : w.relators) {
    const oracle::Word s = oracle::cyclic_reduce(oracle::substitute(r, 2, c));
    if (!s.empty()) rels.push_back(s);
  }
  REQUIRE(rels.size() == 2);
  for (const auto& r : rels) CHECK(oracle::same_relator(r, support::expand(g.relators[0])));
  CHECK(oracle::reduce(oracle::substitute(w.longitude, 2, c)) == support::expand(*g.longitude));
}

TEST_CASE("figure-eight file agrees with the diagram") {
  const oracle::Wirtinger w = oracle::wirtinger(kFigure8PD);
  REQUIRE(w.arcs == 4);
  CHECK(w.writhe == 0);
  const GroupPresentation g = support::knot("figure8").group;
  REQUIRE(g.relators.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(oracle::same_relator(w.relators[i], support::expand(g.relators[i])));
  CHECK(oracle::reduce(w.longitude) == support::expand(*g.longitude));
}

TEST_CASE("knot file errors") {
  CHECK(parse_error_line("gens x y\nrel x z\nmeridian x\nlongitude\n") == 2);
  CHECK(parse_error_line("rel x\n") == 1);
  CHECK(parse_error_line("gens x\ngens y\n") == 2);
  CHECK(parse_error_line("gens x x\n") == 1);
  CHECK(parse_error_line("gens x\nfoo x\n") == 2);
  CHECK(parse_error_line("# nothing\n\ngens x\nmeridian x\nmeridian x\n") == 5);
  CHECK_THROWS_AS(parse("gens x\nlongitude\n"), DomainError);
  CHECK_THROWS_AS(parse("gens x\nmeridian x\n"), DomainError);
  CHECK_THROWS_AS(parse_knot_file("/nonexistent/k.knot"), ParseError);
  const Knot k = parse("knot t # comment\ngens x y\n\nrel x y x Y X Y\nmeridian x # m\nlongitude x Y X X Y x x x\n");
  CHECK(k.name == "t");
  CHECK(k.group.relators.size() == 1);
}

TEST_CASE("cli golden outputs") {
  const auto cases = support::golden_cases();
  CHECK(cases.size() >= 8);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto r = support::run_cli(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out == c.expected);
    const auto again = support::run_cli(c.args);
    CHECK(again.out == r.out);
    CHECK(again.err == r.err);
  }
}

TEST_CASE("cli output equals library calls") {
  const std::string tref = std::string(KNOTS_DIR) + "/trefoil.knot";
  const Knot k = support::knot("trefoil");
  const BTSIndex i = BTSIndex::make(2, 3);

  CHECK(support::run_cli({"twin", "2", "3"}).out == to_string(i) + " | partner " + to_string(twin_partner(i)) + "\n");
  CHECK(support::run_cli({"gluck", "--along", "partner", "2", "3"}).out ==
        "(2,3) -> " + to_string(gluck_rewrite(TwinState::of(i), Site::Second).first) + "\n");
  CHECK(support::run_cli({"gluck", "--along", "self", "2", "3"}).out ==
        "(2,3) -> " + to_string(gluck_rewrite(TwinState::of(i), Site::First).first) + "\n");

  const ReductionTrace t = reduce_to_base(BTSIndex::make(5, 3));
  std::string trace = "start (5,3)\n";
  for (const auto& s : t.steps) trace += to_string(s.move) + " " + to_string(s.result) + "\n";
  trace += "terminal " + to_string(t.terminal) + " after " + std::to_string(t.steps.size()) + " moves\n";
  CHECK(support::run_cli({"reduce", "5", "3"}).out == trace);

  CHECK(support::run_cli({"h1", "--knot", tref, "2", "3"}).out ==
        "H1 = " + to_string(h1(build_complement_complex(k, i))) + "\n");
  CHECK(support::run_cli({"h1", "--knot", tref, "--gluck", "second", "2", "3"}).out ==
        "H1 = " + to_string(h1(apply_gluck(build_closed_complex(k, i), Site::Second))) + "\n");
  CHECK(support::run_cli({"pi1", "--knot", tref, "2", "3"}).out ==
        "pi1 complement trefoil (2,3)\n" + format_presentation(vankampen_pi1(build_complement_complex(k, i))));

  const ClassificationReport cr = classify(BTSIndex::make(3, 2), true);
  const std::string cls = support::run_cli({"classify", "3", "2", "--nontrivial"}).out;
  CHECK(cls.find("twisted " + to_string(*cr.twisted) + "\n") != std::string::npos);
  CHECK(cls.find("reason " + cr.reason + "\n") != std::string::npos);

  const CertificateReport rep = sphere_certificate(build_closed_complex(k, i), 4);
  const std::string cert = support::run_cli({"certify", "--knot", tref, "2", "3"}).out;
  for (std::size_t j = 0; j < rep.hom_counts.size(); ++j)
    CHECK(cert.find("homs S" + std::to_string(j + 1) + " " + std::to_string(rep.hom_counts[j]) + "\n") !=
          std::string::npos);
  CHECK(cert.find("H1 = " + to_string(rep.homology) + "\n") != std::string::npos);

  std::size_t pairs = 0;
  for (Int m = -40; m <= 40; ++m)
    for (Int n = 1; n <= 40; ++n) pairs += (m != 0 && std::gcd(m, n) == 1) ? 1 : 0;
  CHECK(support::run_cli({"verify-matrices", "--max", "40"}).out.find("all identities hold (" +
                                                                      std::to_string(pairs) + " pairs)") !=
        std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(support::run_cli({"twin", "2", "4"}).code == 1);
  CHECK(support::run_cli({"twin", "2"}).code == 2);
  CHECK(support::run_cli({"frobnicate"}).code == 2);
  CHECK(support::run_cli({"gluck", "--along", "sideways", "2", "3"}).code == 2);
  CHECK(support::run_cli({"certify", "--knot", std::string(KNOTS_DIR) + "/trefoil.knot", "--kmax", "7", "2", "3"})
            .code == 2);
  CHECK(support::run_cli({"--help"}).code == 0);

  const auto bad = std::filesystem::temp_directory_path() / "bts_bad.knot";
  {
    std::ofstream f(bad);
    f << "gens x y\nrel x z\nmeridian x\nlongitude\n";
  }
  const auto r = support::run_cli({"h1", "--knot", bad.string(), "2", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::filesystem::remove(bad);

  const auto g = support::run_cli({"certify", "--knot", std::string(KNOTS_DIR) + "/figure8.knot", "--max-gens", "2",
                                   "3", "5"});
  CHECK(g.code == 1);
}
