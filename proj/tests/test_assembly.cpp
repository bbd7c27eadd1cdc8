#include <doctest.h>

#include <numeric>

#include "bts/assembly.hpp"
#include "test_support.hpp"

using namespace bts;

namespace {

template <class F>
void for_coprime(Int bound, F&& f) {
  for (Int m = -bound; m <= bound; ++m)
    for (Int n = 1; n <= bound; ++n)
      if (m != 0 && std::gcd(m, n) == 1) f(m, n);
}

const Knot& knot(const std::string& name) {
  static const Knot unknot = support::knot("unknot");
  static const Knot trefoil = support::knot("trefoil");
  static const Knot figure8 = support::knot("figure8");
  return name == "unknot" ? unknot : name == "trefoil" ? trefoil : figure8;
}

BTSIndex idx(Int m, Int n) { return BTSIndex::make(m, n); }

}  // namespace

TEST_CASE("closed complex layout") {
  const PieceComplex c = build_closed_complex(knot("trefoil"), idx(2, 3));
  CHECK(c.label == ComplexLabel::ClosedS4);
  CHECK(c.knot_name == "trefoil");
  REQUIRE(c.pieces.size() == 5);
  int balls = 0, tubes = 0, free = 0;
  for (const Piece& p : c.pieces) {
    balls += p.kind == PieceKind::Ball4;
    tubes += p.kind == PieceKind::TorusBundle;
    free += p.kind == PieceKind::FreePart;
    if (p.kind == PieceKind::TorusBundle) CHECK(p.order == (p.arc == Arc::Em ? 2 : 3));
  }
  CHECK(balls == 2);
  CHECK(tubes == 2);
  CHECK(free == 1);
  int torus = 0;
  for (const GluingEdge& e : c.edges) {
    if (e.kind != EdgeKind::Torus) continue;
    ++torus;
    CHECK(e.matrix == g_matrix(idx(2, 3)));
  }
  CHECK(torus == 2);
  CHECK(c.twin.first == idx(2, 3));
  CHECK(c.twin.second == idx(3, 2));
}

TEST_CASE("complement layout and errors") {
  const PieceComplex c = build_complement_complex(knot("trefoil"), idx(-3, 4));
  CHECK(c.label == ComplexLabel::Complement);
  CHECK(c.pieces.size() == 2);
  REQUIRE(c.edges.size() == 1);
  CHECK(c.edges[0].filled_disk_cycle == CycleLabel::Theta1);
  CHECK_THROWS_AS(build_complement_complex(knot("trefoil"), idx(0, 1)), DomainError);
  CHECK_THROWS_AS(apply_gluck(c, Site::First), DomainError);

  GroupPresentation bare = knot("trefoil").group;
  bare.longitude.reset();
  CHECK_THROWS_AS(build_closed_complex(bare, idx(2, 3)), DomainError);
}

TEST_CASE("disconnected complexes are rejected") {
  PieceComplex c = build_closed_complex(knot("trefoil"), idx(2, 3));
  std::erase_if(c.edges, [](const GluingEdge& e) { return e.kind == EdgeKind::Torus && e.from == 3; });
  try {
    vankampen_pi1(c);
    FAIL("expected DisconnectedComplex");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::DisconnectedComplex);
  }
  PieceComplex d = build_complement_complex(knot("trefoil"), idx(2, 3));
  d.edges.clear();
  CHECK_THROWS_AS(vankampen_pi1(d), DomainError);
}

TEST_CASE("homology over the grid") {
  for (const char* name : {"unknot", "trefoil", "figure8"}) {
    for_coprime(25, [&](Int m, Int n) {
      const PieceComplex closed = build_closed_complex(knot(name), idx(m, n));
      REQUIRE(h1(closed).trivial());
      REQUIRE(h1(build_complement_complex(knot(name), idx(m, n))).infinite_cyclic());
      if (m + n != 0) REQUIRE(h1(apply_gluck(closed, Site::Second)).trivial());
      REQUIRE(h1(apply_gluck(closed, Site::First)).trivial());
    });
  }
  CHECK(h1(build_closed_complex(knot("trefoil"), idx(0, 1))).trivial());
}

TEST_CASE("complement meridian generates homology") {
  for_coprime(25, [](Int m, Int n) {
    const GroupPresentation p = vankampen_pi1(build_complement_complex(knot("trefoil"), idx(m, n)));
    REQUIRE(p.meridian);
    const std::vector<Word> mer{*p.meridian};
    REQUIRE(abelianization(add_relators(p, mer)).trivial());
  });
  // the knot meridian c_theta alone need not generate: for (3,2) it has index 2
  const GroupPresentation p = vankampen_pi1(build_complement_complex(knot("trefoil"), idx(3, 2)));
  const std::vector<Word> theta{Word::gen(*p.find("x"))};
  CHECK(to_string(abelianization(add_relators(p, theta))) == "Z/2");
}

TEST_CASE("identification relators carry the edge matrix") {
  for_coprime(12, [](Int m, Int n) {
    const GroupPresentation p = vankampen_pi1(build_complement_complex(knot("unknot"), idx(m, n)));
    // t_m x h, then [x,h], then one relator per tube cycle
    REQUIRE(p.generators == std::vector<std::string>{"t_m", "x", "h"});
    REQUIRE(p.relators.size() == 3);
    const Mat2 g = g_matrix(idx(m, n));
    REQUIRE(p.relators[1].exponent_sums(3) == std::vector<Int>{0, g.a, g.c});
    REQUIRE(p.relators[2].exponent_sums(3) == std::vector<Int>{-1, g.b, g.d});
  });
}

TEST_CASE("gluck twist against rebuilt complexes") {
  for (const char* name : {"unknot", "trefoil"}) {
    for_coprime(25, [&](Int m, Int n) {
      const PieceComplex c = build_closed_complex(knot(name), idx(m, n));
      const Int ep = oracle::sgn_strict(m + n);
      if (ep == 0) {
        const PieceComplex t = apply_gluck(c, Site::Second);
        REQUIRE(t.twin.terminal);
        REQUIRE(strictly_isomorphic(t, build_closed_complex(knot(name), idx(0, 1))));
        // (-1,1) is its own partner; along the first member the two arcs trade places
        const PieceComplex f = apply_gluck(c, Site::First);
        REQUIRE(f.twin.terminal);
        for (const Piece& p : f.pieces)
          if (p.kind == PieceKind::TorusBundle) REQUIRE(p.order == (p.arc == Arc::Em ? 1 : 0));
        return;
      }
      const PieceComplex second = apply_gluck(c, Site::Second);
      REQUIRE(second.label == ComplexLabel::GluckResult);
      REQUIRE(strictly_isomorphic(second, build_closed_complex(knot(name), idx(m + n, n))));
      const PieceComplex first = apply_gluck(c, Site::First);
      REQUIRE(strictly_isomorphic(first, build_closed_complex(knot(name), idx(ep * m, ep * (m + n)))));
      const Int edp = oracle::sgn_nonneg(2 * m + n);
      if (2 * m + n != 0) {
        REQUIRE(strictly_isomorphic(apply_gluck(first, Site::First),
                                    build_closed_complex(knot(name), idx(edp * m, edp * (2 * m + n)))));
      }
    });
  }
}

TEST_CASE("strict isomorphism separates distinct indices") {
  const PieceComplex a = build_closed_complex(knot("trefoil"), idx(2, 3));
  CHECK(strictly_isomorphic(a, a));
  CHECK_FALSE(strictly_isomorphic(a, build_closed_complex(knot("trefoil"), idx(3, 2))));
  CHECK_FALSE(strictly_isomorphic(a, build_closed_complex(knot("trefoil"), idx(2, 5))));
  CHECK_FALSE(strictly_isomorphic(a, build_complement_complex(knot("trefoil"), idx(2, 3))));
}

TEST_CASE("terminal twist stops further twisting") {
  const PieceComplex c = apply_gluck(build_closed_complex(knot("trefoil"), idx(-1, 1)), Site::First);
  CHECK_THROWS_AS(apply_gluck(c, Site::First), DomainError);
}

TEST_CASE("finite quotients of complements") {
  const GroupPresentation tref = vankampen_pi1(build_complement_complex(knot("trefoil"), idx(2, 3)));
  const GroupPresentation tref_ab = abelian_presentation(abelianization(tref));
  CHECK(count_homs_symmetric(tref, 3) == 12);
  CHECK(support::brute_count(tref, 3) == 12);
  CHECK(count_homs_symmetric(tref_ab, 3) == 6);

  const GroupPresentation unk = vankampen_pi1(build_complement_complex(knot("unknot"), idx(2, 3)));
  const GroupPresentation unk_ab = abelian_presentation(abelianization(unk));
  std::uint64_t fact = 1;
  for (int k = 1; k <= 5; ++k) {
    fact *= static_cast<std::uint64_t>(k);
    CHECK(count_homs_symmetric(unk, k) == fact);
    CHECK(count_homs_symmetric(unk_ab, k) == fact);
  }
  CHECK(support::brute_count(unk, 4) == 24);
}

TEST_CASE("sphere certificates") {
  const CertificateReport r = sphere_certificate(build_closed_complex(knot("trefoil"), idx(2, 3)), 5);
  CHECK(r.passed());
  CHECK(r.hom_counts == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  const CertificateReport t =
      sphere_certificate(apply_gluck(build_closed_complex(knot("figure8"), idx(3, 5)), Site::Second), 4);
  CHECK(t.passed());
  CHECK_THROWS_AS(sphere_certificate(build_closed_complex(knot("trefoil"), idx(2, 3)), 7), DomainError);
  const CertificateReport comp = sphere_certificate(build_complement_complex(knot("trefoil"), idx(2, 3)), 3);
  CHECK_FALSE(comp.h1_trivial);
  CHECK_FALSE(comp.passed());
}

TEST_CASE("dump") {
  const PieceComplex c = build_closed_complex(knot("trefoil"), idx(2, 3));
  CHECK(dump(c) == dump(build_closed_complex(knot("trefoil"), idx(2, 3))));
  CHECK(dump(c) ==
        "complex closed knot=trefoil twin=(2,3)|(3,2)\n"
        "piece ball1 Ball4\n"
        "piece ball2 Ball4\n"
        "piece tube_m TorusBundle order=2 arc=E_m\n"
        "piece tube_n TorusBundle order=3 arc=E_n\n"
        "piece free FreePart\n"
        "edge ball1 -> tube_m sphere\n"
        "edge ball1 -> tube_n sphere\n"
        "edge ball2 -> tube_m sphere\n"
        "edge ball2 -> tube_n sphere\n"
        "edge tube_m -> free torus [[2,-3],[1,-1]] filled=c_theta1\n"
        "edge tube_n -> free torus [[2,-3],[1,-1]] filled=c_theta2\n");
}
