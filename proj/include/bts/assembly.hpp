#pragma once

// Piece decompositions of S^4 (and of Gluck-twisted copies of it) adapted to
// a circle action with orbit data {(S^3, K), m, n}:
//
//   S^4 = (B_1 u B_2) u (V_n x E_n) u (V_m x E_m) u (X x S^1),
//
// and the complement X^{m,n} = (V_m x E_m) u_g (X x S^1).
//
// Each tube V x E is a solid torus times an arc. On its boundary torus the
// cycle c_theta1 bounds a disk in V_m and c_theta2 bounds a disk in V_n; the
// other cycle is the core. X x S^1 carries pi_1(X) x <h>, with c_theta the
// meridian of K and c_h the orbit circle. The arc direction carries no cycle.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bts/fpgroup.hpp"
#include "bts/gluing.hpp"
#include "bts/knotfile.hpp"
#include "bts/orbitdata.hpp"

namespace bts {

enum class CycleLabel { Theta, H, Theta1, Theta2 };
enum class Arc { Em, En };
enum class PieceKind { Ball4, TorusBundle, FreePart };

std::string to_string(CycleLabel c);
std::string to_string(Arc a);
std::string to_string(PieceKind k);

struct Piece {
  PieceKind kind = PieceKind::Ball4;
  /// Order of the exceptional orbits in the core of a tube. 0 marks the
  /// degenerate tube left behind when a twist reaches the spun knot.
  Int order = 0;
  Arc arc = Arc::Em;  // meaningful for TorusBundle only
  std::string name;
  GroupPresentation presentation;
  std::map<CycleLabel, Word> boundary_cycles;
};

enum class EdgeKind {
  Torus,   // glued along T^2 x arc by `matrix`
  Sphere,  // a 4-ball capped off along its whole boundary 3-sphere
};

/// `matrix` expresses the images of the tube cycles (c_theta1, c_theta2) in
/// the basis (c_theta, c_h) of X x S^1, column by column.
struct GluingEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::Torus;
  Mat2 matrix = Mat2::identity();
  std::optional<CycleLabel> filled_disk_cycle;
};

enum class ComplexLabel { ClosedS4, Complement, GluckResult };

std::string to_string(ComplexLabel l);

struct PieceComplex {
  std::vector<Piece> pieces;
  std::vector<GluingEdge> edges;
  ComplexLabel label = ComplexLabel::ClosedS4;
  std::string knot_name;
  /// The twin whose first member is the branched twist spin E_n u F of this complex.
  TwinState twin;
};

/// Five-piece decomposition of S^4 for {(S^3, K), m, n}. Both tube edges carry
/// g_matrix(m, n); the (0, 1) spun-knot form has a degenerate order-0 tube.
/// Throws MissingPeripheral.
PieceComplex build_closed_complex(const Knot& knot, const BTSIndex& idx);
PieceComplex build_closed_complex(const GroupPresentation& knot, const BTSIndex& idx);

/// X^{m,n}: the tube over E_m glued to X x S^1 by g, c_theta1 filled. m != 0.
PieceComplex build_complement_complex(const Knot& knot, const BTSIndex& idx);
PieceComplex build_complement_complex(const GroupPresentation& knot, const BTSIndex& idx);

/// Gluck twist along the first (E_n u F) or second (E_m u F) member of the
/// twin. The twisted tube is reglued by the Gluck matrix: [[1,-1],[0,1]]
/// for First, its disk-exchanged form [[1,0],[-1,1]] for Second. The
/// untouched tube is recoordinatised by the same matrix to follow the
/// transported circle action. Edge matrices are then sign-normalised and
/// tube orders re-read from the filled columns.
/// Throws WrongLabel on a complement and SpunKnotHasNoPartner once terminal.
PieceComplex apply_gluck(const PieceComplex& c, Site site);

/// Seifert-van Kampen over the tubes and X x S^1. Balls add nothing. For each
/// torus edge and each tube cycle, the tube word is identified with its
/// image; the filled cycle's image is killed. A torus edge outside the
/// spanning tree contributes a stable letter. Throws DisconnectedComplex.
///
/// For complements the meridian of the result is the core of the tube over
/// E_m, which is the meridian circle of K^{m,n}.
GroupPresentation vankampen_pi1(const PieceComplex& c);

AbelianInvariants h1(const PieceComplex& c);

struct CertificateReport {
  AbelianInvariants homology;
  bool h1_trivial = false;
  int kmax = 0;
  std::vector<std::uint64_t> hom_counts;  // index k-1 holds the count into S_k
  bool homs_trivial = false;              // every count equals 1
  std::size_t simplified_generators = 0;

  bool passed() const noexcept { return h1_trivial && homs_trivial; }
};

/// H_1 and finite-quotient evidence only; never a claim about pi_1 itself.
CertificateReport sphere_certificate(const PieceComplex& c, int kmax);

/// Equal piece multisets (kind, order, arc) and equal multisets of torus
/// edges (tube arc, tube order, filled cycle, canonical_gluing_form(matrix)).
bool strictly_isomorphic(const PieceComplex& lhs, const PieceComplex& rhs);

/// Deterministic text form: pieces sorted by kind then order, matrices row-major.
std::string dump(const PieceComplex& c);

}  // namespace bts
