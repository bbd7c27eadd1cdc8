#include "bts/assembly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

namespace bts {

std::string to_string(CycleLabel c) {
  switch (c) {
    case CycleLabel::Theta: return "c_theta";
    case CycleLabel::H: return "c_h";
    case CycleLabel::Theta1: return "c_theta1";
    case CycleLabel::Theta2: return "c_theta2";
  }
  return "?";
}

std::string to_string(Arc a) { return a == Arc::Em ? "E_m" : "E_n"; }

std::string to_string(PieceKind k) {
  switch (k) {
    case PieceKind::Ball4: return "Ball4";
    case PieceKind::TorusBundle: return "TorusBundle";
    case PieceKind::FreePart: return "FreePart";
  }
  return "?";
}

std::string to_string(ComplexLabel l) {
  switch (l) {
    case ComplexLabel::ClosedS4: return "closed";
    case ComplexLabel::Complement: return "complement";
    case ComplexLabel::GluckResult: return "gluck";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  std::string name = base;
  for (int i = 2; std::find(taken.begin(), taken.end(), name) != taken.end(); ++i) {
    name = base + std::to_string(i);
  }
  return name;
}

Piece make_ball(std::string name) {
  Piece p;
  p.kind = PieceKind::Ball4;
  p.name = std::move(name);
  return p;
}

// V x E: one generator, the core circle; the other cycle bounds a disk.
Piece make_tube(Arc arc, Int order, const std::vector<std::string>& taken) {
  Piece p;
  p.kind = PieceKind::TorusBundle;
  p.arc = arc;
  p.order = order;
  p.name = arc == Arc::Em ? "tube_m" : "tube_n";
  const std::size_t core = p.presentation.add_generator(fresh_name(taken, arc == Arc::Em ? "t_m" : "t_n"));
  const CycleLabel filled = arc == Arc::Em ? CycleLabel::Theta1 : CycleLabel::Theta2;
  const CycleLabel around = arc == Arc::Em ? CycleLabel::Theta2 : CycleLabel::Theta1;
  p.boundary_cycles[filled] = Word{};
  p.boundary_cycles[around] = Word::gen(core);
  return p;
}

Piece make_free_part(const GroupPresentation& knot) {
  if (!knot.meridian || !knot.longitude) {
    throw DomainError(ErrorCode::MissingPeripheral, "knot presentation needs a meridian and a longitude");
  }
  knot.validate();
  Piece p;
  p.kind = PieceKind::FreePart;
  p.name = "free";
  p.presentation = adjoin_central_generator(knot, fresh_name(knot.generators, "h"));
  const std::size_t h = p.presentation.generators.size() - 1;
  p.boundary_cycles[CycleLabel::Theta] = *knot.meridian;
  p.boundary_cycles[CycleLabel::H] = Word::gen(h);
  return p;
}

// Order of the exceptional orbit at the core: how often the disk boundary winds
// along the meridian of K.
Int order_from_matrix(const Mat2& m, Arc arc) { return std::abs(m.at(0, arc == Arc::Em ? 0 : 1)); }

PieceComplex closed_from(const GroupPresentation& knot, const std::string& name, const BTSIndex& idx,
                         const TwinState& twin) {
  const Piece free = make_free_part(knot);
  const Mat2 g = g_matrix(idx);

  PieceComplex c{{}, {}, ComplexLabel::ClosedS4, name, twin};
  c.pieces.push_back(make_ball("ball1"));
  c.pieces.push_back(make_ball("ball2"));
  c.pieces.push_back(make_tube(Arc::Em, std::abs(idx.m()), free.presentation.generators));
  c.pieces.push_back(make_tube(Arc::En, idx.n(), free.presentation.generators));
  c.pieces.push_back(free);
  // g on the tube over E_m; e, with the same matrix, on the tube over E_n.
  c.edges.push_back({2, 4, EdgeKind::Torus, g, CycleLabel::Theta1});
  c.edges.push_back({3, 4, EdgeKind::Torus, g, CycleLabel::Theta2});
  for (std::size_t ball : {0u, 1u}) {
    c.edges.push_back({ball, 2, EdgeKind::Sphere, Mat2::identity(), std::nullopt});
    c.edges.push_back({ball, 3, EdgeKind::Sphere, Mat2::identity(), std::nullopt});
  }
  return c;
}

PieceComplex complement_from(const GroupPresentation& knot, const std::string& name, const BTSIndex& idx) {
  if (idx.is_spun()) {
    throw DomainError(ErrorCode::SpunKnotHasNoPartner, "the complement complex needs m != 0");
  }
  const Piece free = make_free_part(knot);
  PieceComplex c{{}, {}, ComplexLabel::Complement, name, TwinState::of(idx)};
  c.pieces.push_back(make_tube(Arc::Em, std::abs(idx.m()), free.presentation.generators));
  c.pieces.push_back(free);
  c.edges.push_back({0, 1, EdgeKind::Torus, g_matrix(idx), CycleLabel::Theta1});
  return c;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

Word shifted(const Word& w, std::size_t offset) {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) l.gen += offset;
  return Word(std::move(ls));
}

}  // namespace

PieceComplex build_closed_complex(const GroupPresentation& knot, const BTSIndex& idx) {
  const TwinState twin = idx.is_spun() ? TwinState{idx, idx, {}, true} : TwinState::of(idx);
  return closed_from(knot, "", idx, twin);
}

PieceComplex build_closed_complex(const Knot& knot, const BTSIndex& idx) {
  PieceComplex c = build_closed_complex(knot.group, idx);
  c.knot_name = knot.name;
  return c;
}

PieceComplex build_complement_complex(const GroupPresentation& knot, const BTSIndex& idx) {
  return complement_from(knot, "", idx);
}

PieceComplex build_complement_complex(const Knot& knot, const BTSIndex& idx) {
  return complement_from(knot.group, knot.name, idx);
}

PieceComplex apply_gluck(const PieceComplex& c, Site site) {
  if (c.label == ComplexLabel::Complement) {
    throw DomainError(ErrorCode::WrongLabel, "Gluck twists act on closed complexes");
  }
  PieceComplex out = c;
  out.twin = gluck_rewrite(c.twin, site);
  out.label = ComplexLabel::GluckResult;

  const Mat2 twist = site == Site::First ? matrices::gluck : matrices::gluck_exchanged;
  for (GluingEdge& e : out.edges) {
    if (e.kind != EdgeKind::Torus) continue;
    e.matrix = normalize_sign(e.matrix * twist);
    Piece& tube = out.pieces.at(e.from);
    tube.order = order_from_matrix(e.matrix, tube.arc);
  }

  if (!out.twin.terminal) {
    for (const Piece& p : out.pieces) {
      if (p.kind != PieceKind::TorusBundle) continue;
      const Int expected = p.arc == Arc::Em ? std::abs(out.twin.first.m()) : out.twin.first.n();
      if (p.order != expected) {
        throw std::logic_error("tube order " + std::to_string(p.order) + " disagrees with " +
                               to_string(out.twin.first));
      }
    }
  }
  return out;
}

GroupPresentation vankampen_pi1(const PieceComplex& c) {
  const std::size_t np = c.pieces.size();
  UnionFind all(np);
  for (const GluingEdge& e : c.edges) {
    if (e.from >= np || e.to >= np) throw DomainError(ErrorCode::DisconnectedComplex, "edge to a missing piece");
    all.unite(e.from, e.to);
  }
  for (std::size_t i = 1; i < np; ++i) {
    if (all.find(i) != all.find(0)) throw DomainError(ErrorCode::DisconnectedComplex, c.pieces[i].name);
  }

  GroupPresentation out;
  std::vector<std::size_t> offset(np, kNone);
  for (std::size_t i = 0; i < np; ++i) {
    const Piece& p = c.pieces[i];
    if (p.kind == PieceKind::Ball4) continue;
    offset[i] = out.generators.size();
    for (const std::string& g : p.presentation.generators) out.add_generator(fresh_name(out.generators, g));
    for (const Word& r : p.presentation.relators) out.relators.push_back(shifted(r, offset[i]));
  }

  UnionFind tree(np);
  std::size_t stable = 0;
  for (const GluingEdge& e : c.edges) {
    if (e.kind != EdgeKind::Torus) continue;
    const Piece& tube = c.pieces[e.from];
    const Piece& free = c.pieces[e.to];
    Word conj;
    if (!tree.unite(e.from, e.to)) {
      conj = Word::gen(out.add_generator(fresh_name(out.generators, "s" + std::to_string(++stable))));
    }
    const Word theta = shifted(free.boundary_cycles.at(CycleLabel::Theta), offset[e.to]);
    const Word h = shifted(free.boundary_cycles.at(CycleLabel::H), offset[e.to]);
    for (int col = 0; col < 2; ++col) {
      const CycleLabel label = col == 0 ? CycleLabel::Theta1 : CycleLabel::Theta2;
      const Word image = theta.pow(e.matrix.at(0, col)) * h.pow(e.matrix.at(1, col));
      const Word here = shifted(tube.boundary_cycles.at(label), offset[e.from]);
      if (e.filled_disk_cycle == label && !here.empty()) {
        throw std::logic_error("filled cycle of " + tube.name + " is not null-homotopic");
      }
      const Word relator = (conj.inverse() * here * conj).inverse() * image;
      if (!relator.empty()) out.relators.push_back(relator);
    }
  }

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < np; ++i) {
    if (offset[i] != kNone) roots.push_back(tree.find(i));
  }
  if (std::adjacent_find(roots.begin(), roots.end(), std::not_equal_to<>()) != roots.end()) {
    throw DomainError(ErrorCode::DisconnectedComplex, "pieces meet only through balls");
  }

  if (c.label == ComplexLabel::Complement) {
    for (std::size_t i = 0; i < np; ++i) {
      const Piece& p = c.pieces[i];
      if (p.kind == PieceKind::TorusBundle && p.arc == Arc::Em) {
        out.meridian = shifted(p.boundary_cycles.at(CycleLabel::Theta2), offset[i]);
      }
    }
  }
  return out;
}

AbelianInvariants h1(const PieceComplex& c) { return abelianization(vankampen_pi1(c)); }

CertificateReport sphere_certificate(const PieceComplex& c, int kmax) {
  if (kmax > kMaxSymmetricDegree) {
    throw DomainError(ErrorCode::DegreeTooLarge, "kmax " + std::to_string(kmax));
  }
  const GroupPresentation pi1 = simplify(vankampen_pi1(c));
  CertificateReport report;
  report.homology = abelianization(pi1);
  report.h1_trivial = report.homology.trivial();
  report.kmax = kmax;
  report.simplified_generators = pi1.generator_count();
  report.homs_trivial = true;
  for (int k = 1; k <= kmax; ++k) {
    report.hom_counts.push_back(count_homs_symmetric(pi1, k));
    report.homs_trivial = report.homs_trivial && report.hom_counts.back() == 1;
  }
  return report;
}

namespace {

using PieceKey = std::tuple<int, Int, int>;
using EdgeKey = std::tuple<int, int, Int, int, Int, Int, Int, Int>;

std::vector<PieceKey> piece_keys(const PieceComplex& c) {
  std::vector<PieceKey> keys;
  for (const Piece& p : c.pieces) {
    const bool tube = p.kind == PieceKind::TorusBundle;
    keys.emplace_back(static_cast<int>(p.kind), tube ? p.order : 0, tube ? static_cast<int>(p.arc) : -1);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<EdgeKey> edge_keys(const PieceComplex& c) {
  std::vector<EdgeKey> keys;
  for (const GluingEdge& e : c.edges) {
    const Piece& from = c.pieces[e.from];
    const Piece& to = c.pieces[e.to];
    const Piece& tube = e.kind == EdgeKind::Torus ? from : to;
    const Mat2 m = e.kind == EdgeKind::Torus ? canonical_gluing_form(e.matrix) : Mat2::identity();
    const int filled = e.filled_disk_cycle ? static_cast<int>(*e.filled_disk_cycle) : -1;
    keys.emplace_back(static_cast<int>(e.kind), static_cast<int>(tube.arc), tube.order, filled, m.a, m.b, m.c,
                      m.d);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

bool strictly_isomorphic(const PieceComplex& lhs, const PieceComplex& rhs) {
  return piece_keys(lhs) == piece_keys(rhs) && edge_keys(lhs) == edge_keys(rhs);
}

std::string dump(const PieceComplex& c) {
  std::ostringstream os;
  os << "complex " << to_string(c.label);
  if (!c.knot_name.empty()) os << " knot=" << c.knot_name;
  os << " twin=" << to_string(c.twin.first) << '|' << to_string(c.twin.second);
  if (c.twin.terminal) os << " terminal";
  for (Site s : c.twin.history) os << " twist=" << to_string(s);
  os << '\n';

  std::vector<std::size_t> order(c.pieces.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Piece& x = c.pieces[a];
    const Piece& y = c.pieces[b];
    return std::tie(x.kind, x.order, x.arc, x.name) < std::tie(y.kind, y.order, y.arc, y.name);
  });
  for (std::size_t i : order) {
    const Piece& p = c.pieces[i];
    os << "piece " << p.name << ' ' << to_string(p.kind);
    if (p.kind == PieceKind::TorusBundle) os << " order=" << p.order << " arc=" << to_string(p.arc);
    os << '\n';
  }

  std::vector<std::string> lines;
  for (const GluingEdge& e : c.edges) {
    std::string line = "edge " + c.pieces[e.from].name + " -> " + c.pieces[e.to].name;
    if (e.kind == EdgeKind::Torus) {
      line += " torus " + to_string(e.matrix);
      if (e.filled_disk_cycle) line += " filled=" + to_string(*e.filled_disk_cycle);
    } else {
      line += " sphere";
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) os << l << '\n';
  return os.str();
}

}  // namespace bts
