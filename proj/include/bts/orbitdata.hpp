#pragma once

// Index calculus for branched twist spins K^{m,n}: sign conventions, twins,
// the Gluck rewrite rules and the Euclidean reduction to twist spins K^{k,1}.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bts/errors.hpp"

namespace bts {

/// Euclidean moves on an index.
enum class Move { AddN, SubN, Swap };

/// A coprime pair (m, n) with n >= 1 naming K^{m,n}. The only admissible pair
/// with m = 0 is the spun knot (0, 1).
class BTSIndex {
 public:
  /// Validating constructor; throws DomainError on NonPositiveN, NotCoprime, ZeroMNotSpun.
  static BTSIndex make(Int m, Int n);

  Int m() const noexcept { return m_; }
  Int n() const noexcept { return n_; }
  bool is_spun() const noexcept { return m_ == 0; }

  friend auto operator<=>(const BTSIndex&, const BTSIndex&) = default;
  friend BTSIndex apply_move(const BTSIndex& idx, Move move);

 private:
  BTSIndex(Int m, Int n) : m_(m), n_(n) {}
  Int m_;
  Int n_;
};

inline BTSIndex validate_index(Int m, Int n) { return BTSIndex::make(m, n); }

std::string to_string(const BTSIndex& idx);

/// eps(m): +1 for m >= 0, -1 for m < 0. The m = 0 value is a convention.
int eps_of(Int m) noexcept;

/// The three signs attached to an index. eps_prime is 0 when m + n = 0,
/// where the rewrite rules degenerate to the spun knot.
struct SignConvention {
  int eps;
  int eps_prime;
  int eps_dprime;
};

SignConvention signs(const BTSIndex& idx) noexcept;

/// (m, n) -> (eps*n, eps*m). Throws SpunKnotHasNoPartner on (0, 1).
BTSIndex twin_partner(const BTSIndex& idx);

enum class Site { First, Second };

std::string to_string(Site site);

/// A twin (K, K') of branched twist spins meeting in the two fixed points,
/// with the sequence of Gluck twists that produced it.
///
/// Once a twist hits m + n = 0 the first knot becomes the spun knot K^{0,1},
/// which has no twin; the state is then terminal and both slots hold (0, 1).
struct TwinState {
  BTSIndex first;
  BTSIndex second;
  std::vector<Site> history;
  bool terminal = false;

  static TwinState of(const BTSIndex& knot);
  bool consistent() const;
  const BTSIndex& at(Site site) const { return site == Site::First ? first : second; }
};

/// Gluck twist of S^4 along the member at `site`. With (m, n) that member:
/// it becomes (eps' m, eps'(m+n)) and the other member becomes (eps(m+n), eps m).
TwinState gluck_rewrite(const TwinState& state, Site site);

/// Returns (idx, (eps'' m, eps''(2m+n))) after confirming it agrees with two
/// successive twists along the first member. Throws DegenerateTwist when an
/// intermediate twist collapses to the spun knot ((-1,1) and (-1,2)).
std::pair<BTSIndex, BTSIndex> double_gluck_check(const BTSIndex& idx);

/// Orbit data {(S^3, K), m, n}.
struct OrbitData {
  std::string knot_label;
  BTSIndex index;

  friend bool operator==(const OrbitData&, const OrbitData&) = default;
};

/// {K, m, n} -> {K, m+n, n}: the orbit data after a twist along K^{eps n, eps m}.
///
/// The branch whose order changes is the one carrying the twisted knot's
/// exceptional orbits (E_m under the original labels). The picture of the
/// orbit space labels the replaced arc E_n*; we follow the index rewrite.
OrbitData orbit_rewrite(const OrbitData& data);


std::string to_string(Move move);

/// (m, n) -> (m+n, n), (m-n, n) or (eps n, eps m).
BTSIndex apply_move(const BTSIndex& idx, Move move);

struct ReductionStep {
  Move move;
  BTSIndex result;
};

struct ReductionTrace {
  BTSIndex start;
  std::vector<ReductionStep> steps;
  BTSIndex terminal;
};

enum class ReductionStrategy {
  NonNegativeResidue,    // bring m into [0, n) before each swap
  LeastAbsoluteResidue,  // bring m into (-n/2, n/2] before each swap
};

ReductionTrace reduce_to_base(const BTSIndex& idx,
                              ReductionStrategy strategy = ReductionStrategy::NonNegativeResidue);

enum class Verdict { InequivalentHomeomorphicComplements, Indeterminate };

struct ClassificationReport {
  BTSIndex knot;
  std::optional<BTSIndex> twisted;  // (eps' m, eps'(m+n)) when it exists
  Verdict verdict;
  std::string reason;
};

/// Odd m plus a caller-asserted nontrivial K^{m,n} gives an inequivalent pair
/// with homeomorphic complements; anything else is reported indeterminate.
ClassificationReport classify(const BTSIndex& idx, bool nontrivial);

}  // namespace bts
