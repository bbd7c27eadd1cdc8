#include "bts/orbitdata.hpp"

#include <numeric>

namespace bts {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveN: return "NonPositiveN";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroMNotSpun: return "ZeroMNotSpun";
    case ErrorCode::SpunKnotHasNoPartner: return "SpunKnotHasNoPartner";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::DegenerateTwist: return "DegenerateTwist";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::MissingPeripheral: return "MissingPeripheral";
    case ErrorCode::WrongLabel: return "WrongLabel";
    case ErrorCode::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

BTSIndex BTSIndex::make(Int m, Int n) {
  if (n <= 0) throw DomainError(ErrorCode::NonPositiveN, "n = " + std::to_string(n));
  if (m == 0) {
    if (n != 1) throw DomainError(ErrorCode::ZeroMNotSpun, "(0," + std::to_string(n) + ")");
    return BTSIndex(0, 1);
  }
  if (std::gcd(m, n) != 1) {
    throw DomainError(ErrorCode::NotCoprime, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  return BTSIndex(m, n);
}

std::string to_string(const BTSIndex& idx) {
  return "(" + std::to_string(idx.m()) + "," + std::to_string(idx.n()) + ")";
}

int eps_of(Int m) noexcept { return m >= 0 ? 1 : -1; }

SignConvention signs(const BTSIndex& idx) noexcept {
  const Int s = idx.m() + idx.n();
  const Int d = 2 * idx.m() + idx.n();
  return {eps_of(idx.m()), s > 0 ? 1 : (s < 0 ? -1 : 0), d >= 0 ? 1 : -1};
}

BTSIndex twin_partner(const BTSIndex& idx) {
  if (idx.is_spun()) throw DomainError(ErrorCode::SpunKnotHasNoPartner, "the spun knot (0,1)");
  const Int e = eps_of(idx.m());
  return BTSIndex::make(e * idx.n(), e * idx.m());
}

std::string to_string(Site site) { return site == Site::First ? "first" : "second"; }

TwinState TwinState::of(const BTSIndex& knot) { return {knot, twin_partner(knot), {}, false}; }

bool TwinState::consistent() const {
  if (terminal) return first.is_spun() && second.is_spun();
  if (first.is_spun()) return false;
  return twin_partner(first) == second;
}

TwinState gluck_rewrite(const TwinState& state, Site site) {
  if (state.terminal) {
    throw DomainError(ErrorCode::SpunKnotHasNoPartner, "twin has collapsed to the spun knot");
  }
  if (!state.consistent()) {
    throw DomainError(ErrorCode::InvalidState,
                      to_string(state.second) + " is not the partner of " + to_string(state.first));
  }
  const BTSIndex& twisted = state.at(site);
  const Int m = twisted.m();
  const Int n = twisted.n();
  const SignConvention sg = signs(twisted);

  TwinState out = state;
  out.history.push_back(site);
  if (sg.eps_prime == 0) {
    // m + n = 0 forces (m, n) = (-1, 1); the surviving knot is K^{0,1}.
    out.first = out.second = BTSIndex::make(0, 1);
    out.terminal = true;
    return out;
  }
  const BTSIndex twisted_image = BTSIndex::make(sg.eps_prime * m, sg.eps_prime * (m + n));
  const BTSIndex other_image = BTSIndex::make(sg.eps * (m + n), sg.eps * m);
  if (site == Site::First) {
    out.first = twisted_image;
    out.second = other_image;
  } else {
    out.first = other_image;
    out.second = twisted_image;
  }
  if (!out.consistent()) {
    throw DomainError(ErrorCode::InvalidState, "partner relation lost after twist");
  }
  return out;
}

std::pair<BTSIndex, BTSIndex> double_gluck_check(const BTSIndex& idx) {
  const SignConvention sg = signs(idx);
  const Int m = idx.m();
  if (idx.is_spun()) throw DomainError(ErrorCode::SpunKnotHasNoPartner, "the spun knot (0,1)");

  TwinState state = gluck_rewrite(TwinState::of(idx), Site::First);
  if (state.terminal) throw DomainError(ErrorCode::DegenerateTwist, "first twist of " + to_string(idx));
  state = gluck_rewrite(state, Site::First);
  if (state.terminal) throw DomainError(ErrorCode::DegenerateTwist, "second twist of " + to_string(idx));
  const BTSIndex target = BTSIndex::make(sg.eps_dprime * m, sg.eps_dprime * (2 * m + idx.n()));
  if (state.first != target) {
    throw DomainError(ErrorCode::InvalidState, "double twist of " + to_string(idx) + " gives " +
                                                   to_string(state.first) + ", expected " + to_string(target));
  }
  return {idx, target};
}

OrbitData orbit_rewrite(const OrbitData& data) {
  if (data.index.is_spun()) throw DomainError(ErrorCode::SpunKnotHasNoPartner, "orbit data of the spun knot");
  return {data.knot_label, BTSIndex::make(data.index.m() + data.index.n(), data.index.n())};
}

std::string to_string(Move move) {
  switch (move) {
    case Move::AddN: return "AddN";
    case Move::SubN: return "SubN";
    case Move::Swap: return "Swap";
  }
  return "?";
}

BTSIndex apply_move(const BTSIndex& idx, Move move) {
  switch (move) {
    // shifting m by n keeps the pair coprime
    case Move::AddN: return BTSIndex(checked_add(idx.m(), idx.n()), idx.n());
    case Move::SubN: return BTSIndex(checked_sub(idx.m(), idx.n()), idx.n());
    case Move::Swap: return twin_partner(idx);
  }
  throw DomainError(ErrorCode::InvalidState, "unknown move");
}

namespace {

// Target residue of m modulo n for the chosen strategy.
Int target_residue(Int m, Int n, ReductionStrategy strategy) {
  Int r = ((m % n) + n) % n;
  if (strategy == ReductionStrategy::LeastAbsoluteResidue && 2 * r > n) r -= n;
  return r;
}

}  // namespace

ReductionTrace reduce_to_base(const BTSIndex& idx, ReductionStrategy strategy) {
  ReductionTrace trace{idx, {}, idx};
  std::size_t total = 0;
  for (Int m = idx.m(), n = idx.n(); n > 1;) {
    const Int r = target_residue(m, n, strategy);
    total += static_cast<std::size_t>((m > r ? m - r : r - m) / n) + 1;
    m = r < 0 ? -n : n;
    n = r < 0 ? -r : r;
  }
  trace.steps.reserve(total);

  BTSIndex cur = idx;
  while (cur.n() != 1) {
    const Int r = target_residue(cur.m(), cur.n(), strategy);
    const Move shift = cur.m() > r ? Move::SubN : Move::AddN;
    while (cur.m() != r) {
      cur = apply_move(cur, shift);
      trace.steps.push_back({shift, cur});
    }
    // n > 1 and coprimality keep r away from 0, so the swap is defined and n drops to |r| < n.
    cur = apply_move(cur, Move::Swap);
    trace.steps.push_back({Move::Swap, cur});
  }
  trace.terminal = cur;
  return trace;
}

ClassificationReport classify(const BTSIndex& idx, bool nontrivial) {
  ClassificationReport report{idx, std::nullopt, Verdict::Indeterminate, {}};
  if (idx.is_spun()) {
    report.reason = "spun knot";
    return report;
  }
  const SignConvention sg = signs(idx);
  if (sg.eps_prime != 0) {
    report.twisted = BTSIndex::make(sg.eps_prime * idx.m(), sg.eps_prime * (idx.m() + idx.n()));
  }
  if (idx.m() % 2 == 0) {
    report.reason = "m is even";
  } else if (!nontrivial) {
    report.reason = "K^{m,n} not asserted nontrivial";
  } else if (!report.twisted) {
    report.reason = "m + n = 0";
  } else {
    report.verdict = Verdict::InequivalentHomeomorphicComplements;
    report.reason = "m odd and K^{m,n} nontrivial";
  }
  return report;
}

}  // namespace bts
