#include <algorithm>
#include <array>
#include <numeric>

#include "bts/fpgroup.hpp"

namespace bts {

namespace {

// Multiplication table of the symmetric group of one degree, elements in
// lexicographic order so that index 0 is the identity.
struct SymmetricTable {
  std::size_t order = 0;
  std::vector<std::uint16_t> mul;  // mul[i * order + j] = i o j
  std::vector<std::uint16_t> inv;
};

std::size_t lehmer_rank(const std::vector<int>& perm) {
  std::size_t rank = 0;
  const std::size_t k = perm.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < k; ++j) smaller += perm[j] < perm[i] ? 1 : 0;
    std::size_t fact = 1;
    for (std::size_t f = 2; f < k - i; ++f) fact *= f;
    rank += smaller * fact;
  }
  return rank;
}

SymmetricTable build_table(int k) {
  std::vector<std::vector<int>> elems;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  SymmetricTable t;
  t.order = elems.size();
  t.mul.resize(t.order * t.order);
  t.inv.resize(t.order);
  std::vector<int> prod(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < t.order; ++i) {
    for (std::size_t j = 0; j < t.order; ++j) {
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = elems[i][static_cast<std::size_t>(elems[j][x])];
      const auto r = static_cast<std::uint16_t>(lehmer_rank(prod));
      t.mul[i * t.order + j] = r;
      if (r == 0) t.inv[i] = static_cast<std::uint16_t>(j);
    }
  }
  return t;
}

const SymmetricTable& table(int k) {
  static const std::array<SymmetricTable, kMaxSymmetricDegree + 1> tables = [] {
    std::array<SymmetricTable, kMaxSymmetricDegree + 1> all;
    for (int d = 1; d <= kMaxSymmetricDegree; ++d) all[static_cast<std::size_t>(d)] = build_table(d);
    return all;
  }();
  return tables[static_cast<std::size_t>(k)];
}

class HomCounter {
 public:
  HomCounter(const GroupPresentation& p, const SymmetricTable& t) : t_(t), image_(p.generators.size(), 0) {
    std::vector<Word> rels;
    for (const Word& r : p.relators) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) rels.push_back(std::move(c));
    }
    plan(p.generators.size(), rels);
  }

  std::uint64_t run() {
    std::uint64_t free_factor = 1;
    for (std::size_t i = 0; i < free_count_; ++i) free_factor *= t_.order;
    return free_factor * descend(0);
  }

 private:
  // Orders constrained generators so each relator is checked as soon as its
  // support is assigned; unconstrained generators only contribute a factor.
  void plan(std::size_t ngens, const std::vector<Word>& rels) {
    std::vector<std::vector<std::size_t>> supports;
    std::vector<bool> constrained(ngens, false);
    for (const Word& r : rels) {
      supports.push_back(r.support());
      for (std::size_t g : supports.back()) constrained[g] = true;
    }
    std::vector<bool> assigned(ngens, false);
    std::vector<bool> scheduled(rels.size(), false);
    const auto n_constrained = static_cast<std::size_t>(std::count(constrained.begin(), constrained.end(), true));
    free_count_ = ngens - n_constrained;

    for (std::size_t step = 0; step < n_constrained; ++step) {
      std::size_t best = ngens;
      std::pair<std::size_t, std::size_t> best_score{0, 0};
      for (std::size_t g = 0; g < ngens; ++g) {
        if (!constrained[g] || assigned[g]) continue;
        std::size_t completes = 0, touches = 0;
        for (std::size_t r = 0; r < rels.size(); ++r) {
          if (scheduled[r]) continue;
          const auto& s = supports[r];
          if (std::find(s.begin(), s.end(), g) == s.end()) continue;
          ++touches;
          if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return x == g || assigned[x]; })) ++completes;
        }
        const std::pair<std::size_t, std::size_t> score{completes, touches};
        if (best == ngens || score > best_score) {
          best = g;
          best_score = score;
        }
      }
      assigned[best] = true;
      order_.push_back(best);
      checks_.emplace_back();
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (scheduled[r]) continue;
        const auto& s = supports[r];
        if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return assigned[x]; })) {
          scheduled[r] = true;
          checks_.back().push_back(rels[r]);
        }
      }
    }
  }

  bool holds(const Word& w) const {
    std::uint16_t acc = 0;
    for (const Letter& l : w.letters()) {
      const std::uint16_t x = l.exp > 0 ? image_[l.gen] : t_.inv[image_[l.gen]];
      for (Int i = 0; i < std::abs(l.exp); ++i) acc = t_.mul[acc * t_.order + x];
    }
    return acc == 0;
  }

  std::uint64_t descend(std::size_t depth) {
    if (depth == order_.size()) return 1;
    std::uint64_t total = 0;
    const std::size_t g = order_[depth];
    for (std::size_t e = 0; e < t_.order; ++e) {
      image_[g] = static_cast<std::uint16_t>(e);
      bool ok = true;
      for (const Word& w : checks_[depth]) {
        if (!holds(w)) {
          ok = false;
          break;
        }
      }
      if (ok) total += descend(depth + 1);
    }
    return total;
  }

  const SymmetricTable& t_;
  std::vector<std::uint16_t> image_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Word>> checks_;
  std::size_t free_count_ = 0;
};

}  // namespace

std::uint64_t count_homs_symmetric(const GroupPresentation& p, int k) {
  if (k > kMaxSymmetricDegree) {
    throw DomainError(ErrorCode::DegreeTooLarge, "degree " + std::to_string(k) + " exceeds " +
                                                     std::to_string(kMaxSymmetricDegree));
  }
  if (k < 1) throw DomainError(ErrorCode::DegreeTooLarge, "degree must be at least 1");
  p.validate();
  return HomCounter(p, table(k)).run();
}

}  // namespace bts
