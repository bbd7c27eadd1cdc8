#include <limits>
#include "bts/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace bts {

// ---- Word ------------------------------------------------------------------

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.exp == 0) throw DomainError(ErrorCode::InvalidWord, "zero exponent");
  }
}

Word Word::gen(std::size_t g, Int exp) {
  if (exp == 0) return {};
  return Word({{g, exp}});
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Letter& l : letters_) n += static_cast<std::size_t>(std::abs(l.exp));
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return Word(std::move(out));
}

Word Word::pow(Int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (Int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::vector<Int> Word::exponent_sums(std::size_t ngens) const {
  std::vector<Int> sums(ngens, 0);
  for (const Letter& l : letters_) {
    if (l.gen >= ngens) throw DomainError(ErrorCode::InvalidWord, "generator index out of range");
    sums[l.gen] = checked_add(sums[l.gen], l.exp);
  }
  return sums;
}

std::vector<std::size_t> Word::support() const {
  std::vector<std::size_t> gens;
  for (const Letter& l : letters_) gens.push_back(l.gen);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

namespace {

// Pushes a letter onto a reduced stack, merging with the top.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().gen == l.gen) {
    stack.back().exp = checked_add(stack.back().exp, l.exp);
    if (stack.back().exp == 0) stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Letter> out = lhs.letters_;
  for (const Letter& l : rhs.letters_) push_reduced(out, l);
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) push_reduced(out, l);
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> v = free_reduce(w).letters();
  while (v.size() >= 2 && v.front().gen == v.back().gen) {
    const Int e = checked_add(v.front().exp, v.back().exp);
    v.pop_back();
    if (e == 0) {
      v.erase(v.begin());
    } else {
      v.front().exp = e;
    }
  }
  return Word(std::move(v));
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

// ---- GroupPresentation -------------------------------------------------------

std::size_t GroupPresentation::add_generator(std::string name) {
  generators.push_back(std::move(name));
  return generators.size() - 1;
}

std::optional<std::size_t> GroupPresentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return i;
  }
  return std::nullopt;
}

void GroupPresentation::validate() const {
  auto check = [&](const Word& w) {
    for (const Letter& l : w.letters()) {
      if (l.gen >= generators.size()) throw DomainError(ErrorCode::InvalidWord, "generator index out of range");
    }
  };
  for (const Word& r : relators) check(r);
  if (meridian) check(*meridian);
  if (longitude) check(*longitude);
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_lower_name(std::string_view s) { return lower(s) == s && upper(s) != s; }

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word out;
  while (in >> token) {
    Int power = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      const std::string digits = token.substr(caret + 1);
      char* end = nullptr;
      power = std::strtoll(digits.c_str(), &end, 10);
      if (digits.empty() || *end != '\0' || power == 0) {
        throw DomainError(ErrorCode::InvalidWord, "bad exponent in '" + token + "'");
      }
      token.resize(caret);
    }
    std::optional<Letter> letter;
    for (std::size_t g = 0; g < generators.size() && !letter; ++g) {
      if (token == generators[g]) {
        letter = Letter{g, 1};
      } else if (is_lower_name(generators[g]) && token == upper(generators[g])) {
        letter = Letter{g, -1};
      }
    }
    if (!letter) throw DomainError(ErrorCode::InvalidWord, "undeclared generator '" + token + "'");
    out = out * Word::gen(letter->gen, letter->exp * power);
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    const std::string& name = generators.at(l.gen);
    if (l.exp > 0) {
      out += name;
      if (l.exp != 1) out += "^" + std::to_string(l.exp);
    } else if (is_lower_name(name)) {
      out += upper(name);
      if (l.exp != -1) out += "^" + std::to_string(-l.exp);
    } else {
      out += name + "^" + std::to_string(l.exp);
    }
  }
  return out;
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const std::string& g : p.generators) os << ' ' << g;
  os << "\nrelators: " << p.relators.size() << '\n';
  for (const Word& r : p.relators) os << "  " << format_word(r, p.generators) << '\n';
  if (p.meridian) os << "meridian: " << format_word(*p.meridian, p.generators) << '\n';
  if (p.longitude) os << "longitude: " << format_word(*p.longitude, p.generators) << '\n';
  return os.str();
}

// ---- Integer matrices ----------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const BigInt& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  // Bareiss fraction-free elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const std::vector<Int> sums = p.relators[r].exponent_sums(p.generators.size());
    for (std::size_t g = 0; g < sums.size(); ++g) m.at(r, g) = sums[g];
  }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const IntMatrix m = exponent_matrix(p);
  const std::vector<BigInt> diag = smith_normal_form(m).diagonal();
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const BigInt& d : diag) {
    if (d != 0) ++nonzero;
    if (d > std::numeric_limits<Int>::max()) throw DomainError(ErrorCode::Overflow, "torsion coefficient");
    if (d > 1) out.torsion.push_back(static_cast<Int>(d));
  }
  out.rank = p.generators.size() - nonzero;
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  if (a.trivial()) return "0";
  std::string out;
  if (a.rank == 1) out = "Z";
  if (a.rank > 1) out = "Z^" + std::to_string(a.rank);
  for (Int t : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out;
}

GroupPresentation abelian_presentation(const AbelianInvariants& a) {
  GroupPresentation p;
  for (std::size_t i = 0; i < a.rank; ++i) p.add_generator("z" + std::to_string(i + 1));
  for (std::size_t i = 0; i < a.torsion.size(); ++i) {
    const std::size_t g = p.add_generator("c" + std::to_string(i + 1));
    p.relators.push_back(Word::gen(g, a.torsion[i]));
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < p.generators.size(); ++j) {
      p.relators.push_back(commutator(Word::gen(i), Word::gen(j)));
    }
  }
  return p;
}

GroupPresentation adjoin_central_generator(const GroupPresentation& p, std::string name) {
  GroupPresentation out = p;
  const std::size_t h = out.add_generator(std::move(name));
  for (std::size_t g = 0; g < h; ++g) out.relators.push_back(commutator(Word::gen(g), Word::gen(h)));
  return out;
}

GroupPresentation add_relators(const GroupPresentation& p, std::span<const Word> words) {
  GroupPresentation out = p;
  out.relators.insert(out.relators.end(), words.begin(), words.end());
  out.validate();
  return out;
}

// ---- Tietze simplification -------------------------------------------------------

namespace {

Word substitute(const Word& w, std::size_t gen, const Word& value) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      out = out * value.pow(l.exp);
    } else {
      out = out * Word::gen(l.gen, l.exp);
    }
  }
  return out;
}

Word drop_index(const Word& w, std::size_t gen) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (l.gen > gen) --l.gen;
    out.push_back(l);
  }
  return Word(std::move(out));
}

// Occurrence count of `gen` in `w` (letters, not exponent sum).
std::size_t occurrences(const Word& w, std::size_t gen) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(), [&](const Letter& l) { return l.gen == gen; }));
}

void tidy_relators(GroupPresentation& p) {
  std::vector<Word> kept;
  for (const Word& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
    if (std::find(kept.begin(), kept.end(), c.inverse()) != kept.end()) continue;
    kept.push_back(std::move(c));
  }
  p.relators = std::move(kept);
}

}  // namespace

GroupPresentation eliminate_generator(const GroupPresentation& p, std::size_t gen, std::size_t relator) {
  const Word rel = cyclic_reduce(p.relators.at(relator));
  const auto& ls = rel.letters();
  const auto it = std::find_if(ls.begin(), ls.end(), [&](const Letter& l) { return l.gen == gen; });
  if (it == ls.end() || occurrences(rel, gen) != 1 || std::abs(it->exp) != 1) {
    throw DomainError(ErrorCode::InvalidWord, "generator does not occur exactly once with exponent +-1");
  }
  // rel = A g^e B, conjugate to B A g^e, hence g^e = (B A)^-1.
  const Word before(std::vector<Letter>(ls.begin(), it));
  const Word after(std::vector<Letter>(it + 1, ls.end()));
  const Word rest = after * before;
  const Word value = it->exp == 1 ? rest.inverse() : rest;

  GroupPresentation out;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    if (g != gen) out.generators.push_back(p.generators[g]);
  }
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r == relator) continue;
    out.relators.push_back(drop_index(substitute(p.relators[r], gen, value), gen));
  }
  if (p.meridian) out.meridian = drop_index(substitute(*p.meridian, gen, value), gen);
  if (p.longitude) out.longitude = drop_index(substitute(*p.longitude, gen, value), gen);
  return out;
}

GroupPresentation simplify(const GroupPresentation& p) {
  GroupPresentation cur = p;
  tidy_relators(cur);
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;  // (gen, relator)
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < cur.relators.size(); ++r) {
      const Word& rel = cur.relators[r];
      const std::size_t len = rel.length();
      if (pick && len >= best_len) continue;
      // Prefer the most recently added generator: knot generators stay visible.
      for (std::size_t g = cur.generators.size(); g-- > 0;) {
        if (occurrences(rel, g) != 1) continue;
        const auto l = std::find_if(rel.letters().begin(), rel.letters().end(),
                                    [&](const Letter& x) { return x.gen == g; });
        if (std::abs(l->exp) == 1) {
          pick = {g, r};
          best_len = len;
          break;
        }
      }
    }
    if (!pick) break;
    cur = eliminate_generator(cur, pick->first, pick->second);
    tidy_relators(cur);
  }
  return cur;
}

}  // namespace bts
