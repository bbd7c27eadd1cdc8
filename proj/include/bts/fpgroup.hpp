#pragma once

// Finitely presented groups with a distinguished meridian and longitude.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bts/errors.hpp"

namespace bts {

struct Letter {
  std::size_t gen;
  Int exp;  // never 0

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A group word as a sequence of generator powers. Products and powers come
/// back freely reduced; the raw constructor keeps letters as given.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word gen(std::size_t g, Int exp = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Number of generator symbols, counting x^3 as three.
  std::size_t length() const;

  Word inverse() const;
  Word pow(Int k) const;
  /// Exponent sum of each generator, sized `ngens`.
  std::vector<Int> exponent_sums(std::size_t ngens) const;
  /// Every generator index used.
  std::vector<std::size_t> support() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
/// Cyclic reduction: also cancels between the two ends.
Word cyclic_reduce(const Word& w);
/// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::optional<Word> meridian;
  std::optional<Word> longitude;

  std::size_t generator_count() const noexcept { return generators.size(); }
  std::size_t add_generator(std::string name);
  /// Index of a generator by name, if present.
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InvalidWord if a word mentions an out-of-range generator.
  void validate() const;
};

/// Tokens: a lowercase-led name is a generator, the same name uppercased is
/// its inverse. An optional "^k" suffix raises to the power k.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);
/// Inverse of parse_word for presentations whose names are lowercase; mixed
/// case names are written as name^-1.
std::string format_word(const Word& w, const std::vector<std::string>& generators);
std::string format_presentation(const GroupPresentation& p);

/// Unbounded integers for matrix reduction: the transforms of a Smith
/// reduction outgrow 64 bits well before the matrices get large.
using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static IntMatrix identity(std::size_t n);

  BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
/// Determinant by fraction-free elimination; square matrices only.
BigInt determinant(const IntMatrix& m);

/// S = U * M * V with U, V unimodular and S diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::vector<BigInt> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Rows are relators, columns generators.
IntMatrix exponent_matrix(const GroupPresentation& p);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Int> torsion;  // each >= 2, each dividing the next

  bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
  bool infinite_cyclic() const noexcept { return rank == 1 && torsion.empty(); }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const GroupPresentation& p);
/// "0", "Z", "Z^2 + Z/2 + Z/6"
std::string to_string(const AbelianInvariants& a);

/// Presentation of the abelian group itself: free and torsion generators, all commuting.
GroupPresentation abelian_presentation(const AbelianInvariants& a);

/// P x <h>: adds h and the relators [g, h] for every existing generator g.
GroupPresentation adjoin_central_generator(const GroupPresentation& p, std::string name = "h");

GroupPresentation add_relators(const GroupPresentation& p, std::span<const Word> words);

inline constexpr int kMaxSymmetricDegree = 6;

/// Number of homomorphisms into the symmetric group of degree k (1 <= k <= 6),
/// by exhaustive backtracking over generator images. Throws DegreeTooLarge.
std::uint64_t count_homs_symmetric(const GroupPresentation& p, int k);

/// Tietze simplification: repeatedly drops a generator occurring exactly
/// once, with exponent +-1, in some relator, substituting it everywhere
/// (meridian and longitude included). Trivial and duplicate relators go too.
GroupPresentation simplify(const GroupPresentation& p);

/// Eliminates generator `gen` using relator `relator`, in which it must occur
/// exactly once with exponent +-1.
GroupPresentation eliminate_generator(const GroupPresentation& p, std::size_t gen, std::size_t relator);

}  // namespace bts
