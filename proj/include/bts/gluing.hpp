#pragma once

// 2x2 unimodular gluing matrices on torus cycle bases.
//
// Cycles are row vectors multiplied on the right: for a gluing map f from a
// torus with basis (c_theta1, c_theta2) to one with basis (c_theta, c_h),
//
//   (f(c_theta1), f(c_theta2)) = (c_theta, c_h) * M,
//
// so column j of M holds the coordinates of the image of the j-th cycle.
// A composite of maps is represented by the matrix product in the order the
// maps are written.

#include <array>
#include <string>

#include "bts/errors.hpp"
#include "bts/orbitdata.hpp"

namespace bts {

struct Mat2 {
  Int a = 1, b = 0;
  Int c = 0, d = 1;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

  Int det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
  /// Entry (row, col), zero-based.
  Int at(int row, int col) const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);
inline Mat2 operator*(const Mat2& lhs, const Mat2& rhs) { return mat_mul(lhs, rhs); }
/// Exact inverse; throws NotUnimodular when |det| != 1.
Mat2 mat_inv(const Mat2& m);
Mat2 mat_neg(const Mat2& m);

/// Flips both coordinate circles when needed so that the first nonzero entry
/// (the top-left one for every gluing matrix with m != 0) is positive.
Mat2 normalize_sign(const Mat2& m);

/// Representative of M modulo sign flips and re-choices of the Bezout pair,
/// i.e. modulo M -> -M and M -> [[1,0],[k,1]] M. Row two is reduced against
/// row one so that its first entry lies in [0, |a|) (or its second in
/// [0, |b|) when a = 0).
Mat2 canonical_gluing_form(const Mat2& m);

/// "[[a,b],[c,d]]"
std::string to_string(const Mat2& m);

/// Integers with m*alpha + n*beta = eps and 0 <= beta < |m|. For the spun
/// knot (0, 1) the pair is (0, 1).
struct BezoutPair {
  Int alpha;
  Int beta;
  Int m;
  Int n;
  int eps;
};

BezoutPair canonical_bezout(Int m, Int n);
inline BezoutPair canonical_bezout(const BTSIndex& idx) { return canonical_bezout(idx.m(), idx.n()); }

/// The matrix of g (and of e, which has the same formula in (theta1, x, theta2)):
/// [[eps m, -eps n], [beta, alpha]].
Mat2 g_matrix(const BTSIndex& idx);
Mat2 g_matrix(const BTSIndex& idx, const BezoutPair& bezout);

namespace matrices {
/// Gluck twist nu u nu' on (c_theta1, c_theta2): theta1 -> theta1 - theta2.
inline constexpr Mat2 gluck{1, -1, 0, 1};
/// The same twist with the roles of the two disks exchanged: theta2 -> theta2 - theta1.
inline constexpr Mat2 gluck_exchanged{1, 0, -1, 1};
inline constexpr Mat2 u{0, 1, -1, 1};
inline constexpr Mat2 v{0, -1, 1, 1};
inline constexpr Mat2 w{0, 1, -1, 0};
/// Target of mu and the factor relating g-tilde to mu'.
inline constexpr Mat2 unipotent{1, 1, 0, 1};
}  // namespace matrices

/// Every map of the rearrangement showing Sigma(K^{m,n}) = Sigma(K^{m+n,n}).
struct ProofKit {
  BTSIndex index;
  BezoutPair bezout;
  Mat2 g;
  Mat2 e;  // equal to g by construction
  Mat2 gluck;
  Mat2 u, v, w;
  Mat2 lambda;        // e'' o nu, with e'' the identity
  Mat2 lambda_prime;  // e o nu'  = g * gluck
  Mat2 g_tilde;       // lambda' * u
  Mat2 mu;            // u^{-1} * w
  Mat2 mu_prime;      // g * v^{-1}
};

/// Throws SpunKnotHasNoPartner on (0, 1).
ProofKit proof_kit(const BTSIndex& idx);

struct ProofKitCheck {
  bool det_g = false;           // det g = 1
  bool g_tilde = false;         // [[eps(m+n), -eps n], [beta - alpha, alpha]]
  bool mu = false;              // [[1,1],[0,1]]
  bool mu_prime = false;        // [[eps(m+n), eps m], [beta - alpha, beta]]
  bool factorization = false;   // normalize(g~) * [[1,1],[0,1]] = normalize(mu')
  bool v_lambda_w = false;      // v * lambda * w = identity

  bool all() const { return det_g && g_tilde && mu && mu_prime && factorization && v_lambda_w; }
};

/// Compares the computed products in `kit` with their closed forms.
ProofKitCheck check_proof_kit(const ProofKit& kit);

/// Rotation speeds (w1, w2) of the circle action along (theta1, theta2).
struct WeightVector {
  Int w1;
  Int w2;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// (-eps n, eps m): the action on the tube around E_n before any twist.
WeightVector action_weights(const BTSIndex& idx);

/// Substitution theta2 -> theta2 - theta1 applied to speeds: (w1, w2) -> (w1, w2 - w1).
WeightVector transport_weights(const WeightVector& wv);
WeightVector inverse_transport_weights(const WeightVector& wv);

/// Reverses the action if needed so that w2 > 0 (or w1 > 0 when w2 = 0).
WeightVector normalize_weights(const WeightVector& wv);

std::string to_string(const WeightVector& wv);

}  // namespace bts
