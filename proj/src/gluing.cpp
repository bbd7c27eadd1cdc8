#include "bts/gluing.hpp"

#include <cstdlib>

namespace bts {

Int Mat2::at(int row, int col) const {
  if (row == 0) return col == 0 ? a : b;
  return col == 0 ? c : d;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

Mat2 mat_inv(const Mat2& m) {
  const Int det = m.det();
  if (det != 1 && det != -1) throw DomainError(ErrorCode::NotUnimodular, to_string(m));
  // det is its own inverse.
  return {det * m.d, -det * m.b, -det * m.c, det * m.a};
}

Mat2 mat_neg(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Mat2 normalize_sign(const Mat2& m) {
  for (Int x : {m.a, m.b, m.c, m.d}) {
    if (x > 0) return m;
    if (x < 0) return mat_neg(m);
  }
  return m;
}

namespace {

Int floor_div(Int p, Int q) {
  Int r = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
  return r;
}

}  // namespace

Mat2 canonical_gluing_form(const Mat2& m) {
  Mat2 s = normalize_sign(m);
  // Row one is fixed by the row operation; pick the pivot from it.
  if (s.a != 0) {
    const Int k = floor_div(s.c, std::abs(s.a)) * (s.a > 0 ? 1 : -1);
    s.c = checked_sub(s.c, checked_mul(k, s.a));
    s.d = checked_sub(s.d, checked_mul(k, s.b));
  } else if (s.b != 0) {
    const Int k = floor_div(s.d, std::abs(s.b)) * (s.b > 0 ? 1 : -1);
    s.c = checked_sub(s.c, checked_mul(k, s.a));
    s.d = checked_sub(s.d, checked_mul(k, s.b));
  }
  return s;
}

std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

BezoutPair canonical_bezout(Int m, Int n) {
  const BTSIndex idx = BTSIndex::make(m, n);
  const int eps = eps_of(idx.m());
  if (idx.is_spun()) return {0, 1, 0, 1, eps};

  // Solve n * beta = eps (mod |m|) by the extended Euclidean algorithm on (n, |m|).
  const Int mod = std::abs(m);
  Int r0 = n % mod, r1 = mod;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  // r0 = gcd = 1 and s0 * n = 1 (mod |m|).
  Int beta = ((s0 * eps) % mod + mod) % mod;
  if (mod == 1) beta = 0;
  const Int numer = checked_sub(eps, checked_mul(n, beta));
  return {numer / m, beta, m, n, eps};
}

Mat2 g_matrix(const BTSIndex& idx, const BezoutPair& bz) {
  const Int e = bz.eps;
  return {e * idx.m(), -e * idx.n(), bz.beta, bz.alpha};
}

Mat2 g_matrix(const BTSIndex& idx) { return g_matrix(idx, canonical_bezout(idx)); }

ProofKit proof_kit(const BTSIndex& idx) {
  if (idx.is_spun()) throw DomainError(ErrorCode::SpunKnotHasNoPartner, "proof kit needs m != 0");
  ProofKit kit{idx, canonical_bezout(idx), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  kit.g = g_matrix(idx, kit.bezout);
  kit.e = kit.g;
  kit.gluck = matrices::gluck;
  kit.u = matrices::u;
  kit.v = matrices::v;
  kit.w = matrices::w;
  kit.lambda = matrices::gluck;
  kit.lambda_prime = kit.g * kit.gluck;
  kit.g_tilde = Mat2::identity() * kit.lambda_prime * kit.u;
  kit.mu = mat_inv(kit.u) * Mat2::identity() * kit.w;
  kit.mu_prime = Mat2::identity() * kit.g * mat_inv(kit.v);
  return kit;
}

ProofKitCheck check_proof_kit(const ProofKit& kit) {
  const Int m = kit.index.m();
  const Int n = kit.index.n();
  const Int e = kit.bezout.eps;
  const Int al = kit.bezout.alpha;
  const Int be = kit.bezout.beta;

  ProofKitCheck c;
  c.det_g = kit.g.det() == 1;
  c.g_tilde = kit.g_tilde == Mat2{e * (m + n), -e * n, be - al, al};
  c.mu = kit.mu == matrices::unipotent;
  c.mu_prime = kit.mu_prime == Mat2{e * (m + n), e * m, be - al, be};
  c.factorization = normalize_sign(kit.g_tilde) * matrices::unipotent == normalize_sign(kit.mu_prime);
  c.v_lambda_w = kit.v * kit.lambda * kit.w == Mat2::identity();
  return c;
}

WeightVector action_weights(const BTSIndex& idx) {
  const Int e = eps_of(idx.m());
  return {-e * idx.n(), e * idx.m()};
}

WeightVector transport_weights(const WeightVector& wv) { return {wv.w1, checked_sub(wv.w2, wv.w1)}; }

WeightVector inverse_transport_weights(const WeightVector& wv) { return {wv.w1, checked_add(wv.w2, wv.w1)}; }

WeightVector normalize_weights(const WeightVector& wv) {
  if (wv.w2 < 0 || (wv.w2 == 0 && wv.w1 < 0)) return {-wv.w1, -wv.w2};
  return wv;
}

std::string to_string(const WeightVector& wv) {
  return "(" + std::to_string(wv.w1) + "," + std::to_string(wv.w2) + ")";
}

}  // namespace bts
