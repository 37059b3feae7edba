#ifndef SEPINV_WZ_HPP
#define SEPINV_WZ_HPP

#include <stdexcept>

#include "sepinv/rational.hpp"

namespace sepinv::wz {

/// Summand of the alternating binomial sum:
///   F(p,k) = (-1)^k C(2p,k) C(4p-k,2p) C(2p+k,k)  for 0 <= k <= 2p, else 0.
/// p = 0 degenerates to the single unit term.
inline Rational summand_F(long p, long k) {
    if (p < 0) throw std::invalid_argument("summand_F: need p >= 0");
    if (k < 0 || k > 2 * p) return Rational(0);
    Integer v = binomial(static_cast<unsigned long>(2 * p), static_cast<unsigned long>(k));
    v *= binomial(static_cast<unsigned long>(4 * p - k), static_cast<unsigned long>(2 * p));
    v *= binomial(static_cast<unsigned long>(2 * p + k), static_cast<unsigned long>(k));
    if (k % 2 != 0) v = -v;
    return Rational(v);
}

/// S(p) = sum_{k=0}^{2p} F(p,k), by direct summation.
inline Rational partial_sum_S(long p) {
    if (p < 0) throw std::invalid_argument("partial_sum_S: need p >= 0");
    Rational acc(0);
    for (long k = 0; k <= 2 * p; ++k) acc += summand_F(p, k);
    return acc;
}

/// Closed form (-1)^p (3p)!/(p!)^3; always an integer.
inline Rational closed_form(long p) {
    if (p < 0) throw std::invalid_argument("closed_form: need p >= 0");
    Rational r(factorial(static_cast<unsigned long>(3 * p)),
               int_pow(factorial(static_cast<unsigned long>(p)), 3));
    r.canonicalize();
    if (p % 2 != 0) r = -r;
    return r;
}

/// Certificate function of the telescoping proof:
///   G(p,k) = (1/2) k^2 Q(p,k) (-4p+k-1) F(p,k) / R(p,k),
/// with Q the explicit quartic in k below and
///   R(p,k) = (2p+1)(-2p-2+k)^2(-2p-1+k)^2.
/// Defined on 0 <= k <= 2p, where R has no roots.
inline Rational certificate_G(long p, long k) {
    if (p < 1) throw std::invalid_argument("certificate_G: need p >= 1");
    if (k < 0 || k > 2 * p) throw std::invalid_argument("certificate_G: k outside [0, 2p]");
    const Integer P = p, K = k;
    const Integer Q = 180 - 184 * K + 1036 * P + 59 * K * K + 2192 * P * P - 790 * P * K
                    - 1116 * P * P * K + 168 * P * K * K + 2024 * P * P * P - 8 * K * K * K
                    + 688 * P * P * P * P + K * K * K * K - 520 * P * P * P * K
                    + 120 * P * P * K * K - 10 * P * K * K * K;
    const Integer R = (2 * P + 1) * (K - 2 * P - 2) * (K - 2 * P - 2) * (K - 2 * P - 1) * (K - 2 * P - 1);
    const Integer num = K * K * Q * (K - 4 * P - 1);
    const Integer den = 2 * R;
    Rational g = summand_F(p, k);
    g *= Rational(num);
    g /= Rational(den);
    return g;
}

/// Linear factors of the two-term recurrence
///   6(3p+2)(3p+1) S(p) + 2(p+1)^2 S(p+1) = 0.
inline Integer recurrence_coeff_lo(long p) { return Integer(6) * (3 * p + 2) * (3 * p + 1); }
inline Integer recurrence_coeff_hi(long p) { return Integer(2) * (p + 1) * (p + 1); }

/// Residual of the certificate relation at one k (zero iff it holds):
///   G(p,k+1) - G(p,k) - 6(3p+2)(3p+1)F(p,k) - 2(p+1)^2 F(p+1,k).
inline Rational pair_residual(long p, long k) {
    if (p < 1) throw std::invalid_argument("pair_residual: need p >= 1");
    if (k < 0 || k > 2 * p - 1) throw std::invalid_argument("pair_residual: k outside [0, 2p-1]");
    Rational r = certificate_G(p, k + 1) - certificate_G(p, k);
    r -= Rational(recurrence_coeff_lo(p)) * summand_F(p, k);
    r -= Rational(recurrence_coeff_hi(p)) * summand_F(p + 1, k);
    return r;
}

/// True iff the certificate relation holds exactly for every 0 <= k <= 2p-1.
inline bool check_wz_pair(long p) {
    for (long k = 0; k <= 2 * p - 1; ++k)
        if (pair_residual(p, k) != 0) return false;
    return true;
}

/// Residual of the recurrence with S computed by direct summation.
inline Rational recurrence_residual(long p) {
    return Rational(recurrence_coeff_lo(p)) * partial_sum_S(p)
         + Rational(recurrence_coeff_hi(p)) * partial_sum_S(p + 1);
}

inline bool check_recurrence(long p) { return recurrence_residual(p) == 0; }

/// Explicit bookkeeping that turns the telescoped certificate relation into
/// the recurrence: summing the relation over 0 <= k <= 2p-1 gives
///   G(p,2p) - G(p,0) = 6(3p+2)(3p+1)(S(p) - F(p,2p))
///                    + 2(p+1)^2 (S(p+1) - F(p+1,2p) - F(p+1,2p+1) - F(p+1,2p+2)),
/// so the recurrence holds iff the boundary combination below vanishes:
///   G(p,2p) - G(p,0) + 6(3p+2)(3p+1)F(p,2p)
///                    + 2(p+1)^2 (F(p+1,2p) + F(p+1,2p+1) + F(p+1,2p+2)).
inline Rational boundary_residual(long p) {
    if (p < 1) throw std::invalid_argument("boundary_residual: need p >= 1");
    Rational r = certificate_G(p, 2 * p) - certificate_G(p, 0);
    r += Rational(recurrence_coeff_lo(p)) * summand_F(p, 2 * p);
    r += Rational(recurrence_coeff_hi(p))
         * (summand_F(p + 1, 2 * p) + summand_F(p + 1, 2 * p + 1) + summand_F(p + 1, 2 * p + 2));
    return r;
}

}  // namespace sepinv::wz

#endif  // SEPINV_WZ_HPP
