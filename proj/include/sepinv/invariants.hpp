#ifndef SEPINV_INVARIANTS_HPP
#define SEPINV_INVARIANTS_HPP

#include <stdexcept>
#include <vector>

#include "sepinv/derivation.hpp"

namespace sepinv {

/// f_m = sum_{k=0}^{m-1} (-1)^k x_k x_{2m-k} + (1/2)(-1)^m x_m^2, f_0 = x_0.
/// Annihilated by the Weitzenboeck derivation.
inline Polynomial build_f(int n, int m) {
    if (n < 1) throw std::invalid_argument("build_f: need n >= 1");
    if (m < 0 || 2 * m > n) throw std::invalid_argument("build_f: need 0 <= m <= n/2");
    const RingDescriptor ring{n, false};
    if (m == 0) return Polynomial::variable(ring, 0);
    std::vector<Term> terms;
    for (int k = 0; k < m; ++k) {
        Monomial mono(static_cast<std::size_t>(ring.var_count()));
        ++mono.exps[static_cast<std::size_t>(k)];
        ++mono.exps[static_cast<std::size_t>(2 * m - k)];
        terms.push_back({std::move(mono), Rational(k % 2 == 0 ? 1 : -1)});
    }
    Monomial sq(static_cast<std::size_t>(ring.var_count()));
    sq.exps[static_cast<std::size_t>(m)] = 2;
    terms.push_back({std::move(sq), make_rational(m % 2 == 0 ? 1 : -1, 2)});
    return Polynomial::from_terms(ring, std::move(terms));
}

/// s_m = sum_{k=0}^{m} (-1)^k (2m+1-2k)/2 x_k x_{2m+1-k}, s_0 = x_1.
/// Local slices: D s_m = f_m.
inline Polynomial build_s(int n, int m) {
    if (n < 1) throw std::invalid_argument("build_s: need n >= 1");
    if (m < 0 || 2 * m + 1 > n) throw std::invalid_argument("build_s: need 0 <= m <= (n-1)/2");
    const RingDescriptor ring{n, false};
    if (m == 0) return Polynomial::variable(ring, 1);
    std::vector<Term> terms;
    for (int k = 0; k <= m; ++k) {
        Monomial mono(static_cast<std::size_t>(ring.var_count()));
        ++mono.exps[static_cast<std::size_t>(k)];
        ++mono.exps[static_cast<std::size_t>(2 * m + 1 - k)];
        terms.push_back({std::move(mono), make_rational((k % 2 == 0 ? 1 : -1) * (2 * m + 1 - 2 * k), 2)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

/// Slice invariant: the flow of `a` evaluated at formal time -s/Ds with
/// denominators cleared by (Ds)^{nu(a)}:
///   eps_s(a) = sum_{k=0}^{nu(a)} ((-1)^k / k!) (D^k a) s^k (Ds)^{nu(a)-k}.
/// Requires s to be a local slice (Ds a nonzero invariant).
inline Polynomial epsilon(int n, const Polynomial& s, const Polynomial& a) {
    detail::require_plain_ring(n, s, "epsilon");
    detail::require_plain_ring(n, a, "epsilon");
    const Polynomial ds = derive(DerivationKind::Weitzenboeck, n, s);
    if (ds.is_zero() || !derive(DerivationKind::Weitzenboeck, n, ds).is_zero())
        throw std::invalid_argument("epsilon: s is not a local slice");
    if (a.is_zero()) return Polynomial::zero(a.ring());
    const long nu = *nilpotency_index(DerivationKind::Weitzenboeck, n, a);

    std::vector<Polynomial> s_pow{Polynomial::constant(s.ring(), Rational(1))};
    std::vector<Polynomial> ds_pow{Polynomial::constant(s.ring(), Rational(1))};
    for (long k = 1; k <= nu; ++k) {
        s_pow.push_back(s_pow.back() * s);
        ds_pow.push_back(ds_pow.back() * ds);
    }

    Polynomial acc = Polynomial::zero(a.ring());
    Polynomial da = a;  // D^k a
    Rational scale(1);  // (-1)^k / k!
    for (long k = 0; k <= nu; ++k) {
        if (k > 0) {
            da = derive(DerivationKind::Weitzenboeck, n, da);
            scale *= make_rational(-1, k);
        }
        acc = acc + da * s_pow[static_cast<std::size_t>(k)] * ds_pow[static_cast<std::size_t>(nu - k)] * scale;
    }
    return acc;
}

}  // namespace sepinv

#endif  // SEPINV_INVARIANTS_HPP
