#ifndef SEPINV_TRANSVECTANT_HPP
#define SEPINV_TRANSVECTANT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "sepinv/invariants.hpp"

namespace sepinv {

/// Total degree in (y_0, y_1) of a y-homogeneous extended-ring polynomial
/// (its "order"). Errors out when the polynomial is not y-homogeneous.
inline long covariant_order(const Polynomial& F) {
    if (!F.ring().extended) throw std::invalid_argument("covariant_order: not an extended-ring polynomial");
    if (F.is_zero()) throw std::invalid_argument("covariant_order: zero polynomial");
    const std::size_t y0 = static_cast<std::size_t>(F.ring().n + 1);
    std::optional<long> ord;
    for (const auto& t : F.terms()) {
        const long d = t.mono.exps[y0] + t.mono.exps[y0 + 1];
        if (!ord) ord = d;
        else if (*ord != d) throw std::invalid_argument("covariant_order: not homogeneous in y_0, y_1");
    }
    return *ord;
}

/// Roberts' map: substitute y_0 := 0, y_1 := 1, landing in R_n.
inline Polynomial roberts_forward(int n, const Polynomial& F) {
    if (!F.ring().extended || F.ring().n != n)
        throw std::invalid_argument("roberts_forward: expected extended ring over R_n");
    const std::size_t y0 = static_cast<std::size_t>(n + 1);
    const RingDescriptor target{n, false};
    std::vector<Term> out;
    for (const auto& t : F.terms()) {
        if (t.mono.exps[y0] != 0) continue;
        Monomial m(static_cast<std::size_t>(target.var_count()));
        for (int i = 0; i <= n; ++i) m.exps[static_cast<std::size_t>(i)] = t.mono.exps[static_cast<std::size_t>(i)];
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

namespace detail {
inline void require_isobaric_invariant(int n, const Polynomial& f, const char* op, long& weight_out) {
    require_plain_ring(n, f, op);
    if (f.is_zero()) throw std::invalid_argument(std::string(op) + ": zero polynomial");
    if (!derive(DerivationKind::Weitzenboeck, n, f).is_zero())
        throw std::invalid_argument(std::string(op) + ": input is not annihilated by the derivation");
    const auto w = isobaric_weight(n, f);
    if (!w) throw std::invalid_argument(std::string(op) + ": input is not isobaric");
    weight_out = *w;
}

inline Polynomial embed_extended(const Polynomial& f, long y0_exp, long y1_exp) {
    const RingDescriptor ring{f.ring().n, true};
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Monomial m(static_cast<std::size_t>(ring.var_count()));
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i) m.exps[i] = t.mono.exps[i];
        m.exps[static_cast<std::size_t>(ring.n + 1)] = static_cast<std::uint16_t>(y0_exp);
        m.exps[static_cast<std::size_t>(ring.n + 2)] = static_cast<std::uint16_t>(y1_exp);
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(out));
}
}  // namespace detail

/// Inverse of Roberts' map for an isobaric invariant f of weight ord(f):
///   sum_{i=0}^{ord f} (-1)^i (Delta^i f / i!) y_0^i y_1^{ord f - i}.
inline Polynomial roberts_inverse(int n, const Polynomial& f) {
    long ord = 0;
    detail::require_isobaric_invariant(n, f, "roberts_inverse", ord);
    if (ord < 0) throw std::invalid_argument("roberts_inverse: negative weight");
    Polynomial acc = Polynomial::zero(RingDescriptor{n, true});
    Polynomial df = f;  // Delta^i f
    Rational scale(1);  // (-1)^i / i!
    for (long i = 0; i <= ord; ++i) {
        if (i > 0) {
            df = derive(DerivationKind::Delta, n, df);
            scale *= make_rational(-1, i);
        }
        acc = acc + detail::embed_extended(df * scale, i, ord - i);
    }
    // For an invariant the weight equals the Delta-nilpotency index, so the
    // sum above captures every derivative.
    if (!derive(DerivationKind::Delta, n, df).is_zero())
        throw std::logic_error("roberts_inverse: Delta^{ord+1} f != 0");
    return acc;
}

/// <F,G>^{(r)} = sum_k (-1)^k C(r,k) d^r F/dy_0^{r-k} dy_1^k * d^r G/dy_0^k dy_1^{r-k}.
inline Polynomial classical_transvectant(const Polynomial& F, const Polynomial& G, int r) {
    if (F.ring() != G.ring()) throw std::invalid_argument("classical_transvectant: ring mismatch");
    if (r < 0) throw std::invalid_argument("classical_transvectant: negative r");
    const long lf = covariant_order(F), lg = covariant_order(G);
    if (r > lf || r > lg) throw std::invalid_argument("classical_transvectant: r exceeds min(order F, order G)");
    const int y0 = F.ring().n + 1, y1 = F.ring().n + 2;
    const auto y_partial = [&](const Polynomial& P, int a, int b) {
        Polynomial q = P;
        for (int i = 0; i < a; ++i) q = q.derivative(y0);
        for (int i = 0; i < b; ++i) q = q.derivative(y1);
        return q;
    };
    Polynomial acc = Polynomial::zero(F.ring());
    for (int k = 0; k <= r; ++k) {
        const Rational c = Rational((k % 2 == 0 ? 1 : -1) * binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)));
        acc = acc + y_partial(F, r - k, k) * y_partial(G, k, r - k) * c;
    }
    return acc;
}

/// The transvectant conjugated through Roberts' map, computed directly in
/// terms of Delta (for isobaric invariants f, g with r <= min(ord f, ord g)):
///   [f,g]^{(r)} = sum_k (-1)^k C(r,k) Delta^k f * (ord f - k)!/(ord f - r)!
///                                   * Delta^{r-k} g * (ord g - r + k)!/(ord g - r)!.
inline Polynomial semitransvectant(int n, const Polynomial& f, const Polynomial& g, int r) {
    long ord_f = 0, ord_g = 0;
    detail::require_isobaric_invariant(n, f, "semitransvectant", ord_f);
    detail::require_isobaric_invariant(n, g, "semitransvectant", ord_g);
    if (r < 0 || r > ord_f || r > ord_g)
        throw std::invalid_argument("semitransvectant: r out of range");
    std::vector<Polynomial> df{f}, dg{g};
    for (int k = 1; k <= r; ++k) {
        df.push_back(derive(DerivationKind::Delta, n, df.back()));
        dg.push_back(derive(DerivationKind::Delta, n, dg.back()));
    }
    Polynomial acc = Polynomial::zero(f.ring());
    for (int k = 0; k <= r; ++k) {
        Integer c = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k));
        c *= falling_factorial_quotient(ord_f - k, ord_f - r);
        c *= falling_factorial_quotient(ord_g - r + k, ord_g - r);
        if (k % 2 != 0) c = -c;
        acc = acc + df[static_cast<std::size_t>(k)] * dg[static_cast<std::size_t>(r - k)] * Rational(c);
    }
    return acc;
}

/// Scalar lambda with f = lambda * g, when one exists (g != 0).
inline std::optional<Rational> proportionality_scalar(const Polynomial& f, const Polynomial& g) {
    if (f.ring() != g.ring()) throw std::invalid_argument("proportionality_scalar: ring mismatch");
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return Rational(0);
    if (f.term_count() != g.term_count()) return std::nullopt;
    const Rational lambda = f.leading_term().coeff / g.leading_term().coeff;
    if (f == g * lambda) return lambda;
    return std::nullopt;
}

/// Unnormalized special invariant for n = 4p: [x_0, f_p]^{(n)}.
inline Polynomial build_w_raw(int n) {
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("build_w: need n divisible by 4");
    const Polynomial x0 = Polynomial::variable(RingDescriptor{n, false}, 0);
    return semitransvectant(n, x0, build_f(n, n / 4), n);
}

/// The special invariant w, scaled so that project(n/2, n, w) = x_0^3. The
/// scalar is read off the computed projection, never hard-coded.
inline Polynomial build_w(int n) {
    const Polynomial wbar = build_w_raw(n);
    const Polynomial proj = project(n / 2, n, wbar);
    Monomial cube(static_cast<std::size_t>(n / 2 + 1));
    cube.exps[0] = 3;
    const Rational c = proj.coefficient_of(cube);
    if (c == 0 || !(proj == Polynomial::monomial(proj.ring(), cube, c)))
        throw std::logic_error("build_w: projection is not a nonzero multiple of x_0^3");
    return wbar * (Rational(1) / c);
}

/// Alternate form of the raw invariant: sum_{k=0}^n (-1)^k x_k D^k g with
/// g = Delta^n f_p; a nonzero rational multiple of build_w(n).
inline Polynomial wbar_alternate(int n) {
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("wbar_alternate: need n divisible by 4");
    Polynomial g = build_f(n, n / 4);
    for (int i = 0; i < n; ++i) g = derive(DerivationKind::Delta, n, g);
    Polynomial acc = Polynomial::zero(g.ring());
    Polynomial dg = g;  // D^k g
    for (int k = 0; k <= n; ++k) {
        if (k > 0) dg = derive(DerivationKind::Weitzenboeck, n, dg);
        const Polynomial xk = Polynomial::variable(g.ring(), k);
        acc = acc + xk * dg * Rational(k % 2 == 0 ? 1 : -1);
    }
    return acc;
}

}  // namespace sepinv

#endif  // SEPINV_TRANSVECTANT_HPP
