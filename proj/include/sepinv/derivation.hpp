#ifndef SEPINV_DERIVATION_HPP
#define SEPINV_DERIVATION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "sepinv/polynomial.hpp"

namespace sepinv {

/// The two derivations of R_n = Q[x_0..x_n]:
///   Weitzenboeck: x_0 -> 0,            x_k -> x_{k-1}            (k >= 1)
///   Delta:        x_n -> 0,            x_k -> (n-k)(k+1) x_{k+1} (k <= n-1)
enum class DerivationKind { Weitzenboeck, Delta };

namespace detail {
inline void require_plain_ring(int n, const Polynomial& f, const char* op) {
    if (f.ring().extended) throw std::invalid_argument(std::string(op) + ": extended-ring input");
    if (f.ring().n != n) throw std::invalid_argument(std::string(op) + ": ring size mismatch");
}
}  // namespace detail

inline Polynomial derive(DerivationKind kind, int n, const Polynomial& f) {
    detail::require_plain_ring(n, f, "derive");
    std::vector<Term> out;
    out.reserve(f.term_count() * static_cast<std::size_t>(n + 1));
    for (const auto& t : f.terms()) {
        for (int k = 0; k <= n; ++k) {
            const unsigned e = t.mono.exps[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (kind == DerivationKind::Weitzenboeck) {
                if (k == 0) continue;
                Term d{t.mono, t.coeff * Rational(e)};
                --d.mono.exps[static_cast<std::size_t>(k)];
                ++d.mono.exps[static_cast<std::size_t>(k - 1)];
                out.push_back(std::move(d));
            } else {
                if (k == n) continue;
                Term d{t.mono, t.coeff * Rational(static_cast<long>(e) * (n - k) * (k + 1))};
                --d.mono.exps[static_cast<std::size_t>(k)];
                ++d.mono.exps[static_cast<std::size_t>(k + 1)];
                out.push_back(std::move(d));
            }
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

/// Least m with derive^{m+1}(f) = 0; empty optional encodes the nilpotency
/// index of the zero polynomial (the paper's -infinity sentinel).
inline std::optional<long> nilpotency_index(DerivationKind kind, int n, const Polynomial& f) {
    detail::require_plain_ring(n, f, "nilpotency_index");
    if (f.is_zero()) return std::nullopt;
    // Locally nilpotent: each application shifts every term's weight by 2,
    // so (n+1) * degree bounds the iteration count.
    const long cap = static_cast<long>(n + 1) * std::max<long>(f.degree(), 1) + 2;
    Polynomial g = derive(kind, n, f);
    long m = 0;
    while (!g.is_zero()) {
        g = derive(kind, n, g);
        ++m;
        if (m > cap) throw std::logic_error("nilpotency_index: iteration cap exceeded");
    }
    return m;
}

/// Common value of sum_k (n-2k)*exps[k] over all terms, if it exists.
inline std::optional<long> isobaric_weight(int n, const Polynomial& f) {
    detail::require_plain_ring(n, f, "isobaric_weight");
    if (f.is_zero()) throw std::invalid_argument("isobaric_weight: zero polynomial");
    std::optional<long> weight;
    for (const auto& t : f.terms()) {
        long w = 0;
        for (int k = 0; k <= n; ++k) w += static_cast<long>(n - 2 * k) * t.mono.exps[static_cast<std::size_t>(k)];
        if (!weight) weight = w;
        else if (*weight != w) return std::nullopt;
    }
    return weight;
}

/// Group translation of a point: coordinate i of a*v is sum_{j<=i} a^j/j! v_{i-j}.
inline RationalPoint flow_point(int n, const Rational& a, const RationalPoint& v) {
    if (static_cast<int>(v.size()) != n + 1) throw std::invalid_argument("flow_point: point length mismatch");
    std::vector<Rational> apow;  // a^j / j!
    apow.push_back(Rational(1));
    for (int j = 1; j <= n; ++j) apow.push_back(apow.back() * a / Rational(j));
    RationalPoint out(v.size());
    for (int i = 0; i <= n; ++i) {
        Rational c(0);
        for (int j = 0; j <= i; ++j) c += apow[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i - j)];
        out[static_cast<std::size_t>(i)] = c;
    }
    return out;
}

/// exp(a D_n) f = sum_k a^k D^k f / k!; finite by local nilpotency.
inline Polynomial exp_derivation(int n, const Rational& a, const Polynomial& f) {
    detail::require_plain_ring(n, f, "exp_derivation");
    Polynomial acc = f;
    Polynomial g = f;
    Rational scale(1);
    for (long k = 1;; ++k) {
        g = derive(DerivationKind::Weitzenboeck, n, g);
        if (g.is_zero()) break;
        scale *= a / Rational(k);
        acc = acc + g * scale;
    }
    return acc;
}

/// pi_{m,n}: f(x_0,...,x_n) -> f(0,...,0,x_0,...,x_m) in R_m.
inline Polynomial project(int m, int n, const Polynomial& f) {
    detail::require_plain_ring(n, f, "project");
    if (m < 0 || m >= n) throw std::invalid_argument("project: need 0 <= m < n");
    const int shift = n - m;
    const RingDescriptor target{m, false};
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        bool survives = true;
        for (int i = 0; i < shift; ++i)
            if (t.mono.exps[static_cast<std::size_t>(i)] != 0) { survives = false; break; }
        if (!survives) continue;
        Monomial mm(static_cast<std::size_t>(target.var_count()));
        for (int i = shift; i <= n; ++i) mm.exps[static_cast<std::size_t>(i - shift)] = t.mono.exps[static_cast<std::size_t>(i)];
        out.push_back({std::move(mm), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

}  // namespace sepinv

#endif  // SEPINV_DERIVATION_HPP
