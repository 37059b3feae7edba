#ifndef SEPINV_SEPARATING_SET_HPP
#define SEPINV_SEPARATING_SET_HPP

#include <string>
#include <vector>

#include "sepinv/transvectant.hpp"

namespace sepinv {

/// Provenance label of one separating-set element.
struct ElementLabel {
    enum class Kind { F, Eps, W };
    Kind kind = Kind::F;
    int m = 0;  // slice / invariant index
    int j = 0;  // variable index (Eps only)

    static ElementLabel f(int m) { return {Kind::F, m, 0}; }
    static ElementLabel eps(int m, int j) { return {Kind::Eps, m, j}; }
    static ElementLabel w() { return {Kind::W, 0, 0}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::F: return "F(" + std::to_string(m) + ")";
            case Kind::Eps: return "EPS(" + std::to_string(m) + "," + std::to_string(j) + ")";
            default: return "W";
        }
    }
    friend bool operator==(const ElementLabel&, const ElementLabel&) = default;
};

/// The element listing for E_n, in order: the invariants f_0..f_[n/2]; the
/// slice rows eps_{s_0}(x_2..x_n), eps_{s_1}(x_1..x_n), and
/// eps_{s_m}(x_m..x_n) for 2 <= m <= [(n-1)/2]; plus w when 4 | n.
inline std::vector<ElementLabel> enumerate_labels(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_labels: need n >= 1");
    std::vector<ElementLabel> out;
    for (int m = 0; 2 * m <= n; ++m) out.push_back(ElementLabel::f(m));
    const int slice_max = (n - 1) / 2;
    for (int m = 0; m <= slice_max; ++m) {
        const int j_start = m == 0 ? 2 : (m == 1 ? 1 : m);
        for (int j = j_start; j <= n; ++j) out.push_back(ElementLabel::eps(m, j));
    }
    if (n % 4 == 0) out.push_back(ElementLabel::w());
    return out;
}

inline std::size_t separating_set_size(int n) { return enumerate_labels(n).size(); }

/// Exact total-degree bound of an element, available without expanding it:
/// every summand of eps_{s_m}(x_j) has degree exactly 1 + 2j.
inline long element_degree_bound(int /*n*/, const ElementLabel& label) {
    switch (label.kind) {
        case ElementLabel::Kind::F: return label.m == 0 ? 1 : 2;
        case ElementLabel::Kind::Eps: return 1 + 2 * static_cast<long>(label.j);
        default: return 3;
    }
}

struct LabeledInvariant {
    ElementLabel label;
    Polynomial poly;
};

/// The separating set E_n as expanded polynomials, in listing order.
struct SeparatingSet {
    int n = 0;
    std::vector<LabeledInvariant> elements;

    std::size_t count() const { return elements.size(); }

    long max_degree() const {
        long d = 0;
        for (const auto& e : elements) d = std::max(d, e.poly.degree());
        return d;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : elements) arr.push_back({{"label", e.label.to_string()}, {"poly", e.poly.to_json()}});
        return arr;
    }
};

/// Expands E_n. Term counts of the slice invariants grow combinatorially in
/// n; the practical range for full expansion is n up to the low teens.
inline SeparatingSet build_E(int n) {
    SeparatingSet set;
    set.n = n;
    const RingDescriptor ring{n, false};
    for (const auto& label : enumerate_labels(n)) {
        switch (label.kind) {
            case ElementLabel::Kind::F:
                set.elements.push_back({label, build_f(n, label.m)});
                break;
            case ElementLabel::Kind::W:
                set.elements.push_back({label, build_w(n)});
                break;
            case ElementLabel::Kind::Eps:
                set.elements.push_back({label, Polynomial::zero(ring)});  // filled below
                break;
        }
    }
    // Fill the eps rows with powers of s_m and f_m shared across the row.
    const int slice_max = (n - 1) / 2;
    for (int m = 0; m <= slice_max; ++m) {
        bool row_present = false;
        for (const auto& e : set.elements)
            if (e.label.kind == ElementLabel::Kind::Eps && e.label.m == m) { row_present = true; break; }
        if (!row_present) continue;
        const Polynomial s = build_s(n, m);
        const Polynomial ds = derive(DerivationKind::Weitzenboeck, n, s);
        std::vector<Polynomial> s_pow{Polynomial::constant(ring, Rational(1))};
        std::vector<Polynomial> ds_pow{Polynomial::constant(ring, Rational(1))};
        for (int k = 1; k <= n; ++k) {
            s_pow.push_back(s_pow.back() * s);
            ds_pow.push_back(ds_pow.back() * ds);
        }
        for (auto& e : set.elements) {
            if (e.label.kind != ElementLabel::Kind::Eps || e.label.m != m) continue;
            const int j = e.label.j;  // nilpotency index of x_j
            Polynomial acc = Polynomial::zero(ring);
            Rational scale(1);  // (-1)^k / k!
            for (int k = 0; k <= j; ++k) {
                if (k > 0) scale *= make_rational(-1, k);
                const Polynomial xjk = Polynomial::variable(ring, j - k);  // D^k x_j
                acc = acc + xjk * s_pow[static_cast<std::size_t>(k)] * ds_pow[static_cast<std::size_t>(j - k)] * scale;
            }
            e.poly = std::move(acc);
        }
    }
    return set;
}

struct CheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Symbolically re-derives every element; any element not annihilated by the
/// Weitzenboeck derivation is reported.
inline CheckReport verify_kernel_membership(const SeparatingSet& set) {
    CheckReport report;
    for (const auto& e : set.elements) {
        const Polynomial d = derive(DerivationKind::Weitzenboeck, set.n, e.poly);
        if (!d.is_zero())
            report.failures.push_back(e.label.to_string() + ": D e = " + d.pretty());
    }
    return report;
}

/// Structural consequences of the Hilbert-ideal radical:
///  (i)  every term of a positive-degree element contains some x_i, i <= [n/2];
///  (ii) project(n - [n/2] - 1, n, e) is constant for every element.
inline CheckReport check_stratum_properties(const SeparatingSet& set) {
    CheckReport report;
    const int half = set.n / 2;
    const int proj_target = set.n - half - 1;
    for (const auto& e : set.elements) {
        if (e.poly.degree() > 0) {
            for (const auto& t : e.poly.terms()) {
                bool has_low = false;
                for (int i = 0; i <= half; ++i)
                    if (t.mono.exps[static_cast<std::size_t>(i)] != 0) { has_low = true; break; }
                if (!has_low) {
                    report.failures.push_back(e.label.to_string() + ": term outside (x_0..x_" + std::to_string(half) + ")");
                    break;
                }
            }
        }
        if (proj_target >= 0 && proj_target < set.n) {
            const Polynomial p = project(proj_target, set.n, e.poly);
            if (!p.is_constant())
                report.failures.push_back(e.label.to_string() + ": projection to R_" + std::to_string(proj_target) + " is not constant");
        }
    }
    return report;
}

}  // namespace sepinv

#endif  // SEPINV_SEPARATING_SET_HPP
