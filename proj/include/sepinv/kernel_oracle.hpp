#ifndef SEPINV_KERNEL_ORACLE_HPP
#define SEPINV_KERNEL_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sepinv/derivation.hpp"

namespace sepinv {

/// All monomials of total degree d in x_0..x_n, in the canonical
/// (descending) serialization order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(n + 1));
    // Descending graded-lex = descending pure lex within one degree.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
            out.push_back(cur);
            cur.exps[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
            self(self, var + 1, remaining - e);
        }
        cur.exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

/// Homogeneous slice of the ring: the degree-d monomial basis.
struct GradedComponent {
    int n = 0;
    int d = 0;
    std::vector<Monomial> monomials;

    static GradedComponent make(int n, int d) { return {n, d, monomials_of_degree(n, d)}; }

    /// Index of a monomial in the descending-ordered basis.
    std::size_t index_of(const Monomial& m) const {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), m,
                                   [](const Monomial& a, const Monomial& b) { return monomial_cmp(a, b) > 0; });
        if (it == monomials.end() || !(*it == m)) throw std::logic_error("GradedComponent: monomial not found");
        return static_cast<std::size_t>(it - monomials.begin());
    }
};

struct IntegerMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Integer> data;  // row-major

    Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Matrix of the Weitzenboeck derivation on the degree-d component, in the
/// canonical monomial basis (column j = image of the j-th basis monomial).
inline IntegerMatrix derivation_matrix(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("derivation_matrix: bad arguments");
    const GradedComponent comp = GradedComponent::make(n, d);
    IntegerMatrix M;
    M.rows = M.cols = comp.monomials.size();
    M.data.assign(M.rows * M.cols, Integer(0));
    for (std::size_t j = 0; j < comp.monomials.size(); ++j) {
        const Monomial& mono = comp.monomials[j];
        for (int k = 1; k <= n; ++k) {
            const unsigned e = mono.exps[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            Monomial img = mono;
            --img.exps[static_cast<std::size_t>(k)];
            ++img.exps[static_cast<std::size_t>(k - 1)];
            M.at(comp.index_of(img), j) += e;
        }
    }
    return M;
}

/// Exact nullspace basis via fraction-free (Bareiss) forward elimination on
/// the integer matrix followed by rational back-substitution, one basis
/// vector per free column in column order.
inline std::vector<std::vector<Rational>> integer_nullspace(IntegerMatrix M) {
    std::vector<std::size_t> pivot_row_of_col(M.cols, SIZE_MAX);
    std::vector<std::size_t> pivot_cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t p = r;
        while (p < M.rows && M.at(p, c) == 0) ++p;
        if (p == M.rows) continue;
        if (p != r)
            for (std::size_t jj = 0; jj < M.cols; ++jj) std::swap(M.at(p, jj), M.at(r, jj));
        for (std::size_t i = r + 1; i < M.rows; ++i) {
            for (std::size_t jj = c + 1; jj < M.cols; ++jj) {
                Integer v = M.at(r, c) * M.at(i, jj) - M.at(i, c) * M.at(r, jj);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M.at(i, jj) = std::move(v);
            }
            M.at(i, c) = 0;
        }
        prev = M.at(r, c);
        pivot_row_of_col[c] = r;
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < M.cols; ++f) {
        if (pivot_row_of_col[f] != SIZE_MAX) continue;
        std::vector<Rational> x(M.cols, Rational(0));
        x[f] = 1;
        for (std::size_t pi = pivot_cols.size(); pi-- > 0;) {
            const std::size_t pc = pivot_cols[pi];
            const std::size_t pr = pivot_row_of_col[pc];
            Rational acc(0);
            for (std::size_t jj = pc + 1; jj < M.cols; ++jj)
                if (x[jj] != 0 && M.at(pr, jj) != 0) acc += Rational(M.at(pr, jj)) * x[jj];
            x[pc] = -acc / Rational(M.at(pr, pc));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Exact basis of the degree-d homogeneous slice of the kernel, each element
/// scaled to leading coefficient 1 and re-checked symbolically.
struct KernelBasis {
    int n = 0;
    int d = 0;
    std::vector<Polynomial> basis;

    std::size_t dimension() const { return basis.size(); }
};

inline KernelBasis kernel_basis(int n, int d) {
    const GradedComponent comp = GradedComponent::make(n, d);
    const auto vectors = integer_nullspace(derivation_matrix(n, d));
    KernelBasis kb{n, d, {}};
    const RingDescriptor ring{n, false};
    for (const auto& vec : vectors) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < vec.size(); ++i)
            if (vec[i] != 0) terms.push_back({comp.monomials[i], vec[i]});
        Polynomial p = Polynomial::from_terms(ring, std::move(terms));
        p = p * (Rational(1) / p.leading_term().coeff);
        if (!derive(DerivationKind::Weitzenboeck, n, p).is_zero())
            throw std::logic_error("kernel_basis: nullspace vector fails the symbolic check");
        kb.basis.push_back(std::move(p));
    }
    return kb;
}

/// Rational row-reduction rank, used for exact span-membership tests.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational factor = rows[i][c] / rows[rank][c];
            for (std::size_t jj = c; jj < cols; ++jj) rows[i][jj] -= factor * rows[rank][jj];
        }
        ++rank;
    }
    return rank;
}

/// Exact linear-membership test of a homogeneous polynomial in the span of a
/// kernel basis of the same degree.
inline bool in_span(const KernelBasis& kb, const Polynomial& f) {
    if (f.is_zero()) return true;
    if (f.ring() != RingDescriptor{kb.n, false} || f.degree() != kb.d)
        throw std::invalid_argument("in_span: ring or degree mismatch");
    const GradedComponent comp = GradedComponent::make(kb.n, kb.d);
    auto coords = [&](const Polynomial& p) {
        std::vector<Rational> v(comp.monomials.size(), Rational(0));
        for (const auto& t : p.terms()) v[comp.index_of(t.mono)] = t.coeff;
        return v;
    };
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : kb.basis) rows.push_back(coords(b));
    const std::size_t base_rank = rational_rank(rows);
    rows.push_back(coords(f));
    return rational_rank(std::move(rows)) == base_rank;
}

/// True iff every kernel-basis invariant of degree 1..d_max takes equal
/// values at v and w. Certifies separation when false; provides evidence of
/// equivalence (up to degree d_max) when true.
inline bool oracle_equivalent(const std::vector<KernelBasis>& bases, const RationalPoint& v, const RationalPoint& w) {
    for (const auto& kb : bases)
        for (const auto& b : kb.basis)
            if (b.eval(v) != b.eval(w)) return false;
    return true;
}

inline std::vector<KernelBasis> oracle_bases(int n, int d_max) {
    if (d_max < 1) throw std::invalid_argument("oracle_bases: need d_max >= 1");
    std::vector<KernelBasis> bases;
    for (int d = 1; d <= d_max; ++d) bases.push_back(kernel_basis(n, d));
    return bases;
}

inline bool oracle_equivalent(int n, int d_max, const RationalPoint& v, const RationalPoint& w) {
    return oracle_equivalent(oracle_bases(n, d_max), v, w);
}

}  // namespace sepinv

#endif  // SEPINV_KERNEL_ORACLE_HPP
