#ifndef SEPINV_POLYNOMIAL_HPP
#define SEPINV_POLYNOMIAL_HPP

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepinv/rational.hpp"

namespace sepinv {

/// Ambient polynomial ring: variables x_0..x_n, plus y_0, y_1 when extended.
struct RingDescriptor {
    int n = 0;
    bool extended = false;

    int var_count() const { return n + 1 + (extended ? 2 : 0); }
    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

inline std::string variable_name(const RingDescriptor& ring, int index) {
    if (index <= ring.n) return "x" + std::to_string(index);
    return "y" + std::to_string(index - ring.n - 1);
}

/// Exponent vector over the ring's variables. Inline storage covers the whole
/// working range (n <= 20 extended = 23 variables) without heap traffic.
using Exponents = boost::container::small_vector<std::uint16_t, 24>;

struct Monomial {
    Exponents exps;

    Monomial() = default;
    explicit Monomial(std::size_t var_count) : exps(var_count, 0) {}
    explicit Monomial(Exponents e) : exps(std::move(e)) {}

    long total_degree() const {
        long d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, x_0 > x_1 > ... > y_1: total degree first,
/// ties broken by the earliest differing exponent (bigger wins).
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
    long da = 0, db = 0;
    for (auto e : a.exps) da += e;
    for (auto e : b.exps) db += e;
    if (da != db) return da < db ? -1 : 1;
    const std::size_t k = std::min(a.exps.size(), b.exps.size());
    for (std::size_t i = 0; i < k; ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    if (a.exps.size() != b.exps.size()) return a.exps.size() < b.exps.size() ? -1 : 1;
    return 0;
}

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) > 0; }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// A point of the affine space V_n: n+1 exact rational coordinates.
using RationalPoint = std::vector<Rational>;

/// Sparse multivariate polynomial over Q in canonical form: terms strictly
/// descending in the monomial order, no zero coefficients. Immutable value
/// semantics; all operations return fresh values.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingDescriptor ring) : ring_(ring) {}

    static Polynomial zero(RingDescriptor ring) { return Polynomial(ring); }

    static Polynomial constant(RingDescriptor ring, Rational c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({Monomial(static_cast<std::size_t>(ring.var_count())), std::move(c)});
        return p;
    }

    static Polynomial variable(RingDescriptor ring, int index) {
        if (index < 0 || index >= ring.var_count())
            throw std::invalid_argument("Polynomial::variable: index out of range");
        Monomial m(static_cast<std::size_t>(ring.var_count()));
        m.exps[static_cast<std::size_t>(index)] = 1;
        Polynomial p(ring);
        p.terms_.push_back({std::move(m), Rational(1)});
        return p;
    }

    static Polynomial monomial(RingDescriptor ring, Monomial m, Rational c) {
        if (static_cast<int>(m.exps.size()) != ring.var_count())
            throw std::invalid_argument("Polynomial::monomial: exponent length mismatch");
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Builds canonical form from arbitrary (unsorted, duplicated) terms.
    static Polynomial from_terms(RingDescriptor ring, std::vector<Term> terms) {
        for (const auto& t : terms)
            if (static_cast<int>(t.mono.exps.size()) != ring.var_count())
                throw std::invalid_argument("Polynomial::from_terms: exponent length mismatch");
        Polynomial p(ring);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        return terms_.front();
    }

    Rational coefficient_of(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
            return monomial_cmp(t.mono, key) > 0;
        });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return Rational(0);
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial out(a.ring_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const int c = monomial_cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                Rational sum = a.terms_[i].coeff + b.terms_[j].coeff;
                if (sum != 0) out.terms_.push_back({a.terms_[i].mono, std::move(sum)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out = a;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial out(a.ring_);
        if (c == 0) return out;
        out.terms_ = a.terms_;
        for (auto& t : out.terms_) t.coeff *= c;
        return out;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial out(a.ring_);
        if (a.is_zero() || b.is_zero()) return out;
        const std::size_t pairs = a.terms_.size() * b.terms_.size();
        if (pairs > kMaxProductPairs)
            throw std::runtime_error("polynomial product too large (" + std::to_string(pairs) + " term pairs)");
        std::vector<Term> prod;
        prod.reserve(pairs);
        const std::size_t vars = static_cast<std::size_t>(a.ring_.var_count());
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono;
                for (std::size_t v = 0; v < vars; ++v)
                    m.exps[v] = static_cast<std::uint16_t>(m.exps[v] + tb.mono.exps[v]);
                prod.push_back({std::move(m), ta.coeff * tb.coeff});
            }
        }
        out.terms_ = std::move(prod);
        out.normalize();
        return out;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial r = constant(ring_, Rational(1));
        for (unsigned long i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    /// Exact formal partial derivative with respect to one variable.
    Polynomial derivative(int var_index) const {
        if (var_index < 0 || var_index >= ring_.var_count())
            throw std::invalid_argument("derivative: variable index out of range");
        Polynomial out(ring_);
        const std::size_t v = static_cast<std::size_t>(var_index);
        for (const auto& t : terms_) {
            if (t.mono.exps[v] == 0) continue;
            Term d{t.mono, t.coeff * Rational(t.mono.exps[v])};
            --d.mono.exps[v];
            out.terms_.push_back(std::move(d));
        }
        return out;  // single-variable decrement preserves the ordering
    }

    /// Exact substitution at a point of V_n. Defined for non-extended rings.
    Rational eval(const RationalPoint& v) const {
        if (ring_.extended) throw std::invalid_argument("eval: extended-ring polynomial");
        if (static_cast<int>(v.size()) != ring_.n + 1)
            throw std::invalid_argument("eval: point length mismatch");
        // Per-variable power tables keep the work linear in term size.
        std::vector<std::vector<Rational>> powers(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) powers[i].push_back(Rational(1));
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational val = t.coeff;
            for (std::size_t i = 0; i < v.size(); ++i) {
                const unsigned e = t.mono.exps[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                while (pw.size() <= e) pw.push_back(pw.back() * v[i]);
                val *= pw[e];
            }
            acc += val;
        }
        return acc;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : terms_) {
            nlohmann::json exps = nlohmann::json::array();
            for (auto e : t.mono.exps) exps.push_back(static_cast<int>(e));
            terms.push_back({{"coeff", format_rational(t.coeff)}, {"exps", std::move(exps)}});
        }
        return {{"n", ring_.n}, {"extended", ring_.extended}, {"terms", std::move(terms)}};
    }

    static Polynomial from_json(const nlohmann::json& j) {
        RingDescriptor ring{j.at("n").get<int>(), j.at("extended").get<bool>()};
        if (ring.n < 0) throw std::invalid_argument("polynomial json: negative n");
        std::vector<Term> terms;
        for (const auto& jt : j.at("terms")) {
            const auto& exps = jt.at("exps");
            if (static_cast<int>(exps.size()) != ring.var_count())
                throw std::invalid_argument("polynomial json: exps length mismatch");
            Monomial m(static_cast<std::size_t>(ring.var_count()));
            for (std::size_t i = 0; i < exps.size(); ++i) {
                const long e = exps[i].get<long>();
                if (e < 0 || e > 0xffff) throw std::invalid_argument("polynomial json: bad exponent");
                m.exps[i] = static_cast<std::uint16_t>(e);
            }
            terms.push_back({std::move(m), parse_rational(jt.at("coeff").get<std::string>())});
        }
        return from_terms(ring, std::move(terms));
    }

    /// Human-readable form: coefficient then monomial, '^' powers, '*' joins.
    std::string pretty() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            Rational c = t.coeff;
            if (i == 0) {
                if (c < 0) { out += "-"; c = -c; }
            } else {
                out += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            std::string mono;
            for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
                if (t.mono.exps[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += variable_name(ring_, static_cast<int>(v));
                if (t.mono.exps[v] > 1) mono += "^" + std::to_string(t.mono.exps[v]);
            }
            std::string cs = c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

  private:
    void require_same_ring(const Polynomial& other) const {
        if (ring_ != other.ring_) throw std::invalid_argument("polynomial ring mismatch");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return monomial_cmp(a.mono, b.mono) > 0; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono) merged.back().coeff += t.coeff;
            else merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
        terms_ = std::move(merged);
    }

    static constexpr std::size_t kMaxProductPairs = 40'000'000;

    RingDescriptor ring_;
    std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Rational poly_eval(const Polynomial& f, const RationalPoint& v) { return f.eval(v); }
inline Polynomial partial_derivative(const Polynomial& f, int var_index) { return f.derivative(var_index); }

}  // namespace sepinv

#endif  // SEPINV_POLYNOMIAL_HPP
