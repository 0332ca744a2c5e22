#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "prym/matrix.hpp"
#include "prym/monomial.hpp"
#include "prym/scalar.hpp"

namespace prym {

/// Sparse multivariate polynomial over Fp or Dual, kept in canonical form:
/// no zero coefficients, terms iterated in descending monomial order.
template <class T>
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, T, MonomialGreater>;

    MultiPoly(VarSetPtr vars, MonomialOrder order, T zero)
        : vars_(std::move(vars)), order_(std::move(order)), zero_(std::move(zero)), terms_(MonomialGreater{order_}) {}

    static MultiPoly constant(VarSetPtr vars, MonomialOrder order, const T& c) {
        MultiPoly f(std::move(vars), order, zero_like(c));
        f.add_term(Monomial::unit(f.vars_->size()), c);
        return f;
    }

    static MultiPoly variable(VarSetPtr vars, MonomialOrder order, std::size_t i, const T& one) {
        MultiPoly f(std::move(vars), order, zero_like(one));
        f.add_term(Monomial::var(i, f.vars_->size()), one);
        return f;
    }

    const VarSetPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const MonomialOrder& order() const { return order_; }
    const T& zero_coeff() const { return zero_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Degree when homogeneous; nullopt when inhomogeneous; -1 for zero.
    std::optional<int> homogeneous_degree() const {
        if (!is_homogeneous()) return std::nullopt;
        return total_degree();
    }

    T coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }

    const std::pair<const Monomial, T>& leading_term() const {
        if (terms_.empty()) throw PrymError("leading term of zero polynomial");
        return *terms_.begin();
    }

    void add_term(const Monomial& m, const T& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void check_compatible(const MultiPoly& o) const {
        if (!same_vars(vars_, o.vars_)) throw IncompatibleVariables();
        if (!(order() == o.order())) throw IncompatibleVariables("operands carry different monomial orders");
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compatible(o);
        MultiPoly r(vars_, order(), zero_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    MultiPoly scaled(const T& s) const {
        MultiPoly r(vars_, order(), zero_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    MultiPoly term_multiple(const Monomial& m, const T& c) const {
        MultiPoly r(vars_, order(), zero_);
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : terms_) r.add_term(mm * m, cc * c);
        return r;
    }

    /// In-place f += scale * shift * g; the workhorse of polynomial division.
    void add_scaled_shifted(const MultiPoly& g, const Monomial& shift, const T& scale) {
        if (scale.is_zero()) return;
        for (const auto& [m, c] : g.terms_) add_term(m * shift, c * scale);
    }

    bool operator==(const MultiPoly& o) const {
        if (!same_vars(vars_, o.vars_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  private:
    VarSetPtr vars_;
    MonomialOrder order_;
    T zero_;
    TermMap terms_;
};

template <class T>
MultiPoly<T> partial_derivative(const MultiPoly<T>& f, std::size_t var) {
    MultiPoly<T> r(f.vars(), f.order(), f.zero_coeff());
    for (const auto& [m, c] : f.terms()) {
        if (m.e[var] == 0) continue;
        Monomial m2 = m;
        m2.e[var] -= 1;
        r.add_term(m2, c * from_int_like(m.e[var], c));
    }
    return r;
}

/// f(images): images.size() must equal f's variable count; the images share a
/// common variable set, which becomes the result's.
template <class T>
MultiPoly<T> substitute(const MultiPoly<T>& f, std::span<const MultiPoly<T>> images) {
    if (images.size() != f.nvars()) throw IncompatibleVariables("substitute: arity mismatch");
    for (std::size_t i = 1; i < images.size(); ++i) images[0].check_compatible(images[i]);
    VarSetPtr w = images.empty() ? f.vars() : images[0].vars();
    MonomialOrder ord = images.empty() ? f.order() : images[0].order();
    MultiPoly<T> r(w, ord, f.zero_coeff());
    for (const auto& [m, c] : f.terms()) {
        MultiPoly<T> t = MultiPoly<T>::constant(w, ord, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::uint16_t k = 0; k < m.e[i]; ++k) t = t * images[i];
        r = r + t;
    }
    return r;
}

template <class T>
T evaluate(const MultiPoly<T>& f, std::span<const T> point) {
    if (point.size() != f.nvars()) throw IncompatibleVariables("evaluate: wrong point length");
    T total = f.zero_coeff();
    for (const auto& [m, c] : f.terms()) {
        T t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (std::uint16_t k = 0; k < m.e[i]; ++k) t = t * point[i];
        total = total + t;
    }
    return total;
}

template <class T>
MultiPoly<T> graded_part(const MultiPoly<T>& f, int d) {
    MultiPoly<T> r(f.vars(), f.order(), f.zero_coeff());
    for (const auto& [m, c] : f.terms())
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

/// All degree-d monomials in n variables, sorted descending in the order.
inline std::vector<Monomial> degree_monomials(std::size_t n, int d, const MonomialOrder& ord) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::unit(n);
    auto rec = [&](auto&& self, std::size_t idx, int rem) -> void {
        if (idx + 1 == n) {
            cur.e[idx] = static_cast<std::uint16_t>(rem);
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur.e[idx] = static_cast<std::uint16_t>(e);
            self(self, idx + 1, rem - e);
        }
        cur.e[idx] = 0;
    };
    if (d >= 0) rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return out;
}

/// Coordinates of a homogeneous degree-d form in the canonical descending
/// monomial basis of that degree.  The zero polynomial maps to the zero
/// vector; anything inhomogeneous (or of the wrong degree) is rejected.
template <class T>
std::vector<T> coeff_vector(const MultiPoly<T>& f, int d) {
    if (!f.is_zero()) {
        auto hd = f.homogeneous_degree();
        if (!hd || *hd != d) throw NotHomogeneous("coeff_vector needs a homogeneous form of degree " + std::to_string(d));
    }
    std::vector<Monomial> monos = degree_monomials(f.nvars(), d, f.order());
    std::vector<T> v;
    v.reserve(monos.size());
    for (const Monomial& m : monos) v.push_back(f.coeff(m));
    return v;
}

template <class T>
MultiPoly<T> from_coeff_vector(VarSetPtr vars, const MonomialOrder& ord, int d, std::span<const T> v,
                               const T& zero) {
    std::vector<Monomial> monos = degree_monomials(vars->size(), d, ord);
    if (v.size() != monos.size()) throw PrymError("coefficient vector has wrong length");
    MultiPoly<T> f(std::move(vars), ord, zero);
    for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], v[i]);
    return f;
}

/// Symmetric matrix Q with f = x^T Q x.  Off-diagonal entries are half the
/// mixed coefficients, exact because the characteristic is odd.
template <class T>
Mat<T> quadratic_form_matrix(const MultiPoly<T>& f) {
    if (!f.is_zero()) {
        auto hd = f.homogeneous_degree();
        if (!hd || *hd != 2) throw NotHomogeneous("quadratic_form_matrix needs a quadratic form");
    }
    std::size_t n = f.nvars();
    T zero = f.zero_coeff();
    T half = from_int_like(2, zero).inv();
    Mat<T> q(n, n, zero);
    for (const auto& [m, c] : f.terms()) {
        std::size_t i = n, j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (m.e[k] == 2) i = j = k;
            if (m.e[k] == 1) (i == n ? i : j) = k;
        }
        if (i == j) {
            q(i, i) = c;
        } else {
            q(i, j) = q(i, j) + c * half;
            q(j, i) = q(j, i) + c * half;
        }
    }
    return q;
}

template <class T>
MultiPoly<T> quadric_from_matrix(const Mat<T>& q, VarSetPtr vars, const MonomialOrder& ord) {
    std::size_t n = vars->size();
    MultiPoly<T> f(std::move(vars), ord, zero_like(q(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Monomial m = Monomial::unit(n);
            m.e[i] += 1;
            m.e[j] += 1;
            f.add_term(m, q(i, j));
        }
    return f;
}

// ----- conversions between the field and the dual ring -----

inline MultiPoly<Dual> to_dual(const MultiPoly<Fp>& f) {
    MultiPoly<Dual> r(f.vars(), f.order(), Dual::zero(f.zero_coeff().modulus()));
    for (const auto& [m, c] : f.terms()) r.add_term(m, Dual(c));
    return r;
}

inline MultiPoly<Dual> dual_poly(const MultiPoly<Fp>& base, const MultiPoly<Fp>& eps) {
    std::uint32_t p = base.zero_coeff().modulus();
    MultiPoly<Dual> r(base.vars(), base.order(), Dual::zero(p));
    for (const auto& [m, c] : base.terms()) r.add_term(m, Dual(c));
    for (const auto& [m, c] : eps.terms()) r.add_term(m, Dual(Fp::zero(p), c));
    return r;
}

inline MultiPoly<Fp> constant_part(const MultiPoly<Dual>& f) {
    MultiPoly<Fp> r(f.vars(), f.order(), f.zero_coeff().constant_part());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c.constant_part());
    return r;
}

inline MultiPoly<Fp> eps_part(const MultiPoly<Dual>& f) {
    MultiPoly<Fp> r(f.vars(), f.order(), f.zero_coeff().constant_part());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c.eps_part());
    return r;
}

// ----- text grammar -----
//
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//   varpow := var ('^' exp)?
//   var    := [a-z][0-9]*
//   coeff  := integer (reduced mod p on ingest)

MultiPoly<Fp> parse_poly(const std::string& text, VarSetPtr vars, std::uint32_t p,
                         const MonomialOrder& ord = MonomialOrder::grevlex());

std::string to_string(const MultiPoly<Fp>& f);
std::string to_string(const MultiPoly<Dual>& f);

template <class T>
MultiPoly<T> with_order(const MultiPoly<T>& f, const MonomialOrder& ord) {
    MultiPoly<T> r(f.vars(), ord, f.zero_coeff());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c);
    return r;
}

/// Reinterpret f over a superset/subset of variables.  `positions[i]` gives,
/// for each variable of the target set, its index in f's set, or npos when
/// the variable is new.  Dropping a variable requires it to be absent from f.
template <class T>
MultiPoly<T> map_variables(const MultiPoly<T>& f, VarSetPtr target, const MonomialOrder& ord) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos(target->size(), npos);
    std::vector<bool> covered(f.nvars(), false);
    for (std::size_t i = 0; i < target->size(); ++i) {
        auto idx = f.vars()->index(target->name(i));
        if (idx) {
            pos[i] = *idx;
            covered[*idx] = true;
        }
    }
    MultiPoly<T> r(target, ord, f.zero_coeff());
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (!covered[i] && m.e[i] != 0)
                throw IncompatibleVariables("map_variables drops a variable present in the polynomial");
        Monomial mm = Monomial::unit(target->size());
        for (std::size_t i = 0; i < target->size(); ++i)
            if (pos[i] != npos) mm.e[i] = m.e[pos[i]];
        r.add_term(mm, c);
    }
    return r;
}

}  // namespace prym
