#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "prym/errors.hpp"

namespace prym {

/// Ordered list of variable identifiers.  Polynomials hold a shared pointer;
/// two sets are compatible when they agree name-for-name.
class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw PrymError("duplicate variable name: " + names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector; length always equals the variable count of the owning
/// polynomial's VarSet.
struct Monomial {
    std::vector<std::uint16_t> e;

    static Monomial unit(std::size_t n) { return Monomial{std::vector<std::uint16_t>(n, 0)}; }
    static Monomial var(std::size_t i, std::size_t n, std::uint16_t pow = 1) {
        Monomial m = unit(n);
        m.e[i] = pow;
        return m;
    }

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + m.e[i]);
        return r;
    }

    /// Quotient this / m; caller guarantees divisibility.
    Monomial divide(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] - m.e[i]);
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], m.e[i]);
        return r;
    }

    bool is_unit() const {
        return std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
    }

    bool coprime(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && m.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Total well-order on monomials.  grevlex is the default; lex and block
/// orders exist for elimination.  A block order compares the elimination
/// block by grevlex first, so any monomial touching an eliminated variable
/// dominates every monomial that does not.
class MonomialOrder {
  public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}, Kind::grevlex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}, Kind::lex); }
    static MonomialOrder block(std::vector<std::size_t> elim_vars, Kind inner = Kind::grevlex) {
        std::sort(elim_vars.begin(), elim_vars.end());
        return MonomialOrder(Kind::block, std::move(elim_vars), inner);
    }

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& elim_vars() const { return elim_; }

    /// +1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::grevlex:
                return cmp_grevlex_subset(a, b, nullptr, false);
            case Kind::lex:
                return cmp_lex_subset(a, b, nullptr, false);
            case Kind::block: {
                int c = cmp_grevlex_subset(a, b, &elim_, true);
                if (c) return c;
                if (inner_ == Kind::grevlex) return cmp_grevlex_subset(a, b, &elim_, false);
                return cmp_lex_subset(a, b, &elim_, false);
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && elim_ == o.elim_ && inner_ == o.inner_;
    }

  private:
    MonomialOrder(Kind k, std::vector<std::size_t> elim, Kind inner)
        : kind_(k), elim_(std::move(elim)), inner_(inner) {}

    bool in_subset(std::size_t i, const std::vector<std::size_t>* subset, bool member) const {
        if (!subset) return true;
        bool found = std::binary_search(subset->begin(), subset->end(), i);
        return member ? found : !found;
    }

    int cmp_grevlex_subset(const Monomial& a, const Monomial& b, const std::vector<std::size_t>* subset,
                           bool member) const {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (in_subset(i, subset, member)) {
                da += a.e[i];
                db += b.e[i];
            }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = a.e.size(); i-- > 0;) {
            if (!in_subset(i, subset, member)) continue;
            int d = int(a.e[i]) - int(b.e[i]);
            if (d) return d < 0 ? 1 : -1;
        }
        return 0;
    }

    int cmp_lex_subset(const Monomial& a, const Monomial& b, const std::vector<std::size_t>* subset,
                       bool member) const {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (!in_subset(i, subset, member)) continue;
            int d = int(a.e[i]) - int(b.e[i]);
            if (d) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::vector<std::size_t> elim_;
    Kind inner_;
};

/// Comparator making std::map iterate monomials in descending order.
struct MonomialGreater {
    MonomialOrder order = MonomialOrder::grevlex();
    bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
};

}  // namespace prym
