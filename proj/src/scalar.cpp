#include "prym/scalar.hpp"

namespace prym {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) throw PrymError("not a prime: " + std::to_string(p));
    if (p == 2) throw PrymError("characteristic 2 is excluded");
    if (p >= (1u << 31)) throw PrymError("prime too large for 64-bit intermediates");
}

Fp::Fp(std::int64_t value, std::uint32_t p) {
    if (p < 2) throw PrymError("modulus must be at least 2");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
    p_ = p;
}

Fp Fp::inv() const {
    if (v_ == 0) throw DivisionByZero();
    std::int64_t t = 0, nt = 1;
    std::int64_t r = p_, nr = v_;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return Fp(t, p_);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

std::ostream& operator<<(std::ostream& os, const Dual& x) {
    return os << x.constant_part() << "+" << x.eps_part() << "*eps";
}

}  // namespace prym
