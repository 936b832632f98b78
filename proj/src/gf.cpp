#include "lincode/gf.hpp"

namespace lincode {

namespace {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint32_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q < 2 || q >= (1u << 16))
        throw std::invalid_argument("field order must satisfy 2 <= q < 2^16");
    if (!is_prime(q))
        throw std::invalid_argument("field order " + std::to_string(q) +
                                    " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw division_by_zero("inverse of zero in GF(q)");
    // Extended Euclid on (a, q); q prime guarantees gcd = 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += q_;
    return static_cast<std::uint32_t>(t);
}

} // namespace lincode
