#pragma once

#include <cstdint>

#include "tvt/util.hpp"

namespace tvt {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime field GF(p). All residues are kept in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
    }

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return (a - b + p_) % p_; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::int64_t inv(std::int64_t a) const {
        if (a % p_ == 0) throw internal_error("division by zero in GF(p)");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p_, new_r = reduce(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        return reduce(t);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::int64_t p_;
};

}  // namespace tvt
