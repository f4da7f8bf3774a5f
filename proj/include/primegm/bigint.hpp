#pragma once

#include <cstdint>
#include <string>

#include <gmp.h>

namespace primegm {

// Minimal RAII wrapper over GMP's mpz for the exact-integer paths
// (primorials, n-th power comparisons, coefficient recurrences).
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    explicit BigInt(std::uint64_t v) { mpz_init_set_ui(z_, v); }
    explicit BigInt(const std::string& decimal);

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(BigInt o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    static BigInt pow_u64(std::uint64_t base, std::uint64_t exp);

    BigInt& operator*=(std::uint64_t v) {
        mpz_mul_ui(z_, z_, v);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }

    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    int cmp(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
    bool operator==(const BigInt& o) const { return cmp(o) == 0; }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }

    bool fits_u64() const { return mpz_fits_ulong_p(z_); }
    std::uint64_t to_u64() const { return mpz_get_ui(z_); }
    std::string to_string() const;
    std::size_t bit_count() const { return mpz_sizeinbase(z_, 2); }

    const mpz_t& raw() const { return z_; }

private:
    mpz_t z_;
};

} // namespace primegm
