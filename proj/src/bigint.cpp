#include "primegm/bigint.hpp"

#include <stdexcept>

namespace primegm {

BigInt::BigInt(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("BigInt: not a decimal integer: " + decimal);
    }
}

BigInt BigInt::pow_u64(std::uint64_t base, std::uint64_t exp) {
    BigInt r;
    mpz_ui_pow_ui(r.z_, base, exp);
    return r;
}

std::string BigInt::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefunc)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

} // namespace primegm
