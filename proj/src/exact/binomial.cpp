#include <weierforge/exact/binomial.hpp>

namespace weierforge::exact
{

std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    std::uint64_t result = 1;
    while (k > 0 || n > 0) {
        const std::uint64_t nd = n % p;
        const std::uint64_t kd = k % p;
        if (kd > nd) {
            return 0;
        }
        // Digits are below p, so this small binomial is computed directly.
        std::uint64_t num = 1;
        std::uint64_t den = 1;
        for (std::uint64_t i = 0; i < kd; ++i) {
            num = static_cast<std::uint64_t>((static_cast<unsigned __int128>(num) * (nd - i)) % p);
            den = static_cast<std::uint64_t>((static_cast<unsigned __int128>(den) * (i + 1)) % p);
        }
        const Scalar q = Scalar::from_int(p, static_cast<long long>(num)) / Scalar::from_int(p, static_cast<long long>(den));
        result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * q.residue()) % p);
        n /= p;
        k /= p;
    }
    return result;
}

mpz_class integer_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Scalar binomial(Characteristic p, long long n, std::uint64_t k)
{
    bool negate = false;
    std::uint64_t top = 0;
    if (n >= 0) {
        top = static_cast<std::uint64_t>(n);
        if (k > top) {
            return Scalar::zero(p);
        }
    } else {
        top = static_cast<std::uint64_t>(-n) + k - 1;
        negate = (k % 2) == 1;
    }
    Scalar value = p == 0 ? Scalar::from_rational(0, mpq_class(integer_binomial(top, k)))
                          : Scalar::from_int(p, static_cast<long long>(lucas_binomial(top, k, p)));
    return negate ? -value : value;
}

} // namespace weierforge::exact
