#include "hookbias/qseries.hpp"

namespace hookbias {

ZSeries pochhammer(int sign, unsigned j, unsigned step,
                   std::optional<unsigned> count, std::size_t order)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer sign must be +-1");
    if (!count && j == 0)
        throw std::invalid_argument("infinite pochhammer product diverges for j=0");
    if (count && step == 0 && *count > 1)
        throw std::invalid_argument("step=0 only makes sense for a single factor");

    ZSeries prod = ZSeries::one(order);
    const mpz_class c = -sign;
    std::size_t exponent = j;
    for (unsigned i = 0; !count || i < *count; ++i) {
        if (exponent > order) {
            if (!count)
                break;
            // remaining finite factors cannot affect coefficients <= order
            break;
        }
        prod.mul_binomial(exponent, c);
        exponent += step;
    }
    return prod;
}

ZSeries geometric(unsigned j, std::size_t order)
{
    if (j == 0)
        throw std::invalid_argument("geometric needs j >= 1");
    ZSeries s(order);
    for (std::size_t e = j; e <= order; e += j)
        s.at(e) = 1;
    return s;
}

ZSeries inv_one_minus(unsigned j, std::size_t order)
{
    if (j == 0)
        throw std::invalid_argument("inv_one_minus needs j >= 1");
    ZSeries s(order);
    for (std::size_t e = 0; e <= order; e += j)
        s.at(e) = 1;
    return s;
}

ZSeries lambert_term(unsigned a, unsigned m, std::size_t order)
{
    if (a == 0 || m == 0)
        throw std::invalid_argument("lambert_term needs a, m >= 1");
    ZSeries s(order);
    int sign = 1;
    for (std::size_t e = std::size_t{a} * m; e <= order; e += m) {
        s.at(e) = sign;
        sign = -sign;
    }
    return s;
}

ZSeries lambert(unsigned a, unsigned m0, std::size_t order)
{
    if (a == 0 || m0 == 0)
        throw std::invalid_argument("lambert needs a, m0 >= 1");
    ZSeries s(order);
    for (std::size_t m = m0; std::size_t{a} * m <= order; ++m) {
        int sign = 1;
        for (std::size_t e = std::size_t{a} * m; e <= order; e += m) {
            s.at(e) += sign;
            sign = -sign;
        }
    }
    return s;
}

} // namespace hookbias
