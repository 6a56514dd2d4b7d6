#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hookbias {

struct order_mismatch : std::invalid_argument {
    order_mismatch() : std::invalid_argument("series truncation orders differ") {}
};

// Truncated formal power series in q with exact coefficients. All terms of
// degree <= order() are exact; higher terms are discarded. Arithmetic never
// resizes: mixing orders throws order_mismatch.
template <typename Coeff>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    static Series one(std::size_t order)
    {
        Series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static Series monomial(std::size_t exponent, Coeff c, std::size_t order)
    {
        Series s(order);
        if (exponent <= order)
            s.coeffs_[exponent] = std::move(c);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Coeff& operator[](std::size_t k) const { return coeffs_[k]; }
    Coeff& at(std::size_t k) { return coeffs_[k]; }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    bool operator==(const Series& rhs) const { return coeffs_ == rhs.coeffs_; }

    Series& operator+=(const Series& rhs)
    {
        check(rhs);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += rhs.coeffs_[k];
        return *this;
    }

    Series& operator-=(const Series& rhs)
    {
        check(rhs);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] -= rhs.coeffs_[k];
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b)
    {
        a.check(b);
        Series prod(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] != 0)
                    prod.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return prod;
    }

    Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

    // In-place multiplication by (1 + c*q^e); the workhorse of the product
    // builders. A no-op when e > order.
    void mul_binomial(std::size_t e, const Coeff& c)
    {
        if (e == 0)
            throw std::invalid_argument("binomial factor must have positive degree");
        if (e > order())
            return;
        for (std::size_t k = coeffs_.size(); k-- > e;)
            coeffs_[k] += c * coeffs_[k - e];
    }

    // Multiplicative inverse up to the truncation order. Integer mode requires
    // constant term +-1; rational mode any nonzero constant.
    Series inverse() const
    {
        Series inv(order());
        inv.coeffs_[0] = invert_constant(coeffs_[0]);
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            Coeff acc = 0;
            for (std::size_t k = 1; k <= n; ++k)
                acc += coeffs_[k] * inv.coeffs_[n - k];
            inv.coeffs_[n] = -acc * inv.coeffs_[0];
        }
        return inv;
    }

    Series truncated(std::size_t new_order) const
    {
        if (new_order > order())
            throw std::invalid_argument("cannot extend a truncated series");
        Series s(new_order);
        for (std::size_t k = 0; k <= new_order; ++k)
            s.coeffs_[k] = coeffs_[k];
        return s;
    }

    Series pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        Series base = *this;
        Series acc = one(order());
        for (; e > 0; e >>= 1) {
            if (e & 1)
                acc *= base;
            if (e > 1)
                base *= base;
        }
        return acc;
    }

private:
    void check(const Series& rhs) const
    {
        if (coeffs_.size() != rhs.coeffs_.size())
            throw order_mismatch();
    }

    static mpz_class invert_constant(const mpz_class& c)
    {
        if (c != 1 && c != -1)
            throw std::domain_error("series constant term is not a unit");
        return c;
    }

    static mpq_class invert_constant(const mpq_class& c)
    {
        if (c == 0)
            throw std::domain_error("series constant term is zero");
        return mpq_class(1) / c;
    }

    std::vector<Coeff> coeffs_;
};

using ZSeries = Series<mpz_class>;
using QSeries = Series<mpq_class>;

inline constexpr std::optional<unsigned> kInfinite = std::nullopt;

// (sign q^j; q^step)_count truncated at `order`, i.e. the product of factors
// (1 - sign*q^{j+step*i}) for 0 <= i < count. sign=-1 gives the (-q^j;q^step)
// symbols used throughout; count=kInfinite stops at the first factor whose
// exponent exceeds the order. An infinite product needs j >= 1 to converge.
ZSeries pochhammer(int sign, unsigned j, unsigned step,
                   std::optional<unsigned> count, std::size_t order);

// sum_{k>=1} q^{jk}, i.e. q^j/(1-q^j).
ZSeries geometric(unsigned j, std::size_t order);

// 1/(1-q^j) = sum_{k>=0} q^{jk}.
ZSeries inv_one_minus(unsigned j, std::size_t order);

// Single Lambert term q^{am}/(1+q^m), expanded exactly as an alternating
// geometric series.
ZSeries lambert_term(unsigned a, unsigned m, std::size_t order);

// sum_{m>=m0} q^{am}/(1+q^m); the outer sum stops once a*m > order.
ZSeries lambert(unsigned a, unsigned m0, std::size_t order);

} // namespace hookbias
