#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dmb {

/// Integer polynomial in t, coefficients stored lowest degree first with
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class IntPolynomial {
public:
    using Coefficient = std::int64_t;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Coefficient> coefficients) : coeffs_(coefficients) { trim(); }
    explicit IntPolynomial(std::vector<Coefficient> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

    static IntPolynomial monomial(Coefficient c, std::size_t degree)
    {
        std::vector<Coefficient> v(degree + 1, 0);
        v[degree] = c;
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Coefficient operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }

    const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }

    bool nonnegative() const noexcept
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c >= 0; });
    }

    Coefficient evaluate(Coefficient t) const noexcept
    {
        Coefficient acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& rhs)
    {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& rhs)
    {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs)
    {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Coefficient> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Lowest degree first: `1 + 2t - t^3`; the zero polynomial prints as `0`.
    std::string str() const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            Coefficient c = coeffs_[k];
            if (c == 0) continue;
            Coefficient mag = c < 0 ? -c : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (k == 0 || mag != 1) os << mag;
            if (k >= 1) os << 't';
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coefficient> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
{
    return os << p.str();
}

/// 1 + t
inline IntPolynomial one_plus_t()
{
    return IntPolynomial{1, 1};
}

}  // namespace dmb
