#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace explab {

/// Dense univariate polynomial with real coefficients in ascending degree
/// order: coeffs()[i] multiplies x^i.
///
/// Leading coefficients with magnitude below kLeadingZeroThreshold are
/// dropped on construction; interior coefficients are kept verbatim. The
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    static constexpr double kLeadingZeroThreshold = 1e-14;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    /// c * x^power
    static Polynomial monomial(double c, std::size_t power);

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
    /// Coefficient of x^i, 0 beyond the degree.
    double coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
    double max_abs_coeff() const noexcept;

    double operator()(double x) const noexcept;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<double> coeffs_;
};

double eval(const Polynomial& p, double x) noexcept;

Polynomial derivative(const Polynomial& p);
Polynomial antiderivative(const Polynomial& p);

/// Signed integral of p over [a, b]; a may exceed b.
double definite_integral(const Polynomial& p, double a, double b) noexcept;

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, double c);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator*(double c, const Polynomial& p) { return scale(p, c); }

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division. Throws ZeroPolynomial when the divisor is zero.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

struct RealRoot {
    double value;
    int multiplicity;
};

struct RootOptions {
    double tau_root = 1e-12;
};

/// Sturm chain p, p', -rem(p, p'), ... with each element scaled to unit
/// max-abs coefficient. Remainders whose coefficients all fall below the
/// gcd threshold terminate the chain, so the last element approximates
/// gcd(p, p') and variation counts give distinct roots.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_roots(std::span<const Polynomial> chain, double a, double b);

/// Distinct real roots, ascending. Isolates with the Sturm chain on the
/// Cauchy bound interval, then bisects each isolating interval down to
/// tau_root relative width. Throws ZeroPolynomial for p == 0.
std::vector<RealRoot> real_roots(const Polynomial& p, const RootOptions& opts = {});

/// Root values only.
std::vector<double> real_root_values(const Polynomial& p, const RootOptions& opts = {});

enum class Extremum { sup, inf };

/// sup or inf of |p| over [min(a,b), max(a,b)], evaluated at the endpoints
/// and the critical points inside. inf is 0 when p vanishes in the interval.
double extremum_abs(const Polynomial& p, double a, double b, Extremum mode);

/// Comma-separated finite reals. Throws InvalidArgument on bad input.
std::vector<double> parse_real_list(std::string_view text);

/// "1,-1,1,1" -> x^3 + x^2 - x + 1. Throws InvalidArgument on bad input.
Polynomial parse_polynomial(std::string_view text);

/// Ascending coefficient CSV, the inverse of parse_polynomial.
std::string to_csv(const Polynomial& p);

/// Human-readable form, e.g. "3x^2+2x-1".
std::string to_string(const Polynomial& p);

}  // namespace explab
