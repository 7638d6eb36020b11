#include "expansionlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "expansionlab/error.hpp"

namespace explab {

namespace {

// Remainders below this (relative to a unit-scaled dividend) are treated as
// zero when building the Sturm chain.
constexpr double kGcdThreshold = 1e-10;

void trim_leading(std::vector<double>& c, double threshold) {
    while (!c.empty() && std::abs(c.back()) < threshold) c.pop_back();
}

Polynomial unit_scaled(const Polynomial& p) {
    const double m = p.max_abs_coeff();
    if (m == 0.0) return p;
    return scale(p, 1.0 / m);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(std::span<const Polynomial> chain, double x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign_of(q(x)));
    return variations(signs);
}

int variations_at_infinity(std::span<const Polynomial> chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        int s = sign_of(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

double cauchy_bound(const Polynomial& p) {
    const auto& c = p.coeffs();
    const double lead = std::abs(c.back());
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i]) / lead);
    return 1.0 + m;
}

bool narrow_enough(double lo, double hi, double tau) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return true;
    return hi - lo <= tau * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
}

// Single distinct root inside (lo, hi].
double refine_root(const Polynomial& p, std::span<const Polynomial> chain, double lo, double hi,
                   double tau) {
    if (p(hi) == 0.0) return hi;
    while (!narrow_enough(lo, hi, tau)) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) == 0.0) return mid;
        if (count_roots(chain, lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    // Odd multiplicity: keep halving on the sign change down to adjacent
    // doubles so the residual is limited by evaluation rounding alone.
    double plo = p(lo), phi = p(hi);
    if (sign_of(plo) * sign_of(phi) < 0) {
        for (;;) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double pm = p(mid);
            if (pm == 0.0) return mid;
            if (sign_of(pm) == sign_of(plo)) {
                lo = mid;
                plo = pm;
            } else {
                hi = mid;
                phi = pm;
            }
        }
        return std::abs(plo) < std::abs(phi) ? lo : hi;
    }
    return 0.5 * (lo + hi);
}

int multiplicity_at(const Polynomial& p, double x) {
    int mult = 1;
    Polynomial q = derivative(p);
    while (!q.is_zero()) {
        double magnitude = 0.0;
        double power = 1.0;
        for (double c : q.coeffs()) {
            magnitude += std::abs(c) * power;
            power *= std::abs(x);
        }
        if (std::abs(q(x)) > 1e-6 * magnitude) break;
        ++mult;
        q = derivative(q);
    }
    return mult;
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    trim_leading(coeffs_, kLeadingZeroThreshold);
}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

Polynomial Polynomial::monomial(double c, std::size_t power) {
    std::vector<double> v(power + 1, 0.0);
    v[power] = c;
    return Polynomial(std::move(v));
}

double Polynomial::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double eval(const Polynomial& p, double x) noexcept { return p(x); }

Polynomial derivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
    return Polynomial(std::move(d));
}

Polynomial antiderivative(const Polynomial& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return {};
    std::vector<double> a(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) a[i + 1] = c[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(a));
}

double definite_integral(const Polynomial& p, double a, double b) noexcept {
    if (a == b) return 0.0;
    const Polynomial anti = antiderivative(p);
    return anti(b) - anti(a);
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<double> s(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) s[i] += b[i];
    return Polynomial(std::move(s));
}

Polynomial scale(const Polynomial& p, double c) {
    std::vector<double> s = p.coeffs();
    for (double& v : s) v *= c;
    return Polynomial(std::move(s));
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    std::vector<double> rem = dividend.coeffs();
    const auto& d = divisor.coeffs();
    const std::size_t dn = d.size();
    if (rem.size() < dn) return {Polynomial{}, dividend};
    std::vector<double> quot(rem.size() - dn + 1, 0.0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const double q = rem[k + dn - 1] / d.back();
        quot[k] = q;
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
        rem[k + dn - 1] = 0.0;
    }
    rem.resize(dn - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(unit_scaled(p));
    Polynomial d = derivative(p);
    if (d.is_zero()) return chain;
    chain.push_back(unit_scaled(d));
    while (chain.back().degree() > 0) {
        const auto& prev = chain[chain.size() - 2];
        const auto& cur = chain.back();
        std::vector<double> r = divide(prev, cur).remainder.coeffs();
        for (double& v : r) v = -v;
        trim_leading(r, kGcdThreshold);
        if (r.empty()) break;
        chain.push_back(unit_scaled(Polynomial(std::move(r))));
    }
    return chain;
}

int count_roots(std::span<const Polynomial> chain, double a, double b) {
    auto at = [&](double x) {
        if (std::isinf(x)) return variations_at_infinity(chain, x > 0);
        return variations_at(chain, x);
    };
    return at(a) - at(b);
}

std::vector<RealRoot> real_roots(const Polynomial& p, const RootOptions& opts) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "every real is a root of the zero polynomial");
    std::vector<RealRoot> roots;
    if (p.degree() == 0) return roots;
    if (p.degree() == 1) return {{-p.coeff(0) / p.coeff(1), 1}};

    const auto chain = sturm_chain(p);
    const double inf = std::numeric_limits<double>::infinity();
    const int total = count_roots(chain, -inf, inf);
    if (total <= 0) return roots;

    const double bound = cauchy_bound(p);
    // Depth-first over (lo, hi] so roots come out ascending.
    struct Span {
        double lo, hi;
        int count;
    };
    std::vector<Span> stack{{-bound, bound, total}};
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (s.count <= 0) continue;
        if (s.count == 1) {
            roots.push_back({refine_root(p, chain, s.lo, s.hi, opts.tau_root), 0});
            continue;
        }
        const double mid = 0.5 * (s.lo + s.hi);
        if (narrow_enough(s.lo, s.hi, opts.tau_root)) {
            // Cluster the chain cannot separate at this resolution.
            roots.push_back({mid, 0});
            continue;
        }
        const int left = count_roots(chain, s.lo, mid);
        stack.push_back({mid, s.hi, s.count - left});
        stack.push_back({s.lo, mid, left});
    }

    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const RealRoot& a, const RealRoot& b) { return a.value == b.value; }),
                roots.end());
    for (auto& r : roots) r.multiplicity = multiplicity_at(p, r.value);
    return roots;
}

std::vector<double> real_root_values(const Polynomial& p, const RootOptions& opts) {
    std::vector<double> out;
    for (const auto& r : real_roots(p, opts)) out.push_back(r.value);
    return out;
}

double extremum_abs(const Polynomial& p, double a, double b, Extremum mode) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (p.is_zero()) return 0.0;

    std::vector<double> points{lo};
    const Polynomial d = derivative(p);
    if (!d.is_zero() && lo < hi) {
        for (double c : real_root_values(d))
            if (c > lo && c < hi) points.push_back(c);
    }
    points.push_back(hi);

    std::vector<double> values;
    values.reserve(points.size());
    for (double x : points) values.push_back(p(x));

    if (mode == Extremum::sup) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    // p is monotone between consecutive candidates, so a root inside the
    // interval shows up as a zero or a sign change among them.
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0.0) return 0.0;
        if (i > 0 && sign_of(values[i]) != sign_of(values[i - 1])) return 0.0;
    }
    double m = std::abs(values.front());
    for (double v : values) m = std::min(m, std::abs(v));
    return m;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
            throw Error(ErrorCode::InvalidArgument,
                        "bad number '" + std::string(tok) + "' in \"" + std::string(text) + "\"");
        values.push_back(v);
        pos = end + 1;
    }
    return values;
}

Polynomial parse_polynomial(std::string_view text) { return Polynomial(parse_real_list(text)); }

std::string to_csv(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += format_number(p.coeffs()[i]);
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        const double v = c[k];
        if (v == 0.0) continue;
        const double mag = std::abs(v);
        if (out.empty()) {
            if (v < 0) out += '-';
        } else {
            out += v < 0 ? '-' : '+';
        }
        if (k == 0 || mag != 1.0) out += format_number(mag);
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

}  // namespace explab
