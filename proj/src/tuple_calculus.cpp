#include "expansionlab/tuple_calculus.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "expansionlab/error.hpp"

namespace explab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw Error(ErrorCode::LengthMismatch, std::string(what) + ": lengths " + std::to_string(a) +
                                                   " and " + std::to_string(b) + " differ");
}

}  // namespace

Polynomial PolyTuple::sum() const {
    Polynomial acc;
    for (const auto& f : components_) acc = acc + f;
    return acc;
}

PointTuple::PointTuple(std::vector<double> coords) : coords_(std::move(coords)) {
    double sq = 0.0;
    for (double c : coords_) sq += c * c;
    norm_ = std::sqrt(sq);
}

PointTuple PointTuple::ones(std::size_t n) { return PointTuple(std::vector<double>(n, 1.0)); }

double dot(const PointTuple& a, const PointTuple& b) {
    require_same_length(a.size(), b.size(), "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double distance(const PointTuple& a, const PointTuple& b) {
    require_same_length(a.size(), b.size(), "distance");
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

PointTuple operator+(const PointTuple& a, const PointTuple& b) {
    require_same_length(a.size(), b.size(), "sum");
    std::vector<double> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return PointTuple(std::move(c));
}

PolyTuple nabla(const PolyTuple& s) {
    std::vector<Polynomial> out;
    out.reserve(s.size());
    for (const auto& f : s) out.push_back(derivative(f));
    return PolyTuple(std::move(out));
}

PointTuple nabla_at(const PolyTuple& s, double a) {
    std::vector<double> out;
    out.reserve(s.size());
    for (const auto& f : s) out.push_back(derivative(f)(a));
    return PointTuple(std::move(out));
}

PolyTuple delta(const PolyTuple& s) {
    std::vector<Polynomial> out;
    out.reserve(s.size());
    for (const auto& f : s) out.push_back(antiderivative(f));
    return PolyTuple(std::move(out));
}

PointTuple delta_between(const PolyTuple& s, const PointTuple& from, const PointTuple& to) {
    require_same_length(s.size(), from.size(), "delta_between");
    require_same_length(s.size(), to.size(), "delta_between");
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = definite_integral(s[i], from[i], to[i]);
    return PointTuple(std::move(out));
}

PolyTuple tuple_repr(const Polynomial& f) {
    const int n = f.degree();
    if (n < 2)
        throw Error(ErrorCode::DegreeTooLow,
                    "tuple representation needs degree >= 2, got " + std::to_string(n));
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 2; --k) out.push_back(Polynomial::monomial(f.coeff(k), static_cast<std::size_t>(k)));
    out.push_back(Polynomial{f.coeff(0), f.coeff(1)});
    return PolyTuple(std::move(out));
}

PolyTuple parse_tuple(std::string_view text) {
    std::vector<Polynomial> comps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        comps.push_back(parse_polynomial(trim(text.substr(pos, end - pos))));
        pos = end + 1;
    }
    return PolyTuple(std::move(comps));
}

PointTuple parse_point(std::string_view text) { return PointTuple(parse_real_list(text)); }

std::string to_string(const PolyTuple& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    return out + ")";
}

}  // namespace explab
