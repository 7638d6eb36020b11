#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expansionlab/polynomial.hpp"

namespace explab {

/// Ordered tuple (f_1, ..., f_n) of polynomials.
class PolyTuple {
public:
    PolyTuple() = default;
    explicit PolyTuple(std::vector<Polynomial> components) : components_(std::move(components)) {}
    PolyTuple(std::initializer_list<Polynomial> components) : components_(components) {}

    std::size_t size() const noexcept { return components_.size(); }
    const Polynomial& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Polynomial>& components() const noexcept { return components_; }
    auto begin() const noexcept { return components_.begin(); }
    auto end() const noexcept { return components_.end(); }

    /// Componentwise sum f_1 + ... + f_n.
    Polynomial sum() const;

    friend bool operator==(const PolyTuple&, const PolyTuple&) = default;

private:
    std::vector<Polynomial> components_;
};

/// Real n-tuple with its Euclidean norm cached at construction.
class PointTuple {
public:
    PointTuple() = default;
    explicit PointTuple(std::vector<double> coords);
    PointTuple(std::initializer_list<double> coords) : PointTuple(std::vector<double>(coords)) {}

    /// The all-ones tuple (1, ..., 1) of length n.
    static PointTuple ones(std::size_t n);

    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const noexcept { return coords_; }
    double norm() const noexcept { return norm_; }

    friend bool operator==(const PointTuple& a, const PointTuple& b) { return a.coords_ == b.coords_; }

private:
    std::vector<double> coords_;
    double norm_ = 0.0;
};

double dot(const PointTuple& a, const PointTuple& b);
/// ||a - b||
double distance(const PointTuple& a, const PointTuple& b);
PointTuple operator+(const PointTuple& a, const PointTuple& b);

PolyTuple nabla(const PolyTuple& s);
/// (f_1'(a), ..., f_n'(a)), all components at the same scalar.
PointTuple nabla_at(const PolyTuple& s, double a);
PolyTuple delta(const PolyTuple& s);

/// Componentwise signed integrals: entry i is the integral of f_i from
/// from[i] to to[i]. Throws LengthMismatch.
PointTuple delta_between(const PolyTuple& s, const PointTuple& from, const PointTuple& to);

/// (c_n x^n, ..., c_2 x^2, c_1 x + c_0); zero coefficients stay as zero
/// components so the result always has degree(f) entries.
/// Throws DegreeTooLow when degree(f) < 2.
PolyTuple tuple_repr(const Polynomial& f);

/// "0,0,0,1; 0,0,1; 1,-1"
PolyTuple parse_tuple(std::string_view text);
PointTuple parse_point(std::string_view text);
std::string to_string(const PolyTuple& s);

}  // namespace explab
