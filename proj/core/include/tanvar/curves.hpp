#pragma once

#include <tanvar/jet1.hpp>
#include <tanvar/linalg.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tanvar {

/// Strictly increasing positive integers (a_1, ..., a_m).
class TypeSequence {
public:
    TypeSequence() = default;
    explicit TypeSequence(std::vector<unsigned> entries);

    /// Parses "1,2,4,5" or "(1, 2, 4, 5)".
    static TypeSequence parse(std::string_view text);
    /// (1, 2, ..., m).
    static TypeSequence ordinary(unsigned m);

    const std::vector<unsigned>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    /// 1-based access, matching a_i.
    unsigned a(std::size_t i) const { return entries_.at(i - 1); }
    bool has_prefix(std::initializer_list<unsigned> prefix) const;

    std::string to_string() const;

    friend auto operator<=>(const TypeSequence&, const TypeSequence&) = default;

private:
    std::vector<unsigned> entries_;
};

/// An affine chart (x_1(t), ..., x_{N+1}(t)) of a curve germ in RP^{N+1}, centred at the origin.
class CurveGerm {
public:
    explicit CurveGerm(std::vector<Jet1> components);

    const std::vector<Jet1>& components() const { return components_; }
    const Jet1& x(std::size_t i) const { return components_.at(i - 1); }
    /// N+1, the number of affine coordinates.
    std::size_t ambient_dim() const { return components_.size(); }
    unsigned truncation() const { return components_.front().truncation(); }

    /// Coefficient vector of t^k across all components.
    RationalVector coefficient_vector(unsigned k) const;
    /// Homogeneous lift (1, x_1, ..., x_{N+1}).
    std::vector<Jet1> homogeneous_lift() const;

    CurveGerm compose(const Jet1& phi) const;

    std::string to_string() const;

    friend bool operator==(const CurveGerm&, const CurveGerm&) = default;

private:
    std::vector<Jet1> components_;
};

struct NotFiniteTypeUpTo {
    unsigned truncation;
};

using TypeResult = std::variant<TypeSequence, NotFiniteTypeUpTo>;

/// a_i = least k with rank (γ'(0), ..., γ^(k)(0)) = i.
TypeResult curve_type(const CurveGerm& gamma);

/// Type from a homogeneous lift via ranks of (γ̃, γ̃', ..., γ̃^(r)) at 0.
TypeResult projective_type(const std::vector<Jet1>& lift);

struct NormalizedCurve {
    CurveGerm curve;
    /// y = change_of_coordinates * x.
    RationalMatrix change_of_coordinates;
    TypeSequence type;
};

/// Linear change of affine coordinates bringing γ to x_i = t^{a_i} + (higher terms free of t^{a_j}, j > i).
NormalizedCurve normalize(const CurveGerm& gamma);

/// The matrix A(t) = (γ̃, γ̃^(a_1)/a_1!, ..., γ̃^(a_{N+1})/a_{N+1}!) of Jet1 entries.
class FlagFrame {
public:
    FlagFrame(std::vector<std::vector<Jet1>> columns, TypeSequence type);

    const std::vector<std::vector<Jet1>>& columns() const { return columns_; }
    const TypeSequence& type() const { return type_; }
    std::size_t dimension() const { return columns_.size(); }
    unsigned truncation() const { return columns_.front().front().truncation(); }

    /// A(0) as a rational matrix (row-major).
    RationalMatrix at_origin() const;
    /// Basis of V_i(0): the first i columns of A(0).
    std::vector<RationalVector> subspace_at_origin(std::size_t i) const;

private:
    std::vector<std::vector<Jet1>> columns_;
    TypeSequence type_;
};

FlagFrame flag_lift(const CurveGerm& gamma);

/// Thrown where an operation needs a finite type and the jet does not exhibit one.
struct NotFiniteTypeError : JetError {
    explicit NotFiniteTypeError(unsigned k);
};

/// curve_type, throwing NotFiniteTypeError instead of returning the verdict.
TypeSequence require_type(const CurveGerm& gamma);

} // namespace tanvar
