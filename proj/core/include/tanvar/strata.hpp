#pragma once

#include <tanvar/curves.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tanvar {

/// The five curve classes whose type strata carry a codimension formula.
struct CurveClass {
    enum class Tag { Plain, TangentFramed, TPNFramed, OsculatingFramed, ContactOsculating };

    Tag tag;
    /// N for curves in RP^{N+1}; n for contact curves in RP^{2n+1}.
    unsigned dim;

    static CurveClass plain(unsigned N) { return {Tag::Plain, N}; }
    static CurveClass tangent_framed(unsigned N) { return {Tag::TangentFramed, N}; }
    static CurveClass tpn_framed(unsigned N) { return {Tag::TPNFramed, N}; }
    static CurveClass osculating_framed(unsigned N) { return {Tag::OsculatingFramed, N}; }
    static CurveClass contact(unsigned n) { return {Tag::ContactOsculating, n}; }

    /// Length of a type sequence in this class: N+1, or 2n+1 for contact curves.
    std::size_t type_length() const;
    /// Flag depth k of the canonical system C_{1,...,k+1}; 0 for Plain, n for contact.
    unsigned flag_depth() const;
    bool is_contact() const { return tag == Tag::ContactOsculating; }

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

std::string to_string(CurveClass::Tag tag);
/// Accepts plain, tangent, tpn, osculating, contact (and the tag names).
CurveClass::Tag parse_class_tag(std::string_view name);

/// Thrown for length mismatches and out-of-range parameters.
struct StrataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Σ (a_i - i).
unsigned codim_plain(const TypeSequence& a, unsigned N);

/// Σ_{i=k}^{N+1} (a_i - i) - (N-k+1)(a_k - k), 1 <= k <= N.
unsigned codim_flag(const TypeSequence& a, unsigned k, unsigned N);

struct LagrangianOrders {
    std::vector<unsigned> u;
    unsigned v;

    friend bool operator==(const LagrangianOrders&, const LagrangianOrders&) = default;
};

struct Inadmissible {
    std::string reason;
};

/// Checks a_{n+j} = a_{n+1} + a_n - a_{n+1-j} (j = 2..n+1, a_0 = 0) and recovers the orders.
std::variant<LagrangianOrders, Inadmissible> lagrangian_admissible(const TypeSequence& a, unsigned n);

/// a_{n+1} - (n+1); throws StrataError for inadmissible types.
unsigned codim_lagrangian(const TypeSequence& a, unsigned n);

TypeSequence orders_to_type(const LagrangianOrders& o);

/// Codimension under the class's formula, or Inadmissible for contact types violating the constraint.
std::variant<unsigned, Inadmissible> codim(const TypeSequence& a, const CurveClass& c);

/// All types of codimension <= 1 in the class, sorted lexicographically. The search
/// covers strictly increasing sequences with a_i <= i+2, which contains every such type.
std::vector<TypeSequence> enumerate_generic(const CurveClass& c);

bool is_generic(const TypeSequence& a, const CurveClass& c);

} // namespace tanvar
