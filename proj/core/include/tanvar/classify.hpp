#pragma once

#include <tanvar/curves.hpp>
#include <tanvar/jet2.hpp>
#include <tanvar/strata.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tanvar {

enum class SingularityClass {
    CuspidalEdge,
    FoldedUmbrella,
    OpenFoldedUmbrella,
    Swallowtail,
    OpenSwallowtail,
    MondSurface,
    OpenMondSurface,
    UnfurledMondSurface,
    GenericFoldedPleat,
    Unclassified,
};

std::string to_string(SingularityClass c);
SingularityClass parse_singularity(std::string_view name);

/// Caveat attached to GenericFoldedPleat: the type admits two diffeomorphism classes.
inline constexpr std::string_view kFoldedPleatCaveat =
    "diffeomorphism class not determined by type: two classes exist (generic and non-generic folded pleat)";

struct Classification {
    SingularityClass singularity;
    bool generic;
    std::optional<std::string> caveat;
};

/// Lookup of the tangent-variety singularity from the type; lengths must match the class.
Classification classify(const TypeSequence& a, const CurveClass& c);

/// Type-only lookup, without the genericity flag; `contact` enables the (2,3,5) entry.
SingularityClass classify_type(const TypeSequence& a, bool contact);

/// Polynomial parametrizations of a singularity. The (s,t) chart is the tangent map of
/// the monomial curve (Var::first = s); the (u,x) chart is given where one is known
/// (Var::first = u). Both are zero-padded to the ambient dimension.
struct NormalForm {
    SingularityClass singularity;
    std::size_t ambient_dim;
    std::vector<Jet2> st_chart;
    std::optional<std::vector<Jet2>> ux_chart;
    bool certified; // false for the folded pleat representative
};

/// Throws std::invalid_argument for Unclassified or an ambient dimension that is too small.
NormalForm normal_form(SingularityClass c, std::size_t ambient_dim);

/// Minimal ambient dimension (number of affine coordinates) of a singularity's normal form.
std::size_t minimal_ambient(SingularityClass c);

/// The type whose monomial curve generates the (s,t) chart.
TypeSequence representative_type(SingularityClass c);

/// t -> (t^{a_1}, ..., t^{a_m}), with truncation defaulting to 2 a_m.
CurveGerm normal_form_curve(const TypeSequence& a, std::optional<unsigned> truncation = std::nullopt);

} // namespace tanvar
