#pragma once

#include "germ_document.hpp"
#include "mesh.hpp"
#include "report.hpp"

#include <tanvar/classify.hpp>
#include <tanvar/strata.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tanvar::cli {

/// Class flags as given on the command line. `dim` is N (or n for contact curves);
/// `ambient` is dim V, i.e. the curve lives in RP^{ambient-1}.
struct ClassSelection {
    CurveClass::Tag tag = CurveClass::Tag::Plain;
    std::optional<unsigned> dim;
    std::optional<unsigned> ambient;
};

/// Resolves N or n from the selection and the type length; throws StrataError on mismatch.
CurveClass resolve_class(const ClassSelection& sel, std::optional<std::size_t> type_length);

struct MeshRequest {
    std::string path;
    SamplingOptions sampling;
};

/// Lower-case descriptive name ("open folded umbrella").
std::string display_name(SingularityClass c);

Report cmd_type(const GermDocument& doc);
Report cmd_classify(const TypeSequence& a, const ClassSelection& sel);
Report cmd_enumerate(const ClassSelection& sel);
Report cmd_codim(const TypeSequence& a, const ClassSelection& sel);
Report cmd_tangent(const GermDocument& doc, const std::optional<MeshRequest>& mesh);
Report cmd_opening(const GermDocument& doc);
Report cmd_surface(const GermDocument& doc);
Report cmd_veronese(const SymMatrix3& m);
Report cmd_morin(unsigned k, unsigned m);
Report cmd_family(const TypeSequence& a);

enum class Chart { ST, UX };
Report cmd_normal_form(SingularityClass c, std::optional<std::size_t> components, Chart chart,
                       const std::optional<MeshRequest>& mesh);

/// Runs the per-kind analysis on every document; errors in one document do not stop the rest.
Report cmd_batch(const std::vector<GermDocument>& docs);

} // namespace tanvar::cli
