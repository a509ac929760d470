#pragma once

#include <tanvar/curves.hpp>
#include <tanvar/jet2.hpp>
#include <tanvar/surfaces.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tanvar::cli {

/// Malformed input document; `line` is 1-based within the whole input text.
struct DocumentError : std::invalid_argument {
    DocumentError(std::size_t line, const std::string& what);
    std::size_t line;
};

enum class DocumentKind { Curve, Surface, Matrix };
std::string to_string(DocumentKind k);

struct Term {
    std::vector<unsigned> exponents; // one per variable
    Rational coeff;
};

struct Component {
    std::string name;
    std::vector<Term> terms;
};

/// One germ description. See docs/germ-format.md for the grammar.
struct GermDocument {
    DocumentKind kind = DocumentKind::Curve;
    std::optional<std::string> name;
    std::vector<std::string> variables;
    unsigned truncation = 0;
    std::vector<Component> components; // curves: x1..x_{N+1}; surfaces: x3, x4 or phi, psi
    std::optional<std::string> class_tag;
    std::optional<unsigned> ambient;
    std::optional<std::array<Rational, 4>> quad;
    std::optional<SymMatrix3> matrix;
    std::size_t first_line = 1;
};

/// Splits on lines consisting of "---" and parses every non-empty document.
std::vector<GermDocument> parse_documents(std::string_view text);
/// Exactly one document.
GermDocument parse_document(std::string_view text);

struct CurveInput {
    CurveGerm curve;
    /// Constant terms subtracted to centre the chart at the origin (empty if none were present).
    std::vector<Rational> shift;
};

/// Curve components in order x1, x2, ...; constant terms are moved into `shift`.
CurveInput to_curve(const GermDocument& doc);

/// x3, x4 given directly, or quad data plus phi/psi.
LegendreSurfaceGerm to_surface(const GermDocument& doc);

SymMatrix3 to_matrix(const GermDocument& doc);

/// "a11 a12 a13 a22 a23 a33" (whitespace or comma separated).
SymMatrix3 parse_matrix(std::string_view text);

} // namespace tanvar::cli
