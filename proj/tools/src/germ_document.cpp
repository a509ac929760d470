#include "germ_document.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace tanvar::cli {

DocumentError::DocumentError(std::size_t l, const std::string& what)
    : std::invalid_argument("line " + std::to_string(l) + ": " + what), line(l)
{
}

std::string to_string(DocumentKind k)
{
    switch (k) {
    case DocumentKind::Curve: return "curve";
    case DocumentKind::Surface: return "surface";
    case DocumentKind::Matrix: return "matrix";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_words(std::string_view s)
{
    std::string copy(s);
    std::replace(copy.begin(), copy.end(), ',', ' ');
    std::istringstream in(copy);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

unsigned parse_unsigned(std::string_view text, std::size_t line, std::string_view what)
{
    text = trim(text);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        text.size() > 6) {
        throw DocumentError(line, "expected a natural number for " + std::string(what) + ", got '" + std::string(text) + "'");
    }
    return static_cast<unsigned>(std::stoul(std::string(text)));
}

Rational rational_at(std::string_view text, std::size_t line)
{
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw DocumentError(line, e.what());
    }
}

// "(e1,e2) c ; (e1,e2) c ; ..." with one exponent per variable.
std::vector<Term> parse_terms(std::string_view text, std::size_t nvars, unsigned truncation, std::size_t line)
{
    std::vector<Term> terms;
    text = trim(text);
    if (text.empty() || text == "0") return terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = trim(text.substr(pos, end - pos));
        if (item.empty()) throw DocumentError(line, "empty term");
        if (item.front() != '(') throw DocumentError(line, "term must start with '(': '" + std::string(item) + "'");
        const std::size_t close = item.find(')');
        if (close == std::string_view::npos) throw DocumentError(line, "unbalanced '(' in '" + std::string(item) + "'");
        Term t;
        for (const auto& w : split_words(item.substr(1, close - 1))) t.exponents.push_back(parse_unsigned(w, line, "exponent"));
        if (t.exponents.size() != nvars) {
            throw DocumentError(line, "term '" + std::string(item) + "' needs " + std::to_string(nvars) + " exponent(s)");
        }
        unsigned degree = 0;
        for (unsigned e : t.exponents) degree += e;
        if (degree > truncation) {
            throw DocumentError(line, "term '" + std::string(item) + "' exceeds truncation " + std::to_string(truncation));
        }
        t.coeff = rational_at(item.substr(close + 1), line);
        terms.push_back(std::move(t));
        pos = end + 1;
    }
    return terms;
}

struct RawLine {
    std::size_t line;
    std::string key;
    std::string value;
};

GermDocument build(const std::vector<RawLine>& raw)
{
    GermDocument doc;
    doc.first_line = raw.front().line;
    std::optional<std::size_t> truncation_line;
    std::vector<const RawLine*> component_lines;
    bool have_kind = false;
    std::set<std::string> seen;

    for (const auto& r : raw) {
        if (!seen.insert(r.key).second) throw DocumentError(r.line, "duplicate key '" + r.key + "'");
        if (r.key == "kind") {
            const auto v = trim(r.value);
            if (v == "curve") doc.kind = DocumentKind::Curve;
            else if (v == "surface") doc.kind = DocumentKind::Surface;
            else if (v == "matrix") doc.kind = DocumentKind::Matrix;
            else throw DocumentError(r.line, "unknown kind '" + std::string(v) + "'");
            have_kind = true;
        } else if (r.key == "name") {
            doc.name = std::string(trim(r.value));
        } else if (r.key == "variables") {
            doc.variables = split_words(r.value);
        } else if (r.key == "truncation") {
            doc.truncation = parse_unsigned(r.value, r.line, "truncation");
            truncation_line = r.line;
        } else if (r.key == "class") {
            doc.class_tag = std::string(trim(r.value));
        } else if (r.key == "ambient") {
            doc.ambient = parse_unsigned(r.value, r.line, "ambient");
        } else if (r.key == "quad") {
            const auto w = split_words(r.value);
            if (w.size() != 4) throw DocumentError(r.line, "quad needs four rationals a b c e");
            doc.quad = std::array<Rational, 4>{rational_at(w[0], r.line), rational_at(w[1], r.line),
                                               rational_at(w[2], r.line), rational_at(w[3], r.line)};
        } else if (r.key == "matrix") {
            try {
                doc.matrix = parse_matrix(r.value);
            } catch (const ParseError& e) {
                throw DocumentError(r.line, e.what());
            }
        } else if ((r.key.size() > 1 && r.key[0] == 'x' &&
                    std::all_of(r.key.begin() + 1, r.key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) ||
                   r.key == "phi" || r.key == "psi") {
            component_lines.push_back(&r);
        } else {
            throw DocumentError(r.line, "unknown key '" + r.key + "'");
        }
    }
    if (!have_kind) throw DocumentError(doc.first_line, "missing 'kind'");

    if (doc.kind == DocumentKind::Matrix) {
        if (!doc.matrix) throw DocumentError(doc.first_line, "matrix document needs a 'matrix' line");
        if (!component_lines.empty()) throw DocumentError(component_lines.front()->line, "matrix documents take no components");
        return doc;
    }
    if (doc.variables.empty()) doc.variables = doc.kind == DocumentKind::Curve ? std::vector<std::string>{"t"}
                                                                                : std::vector<std::string>{"u", "v"};
    const std::size_t nvars = doc.kind == DocumentKind::Curve ? 1 : 2;
    if (doc.variables.size() != nvars) {
        throw DocumentError(doc.first_line, to_string(doc.kind) + " documents need " + std::to_string(nvars) + " variable(s)");
    }
    if (!truncation_line) throw DocumentError(doc.first_line, "missing 'truncation'");
    if (doc.kind == DocumentKind::Surface && doc.truncation > kMaxJet2Truncation) {
        throw DocumentError(*truncation_line, "truncation above " + std::to_string(kMaxJet2Truncation));
    }

    for (const RawLine* r : component_lines) {
        for (const auto& c : doc.components) {
            if (c.name == r->key) throw DocumentError(r->line, "duplicate component '" + r->key + "'");
        }
        doc.components.push_back({r->key, parse_terms(r->value, nvars, doc.truncation, r->line)});
    }

    if (doc.kind == DocumentKind::Curve) {
        for (std::size_t i = 0; i < doc.components.size(); ++i) {
            const std::string want = "x" + std::to_string(i + 1);
            if (doc.components[i].name != want) {
                throw DocumentError(component_lines[i]->line, "expected component '" + want + "', got '" +
                                                                  doc.components[i].name + "'");
            }
        }
        if (doc.components.empty()) throw DocumentError(doc.first_line, "curve document has no components");
    } else {
        bool direct = false, perturbation = false;
        for (const auto& c : doc.components) {
            if (c.name == "x3" || c.name == "x4") direct = true;
            else if (c.name == "phi" || c.name == "psi") perturbation = true;
            else throw DocumentError(doc.first_line, "surface documents take x3, x4 or quad with phi, psi");
        }
        if (direct && (perturbation || doc.quad)) {
            throw DocumentError(doc.first_line, "give either x3/x4 or quad with phi/psi, not both");
        }
        if (!direct && !doc.quad) throw DocumentError(doc.first_line, "surface document needs 'quad' or x3/x4");
    }
    return doc;
}

Jet1 jet1_from(const std::vector<Term>& terms, unsigned K)
{
    Jet1 j(K);
    for (const auto& t : terms) j.set(t.exponents[0], j[t.exponents[0]] + t.coeff);
    return j;
}

Jet2 jet2_from(const std::vector<Term>& terms, unsigned K)
{
    Jet2 j(K);
    for (const auto& t : terms) {
        j.set(t.exponents[0], t.exponents[1], j.coeff(t.exponents[0], t.exponents[1]) + t.coeff);
    }
    return j;
}

const Component* find(const GermDocument& doc, std::string_view name)
{
    for (const auto& c : doc.components) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

} // namespace

std::vector<GermDocument> parse_documents(std::string_view text)
{
    std::vector<GermDocument> docs;
    std::vector<RawLine> current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto flush = [&] {
        if (!current.empty()) docs.push_back(build(current));
        current.clear();
    };
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line == "---") {
            flush();
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) throw DocumentError(line_no, "expected 'key: value'");
        current.push_back({line_no, std::string(trim(line.substr(0, colon))), std::string(trim(line.substr(colon + 1)))});
    }
    flush();
    return docs;
}

GermDocument parse_document(std::string_view text)
{
    auto docs = parse_documents(text);
    if (docs.size() != 1) {
        throw DocumentError(1, "expected exactly one document, found " + std::to_string(docs.size()));
    }
    return std::move(docs.front());
}

CurveInput to_curve(const GermDocument& doc)
{
    if (doc.kind != DocumentKind::Curve) throw DocumentError(doc.first_line, "expected a curve document");
    std::vector<Jet1> comps;
    std::vector<Rational> shift;
    bool shifted = false;
    for (const auto& c : doc.components) {
        Jet1 j = jet1_from(c.terms, doc.truncation);
        shift.push_back(j[0]);
        shifted = shifted || !tanvar::is_zero(j[0]);
        j.set(0, 0);
        comps.push_back(std::move(j));
    }
    if (!shifted) shift.clear();
    return {CurveGerm(std::move(comps)), std::move(shift)};
}

LegendreSurfaceGerm to_surface(const GermDocument& doc)
{
    if (doc.kind != DocumentKind::Surface) throw DocumentError(doc.first_line, "expected a surface document");
    const unsigned K = doc.truncation;
    if (doc.quad) {
        const auto& q = *doc.quad;
        const Component* phi = find(doc, "phi");
        const Component* psi = find(doc, "psi");
        return legendre_from_quad(q[0], q[1], q[2], q[3], phi ? jet2_from(phi->terms, K) : Jet2(K),
                                  psi ? jet2_from(psi->terms, K) : Jet2(K));
    }
    const Component* x3 = find(doc, "x3");
    const Component* x4 = find(doc, "x4");
    return complete_to_legendre(x3 ? jet2_from(x3->terms, K) : Jet2(K), x4 ? jet2_from(x4->terms, K) : Jet2(K));
}

SymMatrix3 to_matrix(const GermDocument& doc)
{
    if (doc.kind != DocumentKind::Matrix || !doc.matrix) throw DocumentError(doc.first_line, "expected a matrix document");
    return *doc.matrix;
}

SymMatrix3 parse_matrix(std::string_view text)
{
    const auto w = split_words(text);
    if (w.size() != 6) throw ParseError("matrix needs six rationals a11 a12 a13 a22 a23 a33");
    return {parse_rational(w[0]), parse_rational(w[1]), parse_rational(w[2]),
            parse_rational(w[3]), parse_rational(w[4]), parse_rational(w[5])};
}

} // namespace tanvar::cli
