#include <tanvar/classify.hpp>

#include <array>
#include <stdexcept>

namespace tanvar {

std::string to_string(SingularityClass c)
{
    switch (c) {
    case SingularityClass::CuspidalEdge: return "CuspidalEdge";
    case SingularityClass::FoldedUmbrella: return "FoldedUmbrella";
    case SingularityClass::OpenFoldedUmbrella: return "OpenFoldedUmbrella";
    case SingularityClass::Swallowtail: return "Swallowtail";
    case SingularityClass::OpenSwallowtail: return "OpenSwallowtail";
    case SingularityClass::MondSurface: return "MondSurface";
    case SingularityClass::OpenMondSurface: return "OpenMondSurface";
    case SingularityClass::UnfurledMondSurface: return "UnfurledMondSurface";
    case SingularityClass::GenericFoldedPleat: return "GenericFoldedPleat";
    case SingularityClass::Unclassified: return "Unclassified";
    }
    return "?";
}

SingularityClass parse_singularity(std::string_view name)
{
    for (int i = 0; i <= static_cast<int>(SingularityClass::Unclassified); ++i) {
        const auto c = static_cast<SingularityClass>(i);
        if (to_string(c) == name) return c;
    }
    throw std::invalid_argument("unknown singularity '" + std::string(name) + "'");
}

SingularityClass classify_type(const TypeSequence& a, bool contact)
{
    using S = SingularityClass;
    if (a.size() == 3) {
        if (a.has_prefix({1, 2, 3})) return S::CuspidalEdge;
        if (a.has_prefix({1, 2, 4})) return S::FoldedUmbrella;
        if (a.has_prefix({2, 3, 4})) return S::Swallowtail;
        if (a.has_prefix({1, 3, 4})) return S::MondSurface;
        if (contact && a.has_prefix({2, 3, 5})) return S::GenericFoldedPleat;
        return S::Unclassified;
    }
    if (a.size() >= 4) {
        if (a.has_prefix({1, 2, 3})) return S::CuspidalEdge;
        if (a.has_prefix({1, 3, 4, 5})) return S::OpenMondSurface;
        if (a.has_prefix({2, 3, 4, 5})) return S::OpenSwallowtail;
        if (a.has_prefix({1, 2, 4, 5})) return S::OpenFoldedUmbrella;
        if (a.has_prefix({1, 3, 4, 6})) return S::UnfurledMondSurface;
    }
    return S::Unclassified;
}

Classification classify(const TypeSequence& a, const CurveClass& c)
{
    if (a.size() != c.type_length()) {
        throw StrataError("type " + a.to_string() + " has length " + std::to_string(a.size()) + " but the class expects " +
                          std::to_string(c.type_length()));
    }
    Classification out{classify_type(a, c.is_contact()), is_generic(a, c), std::nullopt};
    if (out.singularity == SingularityClass::GenericFoldedPleat) out.caveat = std::string(kFoldedPleatCaveat);
    return out;
}

TypeSequence representative_type(SingularityClass c)
{
    using S = SingularityClass;
    switch (c) {
    case S::CuspidalEdge: return TypeSequence({1, 2, 3});
    case S::FoldedUmbrella: return TypeSequence({1, 2, 4});
    case S::Swallowtail: return TypeSequence({2, 3, 4});
    case S::MondSurface: return TypeSequence({1, 3, 4});
    case S::GenericFoldedPleat: return TypeSequence({2, 3, 5});
    case S::OpenSwallowtail: return TypeSequence({2, 3, 4, 5});
    case S::OpenMondSurface: return TypeSequence({1, 3, 4, 5});
    case S::OpenFoldedUmbrella: return TypeSequence({1, 2, 4, 5});
    case S::UnfurledMondSurface: return TypeSequence({1, 3, 4, 6});
    case S::Unclassified: break;
    }
    throw std::invalid_argument("Unclassified has no normal form");
}

std::size_t minimal_ambient(SingularityClass c)
{
    return representative_type(c).size();
}

namespace {

constexpr unsigned kChartDegree = 6;

struct Term {
    unsigned i, j; // exponents of the first and second variable
    Rational c;
};

Jet2 poly2(std::initializer_list<Term> terms, unsigned truncation)
{
    Jet2 j(truncation);
    for (const auto& t : terms) j.set(t.i, t.j, j.coeff(t.i, t.j) + t.c);
    return j;
}

// (u, x) charts; u is the first variable.
std::vector<Jet2> ux_chart(SingularityClass c, unsigned K)
{
    using S = SingularityClass;
    const Jet2 u = poly2({{1, 0, 1}}, K);
    switch (c) {
    case S::CuspidalEdge: return {u, poly2({{0, 2, 1}}, K), poly2({{0, 3, 1}}, K)};
    case S::FoldedUmbrella:
        return {u, poly2({{0, 2, 1}, {1, 1, 1}}, K), poly2({{0, 4, Rational(1, 2)}, {1, 3, Rational(1, 3)}}, K)};
    case S::Swallowtail:
        return {u, poly2({{0, 3, 1}, {1, 1, 1}}, K), poly2({{0, 4, Rational(3, 4)}, {1, 2, Rational(1, 2)}}, K)};
    case S::OpenSwallowtail:
        return {u, poly2({{0, 3, 1}, {1, 1, 1}}, K), poly2({{0, 4, Rational(3, 4)}, {1, 2, Rational(1, 2)}}, K),
                poly2({{0, 5, Rational(3, 5)}, {1, 3, Rational(1, 3)}}, K)};
    case S::MondSurface:
        return {u, poly2({{0, 3, 1}, {1, 2, 1}}, K), poly2({{0, 4, Rational(3, 4)}, {1, 3, Rational(2, 3)}}, K)};
    case S::OpenMondSurface:
        return {u, poly2({{0, 3, 1}, {1, 2, 1}}, K), poly2({{0, 4, Rational(3, 4)}, {1, 3, Rational(2, 3)}}, K),
                poly2({{0, 5, Rational(3, 5)}, {1, 4, Rational(1, 2)}}, K)};
    case S::OpenFoldedUmbrella:
        return {u, poly2({{0, 2, 1}, {1, 1, 1}}, K), poly2({{0, 4, Rational(1, 2)}, {1, 3, Rational(1, 3)}}, K),
                poly2({{0, 5, Rational(2, 5)}, {1, 4, Rational(1, 4)}}, K)};
    case S::UnfurledMondSurface:
        return {u, poly2({{0, 3, 1}, {1, 2, 1}}, K), poly2({{0, 4, Rational(3, 4)}, {1, 3, Rational(2, 3)}}, K),
                poly2({{0, 6, Rational(1, 2)}, {1, 5, Rational(2, 5)}}, K)};
    default: return {};
    }
}

// (s,t) charts as displayed; s is the first variable.
std::vector<Jet2> st_chart(SingularityClass c, unsigned K)
{
    using S = SingularityClass;
    const Jet2 ts = poly2({{0, 1, 1}, {1, 0, 1}}, K);                      // t + s
    const Jet2 t2 = poly2({{0, 2, 1}, {1, 1, 2}}, K);                      // t^2 + 2st
    const Jet2 t2s = poly2({{0, 2, 1}, {1, 0, 2}}, K);                     // t^2 + 2s
    const Jet2 t3 = poly2({{0, 3, 1}, {1, 2, 3}}, K);                      // t^3 + 3st^2
    const Jet2 t3s = poly2({{0, 3, 1}, {1, 1, 3}}, K);                     // t^3 + 3st
    const Jet2 t4 = poly2({{0, 4, 1}, {1, 3, 4}}, K);                      // t^4 + 4st^3
    const Jet2 t4s = poly2({{0, 4, 1}, {1, 2, 4}}, K);                     // t^4 + 4st^2
    switch (c) {
    case S::CuspidalEdge: return {ts, t2, t3};
    case S::FoldedUmbrella: return {ts, t2, t4};
    case S::Swallowtail: return {t2s, t3s, t4s};
    case S::OpenSwallowtail: return {t2s, t3s, t4s, poly2({{0, 5, 1}, {1, 3, 5}}, K)};
    case S::MondSurface: return {ts, t3, t4};
    case S::OpenMondSurface: return {ts, t3, t4, poly2({{0, 5, 1}, {1, 4, 5}}, K)};
    case S::OpenFoldedUmbrella: return {ts, t2, t4, poly2({{0, 5, 1}, {1, 4, 5}}, K)};
    case S::UnfurledMondSurface: return {ts, t3, t4, poly2({{0, 6, 1}, {1, 5, 6}}, K)};
    case S::GenericFoldedPleat: return {t2s, t3s, poly2({{0, 5, 1}, {1, 3, 5}}, K)};
    case S::Unclassified: break;
    }
    return {};
}

} // namespace

CurveGerm normal_form_curve(const TypeSequence& a, std::optional<unsigned> truncation)
{
    if (a.size() == 0) throw std::invalid_argument("empty type");
    const unsigned K = truncation.value_or(2 * a.a(a.size()));
    std::vector<Jet1> comps;
    for (unsigned e : a.entries()) comps.push_back(Jet1::monomial(e, 1, K));
    return CurveGerm(std::move(comps));
}

NormalForm normal_form(SingularityClass c, std::size_t ambient_dim)
{
    const TypeSequence a = representative_type(c);
    if (ambient_dim < a.size()) {
        throw std::invalid_argument(to_string(c) + " needs at least " + std::to_string(a.size()) +
                                    " affine coordinates, got " + std::to_string(ambient_dim));
    }
    // Charts are built at the largest degree any of them uses, then cut to the chart's own degree.
    const unsigned K = a.a(a.size());
    auto cut = [K](std::vector<Jet2> v) {
        for (auto& j : v) j = j.truncated(K);
        return v;
    };
    std::vector<Jet2> st = cut(st_chart(c, kChartDegree));
    std::optional<std::vector<Jet2>> ux;
    if (c != SingularityClass::GenericFoldedPleat) ux = cut(ux_chart(c, kChartDegree));

    while (st.size() < ambient_dim) st.emplace_back(K);
    if (ux) {
        while (ux->size() < ambient_dim) ux->emplace_back(K);
    }
    return {c, ambient_dim, std::move(st), std::move(ux), c != SingularityClass::GenericFoldedPleat};
}

} // namespace tanvar
