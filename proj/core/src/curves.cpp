#include <tanvar/curves.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tanvar {

TypeSequence::TypeSequence(std::vector<unsigned> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] == 0) throw std::invalid_argument("type entries must be positive");
        if (i > 0 && entries_[i] <= entries_[i - 1]) {
            throw std::invalid_argument("type entries must be strictly increasing");
        }
    }
}

TypeSequence TypeSequence::parse(std::string_view text)
{
    std::vector<unsigned> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '(' || text[i] == ')' || text[i] == ',')) ++i;
    };
    skip();
    while (i < text.size()) {
        unsigned v = 0;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc()) throw ParseError("malformed type sequence: '" + std::string(text) + "'");
        out.push_back(v);
        i = static_cast<std::size_t>(p - text.data());
        if (i < text.size() && text[i] != ',' && text[i] != ' ' && text[i] != ')') {
            throw ParseError("malformed type sequence: '" + std::string(text) + "'");
        }
        skip();
    }
    if (out.empty()) throw ParseError("empty type sequence");
    try {
        return TypeSequence(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

TypeSequence TypeSequence::ordinary(unsigned m)
{
    std::vector<unsigned> v(m);
    for (unsigned i = 0; i < m; ++i) v[i] = i + 1;
    return TypeSequence(std::move(v));
}

bool TypeSequence::has_prefix(std::initializer_list<unsigned> prefix) const
{
    return prefix.size() <= entries_.size() && std::equal(prefix.begin(), prefix.end(), entries_.begin());
}

std::string TypeSequence::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ')';
}

CurveGerm::CurveGerm(std::vector<Jet1> components) : components_(std::move(components))
{
    if (components_.empty()) throw std::invalid_argument("a curve germ needs at least one component");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].truncation() != components_[0].truncation()) {
            throw JetError("curve components must share one truncation");
        }
        if (!tanvar::is_zero(components_[i][0])) {
            throw std::invalid_argument("component x" + std::to_string(i + 1) + " does not vanish at t=0");
        }
    }
}

RationalVector CurveGerm::coefficient_vector(unsigned k) const
{
    RationalVector v;
    v.reserve(components_.size());
    for (const auto& x : components_) v.push_back(x[k]);
    return v;
}

std::vector<Jet1> CurveGerm::homogeneous_lift() const
{
    std::vector<Jet1> lift;
    lift.reserve(components_.size() + 1);
    lift.push_back(Jet1::constant(1, truncation()));
    lift.insert(lift.end(), components_.begin(), components_.end());
    return lift;
}

CurveGerm CurveGerm::compose(const Jet1& phi) const
{
    std::vector<Jet1> out;
    for (const auto& x : components_) out.push_back(x.compose(phi));
    return CurveGerm(std::move(out));
}

std::string CurveGerm::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += ", ";
        s += components_[i].to_string();
    }
    return s + ')';
}

namespace {

// Shared rank filtration: feeds coefficient vectors c_first, c_first+1, ... and records
// the degree at which each new rank is reached until `target` is hit.
template <typename VectorAt>
TypeResult rank_filtration(std::size_t dim, std::size_t target, unsigned first, unsigned last, VectorAt at)
{
    EchelonBasis basis(dim);
    std::vector<unsigned> jumps;
    for (unsigned k = first; k <= last && jumps.size() < target; ++k) {
        if (basis.add(at(k)) && k > 0) jumps.push_back(k);
    }
    if (jumps.size() < target) return NotFiniteTypeUpTo{last};
    return TypeSequence(std::move(jumps));
}

} // namespace

TypeResult curve_type(const CurveGerm& gamma)
{
    return rank_filtration(gamma.ambient_dim(), gamma.ambient_dim(), 1, gamma.truncation(),
                           [&](unsigned k) { return gamma.coefficient_vector(k); });
}

TypeResult projective_type(const std::vector<Jet1>& lift)
{
    if (lift.size() < 2) throw std::invalid_argument("a homogeneous lift needs at least two components");
    const unsigned K = lift.front().truncation();
    for (const auto& j : lift) {
        if (j.truncation() != K) throw JetError("lift components must share one truncation");
    }
    auto at = [&](unsigned k) {
        RationalVector v;
        for (const auto& j : lift) v.push_back(j[k]);
        return v;
    };
    const auto c0 = at(0);
    if (std::all_of(c0.begin(), c0.end(), [](const Rational& r) { return tanvar::is_zero(r); })) {
        throw std::invalid_argument("homogeneous lift vanishes at t=0");
    }
    return rank_filtration(lift.size(), lift.size() - 1, 0, K, at);
}

NotFiniteTypeError::NotFiniteTypeError(unsigned k)
    : JetError("curve is not of finite type up to truncation " + std::to_string(k))
{
}

TypeSequence require_type(const CurveGerm& gamma)
{
    auto r = curve_type(gamma);
    if (auto* nf = std::get_if<NotFiniteTypeUpTo>(&r)) throw NotFiniteTypeError(nf->truncation);
    return std::get<TypeSequence>(r);
}

NormalizedCurve normalize(const CurveGerm& gamma)
{
    const TypeSequence type = require_type(gamma);
    const std::size_t m = gamma.ambient_dim();
    RationalMatrix basis(m, RationalVector(m));
    for (std::size_t j = 0; j < m; ++j) {
        const auto c = gamma.coefficient_vector(type.a(j + 1));
        for (std::size_t i = 0; i < m; ++i) basis[i][j] = c[i];
    }
    RationalMatrix inv = inverse(basis);
    std::vector<Jet1> out;
    for (std::size_t i = 0; i < m; ++i) {
        Jet1 y(gamma.truncation());
        for (std::size_t j = 0; j < m; ++j) {
            if (!tanvar::is_zero(inv[i][j])) y += inv[i][j] * gamma.components()[j];
        }
        out.push_back(std::move(y));
    }
    return {CurveGerm(std::move(out)), std::move(inv), type};
}

FlagFrame::FlagFrame(std::vector<std::vector<Jet1>> columns, TypeSequence type)
    : columns_(std::move(columns)), type_(std::move(type))
{
    if (columns_.empty() || columns_.size() != type_.size() + 1) {
        throw std::invalid_argument("flag frame needs one column per type entry plus the lift");
    }
}

RationalMatrix FlagFrame::at_origin() const
{
    const std::size_t n = columns_.size();
    RationalMatrix m(n, RationalVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = columns_[j][i][0];
    }
    return m;
}

std::vector<RationalVector> FlagFrame::subspace_at_origin(std::size_t i) const
{
    if (i == 0 || i > columns_.size()) throw std::out_of_range("flag index out of range");
    std::vector<RationalVector> out;
    for (std::size_t j = 0; j < i; ++j) {
        RationalVector v;
        for (const auto& entry : columns_[j]) v.push_back(entry[0]);
        out.push_back(std::move(v));
    }
    return out;
}

FlagFrame flag_lift(const CurveGerm& gamma)
{
    const TypeSequence type = require_type(gamma);
    const unsigned K = gamma.truncation();
    const unsigned top = type.a(type.size());
    if (top > K) throw NotFiniteTypeError(K);
    const unsigned common = K - top;
    const auto lift = gamma.homogeneous_lift();

    std::vector<std::vector<Jet1>> columns;
    std::vector<Jet1> first;
    for (const auto& j : lift) first.push_back(j.truncated(common));
    columns.push_back(std::move(first));
    for (unsigned a : type.entries()) {
        std::vector<Jet1> col;
        const Rational scale = 1 / factorial(a);
        for (const auto& j : lift) col.push_back((j.derivative(a) * scale).truncated(common));
        columns.push_back(std::move(col));
    }
    return FlagFrame(std::move(columns), type);
}

} // namespace tanvar
