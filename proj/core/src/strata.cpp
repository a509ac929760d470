#include <tanvar/strata.hpp>

#include <algorithm>
#include <cassert>

namespace tanvar {

std::size_t CurveClass::type_length() const
{
    return tag == Tag::ContactOsculating ? 2 * static_cast<std::size_t>(dim) + 1 : dim + 1;
}

unsigned CurveClass::flag_depth() const
{
    switch (tag) {
    case Tag::Plain: return 0;
    case Tag::TangentFramed: return 1;
    case Tag::TPNFramed: return 2;
    case Tag::OsculatingFramed: return dim;
    case Tag::ContactOsculating: return dim;
    }
    return 0;
}

std::string to_string(CurveClass::Tag tag)
{
    switch (tag) {
    case CurveClass::Tag::Plain: return "Plain";
    case CurveClass::Tag::TangentFramed: return "TangentFramed";
    case CurveClass::Tag::TPNFramed: return "TPNFramed";
    case CurveClass::Tag::OsculatingFramed: return "OsculatingFramed";
    case CurveClass::Tag::ContactOsculating: return "ContactOsculating";
    }
    return "?";
}

CurveClass::Tag parse_class_tag(std::string_view name)
{
    using T = CurveClass::Tag;
    if (name == "plain" || name == "Plain") return T::Plain;
    if (name == "tangent" || name == "TangentFramed") return T::TangentFramed;
    if (name == "tpn" || name == "TPNFramed") return T::TPNFramed;
    if (name == "osculating" || name == "OsculatingFramed") return T::OsculatingFramed;
    if (name == "contact" || name == "ContactOsculating") return T::ContactOsculating;
    throw StrataError("unknown curve class '" + std::string(name) + "'");
}

namespace {

void require_length(const TypeSequence& a, std::size_t want)
{
    if (a.size() != want) {
        throw StrataError("type " + a.to_string() + " has length " + std::to_string(a.size()) + ", expected " +
                          std::to_string(want));
    }
}

} // namespace

unsigned codim_plain(const TypeSequence& a, unsigned N)
{
    require_length(a, N + 1);
    unsigned s = 0;
    for (std::size_t i = 1; i <= a.size(); ++i) s += a.a(i) - static_cast<unsigned>(i);
    return s;
}

unsigned codim_flag(const TypeSequence& a, unsigned k, unsigned N)
{
    if (k < 1 || k > N) throw StrataError("flag depth k=" + std::to_string(k) + " outside 1.." + std::to_string(N));
    require_length(a, N + 1);
    // Written as (a_k - k) + Σ_{i>k} [(a_i - a_k) - (i - k)], every term non-negative.
    unsigned s = a.a(k) - k;
    for (unsigned i = k + 1; i <= N + 1; ++i) s += (a.a(i) - a.a(k)) - (i - k);
    return s;
}

std::variant<LagrangianOrders, Inadmissible> lagrangian_admissible(const TypeSequence& a, unsigned n)
{
    if (n == 0) throw StrataError("contact dimension n must be >= 1");
    require_length(a, 2 * static_cast<std::size_t>(n) + 1);
    auto at = [&](unsigned i) { return i == 0 ? 0U : a.a(i); };
    for (unsigned j = 2; j <= n + 1; ++j) {
        const unsigned want = at(n + 1) + at(n) - at(n + 1 - j);
        if (at(n + j) != want) {
            return Inadmissible{"a_" + std::to_string(n + j) + " = " + std::to_string(at(n + j)) + " but a_" +
                                std::to_string(n + 1) + " + a_" + std::to_string(n) + " - a_" +
                                std::to_string(n + 1 - j) + " = " + std::to_string(want)};
        }
    }
    LagrangianOrders o;
    for (unsigned i = 1; i <= n; ++i) o.u.push_back(at(i) - at(i - 1));
    o.v = at(n + 1) - at(n);
    if (orders_to_type(o) != a) return Inadmissible{"orders do not reproduce the type"};
    return o;
}

unsigned codim_lagrangian(const TypeSequence& a, unsigned n)
{
    auto r = lagrangian_admissible(a, n);
    if (auto* bad = std::get_if<Inadmissible>(&r)) throw StrataError("inadmissible contact type: " + bad->reason);
    return a.a(n + 1) - (n + 1);
}

TypeSequence orders_to_type(const LagrangianOrders& o)
{
    const std::size_t n = o.u.size();
    if (n == 0 || o.v == 0 || std::find(o.u.begin(), o.u.end(), 0U) != o.u.end()) {
        throw StrataError("Lagrangian orders must all be >= 1");
    }
    std::vector<unsigned> a;
    unsigned acc = 0;
    for (unsigned u : o.u) a.push_back(acc += u);
    const unsigned mid = acc + o.v;
    a.push_back(mid);
    unsigned tail = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        tail += o.u[n - j];
        a.push_back(mid + tail);
    }
    assert(std::is_sorted(a.begin(), a.end()) && std::adjacent_find(a.begin(), a.end()) == a.end());
    return TypeSequence(std::move(a));
}

std::variant<unsigned, Inadmissible> codim(const TypeSequence& a, const CurveClass& c)
{
    switch (c.tag) {
    case CurveClass::Tag::Plain: return codim_plain(a, c.dim);
    case CurveClass::Tag::ContactOsculating: {
        auto r = lagrangian_admissible(a, c.dim);
        if (auto* bad = std::get_if<Inadmissible>(&r)) return *bad;
        return a.a(c.dim + 1) - (c.dim + 1);
    }
    default: break;
    }
    if (c.flag_depth() > c.dim) {
        throw StrataError(to_string(c.tag) + " needs N >= " + std::to_string(c.flag_depth()));
    }
    return codim_flag(a, c.flag_depth(), c.dim);
}

namespace {

void extend(std::vector<unsigned>& prefix, std::size_t length, const CurveClass& c, std::vector<TypeSequence>& out)
{
    if (prefix.size() == length) {
        TypeSequence a(prefix);
        auto r = codim(a, c);
        if (auto* v = std::get_if<unsigned>(&r); v && *v <= 1) out.push_back(std::move(a));
        return;
    }
    const unsigned i = static_cast<unsigned>(prefix.size()) + 1;
    const unsigned lo = prefix.empty() ? 1 : prefix.back() + 1;
    for (unsigned v = lo; v <= i + 2; ++v) {
        prefix.push_back(v);
        extend(prefix, length, c, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<TypeSequence> enumerate_generic(const CurveClass& c)
{
    if (c.dim == 0) throw StrataError("class dimension must be >= 1");
    if (c.flag_depth() > c.dim) {
        throw StrataError(to_string(c.tag) + " needs N >= " + std::to_string(c.flag_depth()));
    }
    std::vector<TypeSequence> out;
    std::vector<unsigned> prefix;
    extend(prefix, c.type_length(), c, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_generic(const TypeSequence& a, const CurveClass& c)
{
    if (a.size() != c.type_length()) return false;
    auto r = codim(a, c);
    auto* v = std::get_if<unsigned>(&r);
    return v && *v <= 1;
}

} // namespace tanvar
