#include "commands.hpp"

#include <tanvar/surfaces.hpp>
#include <tanvar/tangency.hpp>

#include <fstream>

namespace tanvar::cli {

using tanvar::to_string;

namespace {

using json = nlohmann::ordered_json;

std::string rat(const Rational& r)
{
    return to_string(r);
}

json type_json(const TypeSequence& a)
{
    return json(a.entries());
}

std::string jet2_text(const Jet2& j, std::string_view x, std::string_view y)
{
    return j.to_string(x, y) + " + O(" + std::to_string(j.truncation() + 1) + ")";
}

void write_mesh(const Mesh& mesh, const MeshRequest& req, Report& r)
{
    std::ofstream out(req.path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open mesh output '" + req.path + "'");
    write_obj(out, mesh);
    if (!out) throw std::runtime_error("failed writing mesh output '" + req.path + "'");
    r.line("mesh " + req.path + ": " + std::to_string(mesh.vertices.size()) + " vertices, " +
           std::to_string(mesh.faces.size()) + " faces");
    r.data["mesh"] = {{"path", req.path},
                      {"vertices", mesh.vertices.size()},
                      {"faces", mesh.faces.size()},
                      {"coords", req.sampling.coords},
                      {"range", {req.sampling.lo, req.sampling.hi}},
                      {"grid", req.sampling.grid}};
}

CurveClass::Tag tag_of(const GermDocument& doc)
{
    return doc.class_tag ? parse_class_tag(*doc.class_tag) : CurveClass::Tag::Plain;
}

// Type of a curve document, reporting a centred chart when constant terms were present.
std::optional<TypeSequence> analyse_type(const GermDocument& doc, Report& r, CurveGerm* curve_out = nullptr)
{
    const CurveInput in = to_curve(doc);
    if (!in.shift.empty()) {
        std::string s;
        for (const auto& c : in.shift) s += (s.empty() ? "" : ",") + rat(c);
        r.line("chart shifted by (" + s + ") to centre the germ at the origin");
        json shift = json::array();
        for (const auto& c : in.shift) shift.push_back(rat(c));
        r.data["shift"] = shift;
    }
    if (curve_out) *curve_out = in.curve;
    const auto res = curve_type(in.curve);
    if (const auto* nf = std::get_if<NotFiniteTypeUpTo>(&res)) {
        r.line("not finite type up to " + std::to_string(nf->truncation));
        r.data["type"] = nullptr;
        r.data["not_finite_type_up_to"] = nf->truncation;
        r.escalate(kInconclusive);
        return std::nullopt;
    }
    const auto& a = std::get<TypeSequence>(res);
    r.line("type " + a.to_string());
    r.data["type"] = type_json(a);
    return a;
}

void add_classification(const TypeSequence& a, const CurveClass& c, Report& r)
{
    const Classification cls = classify(a, c);
    r.line(to_string(cls.singularity) + ", " + (cls.generic ? "generic" : "non-generic"));
    r.data["class"] = to_string(c.tag);
    r.data[c.is_contact() ? "n" : "N"] = c.dim;
    r.data["singularity"] = to_string(cls.singularity);
    r.data["generic"] = cls.generic;
    if (cls.caveat) {
        r.line("caveat: " + *cls.caveat);
        r.data["caveat"] = *cls.caveat;
    }
    if (cls.singularity == SingularityClass::Unclassified) r.escalate(kInconclusive);
}

} // namespace

std::string display_name(SingularityClass c)
{
    using S = SingularityClass;
    switch (c) {
    case S::CuspidalEdge: return "cuspidal edge";
    case S::FoldedUmbrella: return "folded umbrella";
    case S::OpenFoldedUmbrella: return "open folded umbrella";
    case S::Swallowtail: return "swallowtail";
    case S::OpenSwallowtail: return "open swallowtail";
    case S::MondSurface: return "Mond surface";
    case S::OpenMondSurface: return "open Mond surface";
    case S::UnfurledMondSurface: return "unfurled Mond surface";
    case S::GenericFoldedPleat: return "generic folded pleat";
    case S::Unclassified: return "unclassified";
    }
    return "?";
}

CurveClass resolve_class(const ClassSelection& sel, std::optional<std::size_t> type_length)
{
    const bool contact = sel.tag == CurveClass::Tag::ContactOsculating;
    std::optional<unsigned> dim = sel.dim;
    auto from_length = [&](std::size_t length) -> unsigned {
        if (length == 0) throw StrataError("empty type");
        if (contact) {
            if (length % 2 == 0) throw StrataError("contact types have odd length 2n+1, got " + std::to_string(length));
            return static_cast<unsigned>((length - 1) / 2);
        }
        return static_cast<unsigned>(length - 1);
    };
    if (sel.ambient) {
        if (*sel.ambient < 2) throw StrataError("ambient dimension must be at least 2");
        const unsigned implied = from_length(*sel.ambient - 1);
        if (dim && *dim != implied) {
            throw StrataError("ambient " + std::to_string(*sel.ambient) + " implies " + (contact ? "n=" : "N=") +
                              std::to_string(implied) + ", but " + std::to_string(*dim) + " was given");
        }
        dim = implied;
    }
    if (type_length) {
        const unsigned implied = from_length(*type_length);
        if (dim && *dim != implied) {
            throw StrataError("type of length " + std::to_string(*type_length) + " does not fit " +
                              (contact ? "n=" : "N=") + std::to_string(*dim));
        }
        dim = implied;
    }
    if (!dim) throw StrataError(std::string("give ") + (contact ? "--n" : "--N") + " or --ambient");
    const CurveClass c{sel.tag, *dim};
    if (c.dim == 0) throw StrataError("dimension parameter must be positive");
    if (!contact && c.flag_depth() > c.dim) {
        throw StrataError(to_string(c.tag) + " needs N >= " + std::to_string(c.flag_depth()));
    }
    return c;
}

Report cmd_type(const GermDocument& doc)
{
    Report r{"type"};
    analyse_type(doc, r);
    return r;
}

Report cmd_classify(const TypeSequence& a, const ClassSelection& sel)
{
    Report r{"classify"};
    const CurveClass c = resolve_class(sel, a.size());
    r.data["type"] = type_json(a);
    add_classification(a, c, r);
    return r;
}

Report cmd_enumerate(const ClassSelection& sel)
{
    Report r{"enumerate"};
    const CurveClass c = resolve_class(sel, std::nullopt);
    const auto types = enumerate_generic(c);
    r.data["class"] = to_string(c.tag);
    r.data[c.is_contact() ? "n" : "N"] = c.dim;
    json list = json::array();
    for (const auto& a : types) {
        const auto cod = std::get<unsigned>(codim(a, c));
        const auto sing = classify(a, c).singularity;
        r.line(a.to_string() + " codim " + std::to_string(cod) + " " + to_string(sing));
        list.push_back({{"type", type_json(a)}, {"codim", cod}, {"singularity", to_string(sing)}});
    }
    r.data["types"] = list;
    return r;
}

Report cmd_codim(const TypeSequence& a, const ClassSelection& sel)
{
    Report r{"codim"};
    const CurveClass c = resolve_class(sel, a.size());
    r.data["type"] = type_json(a);
    r.data["class"] = to_string(c.tag);
    const auto res = codim(a, c);
    if (const auto* bad = std::get_if<Inadmissible>(&res)) {
        r.line("inadmissible: " + bad->reason);
        r.data["codim"] = nullptr;
        r.data["inadmissible"] = bad->reason;
        r.escalate(kGuardFailure);
        return r;
    }
    r.line(std::to_string(std::get<unsigned>(res)));
    r.data["codim"] = std::get<unsigned>(res);
    return r;
}

namespace {

// The lift quotients W_i2/W_12, W_1i/W_12 need adapted coordinates (ord x1 = a1,
// ord W_12 = a1 + a2 - 3). Returns the normalized curve when the given chart is not adapted.
std::optional<CurveGerm> adapted_chart(const CurveGerm& curve, const TypeSequence& a)
{
    if (curve.ambient_dim() < 3) return std::nullopt;
    if (curve.x(1).order() == ExtOrder(a.a(1)) && wronskian(curve, 1, 2).order() == ExtOrder(a.a(1) + a.a(2) - 3)) {
        return std::nullopt;
    }
    return normalize(curve).curve;
}

} // namespace

Report cmd_tangent(const GermDocument& doc, const std::optional<MeshRequest>& mesh)
{
    Report r{"tangent"};
    CurveGerm curve({Jet1::variable(1)});
    const auto a = analyse_type(doc, r, &curve);
    if (!a) return r;

    const std::optional<CurveGerm> adapted_curve = adapted_chart(curve, *a);
    const bool adapted = !adapted_curve;
    std::optional<TangentMapGerm> lifted;

    std::optional<TangentMapGerm> tm;
    try {
        tm = tangent_map(curve);
        if (adapted_curve) lifted = tangent_map(*adapted_curve);
    } catch (const DivisibilityError& e) {
        r.line("not frontal up to " + std::to_string(curve.truncation()) + ": component x" + std::to_string(e.component) +
               " fails divisibility");
        r.data["frontal"] = false;
        r.data["component"] = e.component;
        r.escalate(kGuardFailure);
        return r;
    }
    const TangentMapGerm& t = *tm;
    json comps = json::array();
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        comps.push_back(t.components[i].to_string("s", "t"));
    }
    r.data["tangent_map"] = comps;

    const bool contact = doc.class_tag && tag_of(doc) == CurveClass::Tag::ContactOsculating;
    const SingularityClass sing = classify_type(*a, contact);

    const TangentMapGerm& lt = lifted ? *lifted : t;
    r.data["adapted_coordinates"] = adapted;
    LiftResult lift;
    try {
        lift = grassmann_lift(lt);
    } catch (const JetError&) {
        lift = NotFrontalUpTo{lt.source.truncation(), 2, "W_12 vanishes within truncation"};
    }
    if (const auto* nf = std::get_if<NotFrontalUpTo>(&lift)) {
        r.line("not frontal up to " + std::to_string(nf->truncation) + ": component x" + std::to_string(nf->component) +
               " fails divisibility (" + nf->reason + ")");
        r.data["frontal"] = false;
        r.data["component"] = nf->component;
        r.escalate(kGuardFailure);
    } else {
        const auto& coeffs = std::get<std::vector<LiftCoefficient>>(lift);
        unsigned verified = lt.components.front().truncation();
        json orders = json::array();
        std::vector<std::string> order_lines;
        for (const auto& c : coeffs) {
            const auto [ds, dt] = lift_residual(lt, c);
            if (!ds.is_zero() || !dt.is_zero()) throw std::logic_error("lift residual does not vanish");
            verified = std::min({verified, ds.truncation(), dt.truncation()});
            const std::string po = to_string(c.p.order()), qo = to_string(c.q.order());
            order_lines.push_back("P" + std::to_string(c.component) + " order " + po + ", Q" +
                                  std::to_string(c.component) + " order " + qo);
            orders.push_back({{"component", c.component}, {"P_order", po}, {"Q_order", qo}});
        }
        r.line("frontal up to " + std::to_string(verified) + "; " + display_name(sing) + " (type " + a->to_string() + ")");
        if (!adapted) r.line("lift computed in adapted coordinates");
        for (auto& l : order_lines) r.line(std::move(l));
        r.data["frontal"] = true;
        r.data["verified_order"] = verified;
        r.data["lift_orders"] = orders;
    }
    r.data["singularity"] = to_string(sing);

    if (mesh) {
        write_mesh(sample_map(t.components, mesh->sampling, "tangent map of " + curve.to_string()), *mesh, r);
    }
    return r;
}

Report cmd_opening(const GermDocument& doc)
{
    Report r{"opening"};
    CurveGerm curve({Jet1::variable(1)});
    const auto a = analyse_type(doc, r, &curve);
    if (!a) return r;
    const std::optional<CurveGerm> adapted_curve = adapted_chart(curve, *a);
    const TangentMapGerm t = tangent_map(adapted_curve ? *adapted_curve : curve);
    r.data["adapted_coordinates"] = !adapted_curve;
    if (adapted_curve) r.line("certificates computed in adapted coordinates");
    std::variant<std::vector<OpeningCertificate>, NotFrontalUpTo> res;
    try {
        res = opening_check(t);
    } catch (const JetError&) {
        res = NotFrontalUpTo{t.source.truncation(), 2, "W_12 vanishes within truncation"};
    }
    if (const auto* nf = std::get_if<NotFrontalUpTo>(&res)) {
        r.line("not frontal up to " + std::to_string(nf->truncation) + ": component x" + std::to_string(nf->component) +
               " fails divisibility (" + nf->reason + ")");
        r.data["certified"] = false;
        r.data["component"] = nf->component;
        r.escalate(kGuardFailure);
        return r;
    }
    const auto& certs = std::get<std::vector<OpeningCertificate>>(res);
    json list = json::array();
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const auto& c = certs[i];
        const bool ok = verify_certificate({t.components[0], t.components[1]}, t.components[i + 2], c);
        if (!ok) throw std::logic_error("opening certificate fails re-verification");
        const std::string name = "f" + std::to_string(i + 3);
        r.line("d" + name + " = p1 df1 + p2 df2 through order " + std::to_string(c.verified_order));
        r.line("  p1 = " + jet2_text(c.multipliers[0], "s", "t"));
        r.line("  p2 = " + jet2_text(c.multipliers[1], "s", "t"));
        list.push_back({{"component", name},
                        {"verified_order", c.verified_order},
                        {"p1", c.multipliers[0].to_string("s", "t")},
                        {"p2", c.multipliers[1].to_string("s", "t")}});
    }
    if (certs.empty()) r.line("no components beyond f2: nothing to certify");
    r.data["certified"] = true;
    r.data["certificates"] = list;
    return r;
}

Report cmd_surface(const GermDocument& doc)
{
    Report r{"surface"};
    const LegendreSurfaceGerm s = to_surface(doc);
    const auto cls = ordinary_point_class(s);
    r.data["quad"] = {rat(s.a), rat(s.b), rat(s.c), rat(s.e)};
    r.data["rank"] = s.quad_rank;
    r.data["point"] = to_string(cls.kind);
    r.data["H"] = rat(cls.h);
    r.data["x5"] = s.x5.to_string("u", "v");

    const auto g = transversal_slice(s);
    const auto saji = saji_verdict(g);
    r.line(to_string(cls.kind) + ", H=" + rat(cls.h) + ", " + to_string(saji.verdict));
    r.line("x5 = " + jet2_text(s.x5, "u", "v"));
    json slice = json::array();
    for (int i = 0; i < 3; ++i) {
        r.line("g" + std::to_string(i + 1) + " = " + jet2_text(g[i], "u", "v"));
        slice.push_back(g[i].to_string("u", "v"));
    }
    r.data["slice"] = slice;
    r.data["d4"] = to_string(saji.verdict);
    if (saji.hessian) r.data["lambda_hessian"] = rat(*saji.hessian);
    if (!saji.reason.empty()) {
        r.line("inconclusive: " + saji.reason);
        r.data["reason"] = saji.reason;
    }
    if (cls.kind == PointKind::NotOrdinary || saji.verdict == D4Verdict::Inconclusive) r.escalate(kInconclusive);
    return r;
}

Report cmd_veronese(const SymMatrix3& m)
{
    Report r{"veronese"};
    const auto v = veronese_membership(m);
    RationalMatrix a(3, RationalVector(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] = m.at(i, j);
    }
    r.line(to_string(v));
    r.data["matrix"] = {rat(m.a11), rat(m.a12), rat(m.a13), rat(m.a22), rat(m.a23), rat(m.a33)};
    r.data["rank"] = rank(a);
    r.data["membership"] = to_string(v);
    return r;
}

Report cmd_morin(unsigned k, unsigned m)
{
    Report r{"morin"};
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    const MorinOpening o = morin_versal_opening(k, m);
    r.data["k"] = k;
    r.data["m"] = m;
    r.data["variables"] = o.vars;
    r.line("F = " + o.f.to_string());
    r.data["F"] = o.f.to_string();
    json gs = json::array();
    for (std::size_t i = 0; i < o.g.size(); ++i) {
        r.line("G" + std::to_string(i + 1) + " = " + o.g[i].to_string());
        gs.push_back(o.g[i].to_string());
    }
    r.data["G"] = gs;
    r.line(std::to_string(o.generators.size()) + " opening generators:");
    json gens = json::array();
    for (const auto& g : o.generators) {
        r.line("  " + g.name + " = " + g.poly.to_string());
        gens.push_back({{"name", g.name}, {"poly", g.poly.to_string()}});
    }
    r.data["generators"] = gens;
    return r;
}

Report cmd_family(const TypeSequence& a)
{
    Report r{"family"};
    const auto sol = generating_family_tangent(a);
    r.data["type"] = type_json(a);
    r.data["pattern"] = sol.pattern;
    r.data["family"] = sol.family.to_string();
    r.line("pattern " + sol.pattern);
    r.line("F = " + sol.family.to_string());
    json xs = json::object();
    for (std::size_t i = 0; i < sol.solution.size(); ++i) {
        const std::string name = "x" + std::to_string(i + 2);
        r.line(name + " = " + sol.solution[i].to_string());
        xs[name] = sol.solution[i].to_string();
    }
    r.data["solution"] = xs;
    return r;
}

Report cmd_normal_form(SingularityClass c, std::optional<std::size_t> components, Chart chart,
                       const std::optional<MeshRequest>& mesh)
{
    Report r{"normal-form"};
    const NormalForm nf = normal_form(c, components.value_or(minimal_ambient(c)));
    r.data["singularity"] = to_string(c);
    r.data["components"] = nf.ambient_dim;
    r.data["certified"] = nf.certified;
    r.line(display_name(c) + " in R^" + std::to_string(nf.ambient_dim));
    if (!nf.certified) {
        r.line("caveat: " + std::string(kFoldedPleatCaveat));
        r.data["caveat"] = std::string(kFoldedPleatCaveat);
    }

    const std::vector<Jet2>* shown = &nf.st_chart;
    std::string x = "s", y = "t";
    if (chart == Chart::UX) {
        if (!nf.ux_chart) throw std::invalid_argument("no (u,x) chart is known for " + display_name(c));
        shown = &*nf.ux_chart;
        x = "u";
        y = "x";
    }
    r.data["chart"] = x + y;
    json comps = json::array();
    for (std::size_t i = 0; i < shown->size(); ++i) {
        const std::string text = (*shown)[i].to_string(x, y);
        r.line("f" + std::to_string(i + 1) + " = " + text);
        comps.push_back(text);
    }
    r.data["map"] = comps;
    if (mesh) write_mesh(sample_map(*shown, mesh->sampling, display_name(c) + " normal form"), *mesh, r);
    return r;
}

Report cmd_batch(const std::vector<GermDocument>& docs)
{
    Report r{"batch"};
    json results = json::array();
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const GermDocument& doc = docs[i];
        const std::string label = doc.name.value_or("#" + std::to_string(i + 1));
        Report sub;
        try {
            switch (doc.kind) {
            case DocumentKind::Curve: {
                sub = Report{"type"};
                const auto a = analyse_type(doc, sub);
                if (a) {
                    const ClassSelection sel{tag_of(doc), std::nullopt, doc.ambient};
                    add_classification(*a, resolve_class(sel, a->size()), sub);
                }
                break;
            }
            case DocumentKind::Surface: sub = cmd_surface(doc); break;
            case DocumentKind::Matrix: sub = cmd_veronese(to_matrix(doc)); break;
            }
        } catch (const std::exception& e) {
            sub = Report{"error"};
            sub.line(std::string("error: ") + e.what());
            sub.data["error"] = e.what();
            sub.escalate(kGuardFailure);
        }
        for (const auto& l : sub.lines) r.line("[" + label + "] " + l);
        json entry = {{"name", label}, {"kind", to_string(doc.kind)}, {"exit_code", sub.exit_code}};
        for (const auto& [k, v] : sub.data.items()) entry[k] = v;
        results.push_back(entry);
        r.escalate(sub.exit_code);
    }
    r.data["documents"] = results;
    return r;
}

} // namespace tanvar::cli
