#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace tanvar;
using namespace tanvar::cli;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct MeshFlags {
    std::string path;
    std::string coords = "1,2,3";
    std::string range = "-1,1";
    unsigned grid = 50;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--mesh", path, "Write an OBJ mesh to this path");
        cmd->add_option("--coords", coords, "Three 1-based components to embed")->capture_default_str();
        cmd->add_option("--range", range, "Sampling interval lo,hi for both parameters")->capture_default_str();
        cmd->add_option("--grid", grid, "Samples per parameter")->capture_default_str()->check(CLI::Range(2U, 2000U));
    }

    std::optional<MeshRequest> request() const
    {
        if (path.empty()) return std::nullopt;
        MeshRequest req{path, {}};
        std::tie(req.sampling.lo, req.sampling.hi) = parse_range(range);
        req.sampling.grid = grid;
        req.sampling.coords = parse_coords(coords);
        return req;
    }
};

struct ClassFlags {
    std::string tag;
    std::optional<unsigned> N, n, ambient;

    void attach(CLI::App* cmd, bool required)
    {
        auto* opt = cmd->add_option("--class", tag, "plain, tangent, tpn, osculating or contact");
        if (required) opt->required();
        cmd->add_option("--N", N, "Curves in RP^{N+1}");
        cmd->add_option("--n", n, "Contact curves in RP^{2n+1}");
        cmd->add_option("--ambient", ambient, "dim V, for curves in P(V) = RP^{ambient-1}");
    }

    ClassSelection selection() const
    {
        ClassSelection sel;
        sel.tag = tag.empty() ? CurveClass::Tag::Plain : parse_class_tag(tag);
        const bool contact = sel.tag == CurveClass::Tag::ContactOsculating;
        if (contact && N) throw StrataError("contact curves take --n, not --N");
        if (!contact && n) throw StrataError("--n applies to contact curves only; use --N");
        sel.dim = contact ? n : N;
        sel.ambient = ambient;
        return sel;
    }
};

int run(int argc, char** argv)
{
    CLI::App app{"Tangent varieties of finite-type curve germs: types, strata, normal forms and surface tests"};
    app.require_subcommand(1);
    std::string format_text = "plain";
    app.add_option("--format", format_text, "plain or structured (JSON)")->capture_default_str();

    std::string input;
    std::string type_text;
    ClassFlags cls;
    MeshFlags mesh;
    std::string matrix_text, singularity_text, chart_text = "st";
    unsigned k = 1, m = 0;
    std::optional<std::size_t> components;

    auto* type = app.add_subcommand("type", "Type of a curve germ");
    type->add_option("input", input, "Germ document (default stdin)");

    auto* classify_cmd = app.add_subcommand("classify", "Singularity of the tangent variety from the type");
    classify_cmd->add_option("--type", type_text, "Type sequence, e.g. 1,2,4,5");
    classify_cmd->add_option("input", input, "Curve document, used when --type is absent");
    cls.attach(classify_cmd, true);

    auto* enumerate = app.add_subcommand("enumerate", "Types of codimension <= 1 in a curve class");
    cls.attach(enumerate, true);

    auto* codim_cmd = app.add_subcommand("codim", "Codimension of a type stratum");
    codim_cmd->add_option("--type", type_text, "Type sequence")->required();
    cls.attach(codim_cmd, true);

    auto* tangent = app.add_subcommand("tangent", "Tangent map, Grassmann lift and optional OBJ mesh");
    tangent->add_option("input", input, "Curve document (default stdin)");
    mesh.attach(tangent);

    auto* opening = app.add_subcommand("opening", "Jacobi-module certificates for the tangent map");
    opening->add_option("input", input, "Curve document (default stdin)");

    auto* surface = app.add_subcommand("surface", "Legendre surface: ordinary class, slice and D4 test");
    surface->add_option("input", input, "Surface document (default stdin)");

    auto* veronese = app.add_subcommand("veronese", "Position of a symmetric 3x3 matrix relative to the Veronese surface");
    veronese->add_option("--matrix", matrix_text, "a11 a12 a13 a22 a23 a33");
    veronese->add_option("input", input, "Matrix document, used when --matrix is absent");

    auto* morin = app.add_subcommand("morin", "Versal opening generators of the Morin map");
    morin->add_option("--k", k, "Order k >= 1")->required()->check(CLI::Range(1U, 12U));
    morin->add_option("--m", m, "Number of G components")->check(CLI::Range(0U, 6U));

    auto* family = app.add_subcommand("family", "Generating-family parametrization of the tangent variety");
    family->add_option("--type", type_text, "Type sequence")->required();

    auto* nf = app.add_subcommand("normal-form", "Displayed normal forms of the named singularities");
    nf->add_option("--singularity", singularity_text, "e.g. OpenSwallowtail")->required();
    nf->add_option("--components", components, "Number of target coordinates (zero padded)");
    nf->add_option("--chart", chart_text, "st or ux")->capture_default_str();
    mesh.attach(nf);

    auto* batch = app.add_subcommand("batch", "Analyse every document of a multi-document file");
    batch->add_option("input", input, "Documents separated by --- (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return kGuardFailure;
    }

    try {
        const Format format = parse_format(format_text);
        Report r;
        if (*type) {
            r = cmd_type(parse_document(read_input(input)));
        } else if (*classify_cmd) {
            if (!type_text.empty()) {
                r = cmd_classify(TypeSequence::parse(type_text), cls.selection());
            } else {
                const auto doc = parse_document(read_input(input));
                r = cmd_classify(require_type(to_curve(doc).curve), cls.selection());
            }
        } else if (*enumerate) {
            r = cmd_enumerate(cls.selection());
        } else if (*codim_cmd) {
            r = cmd_codim(TypeSequence::parse(type_text), cls.selection());
        } else if (*tangent) {
            r = cmd_tangent(parse_document(read_input(input)), mesh.request());
        } else if (*opening) {
            r = cmd_opening(parse_document(read_input(input)));
        } else if (*surface) {
            r = cmd_surface(parse_document(read_input(input)));
        } else if (*veronese) {
            r = cmd_veronese(matrix_text.empty() ? to_matrix(parse_document(read_input(input))) : parse_matrix(matrix_text));
        } else if (*morin) {
            r = cmd_morin(k, m);
        } else if (*family) {
            r = cmd_family(TypeSequence::parse(type_text));
        } else if (*nf) {
            if (chart_text != "st" && chart_text != "ux") throw ParseError("--chart must be st or ux");
            r = cmd_normal_form(parse_singularity(singularity_text), components, chart_text == "ux" ? Chart::UX : Chart::ST,
                                mesh.request());
        } else if (*batch) {
            r = cmd_batch(parse_documents(read_input(input)));
        }
        std::cout << render(r, format);
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuardFailure;
    }
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
