// Command-line front end: every subcommand prints one report (json or text).

#include "delprod/catalog.hpp"
#include "delprod/deleted_product.hpp"
#include "delprod/embeddability.hpp"
#include "delprod/errors.hpp"
#include "delprod/gysin.hpp"
#include "delprod/homology.hpp"
#include "delprod/involution.hpp"
#include "delprod/local_system.hpp"
#include "delprod/report.hpp"
#include "delprod/twisted.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

using namespace delprod;

namespace {

// Deleted products above this many cells need --heavy.
constexpr std::size_t heavy_cell_threshold = 5000;

constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

class UsageError : public Error
{
  public:
    using Error::Error;
};

struct Common
{
    std::string format = "json";
    bool heavy = false;
    double time_budget = 0;

    ComputeOptions options() const
    {
        return time_budget > 0 ? ComputeOptions::with_budget(std::chrono::duration<double>(time_budget))
                               : ComputeOptions{};
    }
};

Json groups_json(const std::vector<AbelianGroup>& groups)
{
    std::vector<DegreeGroup> tagged;
    for (std::size_t i = 0; i < groups.size(); ++i)
        tagged.push_back({static_cast<int>(i), groups[i]});
    return to_json(tagged);
}

Json cells_json(const CWComplex& cw)
{
    Json cells = Json::array();
    for (int d = 0; d <= cw.dimension(); ++d)
        for (std::size_t c = 0; c < cw.cell_count(d); ++c)
        {
            Json faces = Json::array();
            for (const auto& f : cw.faces(d, c))
                faces.push_back(Json{{"face", std::to_string(d - 1) + "." + std::to_string(f.face)},
                                     {"sign", f.coefficient}});
            cells.push_back(Json{{"id", std::to_string(d) + "." + std::to_string(c)},
                                 {"dim", d},
                                 {"name", cw.name(d, c)},
                                 {"faces", faces}});
        }
    return cells;
}

Json counts_json(const CWComplex& cw)
{
    Json counts = Json::array();
    for (int d = 0; d <= cw.dimension(); ++d)
        counts.push_back(cw.cell_count(d));
    return counts;
}

void require_heavy(const CWComplex& cw, const Common& common)
{
    if (cw.total_cells() > heavy_cell_threshold && !common.heavy)
        throw UsageError("the deleted product has " + std::to_string(cw.total_cells())
                         + " cells; rerun with --heavy (optionally with --time-budget <seconds>)");
}

std::map<std::string, std::string> parse_vertex_map(const std::string& spec)
{
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < spec.size())
    {
        std::size_t end = spec.find(',', pos);
        if (end == std::string::npos)
            end = spec.size();
        const std::string pair = spec.substr(pos, end - pos);
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
            throw UsageError("involution pairs must look like a=b");
        const std::string a = pair.substr(0, eq), b = pair.substr(eq + 1);
        out[a] = b;
        out[b] = a;
        pos = end + 1;
    }
    return out;
}

/// "auto": shipped antipodal map of a catalog entry, else the deleted-product swap.
QuotientCover make_cover(const std::string& source, const SimplicialComplex& k, std::string involution,
                         const Common& common, std::string& used)
{
    const CatalogEntry* entry = source.starts_with("catalog:") ? &catalog_entry(source.substr(8)) : nullptr;
    if (involution == "auto")
        involution = entry && !entry->antipodal.empty() ? "antipodal" : "swap";
    used = involution;
    if (involution == "swap")
    {
        DeletedProductComplex d = deleted_product(k);
        require_heavy(*d.cw(), common);
        return quotient_cover(FreeInvolutionComplex(d.cw(), d.involution()));
    }
    if (involution == "antipodal")
    {
        if (!entry || entry->antipodal.empty())
            throw UsageError("no antipodal involution is shipped with this input");
        return quotient_cover(simplicial_involution(k, entry->antipodal));
    }
    return quotient_cover(simplicial_involution(k, parse_vertex_map(involution)));
}

SimplicialComplex load_subcomplex(const std::string& spec, const SimplicialComplex& n)
{
    if (spec.starts_with("star:"))
        return closed_star(n, spec.substr(5));
    if (spec == "star")
    {
        // an interior vertex when there is one, else the first vertex
        auto v = first_interior_vertex(n);
        if (!v && n.vertex_labels().empty())
            throw UsageError("the complex has no vertices");
        return closed_star(n, v ? *v : n.vertex_labels().front());
    }
    return load_complex(spec);
}

void emit(const Common& common, const Json& report)
{
    if (common.format == "text")
        std::cout << render_text(report);
    else
        std::cout << report.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deleted products, twisted cohomology and embeddability checks"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--heavy", common.heavy, "Allow large deleted-product computations");
    app.add_option("--time-budget", common.time_budget, "Wall-clock budget in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);

    std::string source, second, coeff = "Z", phi, involution = "auto";
    int m = 0, l = 0, p_max = -1;
    bool splitting = false, show_cells = false;
    std::string catalog_id;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("source", source, "catalog:<id> or facet-list file")->required();
    };
    auto add_cover_options = [&](CLI::App* sub) {
        sub->add_option("--involution", involution, "auto, swap, antipodal or a=b,c=d,...");
    };
    auto add_coeff = [&](CLI::App* sub) {
        sub->add_option("--coeff", coeff, "Z, Z-, Zm:<m>, ZxZ:swap(+), ZxZ:swap(-)");
        sub->add_option("--phi", phi, "Sign of the coefficient involution (+ or -)");
    };

    auto* homology_cmd = app.add_subcommand("homology", "Integral homology in every degree");
    add_source(homology_cmd);
    auto* cohomology_cmd = app.add_subcommand("cohomology", "Cohomology with Z or Z/m coefficients");
    add_source(cohomology_cmd);
    cohomology_cmd->add_option("--coeff", coeff, "Z or Zm:<m>");
    auto* dp_cmd = app.add_subcommand("deleted-product", "Cells of the simplicial deleted product");
    add_source(dp_cmd);
    dp_cmd->add_flag("--cells", show_cells, "Include the full cell-incidence list");
    auto* quotient_cmd = app.add_subcommand("quotient", "Orbit complex of a free involution");
    add_source(quotient_cmd);
    add_cover_options(quotient_cmd);
    quotient_cmd->add_flag("--cells", show_cells, "Include the full cell-incidence list");
    auto* twisted_cmd = app.add_subcommand("twisted", "Twisted cohomology of the quotient");
    add_source(twisted_cmd);
    add_cover_options(twisted_cmd);
    add_coeff(twisted_cmd);
    twisted_cmd->add_option("--p-max", p_max, "Highest degree (default dim + 1)");
    auto* gysin_cmd = app.add_subcommand("gysin", "Gysin sequence of a double cover with exactness check");
    add_source(gysin_cmd);
    add_cover_options(gysin_cmd);
    add_coeff(gysin_cmd);
    gysin_cmd->add_option("--p-max", p_max, "Highest degree (default dim + 1)");
    gysin_cmd->add_flag("--splitting", splitting, "Also check the splitting (odd orders only)");
    auto* embed_cmd = app.add_subcommand("embed-check", "Equivariant-map verdict for target R^m");
    add_source(embed_cmd);
    embed_cmd->add_option("--m", m, "Target dimension")->required()->check(CLI::PositiveNumber);
    auto* lemma_cmd = app.add_subcommand("lemma1", "Relative vanishing check for a pair");
    lemma_cmd->add_option("N", source, "Ambient complex")->required();
    lemma_cmd->add_option("M", second, "Subcomplex: catalog:<id>, a file, star or star:<vertex>")->required();
    lemma_cmd->add_option("--l", l, "Offset l >= 0")->check(CLI::NonNegativeNumber);
    auto* conn_cmd = app.add_subcommand("connectivity", "Homology of (N, boundary N)");
    add_source(conn_cmd);
    auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries or show one");
    catalog_cmd->add_option("id", catalog_id, "Catalog id");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    try
    {
        const ComputeOptions options = common.options();
        CLI::App* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        Json inputs{{"source", source}};
        Json results;

        if (cmd == homology_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            results = Json{{"f_vector", k.f_vector()}, {"groups", groups_json(homology_groups(k.chain_complex(), options))}};
        }
        else if (cmd == cohomology_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            Coefficients c;
            if (coeff != "Z")
            {
                const LocalSystem g = parse_local_system(coeff);
                if (g.rank() != 1 || !g.is_identity() || g.orders()[0] == 0)
                    throw UsageError("cohomology takes --coeff Z or Zm:<m>");
                c = Coefficients::modulo(g.orders()[0]);
            }
            inputs["coefficients"] = c.to_string();
            results = Json{{"groups", groups_json(cohomology_groups(k.chain_complex(), c, options))}};
        }
        else if (cmd == dp_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            DeletedProductComplex d = deleted_product(k);
            results = Json{{"cell_counts", counts_json(*d.cw())}, {"euler_characteristic", d.cw()->euler_characteristic()}};
            if (d.cw()->total_cells() <= heavy_cell_threshold || common.heavy)
                results["cohomology"] = groups_json(cohomology_groups(d.cw()->chain_complex(), {}, options));
            if (show_cells)
            {
                if (common.format == "text")
                {
                    emit(common, make_report(name, inputs, results, elapsed()));
                    std::cout << incidence_document(*d.cw());
                    return 0;
                }
                results["cells"] = cells_json(*d.cw());
            }
        }
        else if (cmd == quotient_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            std::string used;
            const QuotientCover q = make_cover(source, k, involution, common, used);
            inputs["involution"] = used;
            results = Json{{"cover_cell_counts", counts_json(q.cover().cw())},
                           {"quotient_cell_counts", counts_json(q.quotient())},
                           {"cover_euler_characteristic", q.cover().cw().euler_characteristic()},
                           {"quotient_euler_characteristic", q.quotient().euler_characteristic()},
                           {"quotient_homology", groups_json(homology_groups(q.quotient().chain_complex(), options))}};
            if (show_cells)
                results["cells"] = cells_json(q.quotient());
        }
        else if (cmd == twisted_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            std::string used;
            const QuotientCover q = make_cover(source, k, involution, common, used);
            const LocalSystem g = parse_local_system(coeff, phi);
            inputs["involution"] = used;
            inputs["coefficients"] = g.to_string();
            const int top = p_max < 0 ? q.quotient().dimension() + 1 : p_max;
            results = Json{{"groups", groups_json(twisted_cohomology_groups(q, g, top, options))}};
        }
        else if (cmd == gysin_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            std::string used;
            const QuotientCover q = make_cover(source, k, involution, common, used);
            const LocalSystem g = parse_local_system(coeff, phi);
            inputs["involution"] = used;
            inputs["coefficients"] = g.to_string();
            const auto segments = gysin_sequence(q, g, p_max);
            results = to_json(segments, verify_exactness(segments));
            if (splitting)
                results["splitting"] = to_json(splitting_check(q, g, p_max));
        }
        else if (cmd == embed_cmd)
        {
            const SimplicialComplex k = load_complex(source);
            inputs["m"] = m;
            require_heavy(*deleted_product(k).cw(), common);
            results = to_json(embed_verdict(k, m, options));
        }
        else if (cmd == lemma_cmd)
        {
            const SimplicialComplex n = load_complex(source);
            const SimplicialComplex sub = load_subcomplex(second, n);
            inputs["sub"] = second;
            inputs["l"] = l;
            require_heavy(*deleted_product(n).cw(), common);
            results = to_json(lemma1_vanishing_check(n, sub, l, options));
        }
        else if (cmd == conn_cmd)
        {
            results = to_json(connectivity_report(load_complex(source), options));
        }
        else if (cmd == catalog_cmd)
        {
            inputs = Json{{"id", catalog_id}};
            if (catalog_id.empty())
            {
                Json list = Json::array();
                for (const auto& id : catalog_ids())
                    list.push_back(id);
                results = Json{{"ids", list}};
            }
            else
            {
                const CatalogEntry& e = catalog_entry(catalog_id);
                results = Json{{"id", e.id},
                               {"description", e.description},
                               {"provenance", e.provenance},
                               {"f_vector", e.complex.f_vector()},
                               {"self_check", "PASS"},
                               {"facets", serialize(e.complex)}};
            }
        }
        emit(common, make_report(name, inputs, results, elapsed()));
        return 0;
    }
    catch (const BudgetExceeded& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}
