#include "delprod/report.hpp"

#include "delprod/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace delprod {

namespace {

Json integer_json(const Integer& x)
{
    if (x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min())
        return Json(x.convert_to<long long>());
    return Json(to_string(x));
}

Json witness_json(const std::optional<SubgroupWitness>& w)
{
    if (!w)
        return Json(nullptr);
    Json v = Json::array();
    for (const auto& x : w->vector)
        v.push_back(integer_json(x));
    return Json{{"side", w->first_side ? "image" : "kernel"}, {"generator", w->generator}, {"vector", v}};
}

} // namespace

Json to_json(const AbelianGroup& g)
{
    Json torsion = Json::array();
    for (const auto& t : g.torsion())
        torsion.push_back(integer_json(t));
    return Json{{"free_rank", g.free_rank()}, {"torsion", torsion}, {"text", g.to_string()}};
}

AbelianGroup group_from_json(const Json& j)
{
    std::vector<Integer> torsion;
    for (const auto& t : j.at("torsion"))
        torsion.push_back(t.is_string() ? Integer(t.get<std::string>()) : Integer(t.get<long long>()));
    return AbelianGroup(j.at("free_rank").get<std::size_t>(), torsion);
}

Json to_json(const std::vector<DegreeGroup>& groups)
{
    Json out = Json::array();
    for (const auto& g : groups)
    {
        Json entry{{"degree", g.degree}};
        entry.update(to_json(g.group));
        out.push_back(entry);
    }
    return out;
}

Json to_json(const EmbedVerdict& v)
{
    return Json{{"verdict", to_string(v.verdict)},
                {"m", v.m},
                {"index", v.index ? Json(*v.index) : Json(nullptr)},
                {"groups", to_json(v.groups)},
                {"note", v.note}};
}

Json to_json(const Lemma1Report& r)
{
    return Json{{"n", r.n}, {"l", r.l}, {"verdict", r.passed ? "PASS" : "FAIL"}, {"groups", to_json(r.groups)}};
}

Json to_json(const ConnectivityReport& r)
{
    return Json{{"closed", r.closed}, {"d_max", r.d_max}, {"relative_homology", to_json(r.groups)}};
}

Json to_json(const std::vector<GysinSegment>& segments, const ExactnessReport& exactness)
{
    Json table = Json::array();
    for (const auto& s : segments)
        table.push_back(Json{{"degree", s.degree},
                             {"previous_untwisted", to_json(s.previous())},
                             {"twisted", to_json(s.twisted())},
                             {"cover", to_json(s.cover())},
                             {"untwisted", to_json(s.untwisted())}});
    Json checks = Json::array();
    for (const auto& c : exactness.checks)
        checks.push_back(Json{{"degree", c.degree},
                              {"node", to_string(c.node)},
                              {"relation", to_string(c.relation)},
                              {"verdict", c.passed() ? "PASS" : "FAIL"},
                              {"witness", witness_json(c.witness)}});
    return Json{{"table", table}, {"exactness", checks}, {"verdict", exactness.passed() ? "PASS" : "FAIL"}};
}

Json to_json(const SplittingReport& r)
{
    Json rows = Json::array();
    for (const auto& d : r.degrees)
        rows.push_back(Json{{"degree", d.degree},
                            {"cover", to_json(d.cover)},
                            {"twisted", to_json(d.twisted)},
                            {"untwisted", to_json(d.untwisted)},
                            {"verdict", d.holds() ? "PASS" : "FAIL"}});
    return Json{{"degrees", rows}, {"verdict", r.holds() ? "PASS" : "FAIL"}};
}

Json make_report(const std::string& command, Json inputs, Json results, double seconds)
{
    return Json{{"schema_version", report_schema_version},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"timing_seconds", seconds}};
}

namespace {

bool is_group(const Json& j)
{
    return j.is_object() && j.contains("free_rank") && j.contains("torsion") && j.contains("text");
}

std::string scalar(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

void render(std::ostringstream& out, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object())
    {
        for (const auto& [key, value] : j.items())
        {
            if (is_group(value))
                out << pad << key << ": " << value.at("text").get<std::string>() << '\n';
            else if (value.is_structured() && !value.empty())
            {
                out << pad << key << ":\n";
                render(out, value, indent + 1);
            }
            else
                out << pad << key << ": " << scalar(value) << '\n';
        }
    }
    else if (j.is_array())
    {
        const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
        if (scalars)
        {
            out << pad;
            for (std::size_t i = 0; i < j.size(); ++i)
                out << (i ? " " : "") << scalar(j[i]);
            out << '\n';
            return;
        }
        for (const auto& e : j)
        {
            if (is_group(e))
            {
                // a degree-tagged group renders on one line
                out << pad << "- ";
                if (e.contains("degree"))
                    out << "degree " << e.at("degree").dump() << ": ";
                out << e.at("text").get<std::string>() << '\n';
                continue;
            }
            out << pad << "-\n";
            render(out, e, indent + 1);
        }
    }
    else
        out << pad << scalar(j) << '\n';
}

} // namespace

std::string render_text(const Json& report)
{
    std::ostringstream out;
    render(out, report, 0);
    return out.str();
}

} // namespace delprod
