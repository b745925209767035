#include "delprod/simplicial_complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace delprod {

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices))
{
    if (v_.empty())
        throw Error("simplex must have at least one vertex");
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw Error("simplex has a repeated vertex");
}

Simplex Simplex::face(std::size_t i) const
{
    if (v_.size() < 2)
        throw Error("a vertex has no codimension-one faces");
    Simplex f;
    f.v_ = v_;
    f.v_.erase(f.v_.begin() + static_cast<std::ptrdiff_t>(i));
    return f;
}

bool Simplex::contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::disjoint_from(const Simplex& other) const
{
    auto a = v_.begin(), b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end())
    {
        if (*a == *b)
            return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

namespace {

bool valid_label(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

// Removes every simplex that is a face of another one; result sorted.
std::vector<Simplex> maximal_simplices(std::vector<Simplex> simplices)
{
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::set<std::vector<VertexId>> covered;
    std::vector<Simplex> kept;
    for (const auto& s : simplices)
    {
        std::vector<VertexId> key(s.vertices().begin(), s.vertices().end());
        if (covered.count(key))
            continue;
        kept.push_back(s);
        const std::size_t n = s.size();
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask)
        {
            std::vector<VertexId> f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    f.push_back(s[i]);
            covered.insert(std::move(f));
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets)
{
    SimplicialComplex k;
    std::set<std::string> labels;
    for (const auto& f : facets)
    {
        if (f.empty())
            throw Error("facet must have at least one vertex");
        for (const auto& l : f)
        {
            if (!valid_label(l))
                throw Error("invalid vertex label '" + l + "'");
            labels.insert(l);
        }
    }
    k.labels_.assign(labels.begin(), labels.end());
    if (k.labels_.size() > 32 * 1024 * 1024)
        throw Error("too many vertices");

    std::vector<Simplex> raw;
    for (const auto& f : facets)
    {
        if (f.size() > 31)
            throw Error("facets of dimension above 30 are not supported");
        std::vector<VertexId> ids;
        for (const auto& l : f)
            ids.push_back(*k.vertex_id(l));
        raw.emplace_back(std::move(ids));
    }
    k.facets_ = maximal_simplices(std::move(raw));

    int top = -1;
    for (const auto& f : k.facets_)
        top = std::max(top, f.dimension());
    std::vector<std::set<Simplex>> faces(static_cast<std::size_t>(top + 1));
    for (const auto& f : k.facets_)
    {
        const std::size_t n = f.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        {
            std::vector<VertexId> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    s.push_back(f[i]);
            Simplex face(std::move(s));
            faces[static_cast<std::size_t>(face.dimension())].insert(std::move(face));
        }
    }
    for (auto& level : faces)
        k.by_dim_.emplace_back(level.begin(), level.end());
    return k;
}

std::optional<VertexId> SimplicialComplex::vertex_id(std::string_view label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const
{
    std::vector<std::string> out;
    for (VertexId v : s.vertices())
        out.push_back(labels_.at(v));
    return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> none;
    return d < 0 || d > dimension() ? none : by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::simplex_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& level : by_dim_)
        n += level.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    const auto& level = simplices(s.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains_labels(const std::vector<std::string>& labels) const
{
    std::vector<VertexId> ids;
    for (const auto& l : labels)
    {
        auto id = vertex_id(l);
        if (!id)
            return false;
        ids.push_back(*id);
    }
    return index_of(Simplex(std::move(ids))).has_value();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& level : by_dim_)
        f.push_back(level.size());
    return f;
}

long SimplicialComplex::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim_[d].size());
    return chi;
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.dimension() == dimension(); });
}

CWComplexPtr SimplicialComplex::to_cw() const
{
    std::vector<std::vector<std::vector<Incidence>>> faces(by_dim_.size());
    std::vector<std::vector<std::string>> names(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        for (const auto& s : by_dim_[d])
        {
            std::vector<Incidence> inc;
            if (d > 0)
                for (std::size_t i = 0; i < s.size(); ++i)
                    inc.push_back({static_cast<std::uint32_t>(*index_of(s.face(i))), i % 2 == 0 ? 1 : -1});
            faces[d].push_back(std::move(inc));
            std::string name;
            for (VertexId v : s.vertices())
                name += (name.empty() ? "" : ",") + labels_[v];
            names[d].push_back(std::move(name));
        }
    return std::make_shared<const CWComplex>(std::move(faces), std::move(names));
}

SimplicialComplex parse_complex(std::string_view text)
{
    std::vector<std::vector<std::string>> facets;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream in(line);
        std::string keyword;
        if (!(in >> keyword))
        {
            if (end == text.size())
                break;
            continue;
        }
        if (keyword != "facet")
            throw ParseError(line_no, "expected 'facet', found '" + keyword + "'");
        std::vector<std::string> facet;
        std::string label;
        while (in >> label)
        {
            if (!valid_label(label))
                throw ParseError(line_no, "invalid vertex label '" + label + "'");
            if (std::find(facet.begin(), facet.end(), label) != facet.end())
                throw ParseError(line_no, "duplicate vertex '" + label + "' in facet");
            facet.push_back(label);
        }
        if (facet.empty())
            throw ParseError(line_no, "facet without vertices");
        facets.push_back(std::move(facet));
        if (end == text.size())
            break;
    }
    if (facets.empty())
        throw ParseError(line_no, "document contains no facets");
    return SimplicialComplex::from_facets(facets);
}

std::string serialize(const SimplicialComplex& k)
{
    std::vector<std::string> lines;
    for (const auto& f : k.facets())
    {
        std::string line = "facet";
        for (const auto& l : k.labels_of(f))
            line += " " + l;
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines)
        out += l + "\n";
    return out;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& k)
{
    const int n = k.dimension();
    if (n <= 0)
        return {};
    if (!k.is_pure())
        throw Error("boundary_subcomplex requires a pure complex");
    std::map<Simplex, int> incidence;
    for (const auto& top : k.simplices(n))
        for (std::size_t i = 0; i < top.size(); ++i)
            ++incidence[top.face(i)];
    std::vector<std::vector<std::string>> facets;
    for (const auto& [face, count] : incidence)
    {
        if (count >= 3)
        {
            std::string labels;
            for (const auto& l : k.labels_of(face))
                labels += (labels.empty() ? "" : " ") + l;
            throw PseudomanifoldError("not a pseudomanifold: simplex {" + labels + "} lies in "
                                      + std::to_string(count) + " top-dimensional simplices");
        }
        if (count == 1)
            facets.push_back(k.labels_of(face));
    }
    return SimplicialComplex::from_facets(facets);
}

bool is_full_subcomplex(const SimplicialComplex& m, const SimplicialComplex& n)
{
    return std::all_of(m.facets().begin(), m.facets().end(),
                       [&](const Simplex& f) { return n.contains_labels(m.labels_of(f)); });
}

SimplicialComplex closed_star(const SimplicialComplex& k, std::string_view vertex)
{
    auto v = k.vertex_id(vertex);
    if (!v)
        throw Error("unknown vertex '" + std::string(vertex) + "'");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k.facets())
        if (f.contains(*v))
            facets.push_back(k.labels_of(f));
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex remove_open_star(const SimplicialComplex& k, std::string_view vertex)
{
    auto v = k.vertex_id(vertex);
    if (!v)
        throw Error("unknown vertex '" + std::string(vertex) + "'");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k.facets())
    {
        if (!f.contains(*v))
            facets.push_back(k.labels_of(f));
        else if (f.size() > 1)
        {
            std::vector<std::string> rest;
            for (VertexId u : f.vertices())
                if (u != *v)
                    rest.push_back(k.vertex_labels()[u]);
            facets.push_back(std::move(rest));
        }
    }
    if (facets.empty())
        return {};
    return SimplicialComplex::from_facets(facets);
}

std::optional<std::string> first_interior_vertex(const SimplicialComplex& k)
{
    const SimplicialComplex boundary = boundary_subcomplex(k);
    for (const auto& l : k.vertex_labels())
        if (!boundary.vertex_id(l))
            return l;
    return std::nullopt;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    auto label = [&](const std::vector<VertexId>& vs) {
        std::string s;
        for (VertexId v : vs)
            s += (s.empty() ? "" : "_") + k.vertex_labels()[v];
        return s;
    };
    std::set<std::string> seen;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
        {
            std::vector<VertexId> vs(s.vertices().begin(), s.vertices().end());
            if (!seen.insert(label(vs)).second)
                throw Error("barycentric subdivision: vertex label collision for '" + label(vs) + "'");
        }

    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k.facets())
    {
        std::vector<VertexId> order(f.vertices().begin(), f.vertices().end());
        do
        {
            // flag order[0] < {order[0], order[1]} < ...
            std::vector<std::string> chain;
            for (std::size_t len = 1; len <= order.size(); ++len)
            {
                std::vector<VertexId> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
                std::sort(prefix.begin(), prefix.end());
                chain.push_back(label(prefix));
            }
            facets.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_facets(facets);
}

} // namespace delprod
