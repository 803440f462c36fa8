#include "ramsey/json_io.hpp"

#include "ramsey/errors.hpp"

#include <set>

namespace ramsey {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw DomainError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end())
        throw DomainError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string text_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_string())
        throw DomainError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw DomainError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

CopyRef copy_from_json(const Json& j, const PlaneTree& host)
{
    if (!j.is_array())
        throw DomainError("a copy must be an array of leaf indices");
    CopyRef s;
    for (const Json& x : j) {
        if (!x.is_number_integer())
            throw DomainError("leaf indices must be integers");
        s.leaves.push_back(x.get<LeafIndex>());
    }
    validate_copy_ref(host, s);
    return s;
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Json to_json(const TripleStructure& g)
{
    Json triples = Json::array();
    for (const Triple& t : g.triples())
        triples.push_back({g.domain()[static_cast<std::size_t>(t[0])], g.domain()[static_cast<std::size_t>(t[1])],
                           g.domain()[static_cast<std::size_t>(t[2])]});
    Json out;
    out["domain"] = g.domain();
    out["triples"] = std::move(triples);
    return out;
}

TripleStructure triple_structure_from_json(const Json& j)
{
    const Json& d = field(j, "domain");
    if (!d.is_array())
        throw DomainError("\"domain\" must be an array of strings");
    std::vector<std::string> domain;
    for (const Json& x : d) {
        if (!x.is_string())
            throw DomainError("\"domain\" must be an array of strings");
        domain.push_back(x.get<std::string>());
    }
    // Validate names before resolving triples.
    const TripleStructure names(domain, {});

    const Json& ts = field(j, "triples");
    if (!ts.is_array())
        throw DomainError("\"triples\" must be an array");
    std::vector<Triple> triples;
    for (const Json& t : ts) {
        if (!t.is_array() || t.size() != 3)
            throw DomainError("each triple must be an array of three domain elements");
        Triple r{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!t[i].is_string())
                throw DomainError("triple elements must be strings");
            const auto p = names.position(t[i].get<std::string>());
            if (!p)
                throw DomainError("triple element '" + t[i].get<std::string>() + "' is not in the domain");
            r[i] = *p;
        }
        triples.push_back(r);
    }
    return TripleStructure(std::move(domain), std::move(triples));
}

Json to_json(const Coloring& chi)
{
    Json assignment = Json::array();
    for (std::size_t i = 0; i < chi.copies().size(); ++i) {
        Json entry;
        entry["copy"] = chi.copies()[i].leaves;
        entry["color"] = chi.colors()[i];
        assignment.push_back(std::move(entry));
    }
    Json out;
    out["host"] = to_newick(chi.host());
    out["pattern"] = to_newick(chi.pattern());
    out["k"] = chi.k();
    out["assignment"] = std::move(assignment);
    return out;
}

Coloring coloring_from_json(const Json& j)
{
    PlaneTree host = parse_newick(text_field(j, "host"));
    PlaneTree pattern = parse_newick(text_field(j, "pattern"));
    const int k = int_field(j, "k");
    auto copies = make_copy_set(std::move(host), std::move(pattern));

    const Json& a = field(j, "assignment");
    if (!a.is_array())
        throw DomainError("\"assignment\" must be an array");
    std::vector<Color> colors(copies->size(), 0);
    std::vector<bool> seen(copies->size(), false);
    for (const Json& entry : a) {
        const CopyRef s = copy_from_json(field(entry, "copy"), copies->host());
        const auto i = copies->index_of(s);
        if (!i)
            throw DomainError(to_string(s) + " is not a copy of the pattern in the host");
        if (seen[*i])
            throw DomainError(to_string(s) + " is assigned twice");
        seen[*i] = true;
        colors[*i] = int_field(entry, "color");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw DomainError("coloring is not total: " + to_string(copies->copies()[i]) + " has no color");
    return Coloring(std::move(copies), k, std::move(colors));
}

Json to_json(const ArrowVerdict& v, bool with_timing)
{
    Json out;
    out["verdict"] = to_string(v.verdict);
    out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    out["nodes"] = v.nodes;
    out["millis"] = with_timing ? v.millis : 0;
    return out;
}

Json to_json(const ReductionChain& chain)
{
    Json trees = Json::array();
    for (const PlaneTree& t : chain.trees())
        trees.push_back(to_newick(t));
    Json out;
    out["trees"] = std::move(trees);
    out["pattern"] = to_newick(chain.pattern());
    out["k"] = chain.k();
    return out;
}

ReductionChain chain_from_json(const Json& j)
{
    const Json& ts = field(j, "trees");
    if (!ts.is_array())
        throw DomainError("\"trees\" must be an array of Newick strings");
    std::vector<PlaneTree> trees;
    for (const Json& t : ts) {
        if (!t.is_string())
            throw DomainError("\"trees\" must be an array of Newick strings");
        trees.push_back(parse_newick(t.get<std::string>()));
    }
    return ReductionChain(std::move(trees), parse_newick(text_field(j, "pattern")), int_field(j, "k"));
}

Json to_json(const MonoCopy& m)
{
    Json out;
    out["copy"] = m.copy.leaves;
    out["color"] = m.color;
    return out;
}

} // namespace ramsey
