#include "f1hall/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace f1hall {

using nlohmann::json;

namespace {

int require_vertex(const Quiver& q, const std::string& name)
{
    if (auto i = q.vertex_index(name))
        return *i;
    throw std::invalid_argument("unknown vertex '" + name + "'");
}

int require_arrow(const Quiver& q, const std::string& name)
{
    if (auto i = q.arrow_index(name))
        return *i;
    throw std::invalid_argument("unknown arrow '" + name + "'");
}

}  // namespace

QuiverFile parse_quiver_json(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("quiver file: expected a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("quiver file: missing \"vertices\" array");

    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw std::invalid_argument("quiver file: vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }

    std::vector<Arrow> arrows;
    Quiver probe(vertices, {});
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array())
            throw std::invalid_argument("quiver file: \"arrows\" must be an array");
        for (const auto& a : j["arrows"]) {
            if (!a.is_object() || !a.contains("name") || !a.contains("src") || !a.contains("tgt"))
                throw std::invalid_argument(
                    "quiver file: each arrow needs \"name\", \"src\", \"tgt\"");
            Arrow ar;
            ar.name = a["name"].get<std::string>();
            ar.src = require_vertex(probe, a["src"].get<std::string>());
            ar.tgt = require_vertex(probe, a["tgt"].get<std::string>());
            arrows.push_back(std::move(ar));
        }
    }

    QuiverFile out;
    out.quiver = Quiver(std::move(vertices), std::move(arrows));
    out.name = j.value("name", std::string{});

    if (!j.contains("involution") || !j["involution"].is_object())
        throw std::invalid_argument("quiver file: missing \"involution\" object");
    const json& inv = j["involution"];
    Involution s = Involution::identity_for(out.quiver);
    if (inv.contains("vertices"))
        for (const auto& [from, to] : inv["vertices"].items())
            s.vertex_map[static_cast<std::size_t>(require_vertex(out.quiver, from))] =
                require_vertex(out.quiver, to.get<std::string>());
    if (inv.contains("arrows"))
        for (const auto& [from, to] : inv["arrows"].items())
            s.arrow_map[static_cast<std::size_t>(require_arrow(out.quiver, from))] =
                require_arrow(out.quiver, to.get<std::string>());
    if (auto bad = validate(out.quiver, s))
        throw std::invalid_argument("quiver file: " + *bad);
    out.sigma = std::move(s);
    return out;
}

QuiverFile load_quiver_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open quiver file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("quiver file '" + path + "': " + e.what());
    }
    QuiverFile qf = parse_quiver_json(j);
    if (qf.name.empty())
        qf.name = path;
    return qf;
}

Rep parse_rep_literal(const Quiver& q, const json& j)
{
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_object())
        throw std::invalid_argument("representation literal: missing \"dims\" object");
    std::vector<PointedSet> sp(static_cast<std::size_t>(q.num_vertices()));
    for (const auto& [name, d] : j["dims"].items()) {
        if (!d.is_number_integer() || d.get<int>() < 0)
            throw std::invalid_argument("representation literal: bad dimension at '" + name + "'");
        sp[static_cast<std::size_t>(require_vertex(q, name))] = {d.get<int>()};
    }
    std::vector<PartialInjection> mp;
    for (int a = 0; a < q.num_arrows(); ++a)
        mp.push_back(PartialInjection::zero(sp[static_cast<std::size_t>(q.arrow(a).src)].size,
                                            sp[static_cast<std::size_t>(q.arrow(a).tgt)].size));
    if (j.contains("maps")) {
        if (!j["maps"].is_object())
            throw std::invalid_argument("representation literal: \"maps\" must be an object");
        for (const auto& [name, pairs] : j["maps"].items()) {
            int a = require_arrow(q, name);
            std::vector<std::pair<int, int>> ps;
            if (!pairs.is_array())
                throw std::invalid_argument("representation literal: map at '" + name +
                                            "' must be an array of [src, tgt] pairs");
            for (const auto& p : pairs) {
                if (!p.is_array() || p.size() != 2)
                    throw std::invalid_argument("representation literal: bad pair at '" + name + "'");
                ps.emplace_back(p[0].get<int>(), p[1].get<int>());
            }
            try {
                mp[static_cast<std::size_t>(a)] =
                    PartialInjection(sp[static_cast<std::size_t>(q.arrow(a).src)].size,
                                     sp[static_cast<std::size_t>(q.arrow(a).tgt)].size,
                                     std::move(ps));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("representation literal: map at '" + name +
                                            "': " + e.what());
            }
        }
    }
    return Rep(q, std::move(sp), std::move(mp));
}

SymmetricForm parse_form_literal(const Quiver& q, const Involution& s, const json& j)
{
    SymmetricForm f;
    f.rep = parse_rep_literal(q, j);
    if (!j.contains("form") || !j["form"].is_object())
        throw std::invalid_argument("form literal: missing \"form\" object");
    f.b.resize(static_cast<std::size_t>(q.num_vertices()));
    for (const auto& [name, arr] : j["form"].items()) {
        int v = require_vertex(q, name);
        if (!arr.is_array())
            throw std::invalid_argument("form literal: entry at '" + name +
                                        "' must be an array");
        for (const auto& x : arr)
            f.b[static_cast<std::size_t>(v)].push_back(x.get<int>());
    }
    if (auto bad = is_form(q, s, f))
        throw std::invalid_argument("form literal: " + *bad);
    return f;
}

namespace {

template <class K>
json element_json(const Linear<K>& x, const std::function<json(const K&)>& key)
{
    json out = json::array();
    for (const auto& [k, c] : x.terms()) {
        json term = key(k);
        term["coeff"] = rat_str(c);
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

json to_json(const HallElement& x)
{
    return element_json<CanonicalClass>(
        x, [](const CanonicalClass& k) { return json{{"class", k.enc}}; });
}

json to_json(const ModuleElement& x)
{
    return element_json<IsometryClass>(
        x, [](const IsometryClass& k) { return json{{"class", k.enc}}; });
}

json to_json(const Tensor2& x)
{
    return element_json<std::pair<CanonicalClass, CanonicalClass>>(
        x, [](const auto& k) {
            return json{{"left", k.first.enc}, {"right", k.second.enc}};
        });
}

json to_json(const Tensor3& x)
{
    return element_json<std::array<CanonicalClass, 3>>(x, [](const auto& k) {
        return json{{"a", k[0].enc}, {"b", k[1].enc}, {"c", k[2].enc}};
    });
}

json to_json(const TensorHM& x)
{
    return element_json<std::pair<CanonicalClass, IsometryClass>>(
        x, [](const auto& k) {
            return json{{"h", k.first.enc}, {"m", k.second.enc}};
        });
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Rat& c, const std::string& body)
{
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
        if (c < 0)
            out << "-";
        first = false;
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (a != 1)
        out << rat_str_pretty(a) << " ";
    out << body;
}

}  // namespace

std::string to_text(const HallElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : x.terms())
        append_term(out, first, c, "[" + k.enc + "]");
    return out.str();
}

std::string to_text(const ModuleElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : x.terms())
        append_term(out, first, c, "[" + k.enc + "]");
    return out.str();
}

std::string to_text(const Tensor2& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : x.terms())
        append_term(out, first, c, "[" + k.first.enc + "] (x) [" + k.second.enc + "]");
    return out.str();
}

std::string to_text(const TensorHM& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : x.terms())
        append_term(out, first, c, "[" + k.first.enc + "] (x) [" + k.second.enc + "]");
    return out.str();
}

}  // namespace f1hall
