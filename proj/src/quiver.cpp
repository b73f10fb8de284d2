#include "f1hall/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace f1hall {

namespace {

bool plain_name(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> names;
    for (const auto& v : vertices_) {
        if (!plain_name(v))
            throw std::invalid_argument("Quiver: vertex name must be alphanumeric: '" + v + "'");
        if (!names.insert(v).second)
            throw std::invalid_argument("Quiver: duplicate vertex name '" + v + "'");
    }
    std::set<std::string> anames;
    for (const auto& a : arrows_) {
        if (!plain_name(a.name))
            throw std::invalid_argument("Quiver: arrow name must be alphanumeric: '" + a.name + "'");
        if (!anames.insert(a.name).second)
            throw std::invalid_argument("Quiver: duplicate arrow name '" + a.name + "'");
        if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 || a.tgt >= num_vertices())
            throw std::invalid_argument("Quiver: arrow '" + a.name + "' has invalid endpoints");
    }
}

std::optional<int> Quiver::vertex_index(const std::string& name) const
{
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices_[static_cast<std::size_t>(i)] == name)
            return i;
    return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const
{
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[static_cast<std::size_t>(a)].name == name)
            return a;
    return std::nullopt;
}

Involution Involution::identity_for(const Quiver& q)
{
    Involution s;
    s.vertex_map.resize(static_cast<std::size_t>(q.num_vertices()));
    s.arrow_map.resize(static_cast<std::size_t>(q.num_arrows()));
    for (int i = 0; i < q.num_vertices(); ++i)
        s.vertex_map[static_cast<std::size_t>(i)] = i;
    for (int a = 0; a < q.num_arrows(); ++a)
        s.arrow_map[static_cast<std::size_t>(a)] = a;
    return s;
}

std::optional<std::string> validate(const Quiver& q, const Involution& s)
{
    const int nv = q.num_vertices(), na = q.num_arrows();
    if (static_cast<int>(s.vertex_map.size()) != nv ||
        static_cast<int>(s.arrow_map.size()) != na)
        return "involution maps have wrong length";
    auto is_perm = [](const std::vector<int>& m) {
        std::vector<char> hit(m.size(), 0);
        for (int x : m) {
            if (x < 0 || x >= static_cast<int>(m.size()) || hit[static_cast<std::size_t>(x)])
                return false;
            hit[static_cast<std::size_t>(x)] = 1;
        }
        return true;
    };
    if (!is_perm(s.vertex_map))
        return "vertex map is not a permutation";
    if (!is_perm(s.arrow_map))
        return "arrow map is not a permutation";
    for (int i = 0; i < nv; ++i)
        if (s.vertex(s.vertex(i)) != i)
            return "vertex map is not an involution at '" +
                   q.vertices()[static_cast<std::size_t>(i)] + "'";
    for (int a = 0; a < na; ++a)
        if (s.arrow(s.arrow(a)) != a)
            return "arrow map is not an involution at '" + q.arrow(a).name + "'";
    // contravariance: sigma(a): sigma(tgt a) -> sigma(src a)
    for (int a = 0; a < na; ++a) {
        const Arrow& al = q.arrow(a);
        const Arrow& dual = q.arrow(s.arrow(a));
        if (dual.src != s.vertex(al.tgt) || dual.tgt != s.vertex(al.src))
            return "arrow '" + al.name + "' maps to '" + dual.name +
                   "', which does not run sigma(tgt)->sigma(src)";
    }
    return std::nullopt;
}

int total_dim(const DimVector& d)
{
    int t = 0;
    for (int x : d)
        t += x;
    return t;
}

DimVector add(const DimVector& a, const DimVector& b)
{
    DimVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

bool leq(const DimVector& a, const DimVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

std::string dim_str(const DimVector& d)
{
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

DimVector sigma_dim(const Involution& s, const DimVector& d)
{
    DimVector r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        r[i] = d[static_cast<std::size_t>(s.vertex(static_cast<int>(i)))];
    return r;
}

bool sigma_symmetric(const Involution& s, const DimVector& d)
{
    return sigma_dim(s, d) == d;
}

std::vector<DimVector> dims_upto(const DimVector& bound)
{
    std::vector<DimVector> out;
    DimVector d(bound.size(), 0);
    for (;;) {
        out.push_back(d);
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            if (d[i] < bound[i]) {
                ++d[i];
                std::fill(d.begin() + static_cast<std::ptrdiff_t>(i) + 1, d.end(), 0);
                break;
            }
            if (i == 0)
                return out;
        }
        if (d.size() == 0)
            return out;  // single empty vector
    }
}

std::vector<DimVector> dims_with_total_upto(int num_vertices, int bound)
{
    std::vector<DimVector> out;
    DimVector d(static_cast<std::size_t>(num_vertices), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == num_vertices) {
            out.push_back(d);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
        d[static_cast<std::size_t>(pos)] = 0;
    };
    if (num_vertices == 0) {
        out.push_back({});
        return out;
    }
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace f1hall
