#include "f1hall/rep.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>

namespace f1hall {

Rep::Rep(const Quiver& q, std::vector<PointedSet> spaces,
         std::vector<PartialInjection> maps)
    : spaces_(std::move(spaces)), maps_(std::move(maps))
{
    if (static_cast<int>(spaces_.size()) != q.num_vertices())
        throw std::invalid_argument("Rep: wrong number of spaces");
    if (static_cast<int>(maps_.size()) != q.num_arrows())
        throw std::invalid_argument("Rep: wrong number of maps");
    for (const auto& sp : spaces_)
        if (sp.size < 0 || sp.size > 31)
            throw std::invalid_argument(
                "Rep: fibre dimension must be between 0 and 31");
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        const PartialInjection& m = maps_[static_cast<std::size_t>(a)];
        if (m.dom_size() != space(ar.src).size || m.cod_size() != space(ar.tgt).size)
            throw std::invalid_argument("Rep: map size mismatch at arrow '" + ar.name + "'");
    }
}

Rep Rep::zero(const Quiver& q)
{
    std::vector<PointedSet> sp(static_cast<std::size_t>(q.num_vertices()));
    std::vector<PartialInjection> mp;
    mp.reserve(static_cast<std::size_t>(q.num_arrows()));
    for (int a = 0; a < q.num_arrows(); ++a)
        mp.push_back(PartialInjection::zero(0, 0));
    return Rep(q, std::move(sp), std::move(mp));
}

DimVector dim_vector(const Rep& r)
{
    DimVector d;
    d.reserve(r.spaces().size());
    for (const auto& s : r.spaces())
        d.push_back(s.size);
    return d;
}

Rep direct_sum(const Quiver& q, const Rep& a, const Rep& b)
{
    std::vector<PointedSet> sp;
    for (int v = 0; v < q.num_vertices(); ++v)
        sp.push_back({a.space(v).size + b.space(v).size});
    std::vector<PartialInjection> mp;
    for (int ar = 0; ar < q.num_arrows(); ++ar)
        mp.push_back(direct_sum(a.map(ar), b.map(ar)));
    return Rep(q, std::move(sp), std::move(mp));
}

std::string encode_rep(const Quiver& q, const Rep& r)
{
    std::string s = dim_str(dim_vector(r));
    for (int a = 0; a < q.num_arrows(); ++a) {
        s += '|';
        s += q.arrow(a).name;
        s += ':';
        const auto& pr = r.map(a).pairs();
        for (std::size_t k = 0; k < pr.size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(pr[k].first);
            s += '>';
            s += std::to_string(pr[k].second);
        }
    }
    return s;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

int parse_int(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("encoding: expected integer");
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0)
        throw std::invalid_argument("encoding: bad integer '" + s + "'");
    return v;
}

}  // namespace

Rep parse_rep(const Quiver& q, const std::string& enc)
{
    auto parts = split(enc, '|');
    if (static_cast<int>(parts.size()) != 1 + q.num_arrows())
        throw std::invalid_argument("rep encoding: wrong number of sections");
    std::vector<PointedSet> sp;
    if (q.num_vertices() > 0) {
        auto ds = split(parts[0], ',');
        if (static_cast<int>(ds.size()) != q.num_vertices())
            throw std::invalid_argument("rep encoding: wrong number of dimensions");
        for (const auto& d : ds)
            sp.push_back({parse_int(d)});
    } else if (!parts[0].empty()) {
        throw std::invalid_argument("rep encoding: dims for empty quiver");
    }
    std::vector<PartialInjection> mp;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const std::string& sec = parts[static_cast<std::size_t>(a) + 1];
        auto colon = sec.find(':');
        if (colon == std::string::npos ||
            sec.substr(0, colon) != q.arrow(a).name)
            throw std::invalid_argument("rep encoding: arrow section mismatch");
        std::vector<std::pair<int, int>> pairs;
        std::string body = sec.substr(colon + 1);
        if (!body.empty()) {
            for (const auto& p : split(body, ',')) {
                auto gt = p.find('>');
                if (gt == std::string::npos)
                    throw std::invalid_argument("rep encoding: bad pair '" + p + "'");
                pairs.emplace_back(parse_int(p.substr(0, gt)), parse_int(p.substr(gt + 1)));
            }
        }
        const Arrow& ar = q.arrow(a);
        mp.emplace_back(sp[static_cast<std::size_t>(ar.src)].size,
                        sp[static_cast<std::size_t>(ar.tgt)].size, std::move(pairs));
    }
    return Rep(q, std::move(sp), std::move(mp));
}

const std::vector<std::vector<int>>& permutations(int n)
{
    if (n < 0 || n > 10)
        throw std::invalid_argument(
            "permutations: exhaustive canonicalization handles fibre dimensions up to 10");
    // fixed slots so references stay valid while other threads fill other
    // sizes; a filled slot is never touched again
    static std::array<std::vector<std::vector<int>>, 11> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (slot.empty()) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<std::size_t>(i)] = i;
        do {
            slot.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return slot;
}

void for_each_relabeling(const DimVector& dims,
                         const std::function<void(const std::vector<std::vector<int>>&)>& f)
{
    const std::size_t nv = dims.size();
    std::vector<std::size_t> idx(nv, 0);
    std::vector<std::vector<int>> perm(nv);
    for (;;) {
        for (std::size_t v = 0; v < nv; ++v)
            perm[v] = permutations(dims[v])[idx[v]];
        f(perm);
        std::size_t v = 0;
        while (v < nv) {
            if (++idx[v] < permutations(dims[v]).size())
                break;
            idx[v] = 0;
            ++v;
        }
        if (v == nv)
            return;
    }
}

Rep relabel(const Quiver& q, const Rep& r, const std::vector<std::vector<int>>& perm)
{
    std::vector<PartialInjection> mp;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(r.map(a).pairs().size());
        for (auto [x, y] : r.map(a).pairs())
            pairs.emplace_back(perm[static_cast<std::size_t>(ar.src)][static_cast<std::size_t>(x)],
                               perm[static_cast<std::size_t>(ar.tgt)][static_cast<std::size_t>(y)]);
        mp.emplace_back(r.map(a).dom_size(), r.map(a).cod_size(), std::move(pairs));
    }
    return Rep(q, r.spaces(), std::move(mp));
}

CanonicalClass canonical_form(const Quiver& q, const Rep& r)
{
    std::string best;
    bool first = true;
    for_each_relabeling(dim_vector(r), [&](const std::vector<std::vector<int>>& perm) {
        std::string enc = encode_rep(q, relabel(q, r, perm));
        if (first || enc < best) {
            best = std::move(enc);
            first = false;
        }
    });
    if (first)
        best = encode_rep(q, r);  // quiver without vertices
    return CanonicalClass{best};
}

int GradedSubset::count() const
{
    int c = 0;
    for (auto b : bits)
        c += std::popcount(b);
    return c;
}

bool GradedSubset::empty() const
{
    for (auto b : bits)
        if (b)
            return false;
    return true;
}

GradedSubset GradedSubset::none(int num_vertices)
{
    return GradedSubset{std::vector<std::uint32_t>(static_cast<std::size_t>(num_vertices), 0)};
}

GradedSubset GradedSubset::all(const Rep& r)
{
    GradedSubset s;
    for (const auto& sp : r.spaces())
        s.bits.push_back(sp.size >= 32 ? ~0u : ((1u << sp.size) - 1u));
    return s;
}

namespace {

// Global element ids: (vertex, index) -> offset[vertex] + index.
struct ElementGraph {
    std::vector<int> offset;
    int n = 0;
    std::vector<std::vector<int>> succ;  // arrow-map images
    std::vector<std::vector<int>> adj;   // undirected version

    ElementGraph(const Quiver& q, const Rep& r)
    {
        offset.resize(static_cast<std::size_t>(q.num_vertices()) + 1, 0);
        for (int v = 0; v < q.num_vertices(); ++v)
            offset[static_cast<std::size_t>(v) + 1] =
                offset[static_cast<std::size_t>(v)] + r.space(v).size;
        n = offset[static_cast<std::size_t>(q.num_vertices())];
        succ.assign(static_cast<std::size_t>(n), {});
        adj.assign(static_cast<std::size_t>(n), {});
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            for (auto [x, y] : r.map(a).pairs()) {
                int gx = offset[static_cast<std::size_t>(ar.src)] + x;
                int gy = offset[static_cast<std::size_t>(ar.tgt)] + y;
                succ[static_cast<std::size_t>(gx)].push_back(gy);
                adj[static_cast<std::size_t>(gx)].push_back(gy);
                adj[static_cast<std::size_t>(gy)].push_back(gx);
            }
        }
    }

    GradedSubset to_graded(const Quiver& q, const std::vector<char>& in) const
    {
        GradedSubset s = GradedSubset::none(q.num_vertices());
        for (int v = 0; v < q.num_vertices(); ++v)
            for (int g = offset[static_cast<std::size_t>(v)];
                 g < offset[static_cast<std::size_t>(v) + 1]; ++g)
                if (in[static_cast<std::size_t>(g)])
                    s.bits[static_cast<std::size_t>(v)] |=
                        1u << (g - offset[static_cast<std::size_t>(v)]);
        return s;
    }
};

}  // namespace

bool is_closed_subset(const Quiver& q, const Rep& r, const GradedSubset& s)
{
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        for (auto [x, y] : r.map(a).pairs())
            if (s.contains(ar.src, x) && !s.contains(ar.tgt, y))
                return false;
    }
    return true;
}

std::vector<GradedSubset> subrepresentations(const Quiver& q, const Rep& r)
{
    ElementGraph g(q, r);
    // forward closure of each element under the arrow maps
    std::vector<std::vector<int>> closure(static_cast<std::size_t>(g.n));
    for (int e = 0; e < g.n; ++e) {
        std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
        std::vector<int> stack{e};
        seen[static_cast<std::size_t>(e)] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            closure[static_cast<std::size_t>(e)].push_back(x);
            for (int y : g.succ[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
    }

    std::vector<GradedSubset> out;
    std::vector<char> in(static_cast<std::size_t>(g.n), 0);
    std::vector<char> excluded(static_cast<std::size_t>(g.n), 0);
    // decide element-by-element; including an element forces its closure in,
    // which prunes branches that meet an excluded element
    std::function<void(int)> rec = [&](int next) {
        if (next == g.n) {
            out.push_back(g.to_graded(q, in));
            return;
        }
        if (in[static_cast<std::size_t>(next)]) {
            rec(next + 1);
            return;
        }
        excluded[static_cast<std::size_t>(next)] = 1;
        rec(next + 1);
        excluded[static_cast<std::size_t>(next)] = 0;

        bool ok = true;
        for (int x : closure[static_cast<std::size_t>(next)])
            if (excluded[static_cast<std::size_t>(x)]) {
                ok = false;
                break;
            }
        if (ok) {
            std::vector<int> added;
            for (int x : closure[static_cast<std::size_t>(next)])
                if (!in[static_cast<std::size_t>(x)]) {
                    in[static_cast<std::size_t>(x)] = 1;
                    added.push_back(x);
                }
            rec(next + 1);
            for (int x : added)
                in[static_cast<std::size_t>(x)] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

Rep restrict_elements(const Quiver& q, const Rep& r, const GradedSubset& s)
{
    std::vector<std::vector<int>> newidx(static_cast<std::size_t>(q.num_vertices()));
    std::vector<PointedSet> sp;
    for (int v = 0; v < q.num_vertices(); ++v) {
        auto& ni = newidx[static_cast<std::size_t>(v)];
        ni.assign(static_cast<std::size_t>(r.space(v).size), -1);
        int c = 0;
        for (int x = 0; x < r.space(v).size; ++x)
            if (s.contains(v, x))
                ni[static_cast<std::size_t>(x)] = c++;
        sp.push_back({c});
    }
    std::vector<PartialInjection> mp;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        std::vector<std::pair<int, int>> pairs;
        for (auto [x, y] : r.map(a).pairs()) {
            int nx = newidx[static_cast<std::size_t>(ar.src)][static_cast<std::size_t>(x)];
            int ny = newidx[static_cast<std::size_t>(ar.tgt)][static_cast<std::size_t>(y)];
            if (nx >= 0 && ny >= 0)
                pairs.emplace_back(nx, ny);
        }
        mp.emplace_back(sp[static_cast<std::size_t>(ar.src)].size,
                        sp[static_cast<std::size_t>(ar.tgt)].size, std::move(pairs));
    }
    return Rep(q, std::move(sp), std::move(mp));
}

Rep quotient(const Quiver& q, const Rep& r, const GradedSubset& s)
{
    if (!is_closed_subset(q, r, s))
        throw std::invalid_argument("quotient: subset not closed under arrow maps");
    GradedSubset comp = GradedSubset::all(r);
    for (std::size_t v = 0; v < comp.bits.size(); ++v)
        comp.bits[v] &= ~s.bits[v];
    // pairs whose target collapses send the source to the basepoint, so
    // keeping both-endpoint pairs is the cokernel
    return restrict_elements(q, r, comp);
}

std::vector<GradedSubset> components(const Quiver& q, const Rep& r)
{
    ElementGraph g(q, r);
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    int nc = 0;
    for (int e = 0; e < g.n; ++e) {
        if (comp[static_cast<std::size_t>(e)] >= 0)
            continue;
        std::vector<int> stack{e};
        comp[static_cast<std::size_t>(e)] = nc;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.adj[static_cast<std::size_t>(x)])
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = nc;
                    stack.push_back(y);
                }
        }
        ++nc;
    }
    std::vector<std::vector<char>> members(static_cast<std::size_t>(nc),
                                           std::vector<char>(static_cast<std::size_t>(g.n), 0));
    for (int e = 0; e < g.n; ++e)
        members[static_cast<std::size_t>(comp[static_cast<std::size_t>(e)])]
               [static_cast<std::size_t>(e)] = 1;
    std::vector<GradedSubset> out;
    out.reserve(static_cast<std::size_t>(nc));
    for (const auto& m : members)
        out.push_back(g.to_graded(q, m));
    return out;
}

std::map<CanonicalClass, int> indecomposables(const Quiver& q, const Rep& r)
{
    std::map<CanonicalClass, int> out;
    for (const auto& c : components(q, r))
        ++out[canonical_form(q, restrict_elements(q, r, c))];
    return out;
}

std::vector<PartialInjection> all_partial_injections(int n, int m)
{
    if (n < 0 || m < 0 || n > 10 || m > 10)
        throw std::invalid_argument(
            "all_partial_injections: exhaustive enumeration handles sizes up to 10");
    // choose a source subset, then an injection into the codomain
    std::vector<PartialInjection> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> srcs;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u)
                srcs.push_back(i);
        const int k = static_cast<int>(srcs.size());
        if (k > m)
            continue;
        std::vector<int> tgt(static_cast<std::size_t>(k));
        std::vector<char> used(static_cast<std::size_t>(m), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == k) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < k; ++i)
                    pairs.emplace_back(srcs[static_cast<std::size_t>(i)],
                                       tgt[static_cast<std::size_t>(i)]);
                out.emplace_back(n, m, std::move(pairs));
                return;
            }
            for (int t = 0; t < m; ++t) {
                if (used[static_cast<std::size_t>(t)])
                    continue;
                used[static_cast<std::size_t>(t)] = 1;
                tgt[static_cast<std::size_t>(pos)] = t;
                rec(pos + 1);
                used[static_cast<std::size_t>(t)] = 0;
            }
        };
        rec(0);
    }
    return out;
}

std::vector<CanonicalClass> enumerate_reps(const Quiver& q, const DimVector& d)
{
    std::vector<PointedSet> sp;
    for (int x : d)
        sp.push_back({x});
    std::set<CanonicalClass> classes;
    std::vector<PartialInjection> maps(static_cast<std::size_t>(q.num_arrows()));
    std::function<void(int)> rec = [&](int a) {
        if (a == q.num_arrows()) {
            classes.insert(canonical_form(q, Rep(q, sp, maps)));
            return;
        }
        const Arrow& ar = q.arrow(a);
        for (auto& m : all_partial_injections(d[static_cast<std::size_t>(ar.src)],
                                              d[static_cast<std::size_t>(ar.tgt)])) {
            maps[static_cast<std::size_t>(a)] = m;
            rec(a + 1);
        }
    };
    rec(0);
    return std::vector<CanonicalClass>(classes.begin(), classes.end());
}

}  // namespace f1hall
