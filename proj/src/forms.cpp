#include "f1hall/forms.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace f1hall {

Rep dualize(const Quiver& q, const Involution& s, const Rep& r)
{
    std::vector<PointedSet> sp;
    for (int i = 0; i < q.num_vertices(); ++i)
        sp.push_back(r.space(s.vertex(i)));
    std::vector<PartialInjection> mp;
    for (int a = 0; a < q.num_arrows(); ++a)
        mp.push_back(converse(r.map(s.arrow(a))));
    return Rep(q, std::move(sp), std::move(mp));
}

namespace {

PartialInjection as_partial_injection(const std::vector<int>& bij, int cod)
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(bij.size());
    for (std::size_t x = 0; x < bij.size(); ++x)
        pairs.emplace_back(static_cast<int>(x), bij[x]);
    return PartialInjection(static_cast<int>(bij.size()), cod, std::move(pairs));
}

}  // namespace

std::optional<std::string> is_form(const Quiver& q, const Involution& s,
                                   const SymmetricForm& f)
{
    const Rep& r = f.rep;
    if (static_cast<int>(f.b.size()) != q.num_vertices())
        return "form has wrong number of vertex maps";
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& bi = f.b[static_cast<std::size_t>(i)];
        const int di = r.space(i).size;
        const int dsi = r.space(s.vertex(i)).size;
        if (static_cast<int>(bi.size()) != di)
            return "b at vertex '" + q.vertices()[static_cast<std::size_t>(i)] +
                   "' has wrong length";
        std::vector<char> hit(static_cast<std::size_t>(dsi), 0);
        for (int y : bi) {
            if (y < 0 || y >= dsi || hit[static_cast<std::size_t>(y)])
                return "b at vertex '" + q.vertices()[static_cast<std::size_t>(i)] +
                       "' is not a bijection onto the dual fibre";
            hit[static_cast<std::size_t>(y)] = 1;
        }
        if (di != dsi)
            return "dimension vector is not sigma-symmetric at vertex '" +
                   q.vertices()[static_cast<std::size_t>(i)] + "'";
    }
    // inverse-symmetry: b_{sigma(i)} = b_i^{-1}
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& bi = f.b[static_cast<std::size_t>(i)];
        const auto& bsi = f.b[static_cast<std::size_t>(s.vertex(i))];
        for (std::size_t x = 0; x < bi.size(); ++x)
            if (bsi[static_cast<std::size_t>(bi[x])] != static_cast<int>(x))
                return "b_{sigma(i)} differs from b_i^{-1} at vertex '" +
                       q.vertices()[static_cast<std::size_t>(i)] + "'";
    }
    // morphism condition per arrow a: i -> j:
    // compose(b_i, converse(n_{sigma(a)})) = compose(n_a, b_j)
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        PartialInjection bi = as_partial_injection(f.b[static_cast<std::size_t>(ar.src)],
                                                   r.space(s.vertex(ar.src)).size);
        PartialInjection bj = as_partial_injection(f.b[static_cast<std::size_t>(ar.tgt)],
                                                   r.space(s.vertex(ar.tgt)).size);
        PartialInjection lhs = compose(bi, converse(r.map(s.arrow(a))));
        PartialInjection rhs = compose(r.map(a), bj);
        if (!(lhs == rhs))
            return "b is not a morphism to the dual at arrow '" + ar.name + "'";
    }
    return std::nullopt;
}

std::string encode_form(const Quiver& q, const SymmetricForm& f)
{
    std::string enc = encode_rep(q, f.rep);
    enc += '@';
    for (int i = 0; i < q.num_vertices(); ++i) {
        if (i)
            enc += '|';
        enc += q.vertices()[static_cast<std::size_t>(i)];
        enc += '=';
        const auto& bi = f.b[static_cast<std::size_t>(i)];
        for (std::size_t x = 0; x < bi.size(); ++x) {
            if (x)
                enc += ',';
            enc += std::to_string(bi[x]);
        }
    }
    return enc;
}

namespace {

std::vector<std::string> split_at(const std::string& s, char sep)
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

}  // namespace

SymmetricForm parse_form(const Quiver& q, const std::string& enc)
{
    auto at = enc.find('@');
    if (at == std::string::npos)
        throw std::invalid_argument("form encoding: missing '@' section");
    SymmetricForm f;
    f.rep = parse_rep(q, enc.substr(0, at));
    std::string rest = enc.substr(at + 1);
    auto sections = split_at(rest, '|');
    if (static_cast<int>(sections.size()) != q.num_vertices())
        throw std::invalid_argument("form encoding: wrong number of vertex sections");
    f.b.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int i = 0; i < q.num_vertices(); ++i) {
        const std::string& sec = sections[static_cast<std::size_t>(i)];
        auto eq = sec.find('=');
        if (eq == std::string::npos ||
            sec.substr(0, eq) != q.vertices()[static_cast<std::size_t>(i)])
            throw std::invalid_argument("form encoding: vertex section mismatch");
        std::string body = sec.substr(eq + 1);
        auto& bi = f.b[static_cast<std::size_t>(i)];
        if (!body.empty())
            for (const auto& v : split_at(body, ','))
                bi.push_back(std::stoi(v));
    }
    return f;
}

SymmetricForm relabel(const Quiver& q, const Involution& s, const SymmetricForm& f,
                      const std::vector<std::vector<int>>& perm)
{
    SymmetricForm out;
    out.rep = relabel(q, f.rep, perm);
    out.b.resize(f.b.size());
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& bi = f.b[static_cast<std::size_t>(i)];
        auto& oi = out.b[static_cast<std::size_t>(i)];
        oi.assign(bi.size(), 0);
        const auto& pi = perm[static_cast<std::size_t>(i)];
        const auto& psi = perm[static_cast<std::size_t>(s.vertex(i))];
        for (std::size_t x = 0; x < bi.size(); ++x)
            oi[static_cast<std::size_t>(pi[x])] = psi[static_cast<std::size_t>(bi[x])];
    }
    return out;
}

IsometryClass canonical_isometry_class(const Quiver& q, const Involution& s,
                                       const SymmetricForm& f)
{
    std::string best;
    bool first = true;
    for_each_relabeling(dim_vector(f.rep), [&](const std::vector<std::vector<int>>& perm) {
        std::string enc = encode_form(q, relabel(q, s, f, perm));
        if (first || enc < best) {
            best = std::move(enc);
            first = false;
        }
    });
    if (first)
        best = encode_form(q, f);
    return IsometryClass{best};
}

bool isometric(const Quiver& q, const Involution& s, const SymmetricForm& m,
               const SymmetricForm& n)
{
    if (dim_vector(m.rep) != dim_vector(n.rep))
        return false;
    return canonical_isometry_class(q, s, m) == canonical_isometry_class(q, s, n);
}

SymmetricForm hyperbolic(const Quiver& q, const Involution& s, const Rep& u)
{
    SymmetricForm f;
    f.rep = direct_sum(q, u, dualize(q, s, u));
    f.b.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int i = 0; i < q.num_vertices(); ++i) {
        const int du = u.space(i).size;            // u-part of fibre i
        const int dd = u.space(s.vertex(i)).size;  // dual part of fibre i
        auto& bi = f.b[static_cast<std::size_t>(i)];
        bi.resize(static_cast<std::size_t>(du + dd));
        // x in the u-part at i maps to the copy of x in the dual part at
        // sigma(i), whose u-part has size dd; the dual part maps back
        for (int x = 0; x < du; ++x)
            bi[static_cast<std::size_t>(x)] = dd + x;
        for (int y = 0; y < dd; ++y)
            bi[static_cast<std::size_t>(du + y)] = y;
    }
    return f;
}

SymmetricForm form_sum(const Quiver& q, const Involution& s, const SymmetricForm& a,
                       const SymmetricForm& b)
{
    SymmetricForm f;
    f.rep = direct_sum(q, a.rep, b.rep);
    f.b.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int i = 0; i < q.num_vertices(); ++i) {
        auto& bi = f.b[static_cast<std::size_t>(i)];
        for (int x : a.b[static_cast<std::size_t>(i)])
            bi.push_back(x);
        const int shift = a.rep.space(s.vertex(i)).size;  // a-part of the dual fibre
        for (int x : b.b[static_cast<std::size_t>(i)])
            bi.push_back(x + shift);
    }
    return f;
}

std::vector<IsometryClass> enumerate_forms(const Quiver& q, const Involution& s,
                                           const DimVector& e)
{
    std::vector<IsometryClass> out;
    if (!sigma_symmetric(s, e))
        return out;
    std::set<IsometryClass> classes;
    // enumerate b vertex-orbit-wise: an involution at a fixed vertex, an
    // arbitrary bijection at the smaller vertex of a swapped pair
    std::vector<int> free_vertices;
    for (int i = 0; i < q.num_vertices(); ++i)
        if (i <= s.vertex(i))
            free_vertices.push_back(i);

    for (const auto& rc : enumerate_reps(q, e)) {
        Rep r = parse_rep(q, rc.enc);
        std::vector<std::vector<int>> b(static_cast<std::size_t>(q.num_vertices()));
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == free_vertices.size()) {
                SymmetricForm f{r, b};
                if (!is_form(q, s, f))
                    classes.insert(canonical_isometry_class(q, s, f));
                return;
            }
            const int i = free_vertices[k];
            const int n = r.space(i).size;
            for (const auto& perm : permutations(n)) {
                if (s.vertex(i) == i) {
                    bool invol = true;
                    for (int x = 0; x < n; ++x)
                        if (perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] != x) {
                            invol = false;
                            break;
                        }
                    if (!invol)
                        continue;
                    b[static_cast<std::size_t>(i)] = perm;
                } else {
                    b[static_cast<std::size_t>(i)] = perm;
                    std::vector<int> inv(static_cast<std::size_t>(n));
                    for (int x = 0; x < n; ++x)
                        inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = x;
                    b[static_cast<std::size_t>(s.vertex(i))] = std::move(inv);
                }
                rec(k + 1);
            }
        };
        rec(0);
    }
    return std::vector<IsometryClass>(classes.begin(), classes.end());
}

GradedSubset form_image(const Quiver& q, const Involution& s,
                        const SymmetricForm& n, const GradedSubset& u)
{
    GradedSubset img = GradedSubset::none(q.num_vertices());
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& bi = n.b[static_cast<std::size_t>(i)];
        for (int x = 0; x < static_cast<int>(bi.size()); ++x)
            if (u.contains(i, x))
                img.bits[static_cast<std::size_t>(s.vertex(i))] |=
                    1u << bi[static_cast<std::size_t>(x)];
    }
    return img;
}

bool is_isotropic(const Quiver& q, const Involution& s, const SymmetricForm& n,
                  const GradedSubset& u)
{
    if (!is_closed_subset(q, n.rep, u))
        return false;
    GradedSubset img = form_image(q, s, n, u);
    for (std::size_t v = 0; v < img.bits.size(); ++v)
        if (img.bits[v] & u.bits[v])
            return false;
    return true;
}

std::vector<GradedSubset> isotropics(const Quiver& q, const Involution& s,
                                     const SymmetricForm& n)
{
    std::vector<GradedSubset> out;
    for (const auto& u : subrepresentations(q, n.rep)) {
        GradedSubset img = form_image(q, s, n, u);
        bool disjoint = true;
        for (std::size_t v = 0; v < img.bits.size(); ++v)
            if (img.bits[v] & u.bits[v]) {
                disjoint = false;
                break;
            }
        if (!disjoint)
            continue;
        // the orthogonal is the complement of b(U); it is the kernel of a
        // morphism, hence closed -- verified rather than assumed
        GradedSubset perp = GradedSubset::all(n.rep);
        for (std::size_t v = 0; v < perp.bits.size(); ++v)
            perp.bits[v] &= ~img.bits[v];
        if (!is_closed_subset(q, n.rep, perp))
            throw std::logic_error("isotropics: orthogonal is not closed under arrow maps");
        out.push_back(u);
    }
    return out;
}

SymmetricForm reduce(const Quiver& q, const Involution& s, const SymmetricForm& n,
                     const GradedSubset& u)
{
    if (!is_isotropic(q, s, n, u))
        throw std::invalid_argument("reduce: subset is not isotropic");
    GradedSubset img = form_image(q, s, n, u);
    GradedSubset survivors = GradedSubset::all(n.rep);
    for (std::size_t v = 0; v < survivors.bits.size(); ++v)
        survivors.bits[v] &= ~(u.bits[v] | img.bits[v]);

    // dense reindexing per vertex
    std::vector<std::vector<int>> newidx(static_cast<std::size_t>(q.num_vertices()));
    for (int v = 0; v < q.num_vertices(); ++v) {
        auto& ni = newidx[static_cast<std::size_t>(v)];
        ni.assign(static_cast<std::size_t>(n.rep.space(v).size), -1);
        int c = 0;
        for (int x = 0; x < n.rep.space(v).size; ++x)
            if (survivors.contains(v, x))
                ni[static_cast<std::size_t>(x)] = c++;
    }

    SymmetricForm out;
    out.rep = restrict_elements(q, n.rep, survivors);
    out.b.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& bi = n.b[static_cast<std::size_t>(i)];
        auto& oi = out.b[static_cast<std::size_t>(i)];
        const int si = s.vertex(i);
        for (int x = 0; x < n.rep.space(i).size; ++x) {
            if (!survivors.contains(i, x))
                continue;
            int y = bi[static_cast<std::size_t>(x)];
            if (!survivors.contains(si, y))
                throw std::logic_error("reduce: form image of a survivor was deleted");
            oi.push_back(newidx[static_cast<std::size_t>(si)][static_cast<std::size_t>(y)]);
        }
    }
    if (auto bad = is_form(q, s, out))
        throw std::logic_error("reduce: result is not a symmetric form: " + *bad);
    return out;
}

SymmetricForm restrict_form(const Quiver& q, const Involution& s,
                            const SymmetricForm& n, const GradedSubset& u)
{
    GradedSubset img = form_image(q, s, n, u);
    if (!(img == u))
        throw std::invalid_argument("restrict_form: subset is not b-stable");
    std::vector<std::vector<int>> newidx(static_cast<std::size_t>(q.num_vertices()));
    for (int v = 0; v < q.num_vertices(); ++v) {
        auto& ni = newidx[static_cast<std::size_t>(v)];
        ni.assign(static_cast<std::size_t>(n.rep.space(v).size), -1);
        int c = 0;
        for (int x = 0; x < n.rep.space(v).size; ++x)
            if (u.contains(v, x))
                ni[static_cast<std::size_t>(x)] = c++;
    }
    SymmetricForm out;
    out.rep = restrict_elements(q, n.rep, u);
    out.b.resize(static_cast<std::size_t>(q.num_vertices()));
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& bi = n.b[static_cast<std::size_t>(i)];
        const int si = s.vertex(i);
        for (int x = 0; x < n.rep.space(i).size; ++x)
            if (u.contains(i, x))
                out.b[static_cast<std::size_t>(i)].push_back(
                    newidx[static_cast<std::size_t>(si)][static_cast<std::size_t>(bi[static_cast<std::size_t>(x)])]);
    }
    return out;
}

OrthogonalDecomposition orthogonal_decompose(const Quiver& q, const Involution& s,
                                             const SymmetricForm& n)
{
    auto comps = components(q, n.rep);
    // the form permutes components: track where each element goes
    std::vector<int> comp_of;  // flattened (vertex-major) element -> component
    std::vector<int> offset(static_cast<std::size_t>(q.num_vertices()) + 1, 0);
    for (int v = 0; v < q.num_vertices(); ++v)
        offset[static_cast<std::size_t>(v) + 1] =
            offset[static_cast<std::size_t>(v)] + n.rep.space(v).size;
    comp_of.assign(static_cast<std::size_t>(offset.back()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v = 0; v < q.num_vertices(); ++v)
            for (int x = 0; x < n.rep.space(v).size; ++x)
                if (comps[c].contains(v, x))
                    comp_of[static_cast<std::size_t>(offset[static_cast<std::size_t>(v)] + x)] =
                        static_cast<int>(c);

    std::vector<int> tau(comps.size(), -1);
    for (int i = 0; i < q.num_vertices(); ++i) {
        const int si = s.vertex(i);
        for (int x = 0; x < n.rep.space(i).size; ++x) {
            int from = comp_of[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + x)];
            int y = n.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
            int to = comp_of[static_cast<std::size_t>(offset[static_cast<std::size_t>(si)] + y)];
            if (tau[static_cast<std::size_t>(from)] == -1)
                tau[static_cast<std::size_t>(from)] = to;
            else if (tau[static_cast<std::size_t>(from)] != to)
                throw std::logic_error("orthogonal_decompose: form does not permute components");
        }
    }

    OrthogonalDecomposition out;
    SymmetricForm check{Rep::zero(q), std::vector<std::vector<int>>(
                                          static_cast<std::size_t>(q.num_vertices()))};
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int t = tau[c];
        if (t == static_cast<int>(c)) {
            SymmetricForm piece = restrict_form(q, s, n, comps[c]);
            ++out.self_dual[canonical_isometry_class(q, s, piece)];
            check = form_sum(q, s, check, piece);
        } else if (t > static_cast<int>(c)) {
            GradedSubset both = comps[c];
            for (std::size_t v = 0; v < both.bits.size(); ++v)
                both.bits[v] |= comps[static_cast<std::size_t>(t)].bits[v];
            CanonicalClass side_a = canonical_form(q, restrict_elements(q, n.rep, comps[c]));
            CanonicalClass side_b =
                canonical_form(q, restrict_elements(q, n.rep, comps[static_cast<std::size_t>(t)]));
            CanonicalClass label = std::min(side_a, side_b);
            ++out.hyperbolic[label];
            SymmetricForm piece = restrict_form(q, s, n, both);
            SymmetricForm model = hyperbolic(q, s, parse_rep(q, label.enc));
            if (!isometric(q, s, piece, model))
                throw std::logic_error(
                    "orthogonal_decompose: swapped pair is not hyperbolic");
            check = form_sum(q, s, check, piece);
        }
    }
    if (!isometric(q, s, check, n))
        throw std::logic_error("orthogonal_decompose: summands do not reassemble");
    return out;
}

}  // namespace f1hall
