#include "f1hall/f1vect.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace f1hall {

PartialInjection::PartialInjection(int dom_size, int cod_size,
                                   std::vector<std::pair<int, int>> pairs)
    : dom_(dom_size), cod_(cod_size), pairs_(std::move(pairs))
{
    if (dom_ < 0 || cod_ < 0)
        throw std::invalid_argument("PartialInjection: negative size");
    std::sort(pairs_.begin(), pairs_.end());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        auto [s, t] = pairs_[k];
        if (s < 0 || s >= dom_ || t < 0 || t >= cod_)
            throw std::invalid_argument("PartialInjection: index out of bounds");
        if (k > 0 && pairs_[k - 1].first == s)
            throw std::invalid_argument("PartialInjection: repeated source " +
                                        std::to_string(s));
    }
    std::vector<char> seen(static_cast<std::size_t>(std::max(cod_, 0)), 0);
    for (auto [s, t] : pairs_) {
        if (seen[static_cast<std::size_t>(t)])
            throw std::invalid_argument("PartialInjection: repeated target " +
                                        std::to_string(t));
        seen[static_cast<std::size_t>(t)] = 1;
    }
}

PartialInjection PartialInjection::identity(int n)
{
    std::vector<std::pair<int, int>> p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p.emplace_back(i, i);
    return PartialInjection(n, n, std::move(p));
}

PartialInjection PartialInjection::zero(int dom_size, int cod_size)
{
    return PartialInjection(dom_size, cod_size, {});
}

std::optional<int> PartialInjection::image(int src) const
{
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(),
                               std::pair<int, int>{src, -1});
    if (it != pairs_.end() && it->first == src)
        return it->second;
    return std::nullopt;
}

std::optional<int> PartialInjection::preimage(int tgt) const
{
    for (auto [s, t] : pairs_)
        if (t == tgt)
            return s;
    return std::nullopt;
}

PartialInjection compose(const PartialInjection& f, const PartialInjection& g)
{
    if (f.cod_size() != g.dom_size())
        throw std::invalid_argument("compose: codomain/domain size mismatch");
    std::vector<std::pair<int, int>> p;
    for (auto [x, y] : f.pairs())
        if (auto z = g.image(y))
            p.emplace_back(x, *z);
    return PartialInjection(f.dom_size(), g.cod_size(), std::move(p));
}

PartialInjection converse(const PartialInjection& f)
{
    std::vector<std::pair<int, int>> p;
    p.reserve(f.pairs().size());
    for (auto [s, t] : f.pairs())
        p.emplace_back(t, s);
    return PartialInjection(f.cod_size(), f.dom_size(), std::move(p));
}

PartialInjection direct_sum(const PartialInjection& f, const PartialInjection& g)
{
    std::vector<std::pair<int, int>> p(f.pairs());
    for (auto [s, t] : g.pairs())
        p.emplace_back(s + f.dom_size(), t + f.cod_size());
    return PartialInjection(f.dom_size() + g.dom_size(),
                            f.cod_size() + g.cod_size(), std::move(p));
}

MorphismKind classify(const PartialInjection& f)
{
    bool total = static_cast<int>(f.pairs().size()) == f.dom_size();
    bool onto = static_cast<int>(f.pairs().size()) == f.cod_size();
    if (total && onto)
        return MorphismKind::isomorphism;
    if (total)
        return MorphismKind::inflation;
    if (onto)
        return MorphismKind::deflation;
    return MorphismKind::neither;
}

}  // namespace f1hall
