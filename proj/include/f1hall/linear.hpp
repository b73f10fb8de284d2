#pragma once

/* Finite linear combinations with exact rational coefficients.  Zero
 * coefficients are never stored, so equality of values is equality of
 * elements.  Keys are ordered, which fixes the output order everywhere.
 */

#include "f1hall/rational.hpp"

#include <map>
#include <utility>

namespace f1hall {

template <class K>
class Linear {
public:
    Linear() = default;

    static Linear basis(K k)
    {
        Linear x;
        x.add(std::move(k), Rat(1));
        return x;
    }

    void add(const K& k, const Rat& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const std::map<K, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const K& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Linear& operator+=(const Linear& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }

    Linear& operator-=(const Linear& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }

    Linear& operator*=(const Rat& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }

    friend Linear operator+(Linear a, const Linear& b) { a += b; return a; }
    friend Linear operator-(Linear a, const Linear& b) { a -= b; return a; }
    friend Linear operator*(const Rat& c, Linear a) { a *= c; return a; }

    bool operator==(const Linear&) const = default;

private:
    std::map<K, Rat> terms_;
};

}  // namespace f1hall
