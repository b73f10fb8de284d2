#pragma once

/* Quivers with a contravariant involution, and dimension vectors. */

#include <optional>
#include <string>
#include <vector>

namespace f1hall {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

class Quiver {
public:
    Quiver() = default;

    /// Throws std::invalid_argument on duplicate names, invalid endpoints or
    /// names that are not [A-Za-z0-9_]+ (names appear in class encodings).
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }

    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Permutations of vertices and arrows, both involutive, reversing arrows:
/// for a: i -> j, the arrow sigma(a) runs sigma(j) -> sigma(i).
struct Involution {
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;

    int vertex(int i) const { return vertex_map[static_cast<std::size_t>(i)]; }
    int arrow(int a) const { return arrow_map[static_cast<std::size_t>(a)]; }

    static Involution identity_for(const Quiver& q);
};

/// nullopt when valid, otherwise a description of the violated condition.
std::optional<std::string> validate(const Quiver& q, const Involution& s);

using DimVector = std::vector<int>;

int total_dim(const DimVector& d);
DimVector add(const DimVector& a, const DimVector& b);
bool leq(const DimVector& a, const DimVector& b);  // componentwise
std::string dim_str(const DimVector& d);           // "a,b,..."

/// (sigma d)_i = d_{sigma(i)}, the dimension vector of the dual.
DimVector sigma_dim(const Involution& s, const DimVector& d);
bool sigma_symmetric(const Involution& s, const DimVector& d);

/// All d with 0 <= d <= bound componentwise, in lexicographic order.
std::vector<DimVector> dims_upto(const DimVector& bound);
/// All d over n vertices with total_dim(d) <= bound, in lexicographic order.
std::vector<DimVector> dims_with_total_upto(int num_vertices, int bound);

}  // namespace f1hall
