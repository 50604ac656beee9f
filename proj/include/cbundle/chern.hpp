#pragma once

#include <map>
#include <vector>

#include "cbundle/bundle.hpp"
#include "cbundle/necklace.hpp"
#include "cbundle/rational.hpp"

namespace cbundle {

/// Coherent orientation of a closed surface: per triangle, +1 if the
/// ascending vertex order agrees with the fundamental class, -1 otherwise.
class SurfaceOrientation {
public:
    int sign(const Simplex& triangle) const;
    const std::map<Simplex, int>& signs() const { return signs_; }
    SurfaceOrientation flipped() const;

private:
    friend SurfaceOrientation orient_closed_surface(const SimplicialComplex& base);
    std::map<Simplex, int> signs_;
};

/// Propagates signs across edges so that every edge is induced with
/// opposite orientations by its two triangles. In each connected
/// component the lexicographically least triangle gets +1.
/// Throws NotClosedSurface unless the complex is pure 2-dimensional with
/// every edge on exactly two triangles, NonOrientable on a sign clash.
SurfaceOrientation orient_closed_surface(const SimplicialComplex& base);

struct LocalContribution {
    Simplex base_simplex;
    Necklace necklace;
    Rational local_value;
    int sign;
};

struct ChernResult {
    Rational signed_sum;
    long integer_value = 0;
    long absolute_value = 0;
    DirectedEdge orientation_seed{};
    std::vector<LocalContribution> per_simplex;
};

/// Signed sum of local values -P(N)/2 over the base triangles, paired with
/// the fundamental class. Throws IntegralityViolation if the exact sum is
/// not an integer.
ChernResult chern_number(const CircleBundle& b, const FiberOrientation& o, const SurfaceOrientation& so);

struct BoundEntry {
    Simplex base_simplex;
    Necklace necklace;
    Rational local_value;
    bool strictly_inside;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::vector<BoundEntry> violators;
    bool ok() const { return violators.empty(); }
};

/// True iff |value| < 1/2.
bool strictly_below_half(const Rational& value);

/// Checks |local value| < 1/2 on every triangle stalk.
BoundReport verify_bound(const CircleBundle& b, const FiberOrientation& o);

/// Same check on bare necklaces, each tagged with the simplex it stands for.
BoundReport verify_bound(const std::vector<std::pair<Simplex, Necklace>>& stalks);

} // namespace cbundle
