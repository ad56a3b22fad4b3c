#pragma once

#include "tfpmis/plane_graph.hpp"

namespace tfpmis {
namespace gen {

enum class Family { jones, hex, stars, k23, cube, cycle, random_tfp };

struct GenSpec {
    Family family = Family::cycle;
    int n = 0;        // jones (n >= 5, n = 2 mod 3), random_tfp (n >= 3)
    int rows = 0;     // hex
    int cols = 0;     // hex
    int a = 0;        // stars
    int length = 0;   // cycle
    unsigned seed = 0; // random_tfp
};

/// Builds the named family member. Throws BadParams on residue/range
/// violations. Every output passes build_plane_graph validation.
PlaneGraph gen_named(const GenSpec& spec);

PlaneGraph gen_jones(int n);
PlaneGraph gen_hex(int rows, int cols);
PlaneGraph gen_stars(int a);
PlaneGraph gen_k23();
PlaneGraph gen_cube();
PlaneGraph gen_cycle(int length);

/// Seeded triangle-free plane graph on exactly n vertices: grows a
/// quadrangulation by face insertions (with a few edge subdivisions for odd
/// faces), then deletes a seeded random edge subset, keeping the graph
/// connected with minimum degree 2. Deterministic for fixed (n, seed).
PlaneGraph gen_random_tfp(int n, unsigned seed);

Family family_from_string(const std::string& s);  // throws BadParams

} // namespace gen
} // namespace tfpmis
