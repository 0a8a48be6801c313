// constructions.hpp — parametric generators for benchmark assignments
#pragma once

#include <string>

#include "dsg/assignment.hpp"
#include "dsg/utility.hpp"

namespace dsg {

enum class Family { Cycle, Cylinder, Torus };

Family family_from_name(const std::string& name);
const char* family_name(Family f);

// Which global measure a worst-case generator is targeting.
enum class Target { Welfare, Colorful };

struct Construction {
    Assignment assignment;
    std::string name;
    std::string note;
};

// Maximum-diversity assignments: repeating type pattern on the cycle, the
// shifted-row patterns on cylinder and torus. Equilibria for all three
// diversity utilities. Throws on unsupported (family, n, t) combinations,
// naming the required divisibility.
Construction optimal_assignment(Family family, long long n, int t);

// Minimum-diversity equilibria: the segregated-block patterns for the binary
// utility, alternating-pair patterns for the variety/difference utilities,
// and the claw/pentomino tilings that minimize colorful edges for t = 3.
Construction worst_assignment(Family family, Utility kind, Target target, long long n, int t);

// Assignments on the composite gadget graph. The optimal one spreads every
// type through every neighborhood (binary and variety equilibrium; also a
// difference equilibrium when (delta-1) divides k/2). The worst one fills
// each chained copy with a single type per part and the last copy with the
// final type; equilibrium under all three diversity utilities.
Construction gstar_assignment(int t, int delta, long long k, bool optimal);

} // namespace dsg
