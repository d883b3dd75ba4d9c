#pragma once

#include <array>
#include <stdexcept>

namespace emwh {

/// Domain face identifiers, ordered (xlo, xhi, ylo, yhi, zlo, zhi).
enum class Face : int { XLo = 0, XHi = 1, YLo = 2, YHi = 3, ZLo = 4, ZHi = 5 };

/// Per-face boundary condition.
///  - Pec: tangential E forced to zero.
///  - Mur1: first-order one-way-wave absorbing condition.
///  - Dirichlet: tangential E forced to a prescribed time-harmonic profile
///    (the profile and its drive frequency live in the source description;
///    the homogeneous part behaves exactly like PEC).
enum class Condition { Pec, Mur1, Dirichlet };

struct BoundarySpec {
    std::array<Condition, 6> faces{Condition::Pec, Condition::Pec, Condition::Pec,
                                   Condition::Pec, Condition::Pec, Condition::Pec};

    static BoundarySpec all(Condition c) {
        BoundarySpec b;
        b.faces.fill(c);
        return b;
    }
    Condition face(Face f) const { return faces[static_cast<int>(f)]; }
    void set(Face f, Condition c) { faces[static_cast<int>(f)] = c; }

    bool any(Condition c, int dim = 3) const {
        const int nf = dim == 2 ? 4 : 6;
        for (int i = 0; i < nf; ++i)
            if (faces[i] == c) return true;
        return false;
    }

    /// Closed (energy conserving) iff every face reflects: PEC or Dirichlet.
    bool energy_conserving(int dim) const { return !any(Condition::Mur1, dim); }
};

}  // namespace emwh
