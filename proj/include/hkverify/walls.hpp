#pragma once

#include "hkverify/lattice.hpp"

#include <optional>
#include <vector>

namespace hkverify {

// Mukai vector (r, l, s) with l given in coordinates of a fixed degree-2 lattice.
struct MukaiVector {
    long long r = 0;
    std::vector<long long> ell;
    long long s = 0;
};

long long mukai_pair(const GramLattice& h2, const MukaiVector& u, const MukaiVector& v);
long long ell_square(const GramLattice& h2, const MukaiVector& v);

struct WallNumerics {
    long long ss = 0;  // <s,s>
    long long sv = 0;  // <s,v>
    long long n = 1;
    Rational q_w;
    std::vector<long long> div_candidates;
    bool retained = false;
};

// Every (ss, sv) allowed by 0 <= ss < sv <= 3 + ss/2, ss in {0,2,4}, including discarded ones.
std::vector<WallNumerics> generate_wall_cases();
// The retained cases only (q_w < 0).
std::vector<WallNumerics> enumerate_wall_numerics();

bool is_wall_candidate(long long p, long long q, long long x, const AbelianSurfaceModel& model);

enum class AmpleVerdict { Ample, NotAmple, BelowThreshold };

// Wall w = mu(p omega_bar + q gamma) - x delta.
struct AmpleWitness {
    long long p = 0;
    long long q = 0;
    long long x = 0;
    bool separating = false;  // false: contains both h and 2m mu(omega_bar)
    Rational q_w;
};

struct AmpleResult {
    AmpleVerdict verdict = AmpleVerdict::Ample;
    std::optional<AmpleWitness> witness;
    bool threshold_met = false;
    long long threshold = 0;  // d must exceed this value
};

long long ample_threshold(long long abar);
AmpleResult is_ample_h(long long abar, long long d, long long m);

const char* to_string(AmpleVerdict v);

}  // namespace hkverify
