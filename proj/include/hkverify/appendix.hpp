#pragma once

#include "hkverify/lattice.hpp"

#include <utility>
#include <vector>

namespace hkverify {

struct IsogenyParams {
    long long deg_f = 1;
    long long n = 1;
    long long d0 = 1;
};

struct SemihomResult {
    bool simple = false;
    Integer rank;          // deg_f^n
    Integer kernel_order;  // (n+1)^2 d0^(2n)
    bool kernel_coprime = false;
};

SemihomResult is_simple_semihom(const IsogenyParams& p);

Integer zeppola_integral(long long n, long long d0);

struct JHShape {
    long long r0 = 1;
    long long b0 = 0;
    long long m = 1;
    long long g = 1;
    bool operator==(const JHShape&) const = default;
};

std::vector<JHShape> jh_decompositions(long long r, long long a, long long e);

bool forced_stable(long long s0, long long c0, long long e);

struct SatolloModel {
    AbelianSurfaceModel model;
    std::pair<long long, long long> elementary_divisors;
    bool saturated = false;
};

SatolloModel satollo_transfer(long long abar, long long d);

}  // namespace hkverify
