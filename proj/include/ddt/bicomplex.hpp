#pragma once

#include <tuple>

#include "ddt/complex.hpp"

namespace ddt {

using Spot = std::pair<int, int>;  // (cochain degree c >= 0, chain degree r >= 0)

/// First-quadrant bicomplex with two commuting differentials: d_c of
/// bidegree (+1, 0) and d_s of bidegree (0, -1). The anticommuting total
/// differential is produced inside tot_pi via the sign (-1)^c on d_s.
struct Bicomplex {
    Field field;
    std::map<Spot, long> dims;
    std::map<Spot, Matrix> dc;  // (c,r) -> (c+1,r)
    std::map<Spot, Matrix> ds;  // (c,r) -> (c,r-1)

    long dim(int c, int r) const {
        auto it = dims.find({c, r});
        return it == dims.end() ? 0 : it->second;
    }
    Matrix dc_from(int c, int r) const;
    Matrix ds_from(int c, int r) const;

    /// Shapes, dc*dc = 0, ds*ds = 0 and dc*ds = ds*dc; throws on failure.
    void validate() const;

    int max_cochain() const;
    int max_chain() const;
    long total_dim() const;

    /// Row at chain degree r as a cochain complex (degrees = c).
    GradedComplex row(int r) const;
    /// Column at cochain degree c as a chain complex (degrees = r).
    GradedComplex column(int c) const;

    /// Direct sum, with `other` placed after this one in every spot.
    Bicomplex direct_sum(const Bicomplex& other) const;
};

/// Layout entry: where a spot's block lives inside a total-degree slot.
struct TotBlock {
    Spot spot;
    long offset;
    long dim;
};

/// Total complex together with the block layout per total degree.
struct TotalComplex {
    GradedComplex complex;  // cochain, degree n = c - r
    std::map<int, std::vector<TotBlock>> layout;  // blocks ordered by ascending c
};

/// Tot^Pi: total degree n = c - r, differential d = d_c + (-1)^c d_s.
TotalComplex tot_pi(const Bicomplex& b);

/// Left adjoint of Tot^Pi, truncated at cochain degree <= bound:
/// spot (c,r) carries V_{r-c} (+) V_{r-c+1} for c > 0 and V_r for c = 0,
/// with d_c(v,w) = (0,v) and stored d_s(v,w) = (-1)^c (dv, v - dw).
Bicomplex tot_pi_star(const GradedComplex& v, int bound = 8);

}  // namespace ddt
