#pragma once

#include <memory>
#include <optional>

#include "ddt/mc.hpp"
#include "ddt/sullivan.hpp"

namespace ddt {

/// The DGLA L (x) 𝒜 for a cochain DG algebra 𝒜 (structure trusted, not
/// re-validated; axioms are checked on small instances by the test suite).
DGLA tensor_dgla(const DGLA& l, const DGAlgebra& a, const std::vector<std::vector<std::string>>& names);

/// Level n of the simplicial nerve: the MC system of L (x) 𝒜_n over A.
struct NerveLevel {
    int n = 0;
    int d_max = 4;
    SullivanForms forms;
    std::shared_ptr<DGLA> tensor_lie;
    MCSystem system;
};

NerveLevel nerve_level(const DGLA& l, const ArtinianDGAlgebra& a, int n, int d_max);

/// Map on MC variables induced by a form-algebra map between nerve levels.
Matrix nerve_variable_map(const NerveLevel& src, const NerveLevel& tgt, const std::vector<Matrix>& form_map,
                          const DGLA& l);

struct HomotopyResult {
    bool homotopic = false;
    int d_max = 4;
    /// A false verdict is conclusive only up to the polynomial cutoff.
    std::string caveat;
    std::optional<std::vector<Scalar>> path;  // level-1 MC element when found
};

/// Search for a level-1 nerve element restricting to (omega0, omega1) under
/// the two faces, over F_p, at polynomial degree <= d_max.
HomotopyResult mc_homotopic(const DGLA& l, const ArtinianDGAlgebra& a, const std::vector<Scalar>& omega0,
                            const std::vector<Scalar>& omega1, int d_max, long budget = 10'000'000);

/// Partition of the MC solution set by the path relation (F_p).
std::vector<std::vector<long>> homotopy_partition(const DGLA& l, const ArtinianDGAlgebra& a,
                                                  const std::vector<std::vector<Scalar>>& solutions, int d_max,
                                                  long budget = 10'000'000);

}  // namespace ddt
