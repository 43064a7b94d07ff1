#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hypernil/constructions.hpp"

namespace hypernil::catalog {

/// Catalog entry names; the parametric ones appear as "torus(n)" and
/// "ex_kstep(k)".
std::vector<std::string> names();

/// Builds and validates a catalog entry, e.g. "n8", "torus(2)",
/// "ex_kstep(5)". Throws Error for an unknown name or a bad parameter.
HypercomplexLieAlgebra get(std::string_view name);

/// Abelian R^{4n} with the standard structure.
HypercomplexLieAlgebra torus(std::size_t n);

/// de^8 = e^{12} − e^{34} with its hypercomplex structure.
HypercomplexLieAlgebra n8();

/// mu = e^{15}⊗e9 + e^{25}⊗e10 + e^{35}⊗e11 + e^{45}⊗e12 (J'_3 3-step).
MuForm mu_2_2_3();
/// mu = (e^{15}+e^{16})⊗e9 + (e^{25}+e^{26})⊗e10 + ... (J'_2, J'_3 3-step).
MuForm mu_2_3_3();
/// mu = e^{56}⊗e9 − e^{67}⊗e11 + e^{57}⊗e12 (all three 3-step).
MuForm mu_nonflat();
/// Same as mu_nonflat but with the middle term valued in e10; it violates
/// the integrability condition and exists to exercise that rejection.
MuForm mu_nonflat_e10_variant();

HypercomplexLieAlgebra ex_2_2_3();
HypercomplexLieAlgebra ex_2_3_3();
HypercomplexLieAlgebra ex_nonflat();

/// ρ(e_generator) maps block b to block b+1 by the identity (b < blocks−1),
/// every other ρ(e_i) is zero. 0-based generator index.
Representation block_shift(std::size_t base_dim, std::size_t blocks, std::size_t generator);

/// ex_nonflat ⋉ R^8 with ρ(e1) = [[0,0],[I4,0]].
HypercomplexLieAlgebra ex_semidirect();
/// ex_nonflat ⋉ R^{4k} with ρ(e1) the block shift; k ≥ 3.
HypercomplexLieAlgebra ex_kstep(std::size_t k);

/// The 16-dimensional 3-step example with J_α g^1 ⊆ z.
HypercomplexLieAlgebra ex_3step_16();

}  // namespace hypernil::catalog
