#ifndef HEATSYM_COCYCLE_HPP
#define HEATSYM_COCYCLE_HPP

#include <functional>
#include <span>

#include "heatsym/sphere.hpp"
#include "heatsym/trig.hpp"

namespace heatsym {

/// Multilinear cochain evaluator on C^infty(T^d).
struct CocycleComponent {
    int arity = 0; // number of arguments
    std::function<ExtScalar(std::span<const TrigPoly>)> eval;

    ExtScalar operator()(std::span<const TrigPoly> args) const;
};

/// Even CM component on the flat torus T^n (n even):
///   phi_2k(f0..f2k) = (2 i pi)^{-n/2}/(2k)! int f0 df1 ^...^ df2k ^ Ahat^{(n-2k)},
/// which vanishes unless 2k = n since Ahat = 1.
CocycleComponent cm_even_component(int k, int n);
ExtScalar cm_even_value(int k, int n, std::span<const TrigPoly> args);

/// Odd CM component on T^n (n odd), normalization
///   sqrt(2 i pi) (2 i pi)^{-[n/2]-1}/(2k+1)!.
CocycleComponent cm_odd_component(int k, int n);
ExtScalar cm_odd_value(int k, int n, std::span<const TrigPoly> args);

/// Hochschild coboundary b and the B = A B0 operator of the (b,B) complex.
CocycleComponent hochschild_b(const CocycleComponent& psi);
CocycleComponent insert_unit_b0(const CocycleComponent& psi);
CocycleComponent cyclic_antisymmetrizer(const CocycleComponent& psi);
CocycleComponent connes_boundary(const CocycleComponent& psi); // A B0

/// Exact residual (b phi_low + B phi_high)(args); phi components of the
/// CM cocycle at adjacent levels, args of arity low+2.
ExtScalar cocycle_residual(const CocycleComponent& low, const CocycleComponent& high,
                           std::span<const TrigPoly> args);

/// (2k+1)-linear chain int tr(a0 da1 ^ ... ^ dam) over T^d for matrices.
ExtScalar torus_chain_integral(std::span<const TrigMatrix> args);

/// K-theory pairings.
ExtScalar pair_even_torus(const TrigMatrix& e, int n);
ExtScalar pair_even_sphere(const SphereMatrix& e);
ExtScalar pair_odd(const TrigMatrix& u, int n);

/// APS spectral-flow integral (2 i pi)^{-[n/2]-1} int [Ahat ^ Ch U]^{(n)}
/// on the flat torus; the odd Chern character is implemented as
/// sum_k k!/(2k+1)! tr((U^{-1} dU)^{2k+1}) so that the pairing chain and
/// the spectral-flow formula agree identically.
ExtScalar aps_spectral_flow(const TrigMatrix& u, int n);

/// CM constants from their Gamma recipes:
/// even (k >= 1): Gamma(|a|+k) c^{-1} = 2 (-1)^{|a|} a! (a1+1)(a1+a2+2)...(a1+..+a_{2k}+2k);
/// odd: Gamma(|a|+k+1/2) c^{-1} = (-1)^{|a|} a! (a1+1)...(a1+..+a_{2k+1}+2k+1).
ExtScalar cm_constant_even(int k, const std::vector<int>& alpha);
ExtScalar cm_constant_odd(int k, const std::vector<int>& alpha);

} // namespace heatsym

#endif
