#ifndef GF_DRINFELD_HPP
#define GF_DRINFELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "gf/ffpoly.hpp"
#include "gf/ore.hpp"

namespace gf
{

/// Rank-1 Drinfeld module rho: F_q[T] -> k<tau>, determined by rho_T.
class DrinfeldModule
{
public:
    /// rho_T must have constant term T and positive tau-degree.
    DrinfeldModule(FqConfig base, OrePoly<RatFunc> rho_T);

    /// rho_T = T + tau. The twist defaults to e = q; pass e = p for the
    /// literal tau*a = a^p*tau reading (a homomorphism only when q = p).
    static DrinfeldModule carlitz(const FqConfig &base, std::optional<TwistSpec> twist = std::nullopt);

    const FqConfig &base() const
    {
        return m_base;
    }
    const OrePoly<RatFunc> &rho_T() const
    {
        return m_rho_T;
    }
    TwistSpec twist() const
    {
        return m_rho_T.twist();
    }

    /// rho_a = sum a_k rho_T^k (Horner).
    OrePoly<RatFunc> rho(const FqPoly &a) const;

private:
    FqConfig m_base;
    OrePoly<RatFunc> m_rho_T;
};

/// A place of A = F_q[T] (monic irreducible P) together with a concrete model of
/// F_q[T]/P inside F_{q^(deg P * s)}: T maps to `t_image`, a root of P.
struct Specialization {
    FqPoly place;
    Extension extension;
    FqElement t_image;

    FqElement operator()(const FqPoly &f) const;
    /// Fails (DomainError) when the denominator vanishes at the place.
    FqElement operator()(const RatFunc &f) const;
};

struct TorsionSet {
    FqPoly a;
    bool symbolic = false;
    /// Symbolic mode: roots found in F_q(T) itself.
    std::vector<RatFunc> symbolic_roots{};
    /// Specialized mode.
    std::optional<Specialization> specialization{};
    int extension_degree = 0; // s, the field is F_{q^(deg P * s)}
    std::vector<FqElement> roots{};

    bool separable = true;
    /// e^(deg_tau rho_a) for separable reductions.
    BigInt expected_cardinality{};
    /// False if the search stopped before the root count reached its bound.
    bool complete = false;

    std::size_t size() const
    {
        return symbolic ? symbolic_roots.size() : roots.size();
    }
    std::string field_description() const;
};

struct TorsionOptions {
    /// Cap on the F_p-dimension of the extension searched.
    int max_field_degree = 40;
    std::uint64_t seed = 0x5eed;
};

/// Lambda[a] = roots of rho_a(x). With a place: over the residue field and its
/// extensions, stopping when the count saturates. Without: roots in F_q(T).
TorsionSet torsion(const FqPoly &a, const DrinfeldModule &module, const std::optional<FqPoly> &place,
                   const TorsionOptions &options = {});

struct CyclicReport {
    bool cyclic = false;
    std::size_t module_size = 0;
    /// Size of {rho_b(lambda) : b in (A/a)^*} for the generator tested.
    std::size_t unit_orbit_size = 0;
    std::string generator;
    std::optional<FqPoly> witness; // b exhibiting the failure
    std::string detail;
};

/// Checks that Lambda[a] is a cyclic A/(a)-module: for every nonzero lambda the
/// map b -> rho_b(lambda) on residues mod a is injective with image Lambda[a].
CyclicReport check_cyclic_module(const TorsionSet &ts, const FqPoly &a, const DrinfeldModule &module);

/// All polynomials of degree < deg m (residues mod m), in enumeration order.
std::vector<FqPoly> residues(const FqPoly &m);

} // namespace gf

#endif
