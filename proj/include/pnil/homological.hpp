#ifndef PNIL_HOMOLOGICAL_HPP
#define PNIL_HOMOLOGICAL_HPP

#include <map>
#include <optional>

#include "pnil/jordan.hpp"
#include "pnil/module.hpp"

namespace pnil {

/// Free module Lambda^t with generation degrees (graded when shifts given);
/// coordinate (i, a, b) at index i*p^2 + a*p + b.
Module free_module(const Gf& F, size_t t, const std::optional<std::vector<int>>& shifts = std::nullopt);

/// Projective cover P -> M over the local algebra Lambda_p: the cover rank is
/// dim Top(M) and any lift of a top basis works.
struct CoverData {
    size_t rank = 0;
    std::vector<int> shift_degrees;  // per free summand (graded input only)
    Mat map;                         // dim(M) x (rank * p^2)
};

/// One minimal-cover step: P -> M with Omega = ker as a module embedded in P.
struct SyzygyStep {
    CoverData cover;
    Module omega;
    Mat inclusion;  // (rank * p^2) x dim(Omega): columns = omega basis in P coords
};

SyzygyStep cover_and_kernel(const Module& M);

/// Heller shifts: n > 0 iterated kernels of covers, n < 0 via the graded
/// duality, n = 0 the projective-free part.
Module syzygy(const Module& M, long n);
Module projective_free_part(const Module& M);
/// The Auslander-Reiten translate tau = Omega^2 (the modular function of a
/// group algebra is trivial).
Module ar_translate(const Module& M);

/// An element of Lambda_p = k[x,y]/(x^p,y^p): p^2 coefficients, monomial
/// x^a y^b at index a*p+b.
struct LambdaElem {
    std::vector<u32> c;  // p*p*e words
};

/// Minimal resolution bookkeeping: ranks, generation degrees, differentials
/// as matrices over Lambda_p.
struct Resolution {
    u32 p = 0;
    std::vector<size_t> ranks;                              // t_0, t_1, ...
    std::vector<std::vector<int>> degrees;                  // generation degrees (graded)
    std::vector<std::vector<std::vector<LambdaElem>>> diff; // diff[s][row][col]: P_{s+1} -> P_s
};

/// Minimal (graded) resolution prefix P_{steps-1} -> ... -> P_0 -> M.
Resolution minimal_resolution(const Module& M, size_t steps);

struct GradedPresentation {
    Resolution prefix;  // P_1 -> P_0 -> W_{n,d}
    Module omega2;      // graded kernel of the explicit first differential
    std::vector<int> support;  // sorted degrees with nonzero component
};

/// The explicit graded presentation of W_{n,d}: P_0 = kG^n, P_1 =
/// kG^{n+1}[1] (+) kG^{n-d}[d] (u-block empty when d = p) with
/// d1(w_1) = x.v_1, d1(w_j) = y.v_{j-1} - x.v_j, d1(w_{n+1}) = y.v_n,
/// d1(u_i) = x^d.v_{i+d}; omega2 is its kernel with the inherited grading.
GradedPresentation graded_presentation(const Gf& F, size_t n, size_t d);

struct ExtSpace {
    size_t dim = 0;
    std::vector<Mat> class_reps;  // maps Omega^n(M) -> N representing a basis
    Module omega_n;               // Omega^n(M)
};

/// Ext^n(M, N) realized as Hom(Omega^n M, N) modulo maps extending to the
/// covering projective (n >= 1).
ExtSpace ext_space(const Module& M, const Module& N, size_t n);

/// Almost split sequence 0 -> tau(M) -> E -> M -> 0.
struct ARSequence {
    Module tau, middle, right;
    Mat left_map;   // dim(E) x dim(tau)
    Mat right_map;  // dim(M) x dim(E)
};

/// Construction: pushout of the cover sequence of M along a nonzero class of
/// Ext^1(M, tau M) killed by Rad(End M); deterministic first-echelon pick.
/// Throws ProjectiveInput / DecomposableInput.
ARSequence ar_sequence(const Module& M, u64 seed = 0);

/// Validity checks for a computed sequence (exactness, non-splitness).
struct ARValidity {
    bool exact = false;
    bool left_mono = false;
    bool right_epi = false;
    bool right_split = true;  // must come out false
    bool left_split = true;   // must come out false
    bool ok() const { return exact && left_mono && right_epi && !right_split && !left_split; }
};
ARValidity validate_ar_sequence(const ARSequence& seq);

/// Window of an AR component of tree class A_infty around a quasi-simple
/// vertex: vertices tau^m((r)M0) for -w <= m <= w, 1 <= r <= h.
struct SliceVertex {
    Module mod;
    long m = 0;       // tau-power
    size_t r = 1;     // quasi-length
    JordanType jt;
    bool eip = false, ekp = false;
    size_t eip_class = 0;
};

struct ComponentSlice {
    long width = 0;
    size_t height = 0;
    std::vector<SliceVertex> vertices;
    bool window_consistent = true;  // middle terms split as expected in-window
    const SliceVertex* at(long m, size_t r) const;
};

ComponentSlice component_slice(const Module& M0, long width, size_t height, u64 seed = 0);

}  // namespace pnil

#endif
