#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vecmeas/measure.hpp"

namespace vecmeas {

// A norm result. `exact` is set whenever the computation stayed in rational
// arithmetic end to end (L1/LInf kinds, one-dimensional values, polyhedral
// operator-norm pairs); `approx` is always usable. L2-flavoured values take
// a single square root at the very end of an otherwise exact computation.
struct NormValue {
  std::optional<Rat> exact;
  double approx = 0.0;
};

NormValue nv_exact(Rat r);
NormValue nv_add(const NormValue& a, const NormValue& b);
bool nv_equal(const NormValue& a, const NormValue& b);

enum class CertMethod { Enumeration, LocalSearch, TriangleBound };
const char* cert_method_name(CertMethod m);

// Certified bracket for a norm whose exact evaluation may be infeasible.
// lower <= true value <= upper always; `exact` is present when the two ends
// coincide by construction. `witness` records the sign pattern (+1/-1 per
// atom) or vertex index per atom attaining `lower`, when one exists.
struct BoundCertificate {
  NormValue lower, upper;
  std::optional<NormValue> exact;
  CertMethod method = CertMethod::Enumeration;
  std::vector<int> witness;
};

struct NormKernelOptions {
  // Evaluation budget for exact enumeration. Sign kernels run exactly when
  // 2^(M-1) evaluations fit (the eps <-> -eps symmetry halves the work, so
  // the default covers 20 atoms); vertex kernels when |V|^M fits.
  std::uint64_t enum_cap = 1ull << 20;
  int restarts = 32;    // local-search random restarts beyond the cap
  int max_passes = 200; // improvement passes per restart
  std::uint64_t seed = 0;
};

// Norm of a vector under a tag. For OpNorm tags the vector is reshaped
// row-major and the operator norm is taken.
NormValue vector_norm(const std::vector<Rat>& v, const NormTag& tag);

// Operator norm of a q x p matrix, normX -> normY. Closed forms: L1 domain
// = max column norm; LInf codomain = max row dual-norm; LInf domain and L1
// codomain reduce to sign enumerations over the small side (<= 20); L2->L2
// uses the iterated power method to tolerance 1e-12.
NormValue opnorm(const RatMat& mat, const NormTag& norm_x,
                 const NormTag& norm_y);

// Variation |m|(Omega). On a finite algebra the supremum over partitions is
// attained at the atom partition (triangle inequality: splitting a set can
// only grow the sum), so this is the sum of atom-value operator norms.
NormValue variation(const VectorMeasure& m);

// Scalar semivariation ||m||(Omega) of a p = 1 measure: the supremum over
// dual unit functionals x* of the variation of x*m. By duality this equals
// max over sign patterns eps of ||sum_b eps_b m(b)||, which is what the
// kernel maximizes — exactly by enumeration under the cap, by certified
// bounds beyond it (greedy sign flips with restarts for the lower end,
// variation for the upper).
BoundCertificate scalar_semivariation(const VectorMeasure& m,
                                      const NormKernelOptions& opts = {});

// Operator semivariation: sup of ||sum_b m(b) x_b||_Y over tags x_b in B_X.
// The atom partition suffices: a coarser partition's sum is one in which the
// tag is constant across each block, a special case of the atom form. The
// maximum of a convex function over a product of balls is attained at
// extreme points, so for polyhedral domain norms the kernel enumerates
// vertex tuples exactly under the cap; otherwise it brackets with block
// coordinate ascent (each step maximizes a linear functional over B_X in
// closed form) against the triangle upper bound sum_b opnorm(m(b)).
BoundCertificate operator_semivariation(const VectorMeasure& m,
                                        const NormKernelOptions& opts = {});

// Pettis norm of f against mu: sup over dual unit functionals of
// int |x* f| dmu. Same duality reduction as scalar semivariation, applied
// to the indefinite integral of f.
BoundCertificate pettis_norm(const SimpleFunction& f, const ScalarMeasure& mu,
                             const NormKernelOptions& opts = {});

// ||f||_1 = sum_b mu(b) ||f(b)||.
NormValue l1_norm(const SimpleFunction& f, const ScalarMeasure& mu);

// Max of ||integrate(m, f)||_Y over sampled f with ||f(b)||_X <= 1 (random
// extreme points of B_X per atom, mixed with random in-ball vectors). A
// lower bound for the operator semivariation, i.e. for the norm of the
// operator m represents.
double operator_norm_lower_bound(const VectorMeasure& m, int trials,
                                 std::uint64_t seed = 0);

// Exact max over sign patterns eps in {+-1}^M of ||sum_b eps_b vecs[b]||,
// first sign fixed to +1 (norm symmetry). Ties resolve to the first pattern
// in lexicographic order (+1 before -1). Throws std::length_error when
// 2^(M-1) exceeds the budget.
struct SignMaxResult {
  NormValue value;
  std::vector<int> signs;
};
SignMaxResult max_signed_sum_norm(const std::vector<std::vector<Rat>>& vecs,
                                  const NormTag& tag,
                                  std::uint64_t enum_cap = 1ull << 20);

}  // namespace vecmeas
