#pragma once

#include <vector>

#include "vecmeas/rational.hpp"
#include "vecmeas/space.hpp"

namespace vecmeas {

// Norm on a finite-dimensional value space. OpNorm tags a space of q x p
// matrices with the operator norm induced by a pair of vector norms; it is
// what the sharp lift retags its values with.
enum class NormKind { L1, L2, LInf, OpNorm };

struct NormTag {
  NormKind kind = NormKind::L2;
  int dim = 1;
  // OpNorm only: matrix shape and the inner vector-norm pair (dim == rows*cols)
  int op_rows = 0, op_cols = 0;
  NormKind op_from = NormKind::L2, op_to = NormKind::L2;

  bool operator==(const NormTag&) const = default;
};

NormTag l1_tag(int dim);
NormTag l2_tag(int dim);
NormTag linf_tag(int dim);
NormTag opnorm_tag(int rows, int cols, NormKind from, NormKind to);
// L1 <-> LInf, L2 <-> L2
NormTag dual_tag(const NormTag& t);

// Positive, finitely additive scalar measure: one weight >= 0 per atom.
struct ScalarMeasure {
  AlgebraPtr alg;
  std::vector<Rat> weights;
};

ScalarMeasure make_scalar_measure(AlgebraPtr alg, std::vector<Rat> weights);
// Uniform dyadic weight 2^-n per atom (the Lebesgue weights of the
// level-n interval algebra).
ScalarMeasure lebesgue_weights(const AlgebraPtr& alg);
Rat measure_of(const ScalarMeasure& mu, const MeasurableSet& a);
Rat total_mass(const ScalarMeasure& mu);

// Dense row-major matrix of exact rationals.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
  bool is_zero() const;
  bool operator==(const RatMat&) const = default;
};

RatMat mat_add(const RatMat& x, const RatMat& y);
RatMat mat_sub(const RatMat& x, const RatMat& y);
RatMat mat_scale(const Rat& c, const RatMat& x);
std::vector<Rat> mat_apply(const RatMat& m, const std::vector<Rat>& x);

// Finitely additive set function with an operator value (q x p matrix over
// exact rationals) per atom, extended additively to all sets. p = 1 encodes
// a vector-valued measure (values live in the codomain R^q, whose norm is
// norm_y); p = q = 1 encodes a scalar measure.
struct VectorMeasure {
  AlgebraPtr alg;
  int p = 1, q = 1;
  NormTag norm_x, norm_y;
  std::vector<RatMat> values;  // one q x p matrix per atom
};

VectorMeasure make_vector_measure(AlgebraPtr alg, int p, int q, NormTag norm_x,
                                  NormTag norm_y, std::vector<RatMat> values);
VectorMeasure zero_measure_like(const VectorMeasure& shape);
bool same_shape(const VectorMeasure& a, const VectorMeasure& b);
VectorMeasure measure_sub(const VectorMeasure& a, const VectorMeasure& b);
bool measure_equal(const VectorMeasure& a, const VectorMeasure& b);

// X-valued step function: one vector of length `dim` per atom. Doubles as a
// density (Radon-Nikodym derivative) when integrated against a ScalarMeasure.
struct SimpleFunction {
  AlgebraPtr alg;
  int dim = 1;
  NormTag tag;
  std::vector<std::vector<Rat>> values;
};

SimpleFunction make_simple_function(AlgebraPtr alg, int dim, NormTag tag,
                                    std::vector<std::vector<Rat>> values);
SimpleFunction constant_function(const AlgebraPtr& alg, std::vector<Rat> value,
                                 NormTag tag);
SimpleFunction function_sub(const SimpleFunction& f, const SimpleFunction& g);

// Additive extension: entrywise sum of atom matrices over A.
RatMat evaluate(const VectorMeasure& m, const MeasurableSet& a);

// Conditional expectation of m by pi and mu: the atom value at b inside a
// block A is (mu(b)/mu(A)) * m(A), with 0/0 = 0 — blocks of mu-measure zero
// contribute the zero matrix no matter what m does there.
VectorMeasure conditional_expectation(const VectorMeasure& m,
                                      const ScalarMeasure& mu,
                                      const Partition& pi);

// Indefinite integral of f against mu: atom value mu(b) * f(b), laid out as
// a p = 1 measure with values in R^f.dim. Absolutely continuous w.r.t. mu
// by construction.
VectorMeasure density_to_measure(const SimpleFunction& f,
                                 const ScalarMeasure& mu);

// On a finite algebra absolute continuity is atomwise nullity transfer:
// mu(b) = 0 implies m(b) = 0.
bool is_absolutely_continuous(const VectorMeasure& m, const ScalarMeasure& mu);

// Scalar slice by a codomain functional: atom value ystar^T m(b), laid out
// as a p = 1 measure valued in the dual of the domain space (value norm =
// dual of norm_x).
VectorMeasure functional_slice(const VectorMeasure& m,
                               const std::vector<Rat>& ystar);

// Relabels m as a measure valued in the (q*p)-dimensional space of matrices
// carrying the operator norm; atom value = m(b) flattened row-major. An
// isometric relabeling, not a new computation.
VectorMeasure sharp_lift(const VectorMeasure& m);

// T(f) = sum over atoms of m(b) * f(b). No mu enters.
std::vector<Rat> integrate(const VectorMeasure& m, const SimpleFunction& f);

// T_pi(f) = sum over blocks A of m(A) * (int_A f dmu / mu(A)), 0/0 = 0.
std::vector<Rat> apply_T_pi(const VectorMeasure& m, const ScalarMeasure& mu,
                            const Partition& pi, const SimpleFunction& f);

}  // namespace vecmeas
