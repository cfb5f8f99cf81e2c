#include "vecmeas/measure.hpp"

#include <stdexcept>
#include <string>

namespace vecmeas {

NormTag l1_tag(int dim) { return NormTag{NormKind::L1, dim}; }
NormTag l2_tag(int dim) { return NormTag{NormKind::L2, dim}; }
NormTag linf_tag(int dim) { return NormTag{NormKind::LInf, dim}; }

NormTag opnorm_tag(int rows, int cols, NormKind from, NormKind to) {
  if (from == NormKind::OpNorm || to == NormKind::OpNorm)
    throw std::domain_error("opnorm_tag: inner kinds must be vector norms");
  NormTag t;
  t.kind = NormKind::OpNorm;
  t.dim = rows * cols;
  t.op_rows = rows;
  t.op_cols = cols;
  t.op_from = from;
  t.op_to = to;
  return t;
}

NormTag dual_tag(const NormTag& t) {
  switch (t.kind) {
    case NormKind::L1:
      return linf_tag(t.dim);
    case NormKind::LInf:
      return l1_tag(t.dim);
    case NormKind::L2:
      return l2_tag(t.dim);
    default:
      throw std::domain_error("dual_tag: no dual for operator-norm tags");
  }
}

ScalarMeasure make_scalar_measure(AlgebraPtr alg, std::vector<Rat> weights) {
  if (!alg) throw std::domain_error("make_scalar_measure: null algebra");
  if ((int)weights.size() != alg->size())
    throw std::domain_error("make_scalar_measure: " +
                            std::to_string(weights.size()) + " weights for " +
                            std::to_string(alg->size()) + " atoms");
  for (const Rat& w : weights)
    if (w < 0) throw std::domain_error("make_scalar_measure: negative weight");
  return ScalarMeasure{std::move(alg), std::move(weights)};
}

ScalarMeasure lebesgue_weights(const AlgebraPtr& alg) {
  if (!alg || !alg->dyadic_level)
    throw std::domain_error("lebesgue_weights: algebra has no dyadic metadata");
  return make_scalar_measure(
      alg, std::vector<Rat>(alg->size(), rat_pow2_inv(*alg->dyadic_level)));
}

Rat measure_of(const ScalarMeasure& mu, const MeasurableSet& a) {
  require_same_algebra(mu.alg, a.alg, "measure_of");
  Rat s = 0;
  for (int b : a.atoms) s += mu.weights[b];
  return s;
}

Rat total_mass(const ScalarMeasure& mu) {
  Rat s = 0;
  for (const Rat& w : mu.weights) s += w;
  return s;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

namespace {
void require_shape(const RatMat& x, const RatMat& y, const char* where) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::domain_error(std::string(where) + ": shape mismatch");
}
}  // namespace

RatMat mat_add(const RatMat& x, const RatMat& y) {
  require_shape(x, y, "mat_add");
  RatMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RatMat mat_sub(const RatMat& x, const RatMat& y) {
  require_shape(x, y, "mat_sub");
  RatMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RatMat mat_scale(const Rat& c, const RatMat& x) {
  RatMat r = x;
  for (Rat& v : r.a) v *= c;
  return r;
}

std::vector<Rat> mat_apply(const RatMat& m, const std::vector<Rat>& x) {
  if ((int)x.size() != m.cols)
    throw std::domain_error("mat_apply: dimension mismatch");
  std::vector<Rat> y(m.rows, Rat(0));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) y[r] += m.at(r, c) * x[c];
  return y;
}

namespace {
void check_value_tag(const NormTag& tag, int dim, const char* which) {
  if (tag.dim != dim)
    throw std::domain_error(std::string(which) + " norm tag dimension " +
                            std::to_string(tag.dim) + " != " +
                            std::to_string(dim));
  if (tag.kind == NormKind::OpNorm && tag.op_rows * tag.op_cols != tag.dim)
    throw std::domain_error(std::string(which) +
                            " operator-norm tag shape mismatch");
}
}  // namespace

VectorMeasure make_vector_measure(AlgebraPtr alg, int p, int q, NormTag norm_x,
                                  NormTag norm_y, std::vector<RatMat> values) {
  if (!alg) throw std::domain_error("make_vector_measure: null algebra");
  if (p < 1 || q < 1)
    throw std::domain_error("make_vector_measure: dimensions must be >= 1");
  if ((int)values.size() != alg->size())
    throw std::domain_error("make_vector_measure: " +
                            std::to_string(values.size()) + " values for " +
                            std::to_string(alg->size()) + " atoms");
  check_value_tag(norm_x, p, "domain");
  check_value_tag(norm_y, q, "codomain");
  for (const RatMat& v : values)
    if (v.rows != q || v.cols != p)
      throw std::domain_error("make_vector_measure: atom value is not q x p");
  return VectorMeasure{std::move(alg), p, q, norm_x, norm_y,
                       std::move(values)};
}

VectorMeasure zero_measure_like(const VectorMeasure& shape) {
  VectorMeasure z = shape;
  for (RatMat& v : z.values) v = RatMat(shape.q, shape.p);
  return z;
}

bool same_shape(const VectorMeasure& a, const VectorMeasure& b) {
  return same_algebra(a.alg, b.alg) && a.p == b.p && a.q == b.q &&
         a.norm_x == b.norm_x && a.norm_y == b.norm_y;
}

VectorMeasure measure_sub(const VectorMeasure& a, const VectorMeasure& b) {
  if (!same_shape(a, b))
    throw std::domain_error("measure_sub: shape mismatch");
  VectorMeasure r = a;
  for (int i = 0; i < (int)r.values.size(); ++i)
    r.values[i] = mat_sub(a.values[i], b.values[i]);
  return r;
}

bool measure_equal(const VectorMeasure& a, const VectorMeasure& b) {
  if (!same_shape(a, b)) return false;
  return a.values == b.values;
}

SimpleFunction make_simple_function(AlgebraPtr alg, int dim, NormTag tag,
                                    std::vector<std::vector<Rat>> values) {
  if (!alg) throw std::domain_error("make_simple_function: null algebra");
  if (dim < 1) throw std::domain_error("make_simple_function: dim must be >= 1");
  check_value_tag(tag, dim, "function");
  if ((int)values.size() != alg->size())
    throw std::domain_error("make_simple_function: " +
                            std::to_string(values.size()) + " values for " +
                            std::to_string(alg->size()) + " atoms");
  for (const auto& v : values)
    if ((int)v.size() != dim)
      throw std::domain_error("make_simple_function: value dimension mismatch");
  return SimpleFunction{std::move(alg), dim, tag, std::move(values)};
}

SimpleFunction constant_function(const AlgebraPtr& alg, std::vector<Rat> value,
                                 NormTag tag) {
  std::vector<std::vector<Rat>> vals(alg->size(), value);
  return make_simple_function(alg, (int)value.size(), tag, std::move(vals));
}

SimpleFunction function_sub(const SimpleFunction& f, const SimpleFunction& g) {
  require_same_algebra(f.alg, g.alg, "function_sub");
  if (f.dim != g.dim) throw std::domain_error("function_sub: dim mismatch");
  SimpleFunction r = f;
  for (int b = 0; b < (int)r.values.size(); ++b)
    for (int i = 0; i < f.dim; ++i) r.values[b][i] -= g.values[b][i];
  return r;
}

RatMat evaluate(const VectorMeasure& m, const MeasurableSet& a) {
  require_same_algebra(m.alg, a.alg, "evaluate");
  RatMat sum(m.q, m.p);
  for (int b : a.atoms)
    for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += m.values[b].a[i];
  return sum;
}

VectorMeasure conditional_expectation(const VectorMeasure& m,
                                      const ScalarMeasure& mu,
                                      const Partition& pi) {
  require_same_algebra(m.alg, mu.alg, "conditional_expectation");
  require_same_algebra(m.alg, pi.alg, "conditional_expectation");
  VectorMeasure out = zero_measure_like(m);
  for (const MeasurableSet& block : pi.blocks) {
    Rat mass = measure_of(mu, block);
    if (mass == 0) continue;  // 0/0 = 0: whole block maps to zero matrices
    RatMat block_value = evaluate(m, block);
    for (int b : block.atoms)
      out.values[b] = mat_scale(mu.weights[b] / mass, block_value);
  }
  return out;
}

VectorMeasure density_to_measure(const SimpleFunction& f,
                                 const ScalarMeasure& mu) {
  require_same_algebra(f.alg, mu.alg, "density_to_measure");
  std::vector<RatMat> values(f.alg->size());
  for (int b = 0; b < f.alg->size(); ++b) {
    RatMat v(f.dim, 1);
    for (int i = 0; i < f.dim; ++i) v.at(i, 0) = mu.weights[b] * f.values[b][i];
    values[b] = std::move(v);
  }
  return make_vector_measure(f.alg, 1, f.dim, l2_tag(1), f.tag,
                             std::move(values));
}

bool is_absolutely_continuous(const VectorMeasure& m, const ScalarMeasure& mu) {
  require_same_algebra(m.alg, mu.alg, "is_absolutely_continuous");
  for (int b = 0; b < m.alg->size(); ++b)
    if (mu.weights[b] == 0 && !m.values[b].is_zero()) return false;
  return true;
}

VectorMeasure functional_slice(const VectorMeasure& m,
                               const std::vector<Rat>& ystar) {
  if ((int)ystar.size() != m.q)
    throw std::domain_error("functional_slice: functional has length " +
                            std::to_string(ystar.size()) + ", codomain is " +
                            std::to_string(m.q));
  std::vector<RatMat> values(m.alg->size());
  for (int b = 0; b < m.alg->size(); ++b) {
    RatMat v(m.p, 1);
    for (int j = 0; j < m.p; ++j) {
      Rat s = 0;
      for (int i = 0; i < m.q; ++i) s += ystar[i] * m.values[b].at(i, j);
      v.at(j, 0) = std::move(s);
    }
    values[b] = std::move(v);
  }
  return make_vector_measure(m.alg, 1, m.p, l2_tag(1), dual_tag(m.norm_x),
                             std::move(values));
}

VectorMeasure sharp_lift(const VectorMeasure& m) {
  NormTag value_tag =
      opnorm_tag(m.q, m.p, m.norm_x.kind, m.norm_y.kind);
  std::vector<RatMat> values(m.alg->size());
  for (int b = 0; b < m.alg->size(); ++b) {
    RatMat v(m.q * m.p, 1);
    for (std::size_t i = 0; i < m.values[b].a.size(); ++i)
      v.a[i] = m.values[b].a[i];
    values[b] = std::move(v);
  }
  return make_vector_measure(m.alg, 1, m.q * m.p, l2_tag(1), value_tag,
                             std::move(values));
}

std::vector<Rat> integrate(const VectorMeasure& m, const SimpleFunction& f) {
  require_same_algebra(m.alg, f.alg, "integrate");
  if (f.dim != m.p)
    throw std::domain_error("integrate: function dimension " +
                            std::to_string(f.dim) + " != domain dimension " +
                            std::to_string(m.p));
  std::vector<Rat> out(m.q, Rat(0));
  for (int b = 0; b < m.alg->size(); ++b) {
    std::vector<Rat> t = mat_apply(m.values[b], f.values[b]);
    for (int i = 0; i < m.q; ++i) out[i] += t[i];
  }
  return out;
}

std::vector<Rat> apply_T_pi(const VectorMeasure& m, const ScalarMeasure& mu,
                            const Partition& pi, const SimpleFunction& f) {
  require_same_algebra(m.alg, mu.alg, "apply_T_pi");
  require_same_algebra(m.alg, pi.alg, "apply_T_pi");
  require_same_algebra(m.alg, f.alg, "apply_T_pi");
  if (f.dim != m.p)
    throw std::domain_error("apply_T_pi: function dimension mismatch");
  std::vector<Rat> out(m.q, Rat(0));
  for (const MeasurableSet& block : pi.blocks) {
    Rat mass = measure_of(mu, block);
    if (mass == 0) continue;  // 0/0 = 0
    std::vector<Rat> avg(m.p, Rat(0));
    for (int b : block.atoms)
      for (int j = 0; j < m.p; ++j) avg[j] += mu.weights[b] * f.values[b][j];
    for (Rat& v : avg) v /= mass;
    std::vector<Rat> t = mat_apply(evaluate(m, block), avg);
    for (int i = 0; i < m.q; ++i) out[i] += t[i];
  }
  return out;
}

}  // namespace vecmeas
