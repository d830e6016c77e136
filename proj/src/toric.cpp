#include "lensreeb/toric.hpp"

#include <numeric>

#include "lensreeb/errors.hpp"

namespace lensreeb {

namespace {

IntVector linear_combination(const std::vector<std::pair<Integer, const IntVector*>>& terms, std::size_t dim) {
  IntVector out(dim, Integer(0));
  for (const auto& [coef, vec] : terms) {
    for (std::size_t i = 0; i < dim; ++i) out[i] += coef * (*vec)[i];
  }
  return out;
}

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

void check_class(const ToricModel& model, std::int64_t cls) {
  if (cls < 0 || cls >= model.p()) {
    throw DomainError("InvalidClass", "class " + std::to_string(cls) + " outside Z_" + std::to_string(model.p()));
  }
}

// Fills eta and a0 from (c, d) and checks every structural identity.
void finish_model(ToricModel& model) {
  const std::size_t dim = static_cast<std::size_t>(model.n()) + 1;
  const Integer p(model.p());
  if (model.k * model.d - model.m * model.c != 1) {
    throw IdentityViolation("k d - m c = 1", (model.k * model.d - model.m * model.c).str(), "1");
  }
  model.eta.assign(dim, Integer(0));
  model.eta[dim - 2] = model.c;
  model.eta[dim - 1] = model.d;
  Integer tail_sum = 0;
  for (std::size_t j = 1; j < dim; ++j) tail_sum += model.space.weights()[j];
  model.a0 = tail_sum - model.d * (p / model.m);

  verify_determinant(model);
  verify_basis_identity(model);
}

}  // namespace

IntMatrix ToricModel::beta() const {
  const std::size_t dim = normals.size();
  IntMatrix b(dim, IntVector(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) b[row][col] = normals[col][row];
  }
  return b;
}

ToricModel build_toric_model(const LensSpace& space) {
  if (!space.is_normalized()) throw NotNormalized();
  const std::int64_t p = space.p();
  const std::int64_t n = space.n();
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  const auto& w = space.weights();

  const std::int64_t c1 = first_chern_mod_p(space);
  const std::int64_t m = p / std::gcd(p, c1);  // gcd(p, 0) = p gives m = 1
  const std::int64_t p_over_m = p / m;

  // k * (c1 / (p/m)) = 1 mod m; the minimal solution lies in [0, m).
  std::int64_t k = 0;
  if (m > 1) k = static_cast<std::int64_t>(mod_inverse(c1 / p_over_m, m));
  if (residue(static_cast<std::int64_t>((Integer(k) * c1) % p), p) != residue(p_over_m, p)) {
    throw IdentityViolation("k (l_0 + ... + l_n) = p/m mod p", std::to_string(k) + "*" + std::to_string(c1),
                            std::to_string(p_over_m));
  }
  if (std::gcd(k, m) != 1) throw BezoutFailure(std::to_string(k), std::to_string(m));

  ToricModel model{space, Integer(m), Integer(k), 0, {}, 0, 0, {}, 0};
  Integer tail_sum = 0;
  for (std::size_t j = 1; j < dim; ++j) tail_sum += w[j];
  model.q = model.k * tail_sum - p_over_m;

  IntVector nu0(dim, Integer(0));
  nu0[dim - 2] = model.k;
  nu0[dim - 1] = model.m;
  model.normals.push_back(std::move(nu0));
  for (std::size_t j = 1; j + 1 < dim; ++j) {
    IntVector nu(dim, Integer(0));
    nu[j - 1] = 1;
    nu[dim - 1] = model.m;
    model.normals.push_back(std::move(nu));
  }
  IntVector nun(dim, Integer(0));
  for (std::size_t j = 1; j + 1 < dim; ++j) nun[j - 1] = -w[j];
  nun[dim - 2] = model.q;
  nun[dim - 1] = model.m;
  model.normals.push_back(std::move(nun));

  // Canonical pair: d is the least non-negative residue of k^{-1} mod m.
  model.d = m == 1 ? Integer(0) : mod_inverse(model.k, model.m);
  model.c = (model.k * model.d - 1) / model.m;
  finish_model(model);
  return model;
}

ToricModel with_bezout_pair(const ToricModel& model, const Integer& c, const Integer& d) {
  ToricModel out = model;
  out.c = c;
  out.d = d;
  finish_model(out);
  return out;
}

std::vector<std::pair<Integer, Integer>> bezout_pairs(const ToricModel& model, std::size_t count) {
  std::vector<std::pair<Integer, Integer>> out;
  for (std::int64_t i = 0; out.size() < count; ++i) {
    std::int64_t t = (i % 2 == 0) ? i / 2 : -(i + 1) / 2;
    out.emplace_back(model.c + t * model.k, model.d + t * model.m);
  }
  return out;
}

Integer verify_determinant(const ToricModel& model) {
  Integer det = det_int(model.beta());
  if (abs(det) != model.p()) throw IdentityViolation("|det beta| = p", abs(det).str(), std::to_string(model.p()));
  return det;
}

void verify_basis_identity(const ToricModel& model) {
  const std::size_t dim = model.normals.size();
  std::vector<std::pair<Integer, const IntVector*>> terms;
  terms.emplace_back(model.a0, &model.normals[0]);
  for (std::size_t j = 1; j + 1 < dim; ++j) terms.emplace_back(Integer(-model.space.weights()[j]), &model.normals[j]);
  terms.emplace_back(Integer(model.p()), &model.eta);
  IntVector rhs = linear_combination(terms, dim);
  if (rhs != model.normals.back()) {
    throw IdentityViolation("nu_n = a0 nu_0 - sum l_j nu_j + p eta", vec_str(model.normals.back()), vec_str(rhs));
  }
}

std::string to_string(KernelStatus status) {
  switch (status) {
    case KernelStatus::Generator: return "generator";
    case KernelStatus::DegenerateK0: return "degenerate generator, k = 0";
    case KernelStatus::Deficient: return "deficient generator";
  }
  return "unknown";
}

KernelVerdict verify_kernel_generator(const ToricModel& model) {
  const std::size_t dim = model.normals.size();
  const Integer p(model.p());
  KernelVerdict verdict;
  verdict.vector.reserve(dim);
  verdict.vector.emplace_back(-model.q, p);
  for (std::size_t j = 1; j + 1 < dim; ++j) verdict.vector.emplace_back(model.k * model.space.weights()[j], p);
  verdict.vector.emplace_back(model.k, p);

  const IntMatrix b = model.beta();
  verdict.image.assign(dim, Integer(0));
  for (std::size_t row = 0; row < dim; ++row) {
    Rational sum(0);
    for (std::size_t col = 0; col < dim; ++col) sum += Rational(b[row][col]) * verdict.vector[col];
    if (!sum.is_integer()) throw IdentityViolation("beta * v integral", sum.str(), "integer");
    verdict.image[row] = sum.num();
  }

  verdict.order = 1;
  for (const auto& entry : verdict.vector) verdict.order = boost::multiprecision::lcm(verdict.order, entry.den());

  if (verdict.order == p) {
    verdict.status = KernelStatus::Generator;
  } else if (model.k == 0) {
    verdict.status = KernelStatus::DegenerateK0;
  } else {
    verdict.status = KernelStatus::Deficient;
  }
  return verdict;
}

Rational cz_index(const ToricModel& model, std::int64_t iterate) {
  if (iterate < 1) throw DomainError("InvalidIterate", "iterate must be >= 1");
  const Integer p(model.p());
  const Integer big_n(iterate);
  Integer floors = floor_div(big_n * model.a0, p);
  const auto& w = model.space.weights();
  for (std::size_t j = 1; j + 1 < w.size(); ++j) floors += floor_div(-big_n * w[j], p);
  return 2 * (Rational(floors) + Rational(big_n * model.d, model.m)) + Rational(model.n());
}

Rational mean_index(const ToricModel& model) {
  const Integer p(model.p());
  Integer middle = 0;
  const auto& w = model.space.weights();
  for (std::size_t j = 1; j + 1 < w.size(); ++j) middle += w[j];
  return 2 * (Rational(model.a0, p) - Rational(middle, p) + Rational(model.d, model.m));
}

HcTable hc_table(const ToricModel& model, std::int64_t cls, const Rational& degree_cap) {
  check_class(model, cls);
  const std::int64_t first = cls == 0 ? model.p() : cls;
  HcTable out{cls, cz_index(model, first), first, {}};
  // minimum over the first two periods
  Rational second = cz_index(model, first + model.p());
  if (second < out.k_a) {
    out.k_a = second;
    out.realized_at = first + model.p();
  }
  for (Rational deg = out.k_a; deg <= degree_cap; deg += 2) out.table.add(cls, deg);
  return out;
}

Rational k0_threshold(const ToricModel& model, std::int64_t cls) {
  Rational k_a = hc_table(model, cls, Rational(0)).k_a;
  const Rational floor_value(2 * model.n() + 1);
  if (k_a >= floor_value) return k_a;
  Rational gap = floor_value - k_a;
  Integer steps = floor_div(gap.num() + 2 * gap.den() - 1, 2 * gap.den());  // ceil(gap / 2)
  return k_a + Rational(2 * steps);
}

void verify_periodicity(const ToricModel& model, std::int64_t max_iter) {
  const std::int64_t p = model.p();
  std::vector<Rational> mu;
  mu.reserve(static_cast<std::size_t>(max_iter + p));
  for (std::int64_t big_n = 1; big_n <= max_iter + p; ++big_n) mu.push_back(cz_index(model, big_n));
  for (std::int64_t big_n = 1; big_n <= max_iter; ++big_n) {
    Rational step = mu[static_cast<std::size_t>(big_n + p - 1)] - mu[static_cast<std::size_t>(big_n - 1)];
    if (step != Rational(2)) {
      throw IdentityViolation("mu(N+p) - mu(N) = 2 at N = " + std::to_string(big_n), step.str(), "2/1");
    }
  }
}

}  // namespace lensreeb
