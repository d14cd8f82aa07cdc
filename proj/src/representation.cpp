#include "sysrep/representation.hpp"

#include <random>

#include "sysrep/dynamics.hpp"

namespace sysrep {

TimeGroup TimeGroup::cyclic(std::uint64_t T) {
  if (T < 1) throw Error(ErrorCode::UnsupportedGroup, "cyclic time group needs T >= 1");
  return {Kind::Cyclic, T};
}

std::string TimeGroup::name() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Naturals: return "N";
    case Kind::Cyclic: return "Z/" + std::to_string(period) + "Z";
  }
  return {};
}

Representation::Representation(TimeGroup group, Matrix generator)
    : group_(group), generator_(std::move(generator)) {
  if (!generator_.is_square() || generator_.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "generator must be a non-empty square matrix");
  }
  if (generator_.rows() > kMaxDimension) {
    throw Error(ErrorCode::DimensionTooLarge, "state dimension is capped at " + std::to_string(kMaxDimension));
  }
  if (group_.kind == TimeGroup::Kind::Cyclic && group_.period < 1) {
    throw Error(ErrorCode::UnsupportedGroup, "cyclic time group needs T >= 1");
  }
  if (group_.invertible()) {
    inverse_ = inverse(generator_);  // throws SingularMatrix
  }
  if (group_.kind == TimeGroup::Kind::Cyclic && !pow(generator_, static_cast<std::int64_t>(group_.period)).is_identity()) {
    throw Error(ErrorCode::NotPeriodic, "A^" + std::to_string(group_.period) + " != I");
  }
}

Matrix Representation::rho(std::int64_t t) const {
  switch (group_.kind) {
    case TimeGroup::Kind::Naturals:
      if (t < 0) throw Error(ErrorCode::NegativeTimeForSemigroup, "negative time on the semigroup N");
      return pow(generator_, t);
    case TimeGroup::Kind::Cyclic: {
      const auto T = static_cast<std::int64_t>(group_.period);
      std::int64_t r = t % T;
      if (r < 0) r += T;
      return pow(generator_, r);
    }
    case TimeGroup::Kind::Integers:
      if (t < 0) {
        std::uint64_t e = static_cast<std::uint64_t>(-(t + 1)) + 1;
        Matrix result = Matrix::identity(field(), dim());
        Matrix base = *inverse_;
        while (e > 0) {
          if (e & 1U) result = result * base;
          e >>= 1U;
          if (e > 0) base = base * base;
        }
        return result;
      }
      return pow(generator_, t);
  }
  return {};
}

Vector Representation::evolve(const Vector& x0, std::int64_t t) const {
  if (x0.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "initial state has the wrong length");
  return rho(t) * x0;
}

Vector Representation::poly_action(const Polynomial& f, const Vector& v) const {
  if (!(f.field() == field())) throw Error(ErrorCode::FieldMismatch, "polynomial over another field");
  return apply(f, generator_, v);
}

Polynomial reduce_mod_x_pow_minus_one(const Polynomial& f, std::uint64_t T) {
  if (T < 1) throw Error(ErrorCode::UnsupportedGroup, "x^T - 1 needs T >= 1");
  const auto& c = f.coefficients();
  if (c.size() <= T) return f;
  std::vector<Element> folded(T, f.field().zero());
  for (std::size_t i = 0; i < c.size(); ++i) folded[i % T] += c[i];
  return Polynomial(f.field(), std::move(folded));
}

Vector Representation::module_action(const Polynomial& f, const Vector& v) const {
  if (group_.kind != TimeGroup::Kind::Cyclic) {
    throw Error(ErrorCode::WrongTimeGroup, "module action over k[x]/(x^T - 1) needs a cyclic time group");
  }
  return poly_action(reduce_mod_x_pow_minus_one(f, group_.period), v);
}

HomomorphismReport check_homomorphism(const RhoFunction& rho, std::size_t dim, const Field& field, bool semigroup,
                                      std::size_t trials, std::uint64_t seed) {
  HomomorphismReport report;
  const Matrix id = Matrix::identity(field, dim);
  if (!(rho(0) == id)) {
    report.passed = false;
    report.identity_ok = false;
    report.counterexample = std::make_pair(0, 0);
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(semigroup ? 0 : -kHomomorphismRange, kHomomorphismRange);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::int64_t t1 = dist(rng), t2 = dist(rng);
    ++report.trials;
    if (!(rho(t1 + t2) == rho(t1) * rho(t2))) {
      report.passed = false;
      report.counterexample = std::make_pair(t1, t2);
      return report;
    }
  }
  return report;
}

HomomorphismReport check_homomorphism(const Representation& rep, std::size_t trials, std::uint64_t seed) {
  return check_homomorphism([&rep](std::int64_t t) { return rep.rho(t); }, rep.dim(), rep.field(),
                            !rep.group().invertible(), trials, seed);
}

Representation induce_quotient(const Representation& rep, std::uint64_t seed) {
  if (!rep.group().invertible()) {
    throw Error(ErrorCode::WrongTimeGroup, "the quotient construction starts from the group Z");
  }
  const std::uint64_t T = order_of_matrix(rep.generator(), seed);
  Representation quotient(TimeGroup::cyclic(T), rep.generator());

  // Spot-check that rho factors through Z/TZ.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-kHomomorphismRange, kHomomorphismRange);
  for (int i = 0; i < 8; ++i) {
    const std::int64_t t = dist(rng);
    if (!(quotient.rho(t) == rep.rho(t))) throw Error(ErrorCode::Internal, "quotient representation does not commute");
  }
  return quotient;
}

Representation from_module_action(const Field& field, std::uint64_t T, const Matrix& action) {
  if (!(action.field() == field)) throw Error(ErrorCode::FieldMismatch, "action matrix over another field");
  if (!action.is_square()) throw Error(ErrorCode::DimensionMismatch, "x-action must be square");
  if (T < 1) throw Error(ErrorCode::UnsupportedGroup, "cyclic time group needs T >= 1");
  if (!pow(action, static_cast<std::int64_t>(T)).is_identity()) {
    throw Error(ErrorCode::NotPeriodic, "x^" + std::to_string(T) + " does not act as the identity");
  }
  return Representation(TimeGroup::cyclic(T), action);
}

}  // namespace sysrep
