#include "sysrep/decomposition.hpp"

#include "sysrep/integer.hpp"

namespace sysrep {

std::vector<PrimaryComponent> primary_decomposition(const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "primary decomposition needs a square matrix");
  const Polynomial m = minimal_polynomial(a);
  const Factorization fac = factor(m, seed);

  std::vector<PrimaryComponent> out;
  for (const auto& [p, e] : fac.factors) {
    const Polynomial power = pow(p, e);
    const Polynomial cofactor = m / power;
    const Bezout bz = extended_gcd(cofactor, power);
    if (!bz.gcd.is_one()) throw Error(ErrorCode::Internal, "primary parts of m_A are not coprime");
    const Polynomial h = (bz.u * cofactor) % m;
    out.push_back({p, e, kernel_basis(evaluate(power, a)), evaluate(h, a)});
  }
  return out;
}

EigenspaceResult generalized_eigenspaces(const Matrix& a, std::uint64_t seed) {
  auto components = primary_decomposition(a, seed);
  NotSplit rest;
  for (const auto& c : components) {
    if (c.factor.degree() > 1) rest.factors.push_back(c.factor);
  }
  if (!rest.factors.empty()) return rest;

  std::vector<Eigenspace> out;
  for (auto& c : components) out.push_back({-c.factor.coefficient(0), c.multiplicity, std::move(c.basis)});
  return out;
}

Polynomial least_irreducible(const Field& prime_field, int degree, std::uint64_t seed) {
  if (prime_field.kind() != FieldKind::Prime) throw Error(ErrorCode::InvalidField, "expected a prime field");
  if (degree < 1) throw Error(ErrorCode::InvalidField, "degree must be positive");
  const std::uint64_t p = prime_field.characteristic();
  const auto count = checked_pow(p, static_cast<unsigned>(degree));
  if (!count) throw Error(ErrorCode::ExtensionTooLarge, "too many candidates");
  // Candidates in Polynomial::compare order: c_0 is the most significant digit.
  for (std::uint64_t index = 0; index < *count; ++index) {
    std::vector<Element> c(static_cast<std::size_t>(degree) + 1, prime_field.zero());
    c.back() = prime_field.one();
    std::uint64_t rest = index;
    for (int j = degree - 1; j >= 0; --j) {
      c[static_cast<std::size_t>(j)] = prime_field.from_int(static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    Polynomial f(prime_field, std::move(c));
    if (is_irreducible(f, seed)) return f;
  }
  throw Error(ErrorCode::Internal, "no irreducible polynomial of degree " + std::to_string(degree));
}

Element embed(const Element& x, const Field& extension) {
  if (x.field() == extension) return x;
  if (x.field().kind() != FieldKind::Prime || extension.characteristic() != x.field().characteristic()) {
    throw Error(ErrorCode::FieldMismatch, "can only embed F_p into an extension of F_p");
  }
  return extension.from_int(x.residue());
}

Vector embed(const Vector& v, const Field& extension) {
  Vector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(embed(e, extension));
  return out;
}

Matrix embed(const Matrix& a, const Field& extension) {
  Matrix out(extension, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = embed(a(i, j), extension);
  }
  return out;
}

SplittingLift splitting_field_lift(const Matrix& a, std::uint64_t seed) {
  const Field& f = a.field();
  if (f.kind() == FieldKind::Rational) throw Error(ErrorCode::RationalFieldUnsupported, "splitting fields are built over F_p");
  if (f.kind() != FieldKind::Prime) throw Error(ErrorCode::InvalidField, "splitting field lift starts from a prime field");

  std::uint64_t m = 1;
  for (const auto& [g, e] : factor(minimal_polynomial(a), seed).factors) {
    (void)e;
    m = *checked_lcm(m, static_cast<std::uint64_t>(g.degree()));
  }
  if (m == 1) return {f, a, 1};

  const auto size = m < 64 ? checked_pow(f.characteristic(), static_cast<unsigned>(m)) : std::nullopt;
  if (!size || *size >= (1ULL << 31)) {
    throw Error(ErrorCode::ExtensionTooLarge,
                "F_" + std::to_string(f.characteristic()) + "^" + std::to_string(m) + " exceeds 2^31 elements");
  }
  const Polynomial modulus = least_irreducible(f, static_cast<int>(m), seed);
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : modulus.coefficients()) coeffs.push_back(c.residue());
  const Field ext = Field::extension(f.characteristic(), coeffs);
  SplittingLift out{ext, embed(a, ext), static_cast<std::size_t>(m)};

  for (const auto& [g, e] : factor(minimal_polynomial(out.matrix), seed).factors) {
    (void)e;
    if (g.degree() != 1) throw Error(ErrorCode::Internal, "minimal polynomial does not split over " + ext.name());
  }
  return out;
}

Matrix PlanarBlock::restriction() const {
  const Field& f = a.field();
  if (form == BlockForm::Rotation) {
    return Matrix(f, 2, 2, {a, *b, -*b, a});
  }
  return companion(factor);
}

std::vector<PlanarBlock> planar_blocks(const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "planar blocks need a square matrix");
  const Field& f = a.field();
  if (f.characteristic() == 2) throw Error(ErrorCode::CharacteristicTwo, "a = c1/2 is undefined in characteristic 2");

  const std::size_t n = a.rows();
  const Polynomial m = minimal_polynomial(a);
  const Element two = f.from_int(2);
  std::vector<PlanarBlock> out;
  for (const auto& [p, e] : factor(m, seed).factors) {
    if (p.degree() != 2 || e != 1) continue;
    const Element c1 = -p.coefficient(1);
    const Element c0 = p.coefficient(0);

    // A vector killed by p(A): its annihilator is exactly p.
    const Polynomial rest = m / p;
    Vector v;
    for (std::size_t j = 0; j < n && v.empty(); ++j) {
      Vector cand = apply(rest, a, unit_vector(f, n, j));
      if (!is_zero(cand)) v = std::move(cand);
    }
    if (v.empty()) throw Error(ErrorCode::Internal, "no vector in ker " + p.to_string() + "(A)");

    PlanarBlock block{p, c1 / two, sqrt(c0 - (c1 / two) * (c1 / two)), {}, {}, BlockForm::Rotation};
    if (block.b) {
      block.u = v;
      block.w = block.b->inverse() * (block.a * v - a * v);
      const Vector au = a * block.u;
      const Vector aw = a * block.w;
      if (!(au == block.a * block.u - *block.b * block.w) || !(aw == *block.b * block.u + block.a * block.w)) {
        throw Error(ErrorCode::Internal, "rotation basis failed verification");
      }
    } else {
      block.form = BlockForm::Companion;
      block.u = v;
      block.w = a * v;
    }
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace sysrep
