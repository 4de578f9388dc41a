#include "helly/crystal.hpp"

#include "helly/errors.hpp"
#include "helly/signed_perm.hpp"

#include <map>
#include <string>

namespace helly {

void validate_crystal_spec(const CrystalSpec& spec) {
  if (spec.dim < 1) fail(ErrorKind::InvalidInput, "dimension must be positive");
  if (spec.generators.empty()) fail(ErrorKind::InvalidInput, "crystal spec has no generators");
  for (const auto& g : spec.generators) {
    if (g.linear.rows() != spec.dim || g.linear.cols() != spec.dim ||
        g.translation.size() != static_cast<std::size_t>(spec.dim))
      fail(ErrorKind::InvalidInput, "generator shape does not match dimension");
    if (!is_integer_matrix(g.linear))
      fail(ErrorKind::InvalidInput, "point part has non-integer entries");
    Rational d = det(g.linear);
    if (d != 1 && d != -1)
      fail(ErrorKind::InvalidInput, "point part is not unimodular");
  }
}

PointGroup point_group(const CrystalSpec& spec, int max_size) {
  validate_crystal_spec(spec);
  std::vector<MatQ> linear_parts;
  for (const auto& g : spec.generators) linear_parts.push_back(g.linear);
  return PointGroup{close_group(linear_parts, max_size), spec.name};
}

GramCertificate invariant_gram(const PointGroup& pg) {
  int n = pg.group.dim;
  MatQ form(n, n);
  for (const auto& g : pg.group.elements) form = form + g.transpose() * g;
  for (const auto& g : pg.group.elements)
    if (!preserves_form(g, form)) fail(ErrorKind::Internal, "averaged form is not invariant");

  GramCertificate cert;
  cert.form = form;
  // Sylvester criterion: positive leading principal minors.
  for (int k = 1; k <= n; ++k) {
    MatQ minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = form.at(i, j);
    Rational d = det(minor);
    if (d <= 0) fail(ErrorKind::Internal, "averaged form is not positive definite");
    cert.leading_minors.push_back(d);
  }
  return cert;
}

bool preserves_form(const MatQ& g, const MatQ& form) {
  return g.transpose() * form * g == form;
}

std::vector<AffineIsometry> affine_linf_action(const CrystalSpec& spec, const MatQ& phi) {
  validate_crystal_spec(spec);
  if (phi.rows() != spec.dim || phi.cols() != spec.dim)
    fail(ErrorKind::InvalidInput, "conjugator shape does not match dimension");
  MatQ phi_inv = mat_inverse(phi); // throws Singular on bad certificates
  std::vector<AffineIsometry> out;
  for (const auto& g : spec.generators) {
    MatQ linear = phi * g.linear * phi_inv;
    if (!is_signed_perm_matrix(linear))
      fail(ErrorKind::InvalidInput,
           "conjugated point part is not a signed permutation; not a valid certificate");
    out.push_back(AffineIsometry{linear, phi * g.translation});
  }
  return out;
}

namespace {

// Affine composition (A,s)*(B,t) = (AB, s + A t).
AffineIsometry affine_mul(const AffineIsometry& a, const AffineIsometry& b) {
  return AffineIsometry{a.linear * b.linear, vec_add(a.translation, a.linear * b.translation)};
}

AffineIsometry affine_inv(const AffineIsometry& a) {
  MatQ inv = mat_inverse(a.linear);
  return AffineIsometry{inv, vec_scale(Rational(-1), inv * a.translation)};
}

} // namespace

std::vector<VecQ> translation_span_basis(const std::vector<AffineIsometry>& action,
                                            int max_group_size) {
  if (action.empty()) fail(ErrorKind::InvalidInput, "empty affine action");
  int n = action[0].linear.rows();
  std::vector<MatQ> linear_parts;
  for (const auto& a : action) linear_parts.push_back(a.linear);
  FiniteMatrixGroup pts = close_group(linear_parts, max_group_size);

  // Affine lift of each point-group element along its discovery chain.
  std::vector<AffineIsometry> lift(pts.size());
  lift[0] = AffineIsometry{MatQ::identity(n), vec_zero(n)};
  std::map<MatQ, int> index;
  for (int i = 0; i < pts.size(); ++i) index.emplace(pts.elements[i], i);
  for (int i = 1; i < pts.size(); ++i)
    lift[i] = affine_mul(lift[pts.parent[i]], action[pts.parent_gen[i]]);

  // Kernel generators: lift(p) * gen - the lift of its point part is a
  // pure translation for every coset representative p and generator.
  std::vector<VecQ> translations;
  for (int i = 0; i < pts.size(); ++i)
    for (const auto& g : action) {
      AffineIsometry w = affine_mul(lift[i], g);
      int target = index.at(w.linear);
      AffineIsometry pure = affine_mul(w, affine_inv(lift[target]));
      if (pure.linear != MatQ::identity(n)) fail(ErrorKind::Internal, "kernel element has a point part");
      if (!vec_is_zero(pure.translation)) translations.push_back(pure.translation);
    }
  int r = rref(translations);
  (void)r;
  return translations;
}

TilingAction cubical_tiling_action(const std::vector<AffineIsometry>& action, int max_group_size) {
  if (action.empty()) fail(ErrorKind::InvalidInput, "empty affine action");
  int n = action[0].linear.rows();
  for (const auto& a : action)
    if (!is_signed_perm_matrix(a.linear))
      fail(ErrorKind::InvalidInput, "tiling action needs signed permutation point parts");

  std::vector<VecQ> basis = translation_span_basis(action, max_group_size);
  if (static_cast<int>(basis.size()) < n)
    fail(ErrorKind::InvalidInput,
         "degenerate lattice: pure translations span rank " + std::to_string(basis.size()) +
             " < " + std::to_string(n));

  // Smallest positive rational multiplier putting every generator
  // translation (hence, since signed permutations preserve Z^n, every
  // element translation) into the integer lattice.
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& a : action)
    for (const auto& t : a.translation) {
      if (t == 0) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.get_den().get_mpz_t());
      mpz_class num_abs = abs(t.get_num());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num_abs.get_mpz_t());
    }
  Rational scale(1);
  if (num_gcd != 0) {
    scale = Rational(den_lcm, num_gcd);
    scale.canonicalize();
  }

  TilingAction out;
  out.scale = scale;
  for (const auto& a : action)
    out.maps.push_back(AffineIsometry{a.linear, vec_scale(scale, a.translation)});
  for (const auto& m : out.maps)
    for (const auto& t : m.translation)
      if (!is_integer(t)) fail(ErrorKind::Internal, "rescaled translation is not integral");
  return out;
}

} // namespace helly
