#include "helly/decide.hpp"
#include "helly/errors.hpp"
#include "helly/signed_perm.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace helly;

namespace {

MatQ mat2(int a, int b, int c, int d) {
  MatQ m(2, 2);
  m.at(0, 0) = rat(a);
  m.at(0, 1) = rat(b);
  m.at(1, 0) = rat(c);
  m.at(1, 1) = rat(d);
  return m;
}

PointGroup group_from(const std::vector<MatQ>& generators, const std::string& name) {
  PointGroup pg;
  pg.group = close_group(generators);
  pg.source_name = name;
  return pg;
}

// Random unimodular integer matrix with entries in {-2..2}, by
// rejection on the determinant.
MatQ random_unimodular(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    MatQ t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) = rat(entry(rng));
    Rational d = det(t);
    if (d == 1 || d == -1) return t;
  }
}

} // namespace

TEST_CASE("signed permutation groups have the expected size and order sets") {
  // |B_n| = 2^n n!; element orders follow from signed cycle types:
  // a k-cycle has order k or 2k by its sign product.
  CHECK(enumerate_signed_perms(2).size() == 8);
  CHECK(enumerate_signed_perms(3).size() == 48);
  CHECK(signed_perm_orders(2) == std::vector<int>{1, 2, 4});
  CHECK(signed_perm_orders(3) == std::vector<int>{1, 2, 3, 4, 6});
  CHECK_THROWS_AS(enumerate_signed_perms(7), Error);
}

TEST_CASE("the quarter turn sits at enumeration index 5") {
  std::vector<SignedPerm> b2 = enumerate_signed_perms(2);
  MatQ r90 = mat2(0, -1, 1, 0);
  CHECK(signed_perm_matrix(b2[5]) == r90);
  REQUIRE(is_signed_perm_matrix(r90));
  SignedPerm p = signed_perm_from_matrix(r90);
  CHECK(p.image == std::vector<int>{1, 0});
  CHECK(p.sign == std::vector<int>{1, -1});
}

TEST_CASE("composition of signed permutations matches matrix product") {
  std::vector<SignedPerm> b3 = enumerate_signed_perms(3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, b3.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedPerm& a = b3[pick(rng)];
    const SignedPerm& b = b3[pick(rng)];
    CHECK(signed_perm_matrix(sp_compose(a, b)) == signed_perm_matrix(a) * signed_perm_matrix(b));
    CHECK(signed_perm_matrix(sp_inverse(a)) == mat_inverse(signed_perm_matrix(a)));
    CHECK(rat(sp_trace(a)) == trace(signed_perm_matrix(a)));
  }
}

TEST_CASE("signed permutation order matches matrix order") {
  for (const SignedPerm& p : enumerate_signed_perms(3)) {
    MatQ m = signed_perm_matrix(p);
    MatQ power = m;
    int k = 1;
    while (power != MatQ::identity(3)) {
      power = power * m;
      ++k;
    }
    CHECK(sp_order(p) == k);
  }
}

TEST_CASE("order precheck finds the first unrealizable order") {
  PointGroup pg = group_from({mat2(0, -1, 1, -1)}, "third-turn");
  auto obstruction = order_precheck(pg.group, signed_perm_orders(2));
  REQUIRE(obstruction.has_value());
  CHECK(obstruction->element_order == 3);
  CHECK(obstruction->ambient_orders == std::vector<int>{1, 2, 4});

  PointGroup fine = group_from({mat2(0, -1, 1, 0)}, "quarter-turn");
  CHECK_FALSE(order_precheck(fine.group, signed_perm_orders(2)).has_value());
}

TEST_CASE("a group already made of signed permutations certifies with the identity") {
  PointGroup pg = group_from({mat2(0, -1, 1, 0)}, "quarter-turn");
  HellyDecision decision = decide_helly(pg);
  REQUIRE(decision.helly);
  CHECK(decision.precheck_passed);
  CHECK(decision.assignment_space == 8);
  CHECK(decision.certificate->phi == MatQ::identity(2));
}

TEST_CASE("the sheared quarter turn needs and gets a nontrivial conjugator") {
  MatQ sheared = mat2(1, -2, 1, -1);
  PointGroup pg = group_from({sheared}, "sheared-quarter-turn");
  HellyDecision decision = decide_helly(pg);
  REQUIRE(decision.helly);
  const MatQ& phi = decision.certificate->phi;
  CHECK(phi != MatQ::identity(2));
  CHECK(is_integer_matrix(phi));
  MatQ inv = mat_inverse(phi);
  for (int k = 0; k < pg.group.size(); ++k) {
    MatQ image = phi * pg.group.elements[k] * inv;
    CHECK(is_signed_perm_matrix(image));
    CHECK(image == signed_perm_matrix(decision.certificate->hom[k]));
  }
}

TEST_CASE("order obstructions yield NotHelly with the ambient order list") {
  PointGroup pg = group_from({mat2(1, -1, 1, 0)}, "sixth-turn");
  HellyDecision decision = decide_helly(pg);
  REQUIRE_FALSE(decision.helly);
  CHECK_FALSE(decision.precheck_passed);
  REQUIRE(decision.obstruction.has_value());
  CHECK(decision.obstruction->kind == ObstructionWitness::Kind::Order);
  CHECK(decision.obstruction->order->element_order == 6);
  CHECK(decision.obstruction->order->ambient_orders == std::vector<int>{1, 2, 4});
}

TEST_CASE("trace mismatch surfaces as an exhausted character search") {
  // Order 6 with trace 2: passes the order precheck in dimension 3,
  // but every order-6 signed permutation is a signed 3-cycle with
  // trace 0, so no trace-matching homomorphism exists.
  MatQ a(3, 3);
  a.at(0, 0) = rat(1);
  a.at(0, 1) = rat(-1);
  a.at(1, 0) = rat(1);
  a.at(2, 2) = rat(1);
  PointGroup pg = group_from({a}, "stacked-sixth-turn");
  HellyDecision decision = decide_helly(pg);
  REQUIRE_FALSE(decision.helly);
  CHECK(decision.precheck_passed);
  REQUIRE(decision.obstruction.has_value());
  CHECK(decision.obstruction->kind == ObstructionWitness::Kind::Character);
  CHECK(decision.obstruction->character->assignments_covered == 48);
  CHECK(decision.assignment_space == 48);
}

TEST_CASE("exhausted searches cover the space for any worker count") {
  PointGroup pg = group_from({mat2(0, -1, 1, -1)}, "third-turn");
  std::vector<SignedPerm> targets = enumerate_signed_perms(2);
  for (int workers : {1, 2, 4}) {
    HomSearch search = find_hom_by_character(pg.group, targets, workers);
    CHECK_FALSE(search.hom.has_value());
    CHECK(search.space == 8);
    CHECK(search.covered == 8);
  }
}

TEST_CASE("found homomorphisms are identical across worker counts") {
  PointGroup pg = group_from({mat2(1, -2, 1, -1), mat2(-1, 0, 0, -1)}, "sheared");
  std::vector<SignedPerm> targets = enumerate_signed_perms(2);
  HomSearch one = find_hom_by_character(pg.group, targets, 1);
  HomSearch four = find_hom_by_character(pg.group, targets, 4);
  REQUIRE(one.hom.has_value());
  REQUIRE(four.hom.has_value());
  CHECK(one.covered == four.covered);
  for (std::size_t k = 0; k < one.hom->size(); ++k) {
    CHECK((*one.hom)[k].image == (*four.hom)[k].image);
    CHECK((*one.hom)[k].sign == (*four.hom)[k].sign);
  }
}

TEST_CASE("random conjugates of signed permutation subgroups certify back") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + (trial % 2);
    std::vector<SignedPerm> all = enumerate_signed_perms(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    MatQ t = random_unimodular(rng, n);
    MatQ tinv = mat_inverse(t);
    std::vector<MatQ> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(t * signed_perm_matrix(all[pick(rng)]) * tinv);
    PointGroup pg = group_from(gens, "fuzz");
    HellyDecision decision = decide_helly(pg);
    REQUIRE(decision.helly);
    MatQ phi = decision.certificate->phi;
    MatQ phi_inv = mat_inverse(phi);
    for (const MatQ& g : pg.group.elements) CHECK(is_signed_perm_matrix(phi * g * phi_inv));
  }
}

TEST_CASE("generator caps turn into budget errors") {
  std::vector<MatQ> many;
  many.push_back(mat2(0, -1, 1, 0));
  many.push_back(mat2(1, 0, 0, -1));
  many.push_back(mat2(-1, 0, 0, 1));
  many.push_back(mat2(0, 1, 1, 0));
  many.push_back(mat2(-1, 0, 0, -1));
  PointGroup pg = group_from(many, "many-generators");
  DecideOptions opts;
  opts.max_generators = 2;
  CHECK_THROWS_AS(decide_helly(pg, opts), Error);
}

TEST_CASE("intertwiners average to an exact conjugator") {
  PointGroup pg = group_from({mat2(1, -2, 1, -1)}, "sheared-quarter-turn");
  std::vector<SignedPerm> targets = enumerate_signed_perms(2);
  HomSearch search = find_hom_by_character(pg.group, targets, 1);
  REQUIRE(search.hom.has_value());
  MatQ phi = build_intertwiner(pg.group, *search.hom);
  MatQ inv = mat_inverse(phi);
  for (int k = 0; k < pg.group.size(); ++k)
    CHECK(phi * pg.group.elements[k] * inv == signed_perm_matrix((*search.hom)[k]));
}
