#include "helly/errors.hpp"
#include "helly/extension.hpp"

#include "doctest.h"

using namespace helly;

namespace {

GroupAction trivial_action(int group_order, int module_order) {
  GroupAction action;
  std::vector<int> id(module_order);
  for (int i = 0; i < module_order; ++i) id[i] = i;
  action.act.assign(group_order, id);
  return action;
}

GroupAction parity_inversion_action() {
  // Even permutations act trivially on Z3, odd ones invert.
  GroupAction action;
  action.act = {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}, {0, 1, 2}, {0, 1, 2}, {0, 2, 1}};
  return action;
}

EquivariantMap partial_map(int order, std::initializer_list<std::pair<int, int>> pairs) {
  EquivariantMap phi;
  phi.image.assign(order, -1);
  for (auto [a, b] : pairs) phi.image[a] = b;
  return phi;
}

} // namespace

TEST_CASE("group table validation is exhaustive") {
  CHECK_THROWS_AS(make_group_table({{0, 1}, {1, 1}}), Error);          // no inverse for 1
  CHECK_THROWS_AS(make_group_table({{1, 0}, {0, 0}}), Error);          // no identity row
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  CHECK_THROWS_AS(make_group_table(bad), Error);                       // breaks associativity
  FiniteGroupTable z3 = make_group_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(z3.identity == 0);
  CHECK(z3.inverse[1] == 2);
}

TEST_CASE("stock groups have the expected structure") {
  FiniteGroupTable z4 = cyclic_group(4);
  CHECK(z4.order == 4);
  CHECK(z4.op(3, 2) == 1);
  CHECK(z4.inverse[3] == 1);

  FiniteGroupTable s3 = symmetric_group_3();
  CHECK(s3.order == 6);
  CHECK(s3.labels[3] == "(012)");
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && s3.op(a, b) == s3.op(b, a);
  CHECK_FALSE(abelian);
}

TEST_CASE("doubling a cyclic kernel yields the order-8 pushout") {
  FiniteGroupTable z4 = cyclic_group(4);
  PushoutResult result = pushout_extension(z4, {0, 2}, cyclic_group(4), trivial_action(4, 4),
                                           partial_map(4, {{0, 0}, {2, 2}}));
  CHECK(result.extended.order == 8);
  CHECK(result.quotient.order == 2);
  SesCheck check = verify_ses_morphism(z4, {0, 2}, cyclic_group(4),
                                       partial_map(4, {{0, 0}, {2, 2}}), result);
  CHECK(check.ok);
}

TEST_CASE("identity pushout along the full kernel keeps the group size") {
  FiniteGroupTable z2 = cyclic_group(2);
  PushoutResult result = pushout_extension(z2, {0, 1}, cyclic_group(2), trivial_action(2, 2),
                                           partial_map(2, {{0, 0}, {1, 1}}));
  CHECK(result.extended.order == 2);
  CHECK(result.quotient.order == 1);
  for (int y = 0; y < 2; ++y) CHECK(result.embed_m[y] == result.map_g[y]);
}

TEST_CASE("the symmetric group pushes out over its rotation kernel") {
  FiniteGroupTable s3 = symmetric_group_3();
  FiniteGroupTable z3 = cyclic_group(3);
  EquivariantMap phi = partial_map(6, {{0, 0}, {3, 1}, {4, 2}});
  PushoutResult result = pushout_extension(s3, {0, 3, 4}, z3, parity_inversion_action(), phi);
  CHECK(result.extended.order == 6);
  CHECK(result.quotient.order == 2);
  SesCheck check = verify_ses_morphism(s3, {0, 3, 4}, z3, phi, result);
  CHECK(check.ok);

  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      abelian = abelian && result.extended.op(a, b) == result.extended.op(b, a);
  CHECK_FALSE(abelian);
}

TEST_CASE("each violated hypothesis is reported by name") {
  FiniteGroupTable s3 = symmetric_group_3();
  FiniteGroupTable z3 = cyclic_group(3);

  CHECK_THROWS_WITH_AS(pushout_extension(s3, {0, 1}, z3, parity_inversion_action(),
                                         partial_map(6, {{0, 0}, {1, 1}})),
                       doctest::Contains("NotNormal"), Error);

  CHECK_THROWS_WITH_AS(pushout_extension(cyclic_group(4), {0, 2}, cyclic_group(4),
                                         trivial_action(4, 4), partial_map(4, {{0, 0}, {2, 1}})),
                       doctest::Contains("NotHomomorphism"), Error);

  EquivariantMap phi = partial_map(6, {{0, 0}, {3, 1}, {4, 2}});
  CHECK_THROWS_WITH_AS(pushout_extension(s3, {0, 3, 4}, z3, trivial_action(6, 3), phi),
                       doctest::Contains("NotEquivariant"), Error);

  FiniteGroupTable z2 = cyclic_group(2);
  GroupAction action = trivial_action(2, 6);
  EquivariantMap into_s3 = partial_map(2, {{0, 0}, {1, 1}});
  CHECK_THROWS_WITH_AS(pushout_extension(z2, {0, 1}, s3, action, into_s3),
                       doctest::Contains("NotCompatible"), Error);
}

TEST_CASE("mutated morphism data is caught with a witness") {
  FiniteGroupTable z4 = cyclic_group(4);
  EquivariantMap phi = partial_map(4, {{0, 0}, {2, 2}});
  PushoutResult result = pushout_extension(z4, {0, 2}, cyclic_group(4), trivial_action(4, 4), phi);

  PushoutResult broken = result;
  std::swap(broken.embed_m[1], broken.embed_m[2]);
  SesCheck check = verify_ses_morphism(z4, {0, 2}, cyclic_group(4), phi, broken);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.witness.empty());

  broken = result;
  broken.map_g[1] = result.map_g[3];
  CHECK_FALSE(verify_ses_morphism(z4, {0, 2}, cyclic_group(4), phi, broken).ok);

  broken = result;
  broken.project_ext[0] = 1 - broken.project_ext[0];
  CHECK_FALSE(verify_ses_morphism(z4, {0, 2}, cyclic_group(4), phi, broken).ok);
}

TEST_CASE("action validation enforces automorphisms") {
  FiniteGroupTable z4 = cyclic_group(4);
  GroupAction shift;
  shift.act = {{0, 1, 2, 3}, {1, 2, 3, 0}, {0, 1, 2, 3}, {1, 2, 3, 0}};
  // x -> x+1 is a bijection but not an automorphism of Z4.
  CHECK_THROWS_AS(validate_action(z4, z4, shift), Error);
  CHECK_NOTHROW(validate_action(z4, z4, trivial_action(4, 4)));
}
