#include <doctest.h>

#include <random>

#include "monopro/day.hpp"
#include "monopro/monopro.hpp"
#include "support/day_gen.hpp"
#include "support/domains.hpp"

using namespace monopro;
using namespace testkit;

TEST_CASE("day_collapse evaluates split, parts, merge") {
  DayPair d(add(1), times(2), tf::diag(), add_pair());
  CHECK(day_collapse(d)(Value::num(3)) == Value::num(10));

  DayPair ident(tf::identity(), tf::identity(), tf::diag(), tf::fst());
  CHECK(same_transform(day_collapse(ident), tf::identity(), int_domain()));

  DayPair mixed(strlen_t(), to_upper(), tf::diag(), tf::identity());
  CHECK(day_collapse(mixed)(Value::str("ab")) ==
        Value::pair(Value::num(2), Value::str("AB")));

  DayPair bad(ForgetPro(Monoid::int_sum(), [](const Value& v) { return v; }),
              tf::identity(), tf::diag(), tf::fst());
  CHECK_THROWS_AS(day_collapse(bad), Error);
}

TEST_CASE("day_dimap rewires only split and merge") {
  std::mt19937 rng(21);
  auto dom = int_domain();
  for (int i = 0; i < 30; ++i) {
    DayPair d = gen_day_pair(rng);
    CHECK(same_transform(day_collapse(day_dimap(tf::identity(), tf::identity(), d)),
                         day_collapse(d), dom));

    DayPair pre = day_dimap(add(1), tf::identity(), d);
    for (const auto& v : dom)
      CHECK(day_collapse(pre)(v) == day_collapse(d)(Value::num(v.as_num() + 1)));

    DayPair post = day_dimap(tf::identity(), show_num(), d);
    for (const auto& v : dom)
      CHECK(day_collapse(post)(v) == show_num()(day_collapse(d)(v)));
  }
}

TEST_CASE("rho eliminates the unit on the right") {
  DayPair d(add(1), UnitPro(Value::num(9)), tf::diag(), add_pair());
  CHECK(part_as_transform(rho(d))(Value::num(3)) == Value::num(13));

  SUBCASE("round trip on a plain transform") {
    DayPart back = rho(rho_inv(DayPart(add(1))));
    CHECK(same_transform(part_as_transform(back), add(1), int_domain()));
  }

  SUBCASE("forget parts survive with split's first projection") {
    ForgetPro sum(Monoid::int_sum(), [](const Value& v) { return v; });
    Transform split([](const Value& v) {
      return Value::pair(Value::num(v.as_num() * 3), Value::unit());
    });
    DayPair df(sum, UnitPro(Value::unit()), split, tf::fst());
    DayPart reduced = rho(df);
    const auto* out = std::get_if<ForgetPro>(&reduced);
    REQUIRE(out != nullptr);
    for (const auto& v : int_domain()) CHECK((*out)(v) == Value::num(v.as_num() * 3));
  }
}

TEST_CASE("lambda eliminates the unit on the left") {
  DayPair d(UnitPro(Value::str("x")), to_upper(), tf::diag(), tf::identity());
  CHECK(part_as_transform(lambda(d))(Value::str("ab")) ==
        Value::pair(Value::str("x"), Value::str("AB")));

  SUBCASE("round trip") {
    std::mt19937 rng(22);
    for (int i = 0; i < 20; ++i) {
      Transform q = gen_int_endo(rng);
      DayPart back = lambda(lambda_inv(DayPart(q)));
      CHECK(same_transform(part_as_transform(back), q, int_domain()));
    }
  }

  SUBCASE("lambda after gamma agrees with rho") {
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
      DayPair d2 = gen_unit_right(rng);
      CHECK(same_transform(part_as_transform(lambda(gamma(d2))),
                           part_as_transform(rho(d2)), int_domain()));
    }
  }
}

TEST_CASE("triangle: unit elimination preserves collapse") {
  std::mt19937 rng(24);
  for (int i = 0; i < 50; ++i) {
    DayPair right_unit = gen_unit_right(rng);
    CHECK(same_transform(part_as_transform(rho(right_unit)), day_collapse(right_unit),
                         int_domain()));
    DayPair left_unit = gen_unit_left(rng);
    CHECK(same_transform(part_as_transform(lambda(left_unit)), day_collapse(left_unit),
                         int_domain()));
  }
}

TEST_CASE("alpha re-associates without changing the collapse") {
  SUBCASE("hand-evaluated sum of three parts") {
    DayPair inner(add(1), times(2), tf::diag(), add_pair());
    DayPair nested(day_part(inner), add(10), tf::diag(), add_pair());
    CHECK(day_collapse(nested)(Value::num(2)) == Value::num(19));
    CHECK(day_collapse(alpha(nested))(Value::num(2)) == Value::num(19));
  }

  SUBCASE("identity parts with canonical splits") {
    DayPair inner(tf::identity(), tf::identity(), tf::diag(), tf::fst());
    DayPair nested(day_part(inner), tf::identity(), tf::diag(), tf::fst());
    CHECK(same_transform(day_collapse(alpha(nested)), day_collapse(nested), int_domain()));
  }

  SUBCASE("pentagon-style samples plus round trips") {
    std::mt19937 rng(25);
    for (int i = 0; i < 50; ++i) {
      DayPair nested = gen_nested_day_pair(rng);
      DayPair other = alpha(nested);
      CHECK(same_transform(day_collapse(other), day_collapse(nested), int_domain()));
      CHECK(same_transform(day_collapse(alpha_inv(other)), day_collapse(nested),
                           int_domain()));
      CHECK(same_transform(day_collapse(alpha(alpha_inv(other))), day_collapse(other),
                           int_domain()));
    }
  }

  SUBCASE("wrong nesting shape is rejected") {
    DayPair flat(add(1), add(2), tf::diag(), add_pair());
    CHECK_THROWS_AS(alpha(flat), Error);
    CHECK_THROWS_AS(alpha_inv(flat), Error);
  }
}

TEST_CASE("gamma swaps parts and is an involution under collapse") {
  DayPair d(add(1), times(2), tf::diag(), tf::identity());
  CHECK(day_collapse(d)(Value::num(3)) == Value::pair(Value::num(4), Value::num(6)));
  CHECK(day_collapse(gamma(d))(Value::num(3)) ==
        Value::pair(Value::num(4), Value::num(6)));

  std::mt19937 rng(26);
  for (int i = 0; i < 50; ++i) {
    DayPair s = gen_day_pair(rng);
    CHECK(same_transform(day_collapse(gamma(s)), day_collapse(s), int_domain()));
    CHECK(same_transform(day_collapse(gamma(gamma(s))), day_collapse(s), int_domain()));

    Transform f = gen_int_endo(rng);
    Transform g = gen_int_endo(rng);
    CHECK(same_transform(day_collapse(gamma(day_dimap(f, g, s))),
                         day_collapse(day_dimap(f, g, gamma(s))), int_domain()));
  }
}

TEST_CASE("curry and uncurry witness the correspondence") {
  std::function<Transform(const DayPair&)> collapse = [](const DayPair& d) {
    return day_collapse(d);
  };
  auto curried = day_curry<Transform>(collapse);
  auto dimap = [](const Transform& f, const Transform& g, const Transform& p) {
    return dimap_fn(f, g, p);
  };

  SUBCASE("curried collapse is the parallel composition") {
    std::mt19937 rng(27);
    auto dom = pair_domain(int_domain());
    for (int i = 0; i < 30; ++i) {
      Transform p = gen_int_endo(rng);
      Transform q = gen_int_endo(rng);
      CHECK(same_transform(curried(DayPart(p), DayPart(q)), star_fn(p, q), dom));
    }
  }

  SUBCASE("uncurry after curry returns collapse") {
    auto back = day_uncurry<Transform>(curried, dimap);
    std::mt19937 rng(28);
    for (int i = 0; i < 50; ++i) {
      DayPair d = gen_day_pair(rng);
      CHECK(same_transform(back(d), day_collapse(d), int_domain()));
    }
  }

  SUBCASE("curry after uncurry returns the family") {
    std::function<Transform(const DayPart&, const DayPart&)> family =
        [](const DayPart& p, const DayPart& q) {
          return star_fn(part_as_transform(p), part_as_transform(q));
        };
    auto there = day_uncurry<Transform>(family, dimap);
    auto round = day_curry<Transform>(there);
    std::mt19937 rng(29);
    auto dom = pair_domain(int_domain());
    for (int i = 0; i < 30; ++i) {
      Transform p = gen_int_endo(rng);
      Transform q = gen_int_endo(rng);
      CHECK(same_transform(round(DayPart(p), DayPart(q)), family(DayPart(p), DayPart(q)),
                           dom));
    }
  }
}
