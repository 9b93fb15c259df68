#include <doctest.h>

#include <algorithm>
#include <random>

#include "monopro/effect.hpp"
#include "support/laws.hpp"
#include "support/qsort_oracle.hpp"

using namespace monopro;
using namespace testkit;

TEST_CASE("kleisli_star pairs effectful results") {
  SUBCASE("identity monad reduces to star_fn") {
    MonadKind kind = base_monad(ContainerTag::identity);
    EffectArrow inc = arr_effect(kind, add(1));
    EffectArrow dbl = arr_effect(kind, times(2));
    Container out = kleisli_star(inc, dbl)(Value::pair(Value::num(3), Value::num(4)));
    CHECK(out == Container::identity(Value::pair(Value::num(4), Value::num(8))));
  }

  SUBCASE("logger logs left before right") {
    MonadKind kind = base_monad(ContainerTag::logger);
    EffectArrow noisy_a(kind, [](const Value& v) { return Container::logger({"a"}, v); });
    EffectArrow noisy_b(kind, [](const Value& v) { return Container::logger({"b"}, v); });
    Container out = kleisli_star(noisy_a, noisy_b)(Value::pair(Value::num(1), Value::num(2)));
    CHECK(out.log() == std::vector<std::string>{"a", "b"});
  }

  SUBCASE("option annihilates on either side") {
    MonadKind kind = base_monad(ContainerTag::option);
    EffectArrow good = arr_effect(kind, add(1));
    EffectArrow bad(kind, [](const Value&) { return Container::none(); });
    CHECK(kleisli_star(good, bad)(Value::pair(Value::num(1), Value::num(2))) ==
          Container::none());
    CHECK(kleisli_star(bad, good)(Value::pair(Value::num(1), Value::num(2))) ==
          Container::none());
  }
}

TEST_CASE("effect arrow category laws per monad") {
  std::mt19937 rng(61);
  const ContainerTag tags[] = {ContainerTag::identity, ContainerTag::option,
                               ContainerTag::list, ContainerTag::logger};
  for (auto tag : tags) {
    MonadKind kind = base_monad(tag);
    auto gen = gen_effect(kind);
    for (int i = 0; i < 20; ++i) {
      EffectArrow k = gen(rng);
      CHECK(eq_effect_on(compose_effect(k, effect_id(kind)), k, int_domain()));
      CHECK(eq_effect_on(compose_effect(effect_id(kind), k), k, int_domain()));
      EffectArrow a = gen(rng);
      EffectArrow b = gen(rng);
      CHECK(eq_effect_on(compose_effect(compose_effect(k, a), b),
                         compose_effect(k, compose_effect(a, b)), int_domain()));
    }
  }
}

TEST_CASE("lift_pro wraps payloads in some") {
  CHECK(lift_pro(ContainerTag::identity)(Container::identity(Value::num(3))) ==
        Container::identity(Value::some(Value::num(3))));
  CHECK(lift_pro(ContainerTag::logger)(Container::logger({"kept"}, Value::num(3))) ==
        Container::logger({"kept"}, Value::some(Value::num(3))));

  MonadKind base = base_monad(ContainerTag::logger);
  LiftPro same = cat_dimap(effect_id(base), effect_id(base), lift_pro(ContainerTag::logger));
  CHECK(eq_lift_on(same, lift_pro(ContainerTag::logger), int_domain()));
}

TEST_CASE("cat_dimap threads effects around the lift") {
  SUBCASE("identity arrows change nothing") {
    std::mt19937 rng(62);
    auto gen = gen_lift(ContainerTag::logger);
    MonadKind base = base_monad(ContainerTag::logger);
    for (int i = 0; i < 20; ++i) {
      LiftPro l = gen(rng);
      LiftPro same = cat_dimap(effect_id(base), effect_id(base), l);
      CHECK(eq_lift_on(same, l, int_domain()));
      // Identity holds on logged inputs too, not only at pure points.
      Container logged = Container::logger({"pre-existing"}, Value::num(3));
      CHECK(same(logged) == l(logged));
    }
  }

  SUBCASE("logs order as pre, lift's own, post") {
    MonadKind base = base_monad(ContainerTag::logger);
    EffectArrow pre(base, [](const Value& v) { return Container::logger({"pre"}, v); });
    EffectArrow post(base, [](const Value& v) { return Container::logger({"post"}, v); });
    LiftPro mid(ContainerTag::logger, [](const Container& ma) {
      std::vector<std::string> log = ma.log();
      log.push_back("mid");
      return Container::logger(std::move(log), Value::some(ma.value()));
    });
    Container out = cat_dimap(pre, post, mid)(Container::logger({}, Value::num(1)));
    CHECK(out.log() == std::vector<std::string>{"pre", "mid", "post"});
    CHECK(out.value() == Value::some(Value::num(1)));
  }

  SUBCASE("two cat_dimaps fuse by kleisli composition") {
    std::mt19937 rng(63);
    MonadKind base = base_monad(ContainerTag::logger);
    auto arrows = gen_effect(base);
    auto lifts = gen_lift(ContainerTag::logger);
    for (int i = 0; i < 20; ++i) {
      EffectArrow f1 = arrows(rng), f2 = arrows(rng);
      EffectArrow g1 = arrows(rng), g2 = arrows(rng);
      LiftPro l = lifts(rng);
      LiftPro staged = cat_dimap(f2, g2, cat_dimap(f1, g1, l));
      LiftPro fused = cat_dimap(compose_effect(f1, f2), compose_effect(g2, g1), l);
      CHECK(eq_lift_on(staged, fused, int_domain()));
    }
  }
}

TEST_CASE("cmp_unit consumes then produces") {
  SUBCASE("identity monad") {
    MonadKind base = base_monad(ContainerTag::identity);
    EffectArrow consume(base, [base](const Value&) { return m_pure(base, Value::unit()); });
    EffectArrow produce(base, [base](const Value&) { return m_pure(base, Value::num(42)); });
    Container out = cmp_unit(consume, produce)(Container::identity(Value::num(7)));
    CHECK(out == Container::identity(Value::some(Value::num(42))));
  }

  SUBCASE("logger logs in then out") {
    MonadKind base = base_monad(ContainerTag::logger);
    EffectArrow consume(base, [](const Value&) {
      return Container::logger({"in"}, Value::unit());
    });
    EffectArrow produce(base, [](const Value&) {
      return Container::logger({"out"}, Value::str("done"));
    });
    Container out = cmp_unit(consume, produce)(Container::logger({}, Value::num(7)));
    CHECK(out.log() == std::vector<std::string>{"in", "out"});
    CHECK(out.value() == Value::some(Value::str("done")));
  }
}

TEST_CASE("eff_convolute follows the split/zip/flatten pipeline") {
  SUBCASE("all-identity components act as the identity on pairs") {
    MonadKind base = base_monad(ContainerTag::identity);
    LiftPro out = eff_convolute(effect_id(base), effect_id(base),
                                lift_pro(ContainerTag::identity),
                                lift_pro(ContainerTag::identity));
    Value p = Value::pair(Value::num(2), Value::num(5));
    CHECK(out(Container::identity(p)) == Container::identity(Value::some(p)));
  }

  SUBCASE("star_star orders logs left then right") {
    auto noisy = [](const std::string& line) {
      return LiftPro(ContainerTag::logger, [line](const Container& ma) {
        std::vector<std::string> log = ma.log();
        log.push_back(line);
        return Container::logger(std::move(log), Value::some(ma.value()));
      });
    };
    Container out = star_star(noisy("L"), noisy("R"))(
        Container::logger({}, Value::pair(Value::num(1), Value::num(2))));
    CHECK(out.log() == std::vector<std::string>{"L", "R"});
    CHECK(out.value() == Value::some(Value::pair(Value::num(1), Value::num(2))));
  }

  SUBCASE("an inner option failure annihilates the whole pipeline") {
    LiftPro failing(ContainerTag::option, [](const Container&) { return Container::none(); });
    LiftPro fine = lift_pro(ContainerTag::option);
    Container out = star_star(failing, fine)(
        Container::some(Value::pair(Value::num(1), Value::num(2))));
    CHECK(out == Container::none());
  }
}

TEST_CASE("comm flattens a nested effect") {
  const ContainerTag inner = ContainerTag::logger;

  SUBCASE("pure of pure is pure") {
    Container nested = Container::logger(
        {}, Value::some(encode_container(Container::logger({}, Value::num(4)))));
    CHECK(t_comm(inner, nested) == Container::logger({}, Value::some(Value::num(4))));
  }

  SUBCASE("outer log precedes inner log") {
    Container nested = Container::logger(
        {"outer"},
        Value::some(encode_container(Container::logger({"inner"}, Value::num(4)))));
    CHECK(t_comm(inner, nested) ==
          Container::logger({"outer", "inner"}, Value::some(Value::num(4))));
  }

  SUBCASE("none payloads stay none") {
    Container nested = Container::logger({"outer"}, Value::none());
    CHECK(t_comm(inner, nested) == Container::logger({"outer"}, Value::none()));
  }
}

TEST_CASE("lift laws against the unit and parallel composition") {
  std::mt19937 rng(64);
  auto report = check_monopro_laws(lift_law_instance(ContainerTag::logger), rng, 30);
  CHECK(report.failures == 0);
  auto report2 = check_monopro_laws(lift_law_instance(ContainerTag::option), rng, 30);
  CHECK(report2.failures == 0);
}

TEST_CASE("lsplit partitions against the head and logs once") {
  Container out = lsplit({"b", "a", "c"});
  CHECK(out.log() == std::vector<std::string>{"Splitting: [\"a\",\"c\"] into [\"a\"], [\"c\"]"});
  CHECK(out.value() == Value::pair(words_value({"a"}), words_value({"c"})));

  Container solo = lsplit({"a"});
  CHECK(solo.log() == std::vector<std::string>{"Splitting: [] into [], []"});
  CHECK(solo.value() == Value::pair(words_value({}), words_value({})));

  Container ties = lsplit({"b", "b"});
  CHECK(ties.value() == Value::pair(words_value({}), words_value({"b"})));

  CHECK_THROWS_AS(lsplit({}), Error);
}

TEST_CASE("rsplit concatenates around the pivot and logs once") {
  Container out = rsplit("b", Value::pair(words_value({"a"}), words_value({"c"})));
  CHECK(out.log() == std::vector<std::string>{"Merging: [\"a\"], b, and [\"c\"]"});
  CHECK(out.value() == words_value({"a", "b", "c"}));

  Container solo = rsplit("x", Value::pair(words_value({}), words_value({})));
  CHECK(solo.value() == words_value({"x"}));
  CHECK(solo.log().size() == 1);
}

TEST_CASE("qsort_logged golden traces") {
  SUBCASE("empty input sorts to empty with no log") {
    Container out = qsort_logged({});
    CHECK(out == Container::logger({}, Value::some(words_value({}))));
  }

  SUBCASE("the three-word golden run") {
    Container out = qsort_logged({"b", "a", "c"});
    REQUIRE(out.value().is_some());
    CHECK(out.value().content() == words_value({"a", "b", "c"}));
    const std::vector<std::string> expected = {
        "Splitting: [\"a\",\"c\"] into [\"a\"], [\"c\"]",
        "Splitting: [\"a\",\"c\"] into [\"a\"], [\"c\"]",
        "Splitting: [] into [], []",
        "Splitting: [] into [], []",
        "Merging: [], a, and []",
        "Splitting: [] into [], []",
        "Splitting: [] into [], []",
        "Merging: [], c, and []",
        "Merging: [\"a\"], b, and [\"c\"]",
    };
    CHECK(out.log() == expected);
  }

  SUBCASE("an empty word stops the sort but keeps the log prefix") {
    Container out = qsort_logged({"b", "", "c"});
    CHECK_FALSE(out.value().is_some());
    const std::vector<std::string> expected = {
        "Splitting: [\"\",\"c\"] into [\"\"], [\"c\"]",
        "Splitting: [\"\",\"c\"] into [\"\"], [\"c\"]",
    };
    CHECK(out.log() == expected);
  }
}

TEST_CASE("qsort_logged agrees with the reference execution") {
  std::mt19937 rng(65);
  const std::vector<std::string> vocab = {"a", "b", "c", "ab", "ba", "cc", ""};
  std::uniform_int_distribution<std::size_t> len(0, 6);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::string> input;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) input.push_back(vocab[word(rng)]);

    Container out = qsort_logged(input);
    QsortTrace expected = oracle_qsort(input);
    CHECK(out.log() == expected.log);
    CHECK(out.value().is_some() == expected.result.has_value());
    if (expected.result) {
      CHECK(out.value().content() == words_value(*expected.result));
      // The payload is a sorted permutation of the input.
      std::vector<std::string> sorted = input;
      std::sort(sorted.begin(), sorted.end());
      CHECK(value_words(out.value().content()) == sorted);
    }
  }
}

TEST_CASE("qsort log structure counts splits and merges") {
  std::mt19937 rng(66);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "ab"};
  std::uniform_int_distribution<std::size_t> len(0, 5);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> input;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) input.push_back(vocab[word(rng)]);

    // Count guarded non-empty calls by direct recursion.
    std::function<int(std::vector<std::string>)> calls =
        [&calls](std::vector<std::string> ws) -> int {
      if (ws.empty() || ws.front().empty()) return 0;
      std::vector<std::string> below, above;
      for (std::size_t k = 1; k < ws.size(); ++k)
        (ws[k] < ws.front() ? below : above).push_back(ws[k]);
      return 1 + calls(below) + calls(above);
    };

    Container out = qsort_logged(input);
    REQUIRE(out.value().is_some());
    int splits = 0;
    int merges = 0;
    for (const auto& line : out.log()) {
      if (line.rfind("Splitting:", 0) == 0) ++splits;
      if (line.rfind("Merging:", 0) == 0) ++merges;
    }
    const int guarded = calls(input);
    // The convolution replays the unzipped split effect, so each guarded call
    // contributes two identical split lines and one merge line.
    CHECK(splits == 2 * guarded);
    CHECK(merges == guarded);
  }
}
