#include "monopro/effect.hpp"

#include <sstream>

namespace monopro {

MonadKind base_monad(ContainerTag t) { return MonadKind{t, false}; }

MonadKind option_over(ContainerTag t) { return MonadKind{t, true}; }

Container m_pure(const MonadKind& k, const Value& v) {
  return Container::pure(k.base, k.option_layer ? Value::some(v) : v);
}

Container m_bind(const MonadKind& k, const Container& m,
                 const std::function<Container(const Value&)>& f) {
  if (!k.option_layer) return bind_c(m, f);
  MonadKind inner = base_monad(k.base);
  return bind_c(m, [&](const Value& ov) {
    if (!ov.is_some()) return m_pure(inner, Value::none());
    return f(ov.content());
  });
}

Container m_map(const MonadKind& k, const ValueFn& f, const Container& m) {
  if (!k.option_layer) return map_c(f, m);
  return map_c([&f](const Value& ov) {
    return ov.is_some() ? Value::some(f(ov.content())) : Value::none();
  }, m);
}

Value encode_container(const Container& c) {
  switch (c.tag()) {
    case ContainerTag::identity: return c.value();
    case ContainerTag::option:
      return c.has_value() ? Value::some(c.option_value()) : Value::none();
    case ContainerTag::list: return Value::list(c.items());
    case ContainerTag::logger: {
      std::vector<Value> lines;
      lines.reserve(c.log().size());
      for (const auto& line : c.log()) lines.push_back(Value::str(line));
      return Value::pair(Value::list(std::move(lines)), c.value());
    }
  }
  fail("encode_container: bad tag");
}

Container decode_container(ContainerTag tag, const Value& v) {
  switch (tag) {
    case ContainerTag::identity: return Container::identity(v);
    case ContainerTag::option:
      return v.is_some() ? Container::some(v.content()) : Container::none();
    case ContainerTag::list: return Container::list(v.items());
    case ContainerTag::logger: {
      std::vector<std::string> log;
      for (const auto& line : v.first().items()) log.push_back(line.as_str());
      return Container::logger(std::move(log), v.second());
    }
  }
  fail("decode_container: bad tag");
}

Container t_lift(ContainerTag inner, const Container& ma) {
  if (ma.tag() != inner) fail("t_lift: tag mismatch");
  return map_c([](const Value& v) { return Value::some(v); }, ma);
}

Container t_comm(ContainerTag inner, const Container& mna) {
  MonadKind base = base_monad(inner);
  return bind_c(mna, [&](const Value& ov) {
    if (!ov.is_some()) return m_pure(base, Value::none());
    Container inner_effect = decode_container(inner, ov.content());
    return m_map(base, [](const Value& a) { return Value::some(a); }, inner_effect);
  });
}

EffectArrow::EffectArrow(MonadKind kind, std::function<Container(const Value&)> run)
    : kind_(kind), run_(std::move(run)) {
  if (!run_) fail("EffectArrow: empty function");
}

Container EffectArrow::operator()(const Value& v) const {
  Container out = run_(v);
  if (out.tag() != kind_.base)
    fail("EffectArrow: run produced " + to_string(out.tag()) + ", declared " +
         to_string(kind_.base));
  return out;
}

EffectArrow arr_effect(const MonadKind& k, const Transform& f) {
  return EffectArrow(k, [k, f](const Value& v) { return m_pure(k, f(v)); });
}

EffectArrow effect_id(const MonadKind& k) { return arr_effect(k, tf::identity()); }

EffectArrow compose_effect(const EffectArrow& g, const EffectArrow& f) {
  if (f.kind() != g.kind()) fail("compose_effect: monads differ");
  MonadKind k = f.kind();
  return EffectArrow(k, [k, f, g](const Value& v) {
    return m_bind(k, f(v), [&g](const Value& b) { return g(b); });
  });
}

EffectArrow dimap_effect(const Transform& pre, const Transform& post, const EffectArrow& k) {
  MonadKind kind = k.kind();
  return EffectArrow(kind, [kind, pre, post, k](const Value& v) {
    return m_map(kind, [post](const Value& b) { return post(b); }, k(pre(v)));
  });
}

EffectArrow kleisli_star(const EffectArrow& p, const EffectArrow& q) {
  if (p.kind() != q.kind()) fail("kleisli_star: monads differ");
  MonadKind k = p.kind();
  return EffectArrow(k, [k, p, q](const Value& v) {
    const Value a = v.first();
    const Value c = v.second();
    return m_bind(k, p(a), [&](const Value& b) {
      return m_map(k, [&b](const Value& d) { return Value::pair(b, d); }, q(c));
    });
  });
}

EffectArrow kleisli_empty(const MonadKind& k) {
  return EffectArrow(k, [k](const Value&) { return m_pure(k, Value::unit()); });
}

MonoProOps<EffectArrow> kleisli_monopro(const MonadKind& k) {
  return MonoProOps<EffectArrow>{
      kleisli_empty(k),
      [](const EffectArrow& p, const EffectArrow& q) { return kleisli_star(p, q); },
      [](const Transform& f, const Transform& g, const EffectArrow& p) {
        return dimap_effect(f, g, p);
      }};
}

ArrowOps<EffectArrow> kleisli_arrow(const MonadKind& k) {
  return ArrowOps<EffectArrow>{
      effect_id(k),
      [](const EffectArrow& g, const EffectArrow& f) { return compose_effect(g, f); },
      [k](const Transform& f) { return arr_effect(k, f); }};
}

LiftPro::LiftPro(ContainerTag inner, std::function<Container(const Container&)> run)
    : inner_(inner), run_(std::move(run)) {
  if (!run_) fail("LiftPro: empty function");
}

Container LiftPro::operator()(const Container& ma) const {
  if (ma.tag() != inner_)
    fail("LiftPro: expected " + to_string(inner_) + " input, got " + to_string(ma.tag()));
  return run_(ma);
}

LiftPro lift_pro(ContainerTag inner) {
  return LiftPro(inner, [inner](const Container& ma) { return t_lift(inner, ma); });
}

namespace {

void require_plain(const EffectArrow& f, ContainerTag inner, const char* who) {
  if (f.kind() != base_monad(inner)) fail(std::string(who) + ": arrow monad mismatch");
}

}  // namespace

LiftPro cat_dimap(const EffectArrow& f, const EffectArrow& g, const LiftPro& l) {
  require_plain(f, l.inner(), "cat_dimap");
  require_plain(g, l.inner(), "cat_dimap");
  ContainerTag inner = l.inner();
  MonadKind base = base_monad(inner);
  MonadKind stack = option_over(inner);
  return LiftPro(inner, [=](const Container& ma) {
    Container k = l(m_bind(base, ma, [&f](const Value& a) { return f(a); }));
    return m_bind(stack, k, [&](const Value& c) { return t_lift(inner, g(c)); });
  });
}

LiftPro cmp_unit(const EffectArrow& f, const EffectArrow& g) {
  if (f.kind() != g.kind() || f.kind().option_layer) fail("cmp_unit: bad arrow monads");
  ContainerTag inner = f.kind().base;
  MonadKind base = base_monad(inner);
  return LiftPro(inner, [=](const Container& ms) {
    Container consumed = m_bind(base, ms, [&f](const Value& s) { return f(s); });
    Container produced =
        m_bind(base, consumed, [&g](const Value&) { return g(Value::unit()); });
    return t_lift(inner, produced);
  });
}

LiftPro cmp_empty(ContainerTag inner) {
  MonadKind base = base_monad(inner);
  EffectArrow discard(base, [base](const Value&) { return m_pure(base, Value::unit()); });
  return cmp_unit(discard, discard);
}

LiftPro eff_convolute(const EffectArrow& f, const EffectArrow& g, const LiftPro& h,
                      const LiftPro& l) {
  if (h.inner() != l.inner()) fail("eff_convolute: inner monads differ");
  ContainerTag inner = h.inner();
  require_plain(f, inner, "eff_convolute");
  require_plain(g, inner, "eff_convolute");
  MonadKind base = base_monad(inner);
  MonadKind stack = option_over(inner);
  return LiftPro(inner, [=](const Container& ms) {
    Container split = m_bind(base, ms, [&f](const Value& s) { return f(s); });
    auto [ma, mc] = unzip_c(split);
    Container th = h(ma);
    Container tl = l(mc);
    Container zipped = m_bind(stack, th, [&](const Value& b) {
      return m_map(stack, [&b](const Value& d) { return Value::pair(b, d); }, tl);
    });
    Container mapped = m_map(
        stack, [&g](const Value& bd) { return encode_container(g(bd)); }, zipped);
    return t_comm(inner, mapped);
  });
}

LiftPro star_star(const LiftPro& h, const LiftPro& l) {
  MonadKind base = base_monad(h.inner());
  return eff_convolute(effect_id(base), effect_id(base), h, l);
}

LiftPro lconvolute(const EffectArrow& f, const LiftPro& h, const LiftPro& l) {
  return eff_convolute(f, effect_id(base_monad(h.inner())), h, l);
}

LiftPro rconvolute(const EffectArrow& g, const LiftPro& h, const LiftPro& l) {
  return eff_convolute(effect_id(base_monad(h.inner())), g, h, l);
}

MonoProOps<LiftPro> lift_monopro(ContainerTag inner) {
  MonadKind base = base_monad(inner);
  return MonoProOps<LiftPro>{
      cmp_empty(inner),
      [](const LiftPro& h, const LiftPro& l) { return star_star(h, l); },
      [base](const Transform& f, const Transform& g, const LiftPro& x) {
        return cat_dimap(arr_effect(base, f), arr_effect(base, g), x);
      }};
}

std::string show_words(const std::vector<std::string>& words) {
  std::ostringstream os;
  os << '[';
  bool sep = false;
  for (const auto& w : words) {
    if (sep) os << ',';
    os << '"';
    for (char c : w) {
      if (c == '"' || c == '\\') os << '\\';
      os << c;
    }
    os << '"';
    sep = true;
  }
  os << ']';
  return os.str();
}

Value words_value(const std::vector<std::string>& words) {
  std::vector<Value> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(Value::str(w));
  return Value::list(std::move(out));
}

std::vector<std::string> value_words(const Value& v) {
  std::vector<std::string> out;
  out.reserve(v.items().size());
  for (const auto& item : v.items()) out.push_back(item.as_str());
  return out;
}

Container lsplit(const std::vector<std::string>& words) {
  if (words.empty()) fail("lsplit: empty input");
  const std::string& pivot = words.front();
  std::vector<std::string> rest(words.begin() + 1, words.end());
  std::vector<std::string> below;
  std::vector<std::string> above;
  for (const auto& w : rest) (w < pivot ? below : above).push_back(w);
  std::string line = "Splitting: " + show_words(rest) + " into " + show_words(below) +
                     ", " + show_words(above);
  return Container::logger({std::move(line)},
                           Value::pair(words_value(below), words_value(above)));
}

Container rsplit(const std::string& pivot, const Value& halves) {
  std::vector<std::string> below = value_words(halves.first());
  std::vector<std::string> above = value_words(halves.second());
  std::string line =
      "Merging: " + show_words(below) + ", " + pivot + ", and " + show_words(above);
  std::vector<std::string> joined = below;
  joined.push_back(pivot);
  joined.insert(joined.end(), above.begin(), above.end());
  return Container::logger({std::move(line)}, words_value(joined));
}

Container qsort_logged(const std::vector<std::string>& words) {
  const ContainerTag inner = ContainerTag::logger;
  const MonadKind base = base_monad(inner);
  const MonadKind stack = option_over(inner);
  if (words.empty()) return m_pure(stack, words_value({}));
  if (words.front().empty()) return Container::logger({}, Value::none());

  EffectArrow splitter(base, [](const Value& v) { return lsplit(value_words(v)); });
  Container split_out =
      lconvolute(splitter, lift_pro(inner), lift_pro(inner))(m_pure(base, words_value(words)));

  return m_bind(stack, split_out, [&](const Value& halves) {
    EffectArrow recurse(stack, [](const Value& v) { return qsort_logged(value_words(v)); });
    Container sorted_halves = kleisli_star(recurse, recurse)(halves);
    return m_bind(stack, sorted_halves, [&](const Value& pair) {
      std::string pivot = words.front();
      EffectArrow merger(base,
                         [pivot](const Value& v) { return rsplit(pivot, v); });
      return rconvolute(merger, lift_pro(inner), lift_pro(inner))(m_pure(base, pair));
    });
  });
}

}  // namespace monopro
