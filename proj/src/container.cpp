#include "monopro/container.hpp"

#include <algorithm>
#include <sstream>

namespace monopro {

std::string to_string(ContainerTag tag) {
  switch (tag) {
    case ContainerTag::identity: return "identity";
    case ContainerTag::option: return "option";
    case ContainerTag::list: return "list";
    case ContainerTag::logger: return "logger";
  }
  return "?";
}

Container Container::identity(Value v) { return Container(Repr(IdentityP{std::move(v)})); }

Container Container::some(Value v) { return Container(Repr(OptionP{std::move(v)})); }

Container Container::none() { return Container(Repr(OptionP{std::nullopt})); }

Container Container::list(std::vector<Value> items) {
  return Container(Repr(ListP{std::move(items)}));
}

Container Container::logger(std::vector<std::string> log, Value v) {
  return Container(Repr(LoggerP{std::move(log), std::move(v)}));
}

Container Container::pure(ContainerTag tag, Value v) {
  switch (tag) {
    case ContainerTag::identity: return identity(std::move(v));
    case ContainerTag::option: return some(std::move(v));
    case ContainerTag::list: return list({std::move(v)});
    case ContainerTag::logger: return logger({}, std::move(v));
  }
  fail("Container::pure: bad tag");
}

ContainerTag Container::tag() const {
  switch (repr_.index()) {
    case 0: return ContainerTag::identity;
    case 1: return ContainerTag::option;
    case 2: return ContainerTag::list;
    default: return ContainerTag::logger;
  }
}

const Value& Container::value() const {
  if (const auto* i = std::get_if<IdentityP>(&repr_)) return i->v;
  if (const auto* l = std::get_if<LoggerP>(&repr_)) return l->v;
  fail("Container: value() on " + to_string(tag()));
}

bool Container::has_value() const {
  if (const auto* o = std::get_if<OptionP>(&repr_)) return o->v.has_value();
  fail("Container: has_value() on " + to_string(tag()));
}

const Value& Container::option_value() const {
  if (const auto* o = std::get_if<OptionP>(&repr_)) {
    if (o->v) return *o->v;
    fail("Container: option_value() on none");
  }
  fail("Container: option_value() on " + to_string(tag()));
}

const std::vector<Value>& Container::items() const {
  if (const auto* l = std::get_if<ListP>(&repr_)) return l->items;
  fail("Container: items() on " + to_string(tag()));
}

const std::vector<std::string>& Container::log() const {
  if (const auto* l = std::get_if<LoggerP>(&repr_)) return l->log;
  fail("Container: log() on " + to_string(tag()));
}

bool Container::operator==(const Container& rhs) const {
  if (tag() != rhs.tag()) return false;
  switch (tag()) {
    case ContainerTag::identity: return value() == rhs.value();
    case ContainerTag::option:
      if (has_value() != rhs.has_value()) return false;
      return !has_value() || option_value() == rhs.option_value();
    case ContainerTag::list: return items() == rhs.items();
    case ContainerTag::logger: return log() == rhs.log() && value() == rhs.value();
  }
  return false;
}

std::string Container::show() const {
  std::ostringstream os;
  switch (tag()) {
    case ContainerTag::identity:
      os << "Identity " << value().show();
      break;
    case ContainerTag::option:
      if (has_value())
        os << "Some " << option_value().show();
      else
        os << "None";
      break;
    case ContainerTag::list: {
      os << '[';
      bool sep = false;
      for (const auto& v : items()) {
        if (sep) os << ',';
        os << v.show();
        sep = true;
      }
      os << ']';
      break;
    }
    case ContainerTag::logger: {
      os << "Logger [";
      bool sep = false;
      for (const auto& line : log()) {
        if (sep) os << ',';
        os << line;
        sep = true;
      }
      os << "] " << value().show();
      break;
    }
  }
  return os.str();
}

Container map_c(const ValueFn& f, const Container& c) {
  switch (c.tag()) {
    case ContainerTag::identity: return Container::identity(f(c.value()));
    case ContainerTag::option:
      return c.has_value() ? Container::some(f(c.option_value())) : Container::none();
    case ContainerTag::list: {
      std::vector<Value> out;
      out.reserve(c.items().size());
      for (const auto& v : c.items()) out.push_back(f(v));
      return Container::list(std::move(out));
    }
    case ContainerTag::logger: return Container::logger(c.log(), f(c.value()));
  }
  fail("map_c: bad tag");
}

std::pair<Container, Container> unzip_c(const Container& c) {
  Container left = map_c([](const Value& v) { return v.first(); }, c);
  Container right = map_c([](const Value& v) { return v.second(); }, c);
  return {std::move(left), std::move(right)};
}

Container zip_c(const Container& a, const Container& b) {
  if (a.tag() != b.tag())
    fail("zip_c: container tags differ (" + to_string(a.tag()) + " vs " + to_string(b.tag()) + ")");
  switch (a.tag()) {
    case ContainerTag::identity:
      return Container::identity(Value::pair(a.value(), b.value()));
    case ContainerTag::option:
      if (a.has_value() && b.has_value())
        return Container::some(Value::pair(a.option_value(), b.option_value()));
      return Container::none();
    case ContainerTag::list: {
      const auto& xs = a.items();
      const auto& ys = b.items();
      const std::size_t n = std::min(xs.size(), ys.size());
      std::vector<Value> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) out.push_back(Value::pair(xs[i], ys[i]));
      return Container::list(std::move(out));
    }
    case ContainerTag::logger: {
      std::vector<std::string> log = a.log();
      log.insert(log.end(), b.log().begin(), b.log().end());
      return Container::logger(std::move(log), Value::pair(a.value(), b.value()));
    }
  }
  fail("zip_c: bad tag");
}

Container bind_c(const Container& m, const std::function<Container(const Value&)>& k) {
  auto checked = [&m](Container c) {
    if (c.tag() != m.tag()) fail("bind_c: continuation changed the container tag");
    return c;
  };
  switch (m.tag()) {
    case ContainerTag::identity: return checked(k(m.value()));
    case ContainerTag::option:
      return m.has_value() ? checked(k(m.option_value())) : Container::none();
    case ContainerTag::list: {
      std::vector<Value> out;
      for (const auto& v : m.items()) {
        Container c = checked(k(v));
        out.insert(out.end(), c.items().begin(), c.items().end());
      }
      return Container::list(std::move(out));
    }
    case ContainerTag::logger: {
      Container c = checked(k(m.value()));
      std::vector<std::string> log = m.log();
      log.insert(log.end(), c.log().begin(), c.log().end());
      return Container::logger(std::move(log), c.value());
    }
  }
  fail("bind_c: bad tag");
}

std::optional<Container> sequence_option(const Container& c) {
  switch (c.tag()) {
    case ContainerTag::identity:
      if (!c.value().is_some()) return std::nullopt;
      return Container::identity(c.value().content());
    case ContainerTag::option:
      if (!c.has_value()) return Container::none();
      if (!c.option_value().is_some()) return std::nullopt;
      return Container::some(c.option_value().content());
    case ContainerTag::list: {
      std::vector<Value> out;
      out.reserve(c.items().size());
      for (const auto& v : c.items()) {
        if (!v.is_some()) return std::nullopt;
        out.push_back(v.content());
      }
      return Container::list(std::move(out));
    }
    case ContainerTag::logger:
      if (!c.value().is_some()) return std::nullopt;
      return Container::logger(c.log(), c.value().content());
  }
  fail("sequence_option: bad tag");
}

namespace {

// Inner logger values travel as pair(list of log lines, payload).
std::pair<std::vector<std::string>, Value> split_logged(const Value& v) {
  std::vector<std::string> log;
  for (const auto& line : v.first().items()) log.push_back(line.as_str());
  return {std::move(log), v.second()};
}

}  // namespace

std::pair<std::vector<std::string>, Container> sequence_logger(const Container& c) {
  switch (c.tag()) {
    case ContainerTag::identity: {
      auto [log, payload] = split_logged(c.value());
      return {std::move(log), Container::identity(payload)};
    }
    case ContainerTag::option: {
      if (!c.has_value()) return {{}, Container::none()};
      auto [log, payload] = split_logged(c.option_value());
      return {std::move(log), Container::some(payload)};
    }
    case ContainerTag::list: {
      std::vector<std::string> log;
      std::vector<Value> out;
      out.reserve(c.items().size());
      for (const auto& v : c.items()) {
        auto [l, payload] = split_logged(v);
        log.insert(log.end(), l.begin(), l.end());
        out.push_back(payload);
      }
      return {std::move(log), Container::list(std::move(out))};
    }
    case ContainerTag::logger: {
      auto [log, payload] = split_logged(c.value());
      return {std::move(log), Container::logger(c.log(), payload)};
    }
  }
  fail("sequence_logger: bad tag");
}

}  // namespace monopro
