#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monopro/value.hpp"

namespace monopro {

/// The closed functor roster. All four are functors, applicatives and monads;
/// all four distribute an inner option or logger outward (see sequence_*).
enum class ContainerTag { identity, option, list, logger };

std::string to_string(ContainerTag tag);

/// A structured value: identity wrapper, option, list, or a logger carrying a
/// list of log lines next to its payload. Payloads are Values, so containers
/// nest through the canonical Value encoding (see effect.hpp).
class Container {
public:
  static Container identity(Value v);
  static Container some(Value v);
  static Container none();
  static Container list(std::vector<Value> items);
  static Container logger(std::vector<std::string> log, Value v);

  /// Applicative unit at a tag. Logger: empty log; list: singleton.
  static Container pure(ContainerTag tag, Value v);

  ContainerTag tag() const;

  const Value& value() const;  // identity / logger payload
  bool has_value() const;      // option
  const Value& option_value() const;
  const std::vector<Value>& items() const;
  const std::vector<std::string>& log() const;

  bool operator==(const Container& rhs) const;
  bool operator!=(const Container& rhs) const { return !(*this == rhs); }

  std::string show() const;

private:
  struct IdentityP {
    Value v;
  };
  struct OptionP {
    std::optional<Value> v;
  };
  struct ListP {
    std::vector<Value> items;
  };
  struct LoggerP {
    std::vector<std::string> log;
    Value v;
  };
  using Repr = std::variant<IdentityP, OptionP, ListP, LoggerP>;

  explicit Container(Repr r) : repr_(std::move(r)) {}

  Repr repr_;
};

using ValueFn = std::function<Value(const Value&)>;

Container map_c(const ValueFn& f, const Container& c);

/// (map fst, map snd) of a container of pairs.
std::pair<Container, Container> unzip_c(const Container& c);

/// Applicative multiplication; both arguments must share a tag. List zips
/// positionally and truncates to the shorter argument; logger concatenates
/// logs left then right.
Container zip_c(const Container& a, const Container& b);

/// Monadic bind; k must return a container of the same tag.
Container bind_c(const Container& m, const std::function<Container(const Value&)>& k);

/// Distribute inner option values outward. None payloads collapse the whole
/// container to nullopt (an option-tagged none input distributes to a none
/// payload, as for Maybe).
std::optional<Container> sequence_option(const Container& c);

/// Distribute inner logger-encoded values (pair of log list and payload)
/// outward, concatenating logs in element order.
std::pair<std::vector<std::string>, Container> sequence_logger(const Container& c);

}  // namespace monopro
