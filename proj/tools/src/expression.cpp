#include "minlin/cli/expression.hpp"

#include "minlin/duality.hpp"
#include "minlin/error.hpp"
#include "minlin/transform.hpp"

#include <cctype>
#include <vector>

namespace minlin::cli {

namespace {

// head(args...)(args...)
struct Call {
  std::string head;
  std::vector<std::vector<std::string>> groups;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Call parse() {
    Call call;
    call.head = identifier();
    if (!peek('(')) fail("expected '(' after " + call.head);
    while (peek('(')) call.groups.push_back(group());
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return call;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("expression \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<std::string> group() {
    expect('(');
    std::vector<std::string> names;
    if (peek(')')) fail("empty argument list");
    names.push_back(identifier());
    while (peek(',')) {
      ++pos_;
      names.push_back(identifier());
    }
    expect(')');
    return names;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_shape(const Call& call, std::initializer_list<std::size_t> shape) {
  std::vector<std::size_t> expected(shape);
  bool ok = call.groups.size() == expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i) ok = call.groups[i].size() == expected[i];
  if (!ok) {
    std::string form = call.head;
    for (auto k : expected) form += "(" + std::to_string(k) + " args)";
    throw ParseError("arity mismatch for " + call.head + ": expected " + form);
  }
}

const ExtFun& function(const Instance& inst, const std::string& name, const ExtFun& zero) {
  if (const auto* f = inst.find_function(name)) return *f;
  if (name == "zero") return zero;
  throw ParseError("unknown function \"" + name + "\"");
}

const Measure& measure(const Instance& inst, const std::string& name) {
  if (const auto* q = inst.find_measure(name)) return *q;
  throw ParseError("unknown measure \"" + name + "\"");
}

const DeltaSet& delta_set(const Instance& inst, const std::string& name) {
  if (const auto* a = inst.find_delta_set(name)) return *a;
  throw ParseError("unknown delta set \"" + name + "\"");
}

}  // namespace

Value evaluate(const Instance& inst, std::string_view expression) {
  const Call call = Parser(expression).parse();
  const ExtFun zero = ExtFun::constant(inst.space.size(), 0);
  const auto& g = call.groups;
  const auto fn = [&](std::size_t group, std::size_t arg) -> const ExtFun& {
    return function(inst, g[group][arg], zero);
  };

  if (call.head == "conjugate") {
    require_shape(call, {2});
    return Extended(conjugate(fn(0, 0), fn(0, 1)).value);
  }
  if (call.head == "biconjugate") {
    require_shape(call, {1});
    return biconjugate(inst.space, fn(0, 0), inst.function_class);
  }
  if (call.head == "envelope") {
    require_shape(call, {1});
    return minorant_envelope(inst.space, fn(0, 0), inst.function_class);
  }
  if (call.head == "T") {
    require_shape(call, {1, 1});
    return transform_T(inst.space, fn(0, 0), inst.function_class)(measure(inst, g[1][0]));
  }
  if (call.head == "F") {
    require_shape(call, {1, 1});
    return fenchel_transform(inst.space, fn(0, 0), inst.function_class, measure(inst, g[1][0])).value;
  }
  if (call.head == "sigma") {
    require_shape(call, {1, 1});
    return support_function(delta_set(inst, g[0][0]), measure(inst, g[1][0])).value;
  }
  if (call.head == "infconv") {
    require_shape(call, {2, 1});
    return Extended(infconv_eval(fn(0, 0), fn(0, 1), fn(1, 0)).value);
  }
  throw ParseError("unknown operation \"" + call.head +
                   "\" (expected conjugate, biconjugate, envelope, T, F, sigma or infconv)");
}

std::string format_value(const Value& value) {
  if (const auto* e = std::get_if<Extended>(&value)) return e->str();
  return std::get<ExtFun>(value).str();
}

nlohmann::ordered_json value_to_json(const Value& value) {
  if (const auto* e = std::get_if<Extended>(&value)) return e->str();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : std::get<ExtFun>(value).values()) arr.push_back(v.str());
  return arr;
}

}  // namespace minlin::cli
