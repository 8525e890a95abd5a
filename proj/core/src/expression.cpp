#include "wittmod/expression.hpp"

#include <cctype>
#include <functional>
#include <optional>

#include "wittmod/error.hpp"

namespace wittmod {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }
  // Accepts a word that is not followed by another identifier character.
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) {
      return false;
    }
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }
  mpz_class digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected digits");
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse_error, what + " at position " + std::to_string(pos_) + " in \"" +
                                            std::string(text_) + "\"");
  }
  void finish() {
    if (!at_end()) {
      fail("unexpected trailing input");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename T>
using AtomParser = std::function<std::optional<T>(Cursor&)>;

GaussianRational parse_scalar_sum(Cursor& cur);

// factor: number | i | '(' scalar ')' | atom
template <typename T>
bool parse_factor(Cursor& cur, const AtomParser<T>& atom, GaussianRational& coef, std::optional<T>& value) {
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    const mpz_class num = cur.digits();
    mpz_class den = 1;
    if (cur.accept('/')) {
      den = cur.digits();
      if (den == 0) {
        cur.fail("zero denominator");
      }
    }
    coef *= GaussianRational(make_rational(num, den));
    return true;
  }
  if (c == '(') {
    cur.expect('(');
    coef *= parse_scalar_sum(cur);
    cur.expect(')');
    return true;
  }
  if (cur.accept_word("i")) {
    coef *= GaussianRational::i();
    return true;
  }
  if (atom) {
    if (auto v = atom(cur)) {
      if (value) {
        cur.fail("two basis elements in one term");
      }
      value = std::move(v);
      return true;
    }
  }
  return false;
}

// sum of signed terms; each term is a product of factors with at most one atom.
template <typename T>
T parse_sum(Cursor& cur, const AtomParser<T>& atom, const std::function<T(const GaussianRational&)>& from_scalar) {
  T total{};
  bool first = true;
  while (true) {
    GaussianRational sign(1);
    if (cur.accept('-')) {
      sign = GaussianRational(-1);
    } else if (!cur.accept('+') && !first) {
      break;
    }
    GaussianRational coef = sign;
    std::optional<T> value;
    if (!parse_factor(cur, atom, coef, value)) {
      cur.fail("expected a term");
    }
    while (cur.accept('*')) {
      if (!parse_factor(cur, atom, coef, value)) {
        cur.fail("expected a factor after '*'");
      }
    }
    if (value) {
      total += coef * *value;
    } else {
      total += from_scalar(coef);
    }
    first = false;
  }
  return total;
}

GaussianRational parse_scalar_sum(Cursor& cur) {
  return parse_sum<GaussianRational>(cur, nullptr, [](const GaussianRational& c) { return c; });
}

std::optional<GaussianRational> bracketed_index(Cursor& cur) {
  cur.expect('[');
  GaussianRational idx = parse_scalar_sum(cur);
  cur.expect(']');
  return idx;
}

template <typename T>
std::function<T(const GaussianRational&)> no_scalars(const char* what) {
  return [what](const GaussianRational& c) -> T {
    throw Error(ErrorCode::parse_error, std::string("bare scalar ") + c.to_string() + " in " + what);
  };
}

std::optional<Polynomial> polynomial_atom(Cursor& cur) {
  if (!cur.accept_word("x")) {
    return std::nullopt;
  }
  std::size_t power = 1;
  if (cur.accept('^')) {
    power = cur.digits().get_ui();
  }
  return Polynomial::monomial(power);
}

Polynomial parse_polynomial_sum(Cursor& cur) {
  return parse_sum<Polynomial>(cur, polynomial_atom, [](const GaussianRational& c) { return Polynomial(c); });
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t depth = 0;
  std::string current;
  for (const char c : text) {
    if (c == '(' || c == '[') {
      ++depth;
    } else if ((c == ')' || c == ']') && depth > 0) {
      --depth;
    }
    if (c == sep && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
    ++a;
  }
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
    --b;
  }
  return std::string(s.substr(a, b - a));
}

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
  Cursor cur(text);
  GaussianRational v = parse_scalar_sum(cur);
  cur.finish();
  return v;
}

std::vector<GaussianRational> parse_scalar_list(std::string_view text) {
  std::vector<GaussianRational> out;
  if (trim(text).empty()) {
    return out;
  }
  for (const auto& piece : split(text, ',')) {
    out.push_back(parse_scalar(piece));
  }
  return out;
}

GroupElement parse_group_element(std::string_view text) {
  Cursor cur(text);
  GroupElement e{parse_scalar_sum(cur), Parity::even};
  if (cur.accept_word("odd")) {
    e.parity = Parity::odd;
  } else {
    cur.accept_word("even");
  }
  cur.finish();
  return e;
}

LieElement parse_lie_element(std::string_view text) {
  Cursor cur(text);
  const AtomParser<LieElement> atom = [](Cursor& c) -> std::optional<LieElement> {
    if (c.accept_word("C")) {
      return LieElement::C();
    }
    if (c.peek() == 'L' || c.peek() == 'G') {
      const bool even = c.accept('L');
      if (!even) {
        c.expect('G');
      }
      const GaussianRational idx = *bracketed_index(c);
      return even ? LieElement::L(idx) : LieElement::G(idx);
    }
    return std::nullopt;
  };
  LieElement v = parse_sum<LieElement>(cur, atom, no_scalars<LieElement>("a Lie element"));
  cur.finish();
  return v;
}

Polynomial parse_polynomial(std::string_view text) {
  Cursor cur(text);
  Polynomial p = parse_polynomial_sum(cur);
  cur.finish();
  return p;
}

OmegaElement parse_omega_element(std::string_view text) {
  Cursor cur(text);
  const AtomParser<OmegaElement> atom = [](Cursor& c) -> std::optional<OmegaElement> {
    if (c.accept_word("xi")) {
      if (c.accept('*')) {
        if (c.peek() != '(') {
          c.fail("expected 'xi*(...)'");
        }
        c.expect('(');
        Polynomial q = parse_polynomial_sum(c);
        c.expect(')');
        return OmegaElement::of_xi(std::move(q));
      }
      return OmegaElement::of_xi(GaussianRational(1));
    }
    if (auto p = polynomial_atom(c)) {
      return OmegaElement::of_one(std::move(*p));
    }
    return std::nullopt;
  };
  OmegaElement v = parse_sum<OmegaElement>(
      cur, atom, [](const GaussianRational& c) { return OmegaElement::of_one(Polynomial(c)); });
  cur.finish();
  return v;
}

WeightVector parse_weight_vector(std::string_view text) {
  Cursor cur(text);
  const AtomParser<WeightVector> atom = [](Cursor& c) -> std::optional<WeightVector> {
    if (c.peek() == 'v' || c.peek() == 'w') {
      const bool even = c.accept('v');
      if (!even) {
        c.expect('w');
      }
      const GaussianRational k = *bracketed_index(c);
      return even ? WeightVector::v(k) : WeightVector::w(k);
    }
    return std::nullopt;
  };
  WeightVector v = parse_sum<WeightVector>(cur, atom, no_scalars<WeightVector>("a weight vector"));
  cur.finish();
  return v;
}

GroupPtr parse_group(const std::vector<std::string>& generators, bool force_super) {
  std::vector<GroupElement> elements;
  bool super_mode = force_super;
  for (const auto& g : generators) {
    elements.push_back(parse_group_element(g));
    super_mode = super_mode || elements.back().parity == Parity::odd;
  }
  return IndexGroup::build(std::move(elements), super_mode);
}

ModuleSpec parse_module(std::string_view text) {
  std::string kind;
  std::vector<std::string> group_text{"1"};
  std::optional<std::vector<GaussianRational>> f_values;
  GaussianRational alpha;
  GaussianRational a;
  bool flip = false;
  bool super_flag = false;
  for (const auto& item : split(text, ';')) {
    if (trim(item).empty()) {
      continue;
    }
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::parse_error, "expected key=value, got \"" + trim(item) + "\"");
    }
    const std::string key = trim(std::string_view(item).substr(0, eq));
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    if (key == "kind") {
      kind = value;
    } else if (key == "group") {
      group_text.clear();
      for (const auto& g : split(value, ',')) {
        group_text.push_back(trim(g));
      }
    } else if (key == "f") {
      f_values = parse_scalar_list(value);
    } else if (key == "alpha") {
      alpha = parse_scalar(value);
    } else if (key == "a") {
      a = parse_scalar(value);
    } else if (key == "flip") {
      flip = value == "1" || value == "true";
    } else if (key == "super") {
      super_flag = value == "1" || value == "true";
    } else {
      throw Error(ErrorCode::parse_error, "unknown module key \"" + key + "\"");
    }
  }
  GroupPtr group = parse_group(group_text, super_flag);
  if (kind == "omega") {
    Character f = f_values ? Character(group, *f_values) : Character::trivial(group);
    return make_omega_spec(std::move(f), alpha, flip);
  }
  if (kind == "intermediate") {
    return IntermediateSpec{a, group};
  }
  throw Error(ErrorCode::parse_error, "module kind must be omega or intermediate, got \"" + kind + "\"");
}

}  // namespace wittmod
