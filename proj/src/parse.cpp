#include "ordcomb/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace ordcomb {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Consumes `word` if the input continues with it.
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("'" + std::string(word) + "'");
  }

  std::uint64_t natural() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("a natural number below 2^64");
      }
      n = n * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("a natural number");
    return n;
  }

  void finish() {
    if (!at_end()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    throw ParseError(pos_, expected, text_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

BaseOrder base_order(Cursor& in) {
  if (in.accept("fin:")) return BaseOrder::fin(in.natural());
  if (in.accept("omega*")) return BaseOrder::omega_star();
  if (in.accept("omega")) return BaseOrder::omega();
  if (in.accept("lex(")) {
    BaseOrder left = base_order(in);
    in.expect(",");
    BaseOrder right = base_order(in);
    in.expect(")");
    return BaseOrder::lex(std::move(left), std::move(right));
  }
  in.fail("'fin:', 'omega', 'omega*' or 'lex('");
}

Element element(Cursor& in) {
  if (in.accept("(")) {
    Element left = element(in);
    in.expect(",");
    Element right = element(in);
    in.expect(")");
    return Element::pair(std::move(left), std::move(right));
  }
  if (!std::isdigit(static_cast<unsigned char>(in.peek()))) in.fail("an element");
  return Element(in.natural());
}

ThetaTerm theta(Cursor& in) {
  if (in.accept("0")) return ThetaTerm::zero();
  if (in.accept("W")) return ThetaTerm::big_omega();
  if (in.accept("e(")) {
    Element x = element(in);
    in.expect(")");
    return ThetaTerm::eps(std::move(x));
  }
  if (in.accept("p(")) {
    ThetaTerm t = theta(in);
    in.expect(")");
    return ThetaTerm::pow(std::move(t));
  }
  if (in.accept("th(")) {
    ThetaTerm t = theta(in);
    in.expect(")");
    return ThetaTerm::collapse(std::move(t));
  }
  if (in.accept("s(")) {
    std::vector<ThetaTerm> parts;
    while (!in.accept(")")) parts.push_back(theta(in));
    return ThetaTerm::sum(std::move(parts));
  }
  in.fail("'0', 'W', 'e(', 'p(', 's(' or 'th('");
}

OrderAtom order_atom(Cursor& in) {
  if (in.accept("n:")) return {OrderAtom::Kind::Fin, in.natural()};
  if (in.accept("1")) return {OrderAtom::Kind::Fin, 1};
  if (in.accept("w*")) return {OrderAtom::Kind::OmegaStar, 0};
  if (in.accept("w")) return {OrderAtom::Kind::Omega, 0};
  if (in.accept("q")) return {OrderAtom::Kind::Eta, 0};
  in.fail("'1', 'n:', 'w', 'w*' or 'q'");
}

}  // namespace

BaseOrder parse_base_order(std::string_view text) {
  Cursor in(text);
  BaseOrder out = base_order(in);
  in.finish();
  return out;
}

Element parse_element(std::string_view text) {
  Cursor in(text);
  Element out = element(in);
  in.finish();
  return out;
}

OmegaTerm parse_omega_term(std::string_view text) {
  Cursor in(text);
  in.expect("w(");
  OmegaTerm out;
  while (!in.accept(")")) out.exponents.push_back(element(in));
  in.finish();
  return out;
}

ThetaTerm parse_theta_term(std::string_view text) {
  Cursor in(text);
  ThetaTerm out = theta(in);
  in.finish();
  return out;
}

OrderTerm parse_order_term(std::string_view text) {
  Cursor in(text);
  std::vector<OrderAtom> atoms{order_atom(in)};
  while (in.accept("+")) atoms.push_back(order_atom(in));
  in.finish();
  try {
    return OrderTerm(std::move(atoms));
  } catch (const Error&) {
    throw ParseError(0, "a nonempty order", text);
  }
}

}  // namespace ordcomb
