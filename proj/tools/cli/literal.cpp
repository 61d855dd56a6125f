#include "literal.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

namespace fourpoint::cli {

namespace {

struct Term {
  double value = 0.0;
  bool imaginary = false;
};

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t begin, std::size_t end)
      : text_(text), pos_(begin), end_(end) {}

  bool at_end() const noexcept { return pos_ >= end_; }
  std::size_t pos() const noexcept { return pos_; }

  void skip_space() noexcept {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) noexcept {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // term := ["-"] [unsigned] ["i"], at least one of unsigned / "i".
  Term term(bool allow_minus) {
    const bool negative = allow_minus && consume('-');
    const std::optional<double> magnitude = unsigned_number();
    const bool imaginary = consume('i');
    if (!magnitude && !imaginary) {
      throw ParseError(pos_, "expected a digit or 'i'");
    }
    const double v = magnitude.value_or(1.0);
    return {negative ? -v : v, imaginary};
  }

 private:
  bool digit() const noexcept {
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::size_t digits() noexcept {
    const std::size_t start = pos_;
    while (digit()) ++pos_;
    return pos_ - start;
  }

  std::optional<double> unsigned_number() {
    const std::size_t start = pos_;
    if (digits() == 0) return std::nullopt;
    if (consume('.')) {
      if (digits() == 0) throw ParseError(pos_, "expected a digit after '.'");
    }
    if (consume('e') || consume('E')) {
      if (!consume('-')) consume('+');
      if (digits() == 0) throw ParseError(pos_, "expected exponent digits");
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw ParseError(start, "number out of range");
    return value;
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t next = text.find(sep, start);
    parts.push_back(text.substr(start, next == std::string_view::npos ? next : next - start));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  return parts;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out;
}

}  // namespace

SpherePoint parse_complex(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError(begin, "expected a complex number");

  const std::string_view body = text.substr(begin, end - begin);
  if (body == "inf") return SpherePoint::infinity();
  if (body == "rho") return kRho;
  if (body == "rho2") return kRho2;
  if (body == "-rho") return -kRho;
  if (body == "-rho2") return -kRho2;

  Scanner scan(text, begin, end);
  const Term first = scan.term(true);
  if (scan.at_end()) {
    return first.imaginary ? Cx{0.0, first.value} : Cx{first.value, 0.0};
  }
  if (first.imaginary) throw ParseError(scan.pos(), "expected end of input");

  scan.skip_space();
  double sign = 1.0;
  if (scan.consume('-')) {
    sign = -1.0;
  } else if (!scan.consume('+')) {
    throw ParseError(scan.pos(), "expected '+' or '-'");
  }
  scan.skip_space();
  const Term second = scan.term(false);
  if (!second.imaginary) throw ParseError(scan.pos(), "expected 'i'");
  if (!scan.at_end()) throw ParseError(scan.pos(), "expected end of input");
  return Cx{first.value, sign * second.value};
}

Cx parse_finite_complex(std::string_view text) {
  const SpherePoint p = parse_complex(text);
  if (p.is_infinite()) throw ParseError(0, "expected a finite complex number, got 'inf'");
  return p.value();
}

std::string format_real(double value, int digits) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  std::string out;
  for (const char* p = buf; *p != '\0'; ++p) {
    if (*p == '+' && p != buf && (p[-1] == 'e' || p[-1] == 'E')) continue;
    out += *p;
  }
  return out;
}

std::string format_complex(Cx value, int digits) {
  if (value.imag() == 0.0) return format_real(value.real(), digits);
  if (value.real() == 0.0) return format_real(value.imag(), digits) + "i";
  const char sign = value.imag() < 0.0 ? '-' : '+';
  return format_real(value.real(), digits) + sign + format_real(std::abs(value.imag()), digits) +
         "i";
}

std::string format_point(const SpherePoint& value, int digits) {
  return value.is_infinite() ? "inf" : format_complex(value.value(), digits);
}

FormOperand parse_form(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected 'kind:params'");
  const std::string_view kind = text.substr(0, colon);
  const auto params = split(text.substr(colon + 1), ',');

  std::vector<SpherePoint> values;
  std::size_t offset = colon + 1;
  for (const auto part : params) {
    try {
      values.push_back(parse_complex(part));
    } catch (const ParseError& e) {
      throw ParseError(offset + e.offset(), "in form parameter: " + e.detail());
    }
    offset += part.size() + 1;
  }

  if (kind == "points") {
    if (values.size() == 3) values.push_back(SpherePoint::infinity());
    if (values.size() != 4) throw ParseError(colon + 1, "points: expects 3 or 4 values");
    return FourPoints(values[0], values[1], values[2], values[3]);
  }

  const auto form_kind = parse_form_kind(kind);
  if (!form_kind) {
    throw ParseError(0, "unknown form kind '" + std::string(kind) +
                            "' (weierstrass, legendre, jacobi, edwards, symmetric, hesse, points)");
  }
  const std::size_t expected = *form_kind == FormKind::Weierstrass ? 2 : 1;
  if (values.size() != expected) {
    throw ParseError(colon + 1, std::string(kind) + ": expects " + std::to_string(expected) +
                                    " parameter(s)");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_infinite()) throw ParseError(colon + 1, "form parameters must be finite");
  }
  auto v = [&](std::size_t i) { return values[i].value(); };

  CurveForm form = Legendre{0.0};
  switch (*form_kind) {
    case FormKind::Weierstrass: form = Weierstrass{v(0), v(1)}; break;
    case FormKind::Legendre: form = Legendre{v(0)}; break;
    case FormKind::Jacobi: form = Jacobi{v(0)}; break;
    case FormKind::Symmetric: form = Symmetric{v(0)}; break;
    case FormKind::Edwards: form = Edwards{v(0)}; break;
    case FormKind::Hesse: form = Hesse{v(0)}; break;
  }
  validate(form);
  return form;
}

std::string format_form(const CurveForm& form, int digits) {
  std::vector<std::string> params;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Weierstrass>) {
          params = {format_complex(f.g2, digits), format_complex(f.g3, digits)};
        } else if constexpr (std::is_same_v<T, Legendre>) {
          params = {format_complex(f.lambda, digits)};
        } else if constexpr (std::is_same_v<T, Jacobi> || std::is_same_v<T, Hesse>) {
          params = {format_complex(f.k, digits)};
        } else {
          params = {format_complex(f.a, digits)};
        }
      },
      form);
  return std::string(to_string(kind_of(form))) + ":" + join(params);
}

}  // namespace fourpoint::cli
