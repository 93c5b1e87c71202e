#include "isochron/spec_file.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>

#include "isochron/errors.hpp"

namespace isochron {

namespace {

constexpr std::string_view kSpace = " \t\r";

// Token plus its 1-based column in the original line.
struct Token {
  std::string_view text;
  int column = 1;
};

Token trim(std::string_view s, int column) {
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {{}, column + static_cast<int>(s.size())};
  const auto last = s.find_last_not_of(kSpace);
  return {s.substr(first, last - first + 1), column + static_cast<int>(first)};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

template <class Int>
Int parse_integer(const Token& tok, int line) {
  Int value{};
  const auto* end = tok.text.data() + tok.text.size();
  auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line, tok.column);
  return value;
}

double parse_real(const Token& tok, int line) {
  double value = 0.0;
  const auto* end = tok.text.data() + tok.text.size();
  auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("expected a number, got '" + std::string(tok.text) + "'", line, tok.column);
  return value;
}

struct SideEntry {
  std::optional<int> degree;
  std::optional<std::vector<Rational>> coeffs;
  int coeffs_line = 0;
  int coeffs_column = 0;
  int header_line = 0;
};

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(token) + "'");
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

SystemSpec parse_spec(std::string_view text) {
  std::map<std::string, SideEntry, std::less<>> sides{{"upper", {}}, {"lower", {}}};
  RunOptions options;
  std::map<std::string, bool, std::less<>> seen_options;
  std::string section;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const Token line = trim(raw, 1);
    if (line.text.empty()) continue;

    if (line.text.front() == '[') {
      if (line.text.back() != ']') throw ParseError("unterminated section header", line_no, line.column);
      const Token name = trim(line.text.substr(1, line.text.size() - 2), line.column + 1);
      if (name.text == "upper" || name.text == "lower") {
        auto& entry = sides[std::string(name.text)];
        if (entry.header_line != 0) throw ParseError("duplicate section [" + std::string(name.text) + "]", line_no, name.column);
        entry.header_line = line_no;
      } else if (name.text != "options") {
        throw ParseError("unknown section '" + std::string(name.text) + "'", line_no, name.column);
      }
      section = std::string(name.text);
      continue;
    }

    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, line.column);
    const Token key = trim(line.text.substr(0, eq), line.column);
    const Token value = trim(line.text.substr(eq + 1), line.column + static_cast<int>(eq) + 1);
    if (section.empty()) throw ParseError("key outside of any section", line_no, key.column);
    if (value.text.empty()) throw ParseError("missing value", line_no, value.column);

    if (section == "options") {
      if (seen_options[std::string(key.text)]) throw ParseError("duplicate key '" + std::string(key.text) + "'", line_no, key.column);
      seen_options[std::string(key.text)] = true;
      if (key.text == "order") {
        options.order = parse_integer<int>(value, line_no);
        if (options.order < 1) throw ParseError("order must be >= 1", line_no, value.column);
      } else if (key.text == "rmax") {
        options.r_max = parse_real(value, line_no);
        if (!(options.r_max > 0.0)) throw ParseError("rmax must be positive", line_no, value.column);
      } else if (key.text == "samples") {
        options.samples = parse_integer<int>(value, line_no);
        if (options.samples < 1) throw ParseError("samples must be >= 1", line_no, value.column);
      } else if (key.text == "tol") {
        options.tol = parse_real(value, line_no);
        if (!(options.tol > 0.0)) throw ParseError("tol must be positive", line_no, value.column);
      } else if (key.text == "seed") {
        options.seed = parse_integer<std::uint64_t>(value, line_no);
      } else {
        throw ParseError("unknown option '" + std::string(key.text) + "'", line_no, key.column);
      }
      continue;
    }

    auto& entry = sides[section];
    if (key.text == "degree") {
      if (entry.degree) throw ParseError("duplicate key 'degree'", line_no, key.column);
      entry.degree = parse_integer<int>(value, line_no);
      if (*entry.degree < 2) throw ParseError("degree must be >= 2", line_no, value.column);
    } else if (key.text == "coeffs") {
      if (entry.coeffs) throw ParseError("duplicate key 'coeffs'", line_no, key.column);
      std::vector<Rational> coeffs;
      std::size_t start = 0;
      for (;;) {
        const auto comma = value.text.find(',', start);
        const auto piece = value.text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const Token tok = trim(piece, value.column + static_cast<int>(start));
        try {
          coeffs.push_back(parse_rational(tok.text));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no, tok.column);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      entry.coeffs = std::move(coeffs);
      entry.coeffs_line = line_no;
      entry.coeffs_column = value.column;
    } else {
      throw ParseError("unknown key '" + std::string(key.text) + "'", line_no, key.column);
    }
  }

  auto build = [&](const char* name) {
    const auto& entry = sides.at(name);
    if (entry.header_line == 0) throw ParseError(std::string("missing section [") + name + "]", line_no, 1);
    if (!entry.degree) throw ParseError(std::string("section [") + name + "] lacks 'degree'", entry.header_line, 1);
    if (!entry.coeffs) throw ParseError(std::string("section [") + name + "] lacks 'coeffs'", entry.header_line, 1);
    if (entry.coeffs->size() != static_cast<std::size_t>(*entry.degree) + 1) {
      throw DegreeMismatch(std::string("[") + name + "] degree " + std::to_string(*entry.degree) + " needs " +
                               std::to_string(*entry.degree + 1) + " coefficients, got " +
                               std::to_string(entry.coeffs->size()),
                           entry.coeffs_line, entry.coeffs_column);
    }
    return HomogeneousPoly(*entry.degree, *entry.coeffs);
  };

  SystemSpec spec{PiecewiseSystem(build("upper"), build("lower")), options, {}};
  if (spec.system.upper().is_zero() && spec.system.lower().is_zero()) {
    spec.warnings.emplace_back("EmptySystem: both nonlinearities are zero (linear center)");
  }
  return spec;
}

namespace {

std::string real_to_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void append_side(std::string& out, const char* name, const HomogeneousPoly& p) {
  out += "[";
  out += name;
  out += "]\ndegree = " + std::to_string(p.degree()) + "\ncoeffs = ";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += p.coeffs()[i].get_str();
  }
  out += "\n";
}

}  // namespace

std::string format_spec(const SystemSpec& spec) {
  std::string out;
  append_side(out, "upper", spec.system.upper());
  append_side(out, "lower", spec.system.lower());
  out += "[options]\n";
  out += "order = " + std::to_string(spec.options.order) + "\n";
  if (spec.options.r_max > 0.0) out += "rmax = " + real_to_string(spec.options.r_max) + "\n";
  out += "samples = " + std::to_string(spec.options.samples) + "\n";
  out += "tol = " + real_to_string(spec.options.tol) + "\n";
  out += "seed = " + std::to_string(spec.options.seed) + "\n";
  return out;
}

}  // namespace isochron
