// Copyright 2026 The fockgate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockgate/state_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace fockgate {

// ---------------------------------------------------------------------------
// StateExpression
// ---------------------------------------------------------------------------

StateExpression StateExpression::from_raw_terms(std::vector<RawTerm> raw) {
  if (raw.empty()) throw EmptyExpression("state expression has no terms");

  const FockVector& first = raw.front().ket;
  const int modes = static_cast<int>(first.size());
  int photons = 0;
  for (int occ : first) photons += occ;

  for (const auto& term : raw) {
    if (static_cast<int>(term.ket.size()) != modes)
      throw MixedPhotonNumber(ket_string(first), ket_string(term.ket));
    int total = 0;
    for (int occ : term.ket) {
      if (occ < 0) throw DomainError("negative occupation in " + ket_string(term.ket));
      total += occ;
    }
    if (total != photons) throw MixedPhotonNumber(ket_string(first), ket_string(term.ket));
  }

  // Merge duplicate kets, preserving first-appearance order.
  std::vector<RawTerm> merged;
  std::map<FockVector, std::size_t> slots;
  for (auto& term : raw) {
    auto [it, inserted] = slots.emplace(term.ket, merged.size());
    if (inserted) {
      merged.push_back(std::move(term));
      continue;
    }
    RawTerm& target = merged[it->second];
    target.coefficient += term.coefficient;
    if (target.exact && term.exact)
      *target.exact += *term.exact;
    else
      target.exact.reset();
  }

  std::erase_if(merged, [](const RawTerm& term) {
    return term.exact ? term.exact->is_zero() : std::abs(term.coefficient) < 1e-15;
  });
  if (merged.empty()) throw EmptyExpression("state expression sums to the zero vector");

  double norm2 = 0.0;
  for (const auto& term : merged) norm2 += std::norm(term.coefficient);
  const double norm = std::sqrt(norm2);

  StateExpression state;
  state.modes_ = modes;
  state.photons_ = photons;
  state.norm_warning_ = std::abs(norm - 1.0) > 1e-9;

  bool exact = true;
  SqrtSum exact_norm2;
  for (const auto& term : merged) {
    if (!term.exact) {
      exact = false;
      break;
    }
    exact_norm2 += term.exact->norm2();
  }
  if (exact && exact_norm2.is_rational() && !exact_norm2.is_zero())
    state.exact_norm2_ = exact_norm2.rational();

  state.terms_.reserve(merged.size());
  for (auto& term : merged) {
    ExpressionTerm out;
    out.ket = std::move(term.ket);
    out.amplitude = term.coefficient / norm;
    if (state.exact_norm2_) out.exact = std::move(term.exact);
    state.terms_.push_back(std::move(out));
  }
  return state;
}

StateExpression StateExpression::from_exact_terms(
    std::vector<std::pair<FockVector, ExactComplex>> terms) {
  std::vector<RawTerm> raw;
  raw.reserve(terms.size());
  for (auto& [ket, coeff] : terms)
    raw.push_back({std::move(ket), coeff.to_complex(), std::move(coeff)});
  return from_raw_terms(std::move(raw));
}

StateExpression StateExpression::single_ket(FockVector ket) {
  std::vector<std::pair<FockVector, ExactComplex>> terms;
  terms.emplace_back(std::move(ket), ExactComplex(Rational(1)));
  return from_exact_terms(std::move(terms));
}

std::vector<WeightedKet> StateExpression::weighted_kets() const {
  std::vector<WeightedKet> kets;
  kets.reserve(terms_.size());
  for (const auto& term : terms_) kets.push_back({term.ket, term.amplitude});
  return kets;
}

PureState StateExpression::to_pure_state(std::int64_t cap) const {
  auto basis = FockBasis::enumerate(modes_, photons_, cap);
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(basis->size());
  for (const auto& term : terms_) amplitudes[basis->index_of(term.ket)] = term.amplitude;
  return PureState::normalized(std::move(basis), std::move(amplitudes));
}

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

namespace {

enum class TokenKind {
  End,
  Pipe,
  Gt,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  LParen,
  RParen,
  Colon,
  Semicolon,
  Int,
  Number,
  Sqrt,
  ImagUnit,
};

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    auto single = [&](TokenKind kind) {
      tokens.push_back({kind, start, std::string(1, c)});
      ++pos;
    };
    switch (c) {
      case '|': single(TokenKind::Pipe); continue;
      case '>': single(TokenKind::Gt); continue;
      case ',': single(TokenKind::Comma); continue;
      case '+': single(TokenKind::Plus); continue;
      case '-': single(TokenKind::Minus); continue;
      case '*': single(TokenKind::Star); continue;
      case '/': single(TokenKind::Slash); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      case ':': single(TokenKind::Colon); continue;
      case ';': single(TokenKind::Semicolon); continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      bool decimal = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && text[pos] == '.') {
        decimal = true;
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      }
      if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        std::size_t exp = pos + 1;
        if (exp < text.size() && (text[exp] == '+' || text[exp] == '-')) ++exp;
        if (exp < text.size() && std::isdigit(static_cast<unsigned char>(text[exp]))) {
          decimal = true;
          pos = exp;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
      }
      tokens.push_back({decimal ? TokenKind::Number : TokenKind::Int, start,
                        std::string(text.substr(start, pos - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string word(text.substr(start, pos - start));
      if (word == "sqrt")
        tokens.push_back({TokenKind::Sqrt, start, word});
      else if (word == "i")
        tokens.push_back({TokenKind::ImagUnit, start, word});
      else
        throw SyntaxError(start, "'sqrt' or 'i'");
      continue;
    }
    throw SyntaxError(start, "a state expression token");
  }
  tokens.push_back({TokenKind::End, text.size(), ""});
  return tokens;
}

// ---------------------------------------------------------------------------
// Scalar coefficients: doubles always, exact ring values while possible
// ---------------------------------------------------------------------------

struct Scalar {
  std::complex<double> value;
  std::optional<ExactComplex> exact;

  static Scalar one() { return {1.0, ExactComplex(Rational(1))}; }
  static Scalar from_rational(const Rational& q) {
    return {std::complex<double>(to_double(q), 0.0), ExactComplex(q)};
  }
  static Scalar imaginary() { return {std::complex<double>(0.0, 1.0), ExactComplex::i()}; }
  static Scalar inexact(std::complex<double> v) { return {v, std::nullopt}; }

  Scalar times(const Scalar& o) const {
    Scalar out{value * o.value, std::nullopt};
    if (exact && o.exact) out.exact = *exact * *o.exact;
    return out;
  }
  Scalar divided(const Scalar& o) const {
    Scalar out{value / o.value, std::nullopt};
    if (exact && o.exact) {
      try {
        out.exact = (*exact * o.exact->conj()).divided_by(o.exact->norm2());
      } catch (const DomainError&) {
        // divisor outside the single-radical ring; fall back to doubles
      }
    }
    return out;
  }
  Scalar plus(const Scalar& o) const {
    Scalar out{value + o.value, std::nullopt};
    if (exact && o.exact) out.exact = *exact + *o.exact;
    return out;
  }
  Scalar negated() const {
    Scalar out{-value, std::nullopt};
    if (exact) out.exact = -*exact;
    return out;
  }
};

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  StateExpression parse_state() {
    if (peek().kind == TokenKind::End) throw EmptyExpression("empty state expression");
    std::vector<StateExpression::RawTerm> terms;
    if (peek().kind == TokenKind::LParen && paren_contains_pipe()) {
      advance();
      parse_sum(terms);
      expect(TokenKind::RParen, "')'");
    } else {
      parse_sum(terms);
    }
    while (peek().kind == TokenKind::Slash) {
      advance();
      const Scalar divisor = parse_trailing_divisor();
      for (auto& term : terms) {
        const Scalar scaled = Scalar{term.coefficient, term.exact}.divided(divisor);
        term.coefficient = scaled.value;
        term.exact = scaled.exact;
      }
    }
    expect(TokenKind::End, "'+', '-', '/' or end of input");
    return StateExpression::from_raw_terms(std::move(terms));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t index = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[index];
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  const Token& expect(TokenKind kind, const std::string& description) {
    if (peek().kind != kind) throw SyntaxError(peek().offset, description);
    return advance();
  }

  bool paren_contains_pipe() const {
    int depth = 0;
    for (std::size_t k = pos_; k < tokens_.size(); ++k) {
      if (tokens_[k].kind == TokenKind::LParen) ++depth;
      if (tokens_[k].kind == TokenKind::RParen && --depth == 0) return false;
      if (tokens_[k].kind == TokenKind::Pipe && depth == 1) return true;
    }
    return false;
  }

  static bool starts_coefficient(TokenKind kind) {
    return kind == TokenKind::Int || kind == TokenKind::Number || kind == TokenKind::Sqrt ||
           kind == TokenKind::ImagUnit || kind == TokenKind::LParen || kind == TokenKind::Minus;
  }

  void parse_sum(std::vector<StateExpression::RawTerm>& terms) {
    double sign = 1.0;
    if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus)
      sign = (advance().kind == TokenKind::Minus) ? -1.0 : 1.0;
    while (true) {
      terms.push_back(parse_term(sign));
      if (peek().kind != TokenKind::Plus && peek().kind != TokenKind::Minus) break;
      sign = (advance().kind == TokenKind::Minus) ? -1.0 : 1.0;
    }
  }

  StateExpression::RawTerm parse_term(double sign) {
    Scalar coefficient = Scalar::one();
    if (starts_coefficient(peek().kind) && peek().kind != TokenKind::Pipe) {
      coefficient = parse_coefficient();
      if (peek().kind == TokenKind::Star) advance();
    }
    if (peek().kind != TokenKind::Pipe) throw SyntaxError(peek().offset, "'|'");
    FockVector ket = parse_ket();
    if (sign < 0) coefficient = coefficient.negated();
    return {std::move(ket), coefficient.value, coefficient.exact};
  }

  Scalar parse_coefficient() {
    bool negate = false;
    while (peek().kind == TokenKind::Minus) {
      advance();
      negate = !negate;
    }
    Scalar value = parse_factor();
    while (true) {
      const TokenKind kind = peek().kind;
      if (kind == TokenKind::Star) {
        advance();
        value = value.times(parse_factor());
      } else if (kind == TokenKind::Slash) {
        advance();
        value = value.divided(parse_factor());
      } else if (kind == TokenKind::Sqrt || kind == TokenKind::ImagUnit ||
                 (kind == TokenKind::LParen && !paren_contains_pipe())) {
        value = value.times(parse_factor());
      } else {
        break;
      }
    }
    return negate ? value.negated() : value;
  }

  Scalar parse_factor() {
    const Token& token = peek();
    switch (token.kind) {
      case TokenKind::Int: {
        advance();
        return Scalar::from_rational(Rational(boost::multiprecision::cpp_int(token.text)));
      }
      case TokenKind::Number: {
        advance();
        return Scalar::inexact(std::strtod(token.text.c_str(), nullptr));
      }
      case TokenKind::Sqrt: {
        advance();
        expect(TokenKind::LParen, "'('");
        const Token& radicand = expect(TokenKind::Int, "an integer radicand");
        expect(TokenKind::RParen, "')'");
        const Rational r(boost::multiprecision::cpp_int(radicand.text));
        try {
          return {std::complex<double>(std::sqrt(to_double(r)), 0.0),
                  ExactComplex(SqrtSum::sqrt_of(r), SqrtSum())};
        } catch (const DomainError&) {
          return Scalar::inexact(std::sqrt(to_double(r)));
        }
      }
      case TokenKind::ImagUnit:
        advance();
        return Scalar::imaginary();
      case TokenKind::LParen: {
        advance();
        Scalar value = parse_coefficient();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
          const bool subtract = advance().kind == TokenKind::Minus;
          Scalar rhs = parse_coefficient();
          value = value.plus(subtract ? rhs.negated() : rhs);
        }
        expect(TokenKind::RParen, "')'");
        return value;
      }
      default:
        throw SyntaxError(token.offset, "a number, 'sqrt(', 'i' or '('");
    }
  }

  Scalar parse_trailing_divisor() {
    const Token& token = peek();
    if (token.kind == TokenKind::Int || token.kind == TokenKind::Sqrt) return parse_factor();
    throw SyntaxError(token.offset, "an integer or 'sqrt(' after the trailing '/'");
  }

  FockVector parse_ket() {
    expect(TokenKind::Pipe, "'|'");
    std::vector<Token> entries;
    bool has_comma = false;
    entries.push_back(expect(TokenKind::Int, "an occupation count"));
    while (true) {
      const TokenKind kind = peek().kind;
      if (kind == TokenKind::Comma) {
        advance();
        has_comma = true;
        entries.push_back(expect(TokenKind::Int, "an occupation count"));
      } else if (kind == TokenKind::Gt) {
        advance();
        break;
      } else {
        throw SyntaxError(peek().offset, "',' or '>'");
      }
    }

    FockVector ket;
    if (!has_comma && entries.size() == 1 && entries.front().text.size() > 1) {
      // Comma-free kets are read digit-per-mode: |1010> means (1,0,1,0).
      for (char digit : entries.front().text) ket.push_back(digit - '0');
      return ket;
    }
    for (const Token& entry : entries) {
      std::int64_t occupation = 0;
      const auto [ptr, ec] =
          std::from_chars(entry.text.data(), entry.text.data() + entry.text.size(), occupation);
      if (ec != std::errc() || occupation > 1'000'000)
        throw SyntaxError(entry.offset, "an occupation within range");
      ket.push_back(static_cast<int>(occupation));
    }
    return ket;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

StateExpression parse_state_expression(std::string_view text) {
  return Parser(text).parse_state();
}

PureState parse_state(std::string_view text, std::int64_t cap) {
  return parse_state_expression(text).to_pure_state(cap);
}

// ---------------------------------------------------------------------------
// Mixtures
// ---------------------------------------------------------------------------

std::vector<std::pair<double, StateExpression>> parse_mixture_components(std::string_view text) {
  std::vector<std::pair<double, StateExpression>> components;
  std::size_t begin = 0;
  double total = 0.0;
  while (begin <= text.size()) {
    std::size_t end = text.find(';', begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view entry = text.substr(begin, end - begin);

    const bool blank = entry.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank && end == text.size()) break;
    if (blank) throw SyntaxError(begin, "a 'probability : state' mixture component");

    const std::size_t colon = entry.find(':');
    if (colon == std::string_view::npos)
      throw SyntaxError(begin, "':' between the probability and the state");

    const std::string prob_text(entry.substr(0, colon));
    double probability = 0.0;
    {
      std::size_t slash = prob_text.find('/');
      try {
        if (slash == std::string::npos) {
          std::size_t used = 0;
          probability = std::stod(prob_text, &used);
          while (used < prob_text.size() &&
                 std::isspace(static_cast<unsigned char>(prob_text[used])))
            ++used;
          if (used != prob_text.size()) throw std::invalid_argument("trailing characters");
        } else {
          probability = std::stod(prob_text.substr(0, slash)) /
                        std::stod(prob_text.substr(slash + 1));
        }
      } catch (const std::exception&) {
        throw SyntaxError(begin, "a probability (number or fraction)");
      }
    }
    if (probability < 0.0) throw ProbabilitySumError("negative probability in mixture");

    try {
      components.emplace_back(probability,
                              parse_state_expression(entry.substr(colon + 1)));
    } catch (SyntaxError& err) {
      throw SyntaxError(begin + colon + 1 + err.offset,
                        err.expected + " [mixture component " +
                            std::to_string(components.size() + 1) + "]");
    }
    total += probability;
    begin = end + 1;
    if (end == text.size()) break;
  }
  if (components.empty()) throw EmptyExpression("mixture has no components");
  for (std::size_t k = 1; k < components.size(); ++k) {
    if (components[k].second.modes() != components[0].second.modes() ||
        components[k].second.photons() != components[0].second.photons())
      throw ShapeMismatch("mixture components have different (m, n)");
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ProbabilitySumError("mixture probabilities sum to " + std::to_string(total));
  return components;
}

DensityMatrix parse_mixture(std::string_view text, std::int64_t cap) {
  const auto components = parse_mixture_components(text);
  std::vector<std::pair<double, PureState>> parts;
  parts.reserve(components.size());
  for (const auto& [p, expr] : components) parts.emplace_back(p, expr.to_pure_state(cap));
  return DensityMatrix::mixture(parts);
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

// Best rational approximation of x (|x| expected O(1)) by continued
// fractions; nullopt when no denominator <= max_den comes within 1e-12.
std::optional<std::pair<std::int64_t, std::int64_t>> detect_rational(double x,
                                                                     std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double sign = x < 0 ? -1.0 : 1.0;
  double rest = std::abs(x);
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p = static_cast<std::int64_t>(std::floor(rest)), q = 1;
  rest -= std::floor(rest);
  for (int iter = 0; iter < 40; ++iter) {
    if (std::abs(sign * static_cast<double>(p) / static_cast<double>(q) - x) < 1e-12)
      return std::make_pair(static_cast<std::int64_t>(sign) * p, q);
    if (rest < 1e-15) break;
    rest = 1.0 / rest;
    const double whole = std::floor(rest);
    if (whole > static_cast<double>(max_den)) break;
    const std::int64_t a = static_cast<std::int64_t>(whole);
    rest -= whole;
    const std::int64_t p_next = a * p + p_prev;
    const std::int64_t q_next = a * q + q_prev;
    if (q_next > max_den) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return std::nullopt;
}

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
};

std::string gaussian_magnitude(const GaussianInt& g) {
  if (g.im == 0) {
    return std::llabs(g.re) == 1 ? "" : std::to_string(std::llabs(g.re));
  }
  if (g.re == 0) {
    return std::llabs(g.im) == 1 ? "i" : std::to_string(std::llabs(g.im)) + "i";
  }
  std::string inner = std::to_string(g.re);
  inner += g.im < 0 ? "-" : "+";
  if (std::llabs(g.im) != 1) inner += std::to_string(std::llabs(g.im));
  inner += "i";
  return "(" + inner + ")";
}

bool gaussian_sign_negative(const GaussianInt& g) {
  if (g.im == 0) return g.re < 0;
  if (g.re == 0) return g.im < 0;
  return false;  // mixed coefficients keep their sign inside the parentheses
}

std::optional<std::string> try_exact_format(const std::vector<WeightedKet>& terms) {
  // Common denominator K with every amplitude * sqrt(K) a Gaussian integer.
  std::int64_t k = 1;
  for (const auto& term : terms) {
    const auto r2 = detect_rational(std::norm(term.amplitude), 1'000'000);
    if (!r2) return std::nullopt;
    const std::int64_t den = r2->second;
    k = std::lcm(k, den);
    if (k > 4'000'000'000'000LL) return std::nullopt;
  }
  const double scale = std::sqrt(static_cast<double>(k));
  std::vector<GaussianInt> coefficients;
  for (const auto& term : terms) {
    const std::complex<double> scaled = term.amplitude * scale;
    const double re = std::round(scaled.real());
    const double im = std::round(scaled.imag());
    if (std::abs(scaled.real() - re) > 1e-9 || std::abs(scaled.imag() - im) > 1e-9)
      return std::nullopt;
    if (std::abs(re) > 1e15 || std::abs(im) > 1e15) return std::nullopt;
    coefficients.push_back(
        {static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)});
  }

  std::string inner;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const bool negative = gaussian_sign_negative(coefficients[t]);
    if (t == 0) {
      if (negative) inner += "-";
    } else {
      inner += negative ? " - " : " + ";
    }
    inner += gaussian_magnitude(coefficients[t]);
    inner += ket_string(terms[t].ket);
  }
  if (k == 1) return inner;

  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(k))));
  if (root * root == k) return "(" + inner + ")/" + std::to_string(root);
  return "(" + inner + ")/sqrt(" + std::to_string(k) + ")";
}

std::string decimal_format(const std::vector<WeightedKet>& terms) {
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const double re = terms[t].amplitude.real();
    const double im = terms[t].amplitude.imag();
    bool negative = false;
    std::string magnitude;
    if (im == 0.0) {
      negative = re < 0;
      magnitude = format_double(std::abs(re));
    } else if (re == 0.0) {
      negative = im < 0;
      magnitude = format_double(std::abs(im)) + "i";
    } else {
      magnitude = "(" + format_double(re) + (im < 0 ? "-" : "+") + format_double(std::abs(im)) +
                  "i)";
    }
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude;
    out += ket_string(terms[t].ket);
  }
  return out;
}

}  // namespace

std::string format_state(const PureState& psi, FormatStyle style) {
  std::vector<WeightedKet> terms = psi.nonzero_terms(1e-12);
  if (terms.empty()) throw EmptyExpression("state has no terms above threshold");

  if (style == FormatStyle::exact_when_detected) {
    // Canonical global phase: first nonzero amplitude real positive.
    const std::complex<double> first = terms.front().amplitude;
    const std::complex<double> phase = std::conj(first) / std::abs(first);
    for (auto& term : terms) term.amplitude *= phase;
    if (auto exact = try_exact_format(terms)) return *exact;
  }
  return decimal_format(terms);
}

}  // namespace fockgate
