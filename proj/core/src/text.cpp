#include "powercl/text.hpp"

#include <charconv>
#include <stdexcept>

namespace powercl {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Order parse_order(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinite" || text == "oo") {
    return Order::infinite();
  }
  return Order::finite(parse_int(text));
}

std::string format_order(Order o) {
  return o.is_infinite() ? "inf" : std::to_string(o.value());
}

std::vector<Order> parse_orders(std::string_view text) {
  std::vector<Order> out;
  for (auto tok : split(text, ',')) out.push_back(parse_order(tok));
  return out;
}

std::string format_orders(const FactorSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) out += ',';
    out += format_order(spec.order(i));
  }
  return out;
}

Word parse_word(std::string_view text, const SpecPtr& spec) {
  text = trim(text);
  std::vector<Syllable> raw;
  if (text.empty() || text == "1") return Word(spec);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    pos = text.find_first_not_of(" \t", end);
    if (pos == std::string_view::npos) pos = text.size();
    auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      throw std::invalid_argument("bad word token '" + std::string(tok) +
                                  "' (expected factor^exponent)");
    }
    auto f = parse_int(tok.substr(0, caret));
    if (f < 0 || static_cast<std::size_t>(f) >= spec->size()) {
      throw std::invalid_argument("factor index out of range in '" +
                                  std::string(tok) + "'");
    }
    raw.push_back({static_cast<std::uint32_t>(f), parse_int(tok.substr(caret + 1))});
  }
  return normalize(raw, spec);
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.factor);
    out += '^';
    out += std::to_string(s.exponent);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (auto tok : split(text, ',')) out.push_back(parse_int(tok));
  return out;
}

}  // namespace powercl
