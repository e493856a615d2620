#pragma once

// Plain-text encodings shared by every file format and the CLI.
//
//   word:    "0^1 1^-2 0^3"   (factor^exponent tokens; "1" or "" is the identity)
//   factors: "3,inf"          (one order per free factor)

#include <string>
#include <string_view>
#include <vector>

#include "powercl/words.hpp"

namespace powercl {

Order parse_order(std::string_view text);
std::string format_order(Order o);

std::vector<Order> parse_orders(std::string_view text);
std::string format_orders(const FactorSpec& spec);

Word parse_word(std::string_view text, const SpecPtr& spec);
std::string format_word(const Word& w);

std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace powercl
