#ifndef WITTSTACK_PARSE_HPP
#define WITTSTACK_PARSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wittstack/ratfunc.hpp"

namespace wittstack {

// Recursive-descent parser for rational-function literals over F_p:
// +, -, *, /, ^ with integer (possibly negative) exponents, parentheses and
// implicit multiplication ("2t^-1", "x(x-1)"). `var` names the accepted
// indeterminate ('x' for covers, 't' for local series).
RatFunc parse_ratfunc(const std::string& text, std::uint32_t p, char var);

// Split on commas at parenthesis depth zero, trimming whitespace; one outer
// pair of parentheses around the whole list is allowed.
std::vector<std::string> split_components(const std::string& text);

std::vector<RatFunc> parse_components(const std::string& text, std::uint32_t p, char var);

// Comma-separated list of integers.
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace wittstack

#endif
