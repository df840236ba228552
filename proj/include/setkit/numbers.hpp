#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace setkit {

/// Unbounded exact integer, kept nonnegative by every operation that
/// produces one. No floating point is used anywhere in the library.
using Natural = boost::multiprecision::cpp_int;

/// Exact rational in canonical lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Library-wide error. `semantic` marks negatives that are answers to a
/// well-formed question ("not a cover", "not a sequence code"); `input`
/// marks malformed or out-of-contract input. The CLI maps these onto
/// exit codes 1 and 2.
class Error : public std::runtime_error {
 public:
  enum class Category { input, semantic };

  explicit Error(const std::string& msg, Category cat = Category::input)
      : std::runtime_error(msg), category(cat) {}

  Category category;
};

/// Parses "2", "-7", "3/4" or an exact decimal like "0.25".
Rational parse_rational(const std::string& text);

/// Renders as "p/q", or plain "p" for integers.
std::string fraction_string(const Rational& q);

}  // namespace setkit
