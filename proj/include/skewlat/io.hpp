#ifndef SKEWLAT_IO_HPP_
#define SKEWLAT_IO_HPP_

#include <string>
#include <string_view>

#include "skewlat/core.hpp"

namespace skewlat {

/// Positioned error for malformed algebra files (1-based line and column).
struct parse_error : std::runtime_error {
  int line;
  int column;
  parse_error(const std::string& msg, int l, int c)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                           ": " + msg),
        line(l),
        column(c) {}
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  std::optional<std::string> name;
  FiniteAlgebra alg;
};

// The "skl1" format is line oriented plain text. A '#' starts a comment that
// runs to the end of the line. Layout, in canonical emission order:
//
//   skl1
//   name <word>          (optional)
//   size <n>
//   meet
//   <n rows of n whitespace-separated indices>
//   join
//   <n rows>
//   imp                  (optional)
//   <n rows>
//   zero <index>         (optional)
//   top <index>          (optional)
//
// Tables are row-major: row x, column y holds op(x, y).
AlgebraFile parse_algebra_file(std::string_view text);

/// Reads and parses a file; throws io_error when it cannot be opened.
AlgebraFile load_algebra_file(const std::string& path);

/// Canonical emission; parsing and re-emitting a canonical file is the
/// identity on bytes.
std::string emit_algebra_file(const AlgebraFile& file);

}  // namespace skewlat

#endif  // SKEWLAT_IO_HPP_
