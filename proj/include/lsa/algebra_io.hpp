#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lsa/algebra.hpp"

namespace lsa {

/// Parsed contents of an algebra description file.
///
/// The format is line-oriented; `#` starts a comment and blank lines are
/// ignored.  Tokens are separated by whitespace.  Lines:
///
///   kind leibniz|dialgebra
///   basis <name> <0|1>                      one per basis element, in order
///   bracket <a> <b> = <value>               (leibniz)
///   left <a> <b> = <value>                  (dialgebra)
///   right <a> <b> = <value>                 (dialgebra)
///   unit = <value>                          (dialgebra, optional)
///   form <a> <b> = <rational>               (optional, with `kind leibniz`)
///
/// where <value> is either the single token `0` (the zero vector) or a
/// sequence of alternating rational coefficients and basis names.  Products
/// not listed are zero.
struct AlgebraFile {
  bool is_dialgebra = false;
  GradedBasis basis;
  Table bracket{0, 0};      ///< filled when `kind leibniz`
  Table left{0, 0};         ///< filled when `kind dialgebra`
  Table right{0, 0};        ///< filled when `kind dialgebra`
  std::optional<SparseVec> unit;
  std::optional<BilinearForm> form;

  /// View as a Leibniz superalgebra; throws if the file was a dialgebra.
  LeibnizSuperalgebra as_leibniz() const;
  /// View as a dialgebra; throws if the file was a Leibniz algebra.
  SuperDialgebra as_dialgebra() const;
};

/// Parses an algebra description; throws std::invalid_argument with a
/// line number on malformed input.
AlgebraFile parse_algebra(std::istream& in);

/// Parses the file at `path`; throws std::invalid_argument (bad contents)
/// or std::runtime_error (unreadable file).
AlgebraFile load_algebra(const std::string& path);

/// Serializes a Leibniz superalgebra (optionally with an invariant form)
/// in the format accepted by parse_algebra.
std::string serialize(const LeibnizSuperalgebra& l, const BilinearForm* form = nullptr);

/// Serializes a dialgebra in the format accepted by parse_algebra.
std::string serialize(const SuperDialgebra& d);

}  // namespace lsa
