#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multimult/graded_module.hpp"
#include "multimult/homogeneous.hpp"
#include "multimult/ideal_mult.hpp"

namespace multimult {

/// Generators of an ideal as written in the input; `unit` marks the literal 1.
struct IdealSpec {
  std::vector<HomogeneousElement> generators;
  bool unit = false;

  bool is_monomial() const;
  /// Throws InvalidArgument when some generator is not a monomial.
  MonomialIdeal to_monomial(const RingPtr& ring) const;
  std::string to_string() const;
};

struct ModuleSpec {
  /// nullopt is the whole ring.
  std::optional<IdealSpec> outer;
  IdealSpec inner;
};

/// A parsed input file.
///
///   grading 3
///   var x1 x2 x3 slot 1
///   ideal I = intersect((x1, y1), (x1, x2)) + (x3^2)
///   module outer=1 inner=I
///   system { J = (x, y); I1 = (x, y); N = R/(x) }
///   seed 7
///
/// Ideal expressions combine names, generator lists `( ... )`, `1`, `+`, `*`,
/// `^` and `intersect(...)`; intersections need monomial operands.
struct InputDocument {
  std::size_t grading = 0;
  RingPtr ring;
  std::vector<std::pair<std::string, IdealSpec>> ideals;
  std::optional<ModuleSpec> module;
  std::optional<IdealSystem> system;
  std::uint64_t seed = 1;

  const IdealSpec* find_ideal(const std::string& name) const;
  /// Throws InvalidArgument when the document has no module line.
  GradedModule build_module() const;
};

/// Throws ParseError, UndeclaredName or BadSlot with "line L, column C" in the
/// message; InvalidArgument for well-formed but unusable data.
InputDocument parse_document(std::string_view text);
InputDocument parse_file(const std::string& path);

/// Comma separated homogeneous elements such as "x3, y3 - 2*y1, z3".
std::vector<HomogeneousElement> parse_elements(const RingPtr& ring, std::string_view text);
/// Comma separated integers such as "1,1,1".
MultiDegree parse_multidegree(std::string_view text);

}  // namespace multimult
