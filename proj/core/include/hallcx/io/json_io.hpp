#pragma once

#include <stdexcept>
#include <string>

#include "hallcx/complexcat/decompose.hpp"

namespace hallcx {

/// Malformed or invalid input file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

/// {"vertices": n, "arrows": [[s, t], ...]} with 1-based vertex labels.
/// Rejects directed cycles.
Quiver parse_quiver(const std::string& text);
Quiver load_quiver(const std::string& path);
std::string quiver_to_json(const Quiver& Q);

/// {"kind": "cyclic"|"window"|"bounded", "m": m, "lo": lo (bounded only),
///  "components": [{"dims": [...], "maps": [matrix per arrow]}, ...],
///  "differentials": [[matrix per vertex], ...]}
/// Matrices are lists of rows. The complex is validated on load.
Cx parse_complex(CxContext& ctx, const std::string& text);
Cx load_complex(CxContext& ctx, const std::string& path);
std::string complex_to_json(const Cx& X);

/// Inverses of to_string for class ids "(1,0)#0" and keys "window(2):T(1,0)#0[0]+S(1,1)#0".
RepClassId parse_class_id(const std::string& text);
CxKey parse_cx_key(const std::string& text);

}  // namespace hallcx
