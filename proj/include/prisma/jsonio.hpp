#pragma once

#include <string>

#include <json.hpp>

#include "prisma/certificate.hpp"
#include "prisma/facedecomp.hpp"
#include "prisma/grothendieck.hpp"
#include "prisma/treegroup.hpp"

namespace prisma {

using nlohmann::json;

/// Malformed or schema-invalid input; `path` points at the offending node.
struct InputError : std::runtime_error {
    std::string path;
    InputError(std::string p, const std::string& msg)
        : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

// ---- parsing (throws InputError) ----
Int parse_int(const json& j, const std::string& path);
IntVector parse_vector(const json& j, const std::string& path);
IntMatrix parse_matrix(const json& j, std::size_t ncols_hint, const std::string& path);
MonoidExpr parse_expression(const json& j, const std::string& path = "$");
Subspace parse_subspace(const json& j, std::size_t ambient, const std::string& path);
/// {"dim":n, "rays":[..], "lineality":[..]} or {"dim":n, "equations":[..], "inequalities":[..]}
Cone parse_cone(const json& j, const std::string& path = "$");
ParasemifieldSpec parse_spec(const json& j, const std::string& path = "$");
IntVector parse_element(const json& j, std::size_t expected, const std::string& path);
GeneratorTuple parse_tuple(const json& j, const ParasemifieldSpec& spec, const std::string& path);
MonoidPresentation parse_presentation(const json& j, const std::string& path = "$");

// ---- serialization (canonical: sorted keys, ints as numbers when they fit) ----
json to_json(const Int& x);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const SaturatedMonoid& s);
json to_json(const Subspace& s);
json to_json(const Cone& c);
json to_json(const OpenFace& f);
json to_json(const MonoidExpr& e);
json to_json(const CertNode& c);
json to_json(const FaceDecomposition& d);
json to_json(const DecompositionReport& r);

/// Canonical single-line dump used for byte-stable output and cache keys.
std::string canonical_dump(const json& j);

}  // namespace prisma
