#pragma once

// JSON manifests: {"schema_version": "1", "object_kind": "hopf" | "yd" | "braided", "payload": {...}}.

#include <string>
#include <string_view>
#include <variant>

#include "hopf/yd.hpp"

namespace hopf {

enum class ObjectKind { hopf, yd, braided };

std::string to_string(ObjectKind k);

struct Manifest {
    std::string schema_version = "1";
    std::variant<HopfAlgebra, YDModule, BraidedHopf> payload;

    ObjectKind kind() const { return static_cast<ObjectKind>(payload.index()); }
};

/// Throws ParseError (with the JSON path of the offending field) or SchemaVersionMismatch.
Manifest parse_manifest(std::string_view text);
/// Pretty-printed, keys sorted, rationals canonical; byte-identical for equal inputs.
std::string serialize_manifest(const Manifest& m);

Manifest read_manifest(const std::string& path);
void write_manifest(const std::string& path, const Manifest& m);

}  // namespace hopf
