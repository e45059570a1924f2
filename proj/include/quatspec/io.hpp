#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quatspec/model.hpp"
#include "quatspec/spectral.hpp"

namespace quatspec::io {

using json = nlohmann::json;

json to_json(const Quaternion& q);
json to_json(const QVector& x);
json to_json(const QMatrix& a);

/// All parsers throw Error(Errc::ParseError).
Quaternion quaternion_from_json(const json& j);
QVector qvector_from_json(const json& j);

/// {"n": n, "entries": n x n array of [q0, q1, q2, q3]}
json matrix_file(const QMatrix& a);
QMatrix parse_matrix_file(std::string_view text);
std::string serialize_matrix_file(const QMatrix& a);

/// Atoms, weights, g and columns E_k g, plus the frame.
json model_file(const DiscreteModel& m);

/// JSON text with every floating-point number printed as %.17g.
std::string dump(const json& j, int indent = 2);

/// "q0,q1,q2,q3"
Quaternion parse_quaternion_list(std::string_view text);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(std::string_view bytes);
std::string hash_hex(std::string_view bytes);

}  // namespace quatspec::io
