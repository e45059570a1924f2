#include "quatspec/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace quatspec::io {

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(const QVector& x) {
  json arr = json::array();
  for (const auto& q : x) arr.push_back(to_json(q));
  return arr;
}

json to_json(const QMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.size(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::ParseError, "quaternion must be a 4-array");
  double c[4];
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_number()) throw Error(Errc::ParseError, "quaternion coordinate is not a number");
    c[k] = j[k].get<double>();
    if (!std::isfinite(c[k])) throw Error(Errc::ParseError, "quaternion coordinate is not finite");
  }
  return {c[0], c[1], c[2], c[3]};
}

QVector qvector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "vector must be a nonempty array");
  QVector x(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) x[k] = quaternion_from_json(j[k]);
  return x;
}

json matrix_file(const QMatrix& a) { return json{{"n", a.size()}, {"entries", to_json(a)}}; }

QMatrix parse_matrix_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw Error(Errc::ParseError, "matrix file needs \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw Error(Errc::ParseError, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != n) throw Error(Errc::ParseError, "entries must have n rows");
  QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw Error(Errc::ParseError, "row " + std::to_string(r) + " must have n entries");
    }
    for (std::size_t c = 0; c < n; ++c) a(r, c) = quaternion_from_json(rows[r][c]);
  }
  return a;
}

std::string serialize_matrix_file(const QMatrix& a) { return dump(matrix_file(a)) + "\n"; }

json model_file(const DiscreteModel& m) {
  json cols = json::array();
  for (const auto& c : m.columns) cols.push_back(to_json(c));
  return json{{"frame", {{"f", to_json(m.measure.frame.f())}, {"phi", to_json(m.measure.frame.phi())}}},
              {"atoms", m.measure.atoms},
              {"weights", m.measure.weights},
              {"g", to_json(m.g)},
              {"columns", cols}};
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s == "-0") s = "-0.0";
  return s;
}

void write(std::ostringstream& os, const json& j, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent >= 0) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        os << json(it.key()).dump() << (indent >= 0 ? ": " : ":");
        write(os, it.value(), indent, depth + 1);
      }
      pad(depth);
      os << '}';
      return;
    }
    case json::value_t::array: {
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat && indent >= 0 ? ", " : ",");
        first = false;
        if (!flat) pad(depth + 1);
        write(os, e, indent, depth + 1);
      }
      if (!flat && !j.empty()) pad(depth);
      os << ']';
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

std::string dump(const json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

Quaternion parse_quaternion_list(std::string_view text) {
  double c[4];
  std::size_t k = 0;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) {
    if (k == 4) throw Error(Errc::ParseError, "expected four comma-separated numbers");
    try {
      std::size_t used = 0;
      c[k] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "not a number: '" + item + "'");
    }
    ++k;
  }
  if (k != 4) throw Error(Errc::ParseError, "expected four comma-separated numbers");
  return {c[0], c[1], c[2], c[3]};
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

}  // namespace quatspec::io
