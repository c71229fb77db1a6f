#include "logperm/cli/instance.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "logperm/errors.hpp"

namespace logperm::cli {

using nlohmann::json;

namespace {

Complex parse_entry(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw Error(ErrorCode::InvalidArgument, "entry must be a number or an [re, im] pair, got " + v.dump());
}

// Flattens `depth` levels of nesting, each of length n, in row-major order.
void flatten(const json& v, std::size_t depth, std::size_t n, std::vector<Complex>& out) {
  if (depth == 0) {
    out.push_back(parse_entry(v));
    return;
  }
  if (!v.is_array() || v.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "expected an array of length " + std::to_string(n) + ", got " +
                                              (v.is_array() ? std::to_string(v.size()) + " items" : v.dump()));
  }
  for (const auto& item : v) flatten(item, depth - 1, n, out);
}

json nest(std::span<const Complex> entries, std::size_t depth, std::size_t n, std::size_t& pos) {
  if (depth == 0) {
    const Complex z = entries[pos++];
    return json::array({z.real(), z.imag()});
  }
  json arr = json::array();
  for (std::size_t i = 0; i < n; ++i) arr.push_back(nest(entries, depth - 1, n, pos));
  return arr;
}

std::size_t require_size(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::size_t>() == 0) {
    throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

}  // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw Error(ErrorCode::InvalidArgument, "instance must be an object with a string field 'kind'");
  }
  if (!doc.contains("entries")) throw Error(ErrorCode::InvalidArgument, "instance has no 'entries'");
  const auto kind = doc["kind"].get<std::string>();
  std::vector<Complex> entries;
  if (kind == "matrix") {
    const auto n = require_size(doc, "n");
    flatten(doc["entries"], 2, n, entries);
    return ComplexMatrix(n, std::move(entries));
  }
  if (kind == "symmetric") {
    const auto two_n = require_size(doc, "two_n");
    flatten(doc["entries"], 2, two_n, entries);
    return SymmetricComplexMatrix(two_n, std::move(entries));
  }
  if (kind == "tensor") {
    const auto d = require_size(doc, "d");
    const auto n = require_size(doc, "n");
    flatten(doc["entries"], d, n, entries);
    return ComplexTensor(d, n, std::move(entries));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + kind + "'");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, path.string() + ": " + e.what());
  }
  return parse_instance(doc);
}

json instance_to_json(const Instance& instance) {
  json doc;
  std::size_t pos = 0;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ComplexMatrix>) {
          doc["kind"] = "matrix";
          doc["n"] = a.size();
          doc["entries"] = nest(a.entries(), 2, a.size(), pos);
        } else if constexpr (std::is_same_v<T, SymmetricComplexMatrix>) {
          doc["kind"] = "symmetric";
          doc["two_n"] = a.size();
          doc["entries"] = nest(a.entries(), 2, a.size(), pos);
        } else {
          doc["kind"] = "tensor";
          doc["d"] = a.dimension();
          doc["n"] = a.size();
          doc["entries"] = nest(a.entries(), a.dimension(), a.size(), pos);
        }
      },
      instance);
  return doc;
}

std::string instance_digest(const Instance& instance) {
  const std::string text = instance_to_json(instance).dump();
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, "SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(hash[i]);
  return hex.str();
}

std::string_view kind_name(const Instance& instance) {
  switch (instance.index()) {
    case 0: return "matrix";
    case 1: return "symmetric";
    default: return "tensor";
  }
}

}  // namespace logperm::cli
