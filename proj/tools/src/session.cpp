// Copyright 2026 The orekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orekit/cli/session.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string_view>

namespace orekit::cli {

namespace {

using nlohmann::json;

// A JSON value together with its path, for error messages.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const json& value() const { return value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path_, what); }

  void expect_object(std::initializer_list<std::string_view> allowed) const {
    if (!value_.is_object()) fail("expected an object");
    for (const auto& [key, _] : value_.items()) {
      bool known = false;
      for (std::string_view a : allowed) known = known || key == a;
      if (!known) Node(value_[key], path_ + "." + key).fail("unknown key");
    }
  }

  bool has(const std::string& key) const { return value_.is_object() && value_.contains(key); }

  Node at(const std::string& key) const {
    if (!has(key)) fail("missing required key \"" + key + "\"");
    return Node(value_.at(key), path_ + "." + key);
  }

  Node at(std::size_t index) const {
    return Node(value_.at(index), path_ + "[" + std::to_string(index) + "]");
  }

  std::size_t array_size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  std::uint64_t as_uint(std::uint64_t min = 0,
                        std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) const {
    if (!value_.is_number_integer() || (value_.is_number_integer() && !value_.is_number_unsigned() &&
                                        value_.get<std::int64_t>() < 0)) {
      fail("expected a non-negative integer");
    }
    const auto v = value_.get<std::uint64_t>();
    if (v < min || v > max) {
      fail("value " + std::to_string(v) + " outside [" + std::to_string(min) + ", " +
           std::to_string(max) + "]");
    }
    return v;
  }

  std::string as_string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

  std::string kind(std::initializer_list<std::string_view> kinds) const {
    const std::string k = at("kind").as_string();
    for (std::string_view allowed : kinds) {
      if (k == allowed) return k;
    }
    std::string list;
    for (std::string_view allowed : kinds) list += (list.empty() ? "" : ", ") + std::string(allowed);
    at("kind").fail("unknown kind \"" + k + "\"; expected one of " + list);
  }

 private:
  const json& value_;
  std::string path_;
};

// Ring literals may be strings, integers, or nested arrays for matrix rings.
std::string literal_text(const Node& node) {
  const json& v = node.value();
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += literal_text(node.at(i));
    }
    return out + "]";
  }
  node.fail("expected a ring literal (string, integer or array)");
}

Elem element(const Ring& ring, const Node& node) {
  const std::string text = literal_text(node);
  try {
    return ring.parse(text);
  } catch (const ParseError& e) {
    node.fail("cannot parse \"" + text + "\" in " + ring.describe() + ": " + e.what());
  }
}

Matrix matrix(const Ring& ring, const Node& node, std::size_t rows, std::size_t cols) {
  if (node.array_size() != rows) {
    node.fail("expected " + std::to_string(rows) + " rows, got " +
              std::to_string(node.value().size()));
  }
  Matrix m(rows, cols, ring.zero());
  for (std::size_t r = 0; r < rows; ++r) {
    const Node row = node.at(r);
    if (row.array_size() != cols) {
      row.fail("expected " + std::to_string(cols) + " entries, got " +
               std::to_string(row.value().size()));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(ring, row.at(c));
  }
  return m;
}

Column column(const Ring& ring, const Node& node, std::size_t size) {
  if (node.array_size() != size) {
    node.fail("expected " + std::to_string(size) + " entries, got " +
              std::to_string(node.value().size()));
  }
  Column out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = element(ring, node.at(i));
  return out;
}

RingPtr ring_from(const Node& node, unsigned depth = 0) {
  const std::string kind = node.kind({"zmod", "gf", "trunc", "matrix"});
  if (kind == "zmod") {
    node.expect_object({"kind", "modulus"});
    return make_zmod(node.at("modulus").as_uint(2));
  }
  if (kind == "gf") {
    node.expect_object({"kind", "p", "k", "modulus"});
    const std::uint64_t p = node.at("p").as_uint(2);
    const auto k = static_cast<unsigned>(node.at("k").as_uint(1, 62));
    if (node.has("modulus")) return make_gf(p, k, node.at("modulus").as_string());
    return make_gf(p, k);
  }
  if (kind == "trunc") {
    node.expect_object({"kind", "p", "m"});
    const std::uint64_t p = node.at("p").as_uint(2);
    return make_trunc_poly(p, static_cast<unsigned>(node.at("m").as_uint(1, 62)));
  }
  node.expect_object({"kind", "base", "size"});
  if (depth > 0) node.fail("nested matrix rings are not supported");
  RingPtr base = ring_from(node.at("base"), depth + 1);
  return make_matrix_ring(base, static_cast<unsigned>(node.at("size").as_uint(1, 8)));
}

Endomorphism endo_from(const RingPtr& ring, const Node& node, const Guards& guards) {
  const std::string text = node.as_string();
  try {
    return Endomorphism::parse(ring, text, guards);
  } catch (const Error& e) {
    node.fail(e.what());
  }
}

std::vector<Endomorphism> endos_from(const RingPtr& ring, const Node& node, const Guards& guards) {
  std::vector<Endomorphism> out;
  for (std::size_t i = 0; i < node.array_size(); ++i) {
    out.push_back(endo_from(ring, node.at(i), guards));
  }
  if (out.empty()) node.fail("expected at least one endomorphism");
  return out;
}

SigmaSpec sigma_from(const RingPtr& ring, const Node& node, const Guards& guards) {
  const std::string kind = node.kind({"diagonal", "conjugated", "block", "table"});
  if (kind == "diagonal") {
    node.expect_object({"kind", "endos"});
    return diagonal_sigma(endos_from(ring, node.at("endos"), guards));
  }
  if (kind == "conjugated") {
    node.expect_object({"kind", "U", "endos"});
    auto endos = endos_from(ring, node.at("endos"), guards);
    Matrix u = matrix(*ring, node.at("U"), endos.size(), endos.size());
    try {
      return conjugated_sigma(std::move(u), std::move(endos));
    } catch (const ValidationError& e) {
      node.at("U").fail(e.what());
    }
  }
  if (kind == "block") {
    node.expect_object({"kind", "alpha", "beta", "gamma"});
    SigmaSpec alpha = sigma_from(ring, node.at("alpha"), guards);
    SigmaSpec beta = sigma_from(ring, node.at("beta"), guards);
    GammaSpec gamma = ZeroGamma{};
    if (node.has("gamma")) {
      const Node g = node.at("gamma");
      const std::string gk = g.kind({"zero", "inner"});
      if (gk == "zero") {
        g.expect_object({"kind"});
      } else {
        g.expect_object({"kind", "x"});
        gamma = InnerGamma{matrix(*ring, g.at("x"), sigma_size(alpha), sigma_size(beta))};
      }
    }
    return block_sigma(std::move(alpha), std::move(beta), std::move(gamma));
  }
  node.expect_object({"kind", "n", "entries"});
  const auto n = static_cast<std::size_t>(node.at("n").as_uint(1, 64));
  const Node entries = node.at("entries");
  if (!entries.value().is_object()) entries.fail("expected an object keyed by ring literals");
  std::vector<std::optional<Matrix>> images(ring->cardinality());
  for (const auto& [key, value] : entries.value().items()) {
    const Node entry(value, entries.path() + "." + key);
    Elem a{};
    try {
      a = ring->parse(key);
    } catch (const ParseError& e) {
      entry.fail(std::string("bad key: ") + e.what());
    }
    if (images[a.code]) entry.fail("duplicate entry for " + ring->print(a));
    images[a.code] = matrix(*ring, entry, n, n);
  }
  std::vector<Matrix> out;
  for (std::size_t code = 0; code < images.size(); ++code) {
    if (!images[code]) {
      entries.fail("missing entry for " + ring->print(Elem{code}));
    }
    out.push_back(*images[code]);
  }
  return table_sigma(std::move(out));
}

CoordinateMap map_from(const RingPtr& ring, const Node& node) {
  if (node.value().is_string()) {
    const std::string k = node.as_string();
    if (k == "zero") return ZeroMap{};
    if (k == "derivative") return DerivativeMap{};
    node.fail("unknown map \"" + k + "\"; expected zero, derivative or {\"table\": {...}}");
  }
  node.expect_object({"table"});
  const Node table = node.at("table");
  if (!table.value().is_object()) table.fail("expected an object keyed by ring literals");
  // Omitted entries map to zero.
  std::vector<Elem> values(ring->cardinality(), ring->zero());
  std::vector<bool> seen(ring->cardinality(), false);
  for (const auto& [key, value] : table.value().items()) {
    const Node entry(value, table.path() + "." + key);
    Elem a{};
    try {
      a = ring->parse(key);
    } catch (const ParseError& e) {
      entry.fail(std::string("bad key: ") + e.what());
    }
    if (seen[a.code]) entry.fail("duplicate entry for " + ring->print(a));
    seen[a.code] = true;
    values[a.code] = element(*ring, entry);
  }
  return TableMap{std::move(values)};
}

DeltaSpec delta_from(const RingPtr& ring, const Node& node, std::size_t n) {
  const std::string kind = node.kind({"zero", "inner", "coordinate", "transformed"});
  if (kind == "zero") {
    node.expect_object({"kind"});
    return zero_delta();
  }
  if (kind == "inner") {
    node.expect_object({"kind", "point"});
    return inner_delta(column(*ring, node.at("point"), n));
  }
  if (kind == "coordinate") {
    node.expect_object({"kind", "maps"});
    const Node maps = node.at("maps");
    if (maps.array_size() != n) {
      maps.fail("expected " + std::to_string(n) + " maps, got " +
                std::to_string(maps.value().size()));
    }
    std::vector<CoordinateMap> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(map_from(ring, maps.at(i)));
    return coordinate_delta(std::move(out));
  }
  node.expect_object({"kind", "matrix", "base"});
  Matrix v = matrix(*ring, node.at("matrix"), n, n);
  return transformed_delta(std::move(v), delta_from(ring, node.at("base"), n));
}

Guards guards_from(const Node& node) {
  node.expect_object(
      {"max_ring_card", "max_pairs", "max_terms", "max_search", "sample_pairs", "sample_seed"});
  Guards g;
  if (node.has("max_ring_card")) g.max_ring_card = node.at("max_ring_card").as_uint(1);
  if (node.has("max_pairs")) g.max_pairs = node.at("max_pairs").as_uint(1);
  if (node.has("max_terms")) g.max_terms = node.at("max_terms").as_uint(1);
  if (node.has("max_search")) g.max_search = node.at("max_search").as_uint(1);
  if (node.has("sample_pairs")) g.sample_pairs = node.at("sample_pairs").as_uint();
  if (node.has("sample_seed")) g.sample_seed = node.at("sample_seed").as_uint();
  return g;
}

}  // namespace

Session load_session(const json& config) {
  const Node root(config, "$");
  root.expect_object({"ring", "n", "sigma", "delta", "guards", "output"});
  Session session;
  const Guards guards = root.has("guards") ? guards_from(root.at("guards")) : Guards{};
  if (root.has("output")) {
    const Node out = root.at("output");
    const std::string fmt = out.as_string();
    if (fmt == "json") {
      session.output = OutputFormat::Json;
    } else if (fmt == "text") {
      session.output = OutputFormat::Text;
    } else {
      out.fail("expected \"json\" or \"text\"");
    }
  }
  RingPtr ring = ring_from(root.at("ring"));
  const auto n = static_cast<std::size_t>(root.at("n").as_uint(1, 64));
  SigmaSpec sigma = sigma_from(ring, root.at("sigma"), guards);
  if (sigma_size(sigma) != n) {
    root.at("sigma").fail("sigma acts on " + std::to_string(sigma_size(sigma)) +
                          " variables but n = " + std::to_string(n));
  }
  DeltaSpec delta = root.has("delta") ? delta_from(ring, root.at("delta"), n) : zero_delta();
  session.ctx = TwistContext::build(std::move(ring), std::move(sigma), std::move(delta), guards);
  session.report = validate_twist(*session.ctx);
  return session;
}

Session load_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  json config;
  try {
    config = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  return load_session(config);
}

ModulePresentation load_presentation(const ContextPtr& ctx, const json& data,
                                     const std::string& path) {
  const Node node(data, path);
  const Ring& ring = *ctx->ring();
  if (node.has("point")) {
    node.expect_object({"point"});
    return module_from_point(ctx, column(ring, node.at("point"), ctx->n()));
  }
  node.expect_object({"rank", "X"});
  const auto rank = static_cast<std::size_t>(node.at("rank").as_uint(1, 16));
  const Node xs = node.at("X");
  if (xs.array_size() != ctx->n()) {
    xs.fail("expected " + std::to_string(ctx->n()) + " matrices, got " +
            std::to_string(xs.value().size()));
  }
  std::vector<Matrix> x;
  for (std::size_t i = 0; i < ctx->n(); ++i) x.push_back(matrix(ring, xs.at(i), rank, rank));
  return make_presentation(ctx, std::move(x));
}

}  // namespace orekit::cli
