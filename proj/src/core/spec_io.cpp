// Copyright 2026 The qtk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/spec_io.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace qtk {
namespace {

using nlohmann::json;

const json &require(const json &doc, const char *key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int as_int(const json &value, const char *what) {
  if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return value.get<int>();
}

std::uint64_t as_u64(const json &value, const char *what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return value.get<std::uint64_t>();
}

std::vector<std::uint64_t> as_u64_list(const json &value, const char *what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  out.reserve(value.size());
  for (const auto &v : value) out.push_back(as_u64(v, what));
  return out;
}

std::vector<Complex> as_complex_list(const json &value, const char *what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Complex> out;
  out.reserve(value.size());
  for (const auto &v : value) out.push_back(parse_complex(v));
  return out;
}

ClassicalOracle builtin(const std::string &name, const json &params, int n) {
  auto get = [&](const char *key) -> const json & {
    if (!params.contains(key)) throw ParseError("builtin '" + name + "' needs params." + key);
    return params.at(key);
  };
  if (name == "identity") return ClassicalOracle::identity(n);
  if (name == "parity") return ClassicalOracle::parity(n);
  if (name == "hamming_weight") return ClassicalOracle::hamming_weight(n);
  if (name == "bit_reversal") return ClassicalOracle::bit_reversal(n);
  if (name == "marked_item") return ClassicalOracle::marked_item(n, as_u64(get("t"), "t"));
  if (name == "mod") return ClassicalOracle::mod(n, as_u64(get("k"), "k"));
  if (name == "cyclic_shift") return ClassicalOracle::cyclic_shift(n, as_int(get("c"), "c"));
  if (name == "xor_mask") return ClassicalOracle::xor_mask(n, as_u64(get("mask"), "mask"));
  if (name == "high_bits") return ClassicalOracle::high_bits(n, as_int(get("shift"), "shift"));
  if (name == "bit_of_table")
    return ClassicalOracle::bit_of_table(n, as_u64_list(get("table"), "table"), as_int(get("bit"), "bit"));
  if (name == "constant") {
    const std::uint64_t value = as_u64(get("value"), "value");
    const int width = params.contains("output_bits") ? as_int(params.at("output_bits"), "output_bits")
                                                     : std::max(1, static_cast<int>(std::bit_width(value)));
    return ClassicalOracle::constant(n, width, value);
  }
  throw ParseError("unknown builtin oracle '" + name + "'");
}

BitPhases parse_phase_fn(const json &fn, int n, int precision) {
  const std::string type = require(fn, "type").get<std::string>();
  if (type == "table") {
    const auto values = require(fn, "values");
    if (!values.is_array() || values.size() != (std::size_t{1} << n))
      throw ParseError("phase_fn table needs 2^n real values");
    std::vector<double> p;
    for (const auto &v : values) {
      if (!v.is_number()) throw ParseError("phase_fn values must be numbers");
      p.push_back(v.get<double>());
    }
    return bit_phases_from_real(n, [p](std::uint64_t x) { return p[x]; }, precision);
  }
  if (type == "linear") {
    const double scale = require(fn, "scale").get<double>();
    const double offset = fn.value("offset", 0.0);
    return bit_phases_from_real(
        n, [scale, offset](std::uint64_t x) { return scale * static_cast<double>(x) + offset; }, precision);
  }
  if (type == "ratio") {
    // p(x) = x / denominator, exactly representable in the integer domain.
    const std::uint64_t den = as_u64(require(fn, "denominator"), "denominator");
    if (den == 0) throw ParseError("ratio denominator must be positive");
    return bit_phases_from_real(
        n, [den](std::uint64_t x) { return static_cast<double>(x % den) / static_cast<double>(den); }, precision);
  }
  throw ParseError("unknown phase_fn type '" + type + "'");
}

Block parse_block(const json &value, std::uint64_t k) {
  if (!value.is_array()) throw ParseError("each block must be an array");
  const auto dim = static_cast<Eigen::Index>(k);
  Block b(dim, dim);
  if (value.size() == k * k) {
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) b(i, j) = parse_complex(value[static_cast<std::size_t>(i * dim + j)]);
    return b;
  }
  if (value.size() == k) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto &row = value[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != k) throw ParseError("block rows must have k entries");
      for (Eigen::Index j = 0; j < dim; ++j) b(i, j) = parse_complex(row[static_cast<std::size_t>(j)]);
    }
    return b;
  }
  throw ParseError("a block needs k*k row-major entries or k rows");
}

BlockDiagonalSpec parse_blocks(const json &doc, int n) {
  const std::uint64_t k = as_u64(require(doc, "k"), "k");
  if (k < 1 || k > (std::uint64_t{1} << 12)) throw ParseError("k out of range");
  BlockDiagonalSpec spec{k, parse_oracle(require(doc, "selector"), n), {}};
  const auto &blocks = require(doc, "blocks");
  if (!blocks.is_array()) throw ParseError("blocks must be an array");
  for (const auto &b : blocks) spec.blocks.push_back(parse_block(b, spec.block_size));
  return spec;
}

DiagonalSpec parse_diagonal(const std::string &method, const json &doc, int n, ApproxStrategy *strategy) {
  if (method == "naive") return ExplicitPhases{as_complex_list(require(doc, "phases"), "phases")};
  if (method == "distinct")
    return DistinctPhases{parse_oracle(require(doc, "oracle"), n), as_complex_list(require(doc, "phases"), "phases")};
  if (method == "sign") return SignPattern{parse_oracle(require(doc, "oracle"), n)};
  if (method == "root2m") return RootRotation{parse_oracle(require(doc, "oracle"), n), as_int(require(doc, "m"), "m")};
  if (method == "kthroot") return RootOfUnity{parse_oracle(require(doc, "oracle"), n), as_u64(require(doc, "k"), "k")};
  if (method == "gamma") return GammaAncilla{parse_oracle(require(doc, "oracle"), n), parse_complex(require(doc, "gamma"))};
  if (method == "approx") {
    if (strategy != nullptr && doc.contains("strategy")) {
      const auto name = doc.at("strategy").get<std::string>();
      if (name == "shared-root") {
        *strategy = ApproxStrategy::kSharedRootRegister;
      } else if (name == "per-bit") {
        *strategy = ApproxStrategy::kPhaseTablePerBit;
      } else {
        throw ParseError("unknown approx strategy '" + name + "'");
      }
    }
    if (doc.contains("oracles")) {
      BitPhases out;
      for (const auto &f : doc.at("oracles")) out.bits.push_back(parse_oracle(f, n));
      if (doc.contains("precision") && as_int(doc.at("precision"), "precision") != static_cast<int>(out.bits.size()))
        throw ParseError("precision does not match the number of bit oracles");
      return out;
    }
    const int precision = as_int(require(doc, "precision"), "precision");
    if (precision < 1) throw DomainError("precision must be at least 1");
    return parse_phase_fn(require(doc, "phase_fn"), n, precision);
  }
  throw ParseError("unknown method '" + method + "'");
}

}  // namespace

Complex parse_complex(const json &value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number())
    return {value[0].get<double>(), value[1].get<double>()};
  if (value.is_object() && value.contains("turns") && value.at("turns").is_number())
    return std::polar(1.0, 2.0 * std::numbers::pi * value.at("turns").get<double>());
  throw ParseError("complex value must be a number, an [re, im] pair or {\"turns\": t}");
}

json complex_to_json(Complex value) { return json::array({value.real(), value.imag()}); }

ClassicalOracle parse_oracle(const json &fragment, int default_input_bits) {
  try {
    const std::string type = require(fragment, "type").get<std::string>();
    if (type == "table") {
      return ClassicalOracle::from_table(as_int(require(fragment, "input_bits"), "input_bits"),
                                         as_int(require(fragment, "output_bits"), "output_bits"),
                                         as_u64_list(require(fragment, "values"), "values"));
    }
    if (type != "builtin") throw ParseError("oracle type must be 'table' or 'builtin'");
    const json params = fragment.value("params", json::object());
    const int n = params.contains("input_bits") ? as_int(params.at("input_bits"), "input_bits") : default_input_bits;
    if (n < 1 || n > 24) throw ParseError("builtin oracle input width must be in [1, 24]");
    auto oracle = builtin(require(fragment, "name").get<std::string>(), params, n);
    if (params.contains("output_bits") && fragment.at("name") != "constant")
      oracle = oracle.with_output_bits(as_int(params.at("output_bits"), "output_bits"));
    return oracle;
  } catch (const json::exception &e) {
    throw ParseError(std::string("oracle fragment: ") + e.what());
  }
}

std::vector<Complex> parse_phase_list(const json &doc) {
  try {
    return as_complex_list(require(doc, "phases"), "phases");
  } catch (const json::exception &e) {
    throw ParseError(e.what());
  }
}

MethodSpec parse_method_spec(const json &doc, std::optional<int> n_override) {
  MethodSpec spec;
  try {
    if (!doc.is_object()) throw ParseError("a method spec must be a JSON object");
    if (n_override) {
      spec.num_qubits = *n_override;
    } else {
      spec.num_qubits = as_int(require(doc, "n"), "n");
    }
    if (spec.num_qubits < 1 || spec.num_qubits > 24) throw ParseError("n must be in [1, 24]");
    const int n = spec.num_qubits;
    const std::string method = require(doc, "method").get<std::string>();

    if (method == "decomposed") {
      if (doc.contains("factors")) {
        spec.body = FactorSet{as_complex_list(doc.at("factors"), "factors")};
      } else {
        const auto verdict = is_decomposable(parse_phase_list(doc));
        if (!verdict.decomposable) throw ValidationError("the given phases are not a tensor product of phase gates");
        spec.body = verdict.factors;
      }
    } else if (method == "permutation") {
      spec.body = PermutationSpec{parse_oracle(require(doc, "g"), n), parse_oracle(require(doc, "g_inv"), n)};
    } else if (method == "block") {
      spec.body = parse_blocks(doc, n);
    } else if (method == "grouped") {
      spec.body = GroupedMixSpec{parse_oracle(require(doc, "group_number"), n),
                                 parse_oracle(require(doc, "member_id"), n), parse_oracle(require(doc, "g_inv"), n),
                                 parse_blocks(doc, n)};
    } else if (method == "wdw") {
      const auto &inner = require(doc, "diagonal");
      spec.body = WdwSpec{parse_diagonal(require(inner, "method").get<std::string>(), inner, n, &spec.approx_strategy)};
    } else {
      spec.body = parse_diagonal(method, doc, n, &spec.approx_strategy);
    }
  } catch (const json::exception &e) {
    throw ParseError(e.what());
  }
  validate_method(spec);
  return spec;
}

MethodSpec parse_method_spec_text(const std::string &text, std::optional<int> n_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(e.what());
  }
  return parse_method_spec(doc, n_override);
}

json report_to_json(const ResourceReport &report) {
  json params = json::object();
  for (const auto &[key, value] : report.params) params[key] = value;
  return json{{"method", report.method},
              {"params", params},
              {"oracle_calls", report.oracle_calls},
              {"ancilla_qubits", report.ancilla_qubits},
              {"elementary_ops", report.elementary_ops},
              {"measurements", report.measurements},
              {"modeled_block_cost", report.modeled_block_cost}};
}

}  // namespace qtk
