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

#include <bit>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "core/errors.hpp"
#include "core/spec_io.hpp"
#include "core/verify.hpp"
#include "qtk/qtk.h"

struct qtk_state {
  qtk::StateVector value;
};

struct qtk_spec {
  qtk::MethodSpec value;
};

namespace {

thread_local std::string g_last_error;

qtk_status fail(qtk_status status, const std::string &message) {
  g_last_error = message;
  return status;
}

// Runs body, translating library exceptions into status codes.
template <class Body>
qtk_status guarded(Body &&body) {
  try {
    g_last_error.clear();
    body();
    return QTK_OK;
  } catch (const qtk::DomainError &e) {
    return fail(QTK_ERR_DOMAIN, e.what());
  } catch (const qtk::ValidationError &e) {
    return fail(QTK_ERR_VALIDATION, e.what());
  } catch (const qtk::InvariantError &e) {
    return fail(QTK_ERR_INVARIANT, e.what());
  } catch (const qtk::PreconditionError &e) {
    return fail(QTK_ERR_PRECONDITION, e.what());
  } catch (const qtk::ParseError &e) {
    return fail(QTK_ERR_PARSE, e.what());
  } catch (const std::bad_alloc &) {
    return fail(QTK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(QTK_ERR_INTERNAL, e.what());
  }
}

char *copy_string(const std::string &text) {
  char *out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void fill_report(const qtk::ResourceReport &r, qtk_report *out) {
  if (out == nullptr) return;
  *out = {r.oracle_calls, r.ancilla_qubits, r.elementary_ops, r.measurements, r.modeled_block_cost};
}

#define QTK_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(QTK_ERR_NULL_ARGUMENT, "argument '" #ptr "' is NULL")

}  // namespace

extern "C" {

const char *qtk_last_error(void) { return g_last_error.c_str(); }

const char *qtk_status_name(qtk_status status) {
  switch (status) {
    case QTK_OK:
      return "ok";
    case QTK_ERR_DOMAIN:
      return "domain error";
    case QTK_ERR_VALIDATION:
      return "validation error";
    case QTK_ERR_INVARIANT:
      return "invariant violation";
    case QTK_ERR_PRECONDITION:
      return "precondition error";
    case QTK_ERR_PARSE:
      return "parse error";
    case QTK_ERR_NULL_ARGUMENT:
      return "null argument";
    case QTK_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char *qtk_version(void) { return "0.1.0"; }

void qtk_string_free(char *text) { delete[] text; }

qtk_status qtk_state_basis(int num_qubits, uint64_t index, qtk_state **out) {
  QTK_REQUIRE(out);
  return guarded([&] { *out = new qtk_state{qtk::new_basis_state(num_qubits, index)}; });
}

qtk_status qtk_state_random(int num_qubits, uint64_t seed, qtk_state **out) {
  QTK_REQUIRE(out);
  return guarded([&] {
    if (num_qubits < 1 || num_qubits > 30) throw qtk::DomainError("num_qubits must be in [1, 30]");
    qtk::Rng rng(seed);
    *out = new qtk_state{qtk::StateVector::random(num_qubits, rng)};
  });
}

qtk_status qtk_state_from_amplitudes(const double *re_im, size_t dim, qtk_state **out) {
  QTK_REQUIRE(re_im);
  QTK_REQUIRE(out);
  return guarded([&] {
    std::vector<qtk::Complex> amps(dim);
    for (size_t i = 0; i < dim; ++i) amps[i] = {re_im[2 * i], re_im[2 * i + 1]};
    *out = new qtk_state{qtk::StateVector(std::move(amps))};
  });
}

void qtk_state_destroy(qtk_state *state) { delete state; }

qtk_status qtk_state_num_qubits(const qtk_state *state, int *out) {
  QTK_REQUIRE(state);
  QTK_REQUIRE(out);
  *out = state->value.num_qubits();
  return QTK_OK;
}

qtk_status qtk_state_dim(const qtk_state *state, size_t *out) {
  QTK_REQUIRE(state);
  QTK_REQUIRE(out);
  *out = state->value.dim();
  return QTK_OK;
}

qtk_status qtk_state_amplitudes(const qtk_state *state, double *re_im, size_t capacity) {
  QTK_REQUIRE(state);
  QTK_REQUIRE(re_im);
  const auto amps = state->value.amplitudes();
  if (capacity < 2 * amps.size())
    return fail(QTK_ERR_DOMAIN, "buffer holds " + std::to_string(capacity) + " doubles, need " +
                                    std::to_string(2 * amps.size()));
  for (size_t i = 0; i < amps.size(); ++i) {
    re_im[2 * i] = amps[i].real();
    re_im[2 * i + 1] = amps[i].imag();
  }
  return QTK_OK;
}

qtk_status qtk_state_fidelity(const qtk_state *a, const qtk_state *b, double *out) {
  QTK_REQUIRE(a);
  QTK_REQUIRE(b);
  QTK_REQUIRE(out);
  return guarded([&] { *out = qtk::fidelity_up_to_global_phase(a->value, b->value); });
}

qtk_status qtk_spec_parse(const char *json, int n_override, qtk_spec **out) {
  QTK_REQUIRE(json);
  QTK_REQUIRE(out);
  return guarded([&] {
    const auto n = n_override > 0 ? std::optional<int>(n_override) : std::nullopt;
    *out = new qtk_spec{qtk::parse_method_spec_text(json, n)};
  });
}

void qtk_spec_destroy(qtk_spec *spec) { delete spec; }

qtk_status qtk_spec_num_qubits(const qtk_spec *spec, int *out) {
  QTK_REQUIRE(spec);
  QTK_REQUIRE(out);
  *out = spec->value.num_qubits;
  return QTK_OK;
}

qtk_status qtk_spec_method(const qtk_spec *spec, char **out) {
  QTK_REQUIRE(spec);
  QTK_REQUIRE(out);
  return guarded([&] { *out = copy_string(qtk::method_name(spec->value)); });
}

qtk_status qtk_spec_apply(const qtk_spec *spec, const qtk_state *input, uint64_t seed, qtk_state **out,
                          qtk_report *report, double *ancilla_fidelity) {
  QTK_REQUIRE(spec);
  QTK_REQUIRE(input);
  QTK_REQUIRE(out);
  return guarded([&] {
    qtk::Rng rng(seed);
    auto run = qtk::run_method(spec->value, input->value, rng);
    fill_report(run.report, report);
    if (ancilla_fidelity != nullptr) *ancilla_fidelity = run.ancilla_fidelity;
    *out = new qtk_state{std::move(run.state)};
  });
}

qtk_status qtk_spec_apply_dense(const qtk_spec *spec, const qtk_state *input, qtk_state **out) {
  QTK_REQUIRE(spec);
  QTK_REQUIRE(input);
  QTK_REQUIRE(out);
  return guarded([&] { *out = new qtk_state{qtk::reference_apply(spec->value, input->value)}; });
}

qtk_status qtk_verify(const qtk_spec *spec, int trials, uint64_t seed, double tolerance, char **json_out, int *pass) {
  QTK_REQUIRE(spec);
  QTK_REQUIRE(json_out);
  return guarded([&] {
    const auto result = qtk::verify_method(spec->value, trials, seed, tolerance);
    if (pass != nullptr) *pass = result.pass ? 1 : 0;
    *json_out = copy_string(qtk::to_json(result).dump());
  });
}

qtk_status qtk_resources(const qtk_spec *spec, uint64_t seed, char **json_out, int *pass) {
  QTK_REQUIRE(spec);
  QTK_REQUIRE(json_out);
  return guarded([&] {
    const auto result = qtk::measure_resources(spec->value, seed);
    auto doc = qtk::to_json(result);
    doc["seed"] = seed;
    if (pass != nullptr) *pass = result.claims.pass ? 1 : 0;
    *json_out = copy_string(doc.dump());
  });
}

qtk_status qtk_rotation_stats(int m, int trials, uint64_t seed, char **json_out, int *verdict) {
  QTK_REQUIRE(json_out);
  return guarded([&] {
    const auto stats = qtk::rotation_stats(m, trials, seed);
    if (verdict != nullptr) *verdict = stats.has_verdict ? (stats.pass ? 1 : 0) : -1;
    *json_out = copy_string(qtk::to_json(stats).dump());
  });
}

qtk_status qtk_decompose(const char *phases_json, int max_qubits, char **json_out, int *decomposable) {
  QTK_REQUIRE(phases_json);
  QTK_REQUIRE(json_out);
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(phases_json);
    } catch (const nlohmann::json::parse_error &e) {
      throw qtk::ParseError(e.what());
    }
    const auto verdict = qtk::is_decomposable(qtk::parse_phase_list(doc), max_qubits);
    if (decomposable != nullptr) *decomposable = verdict.decomposable ? 1 : 0;
    *json_out = copy_string(qtk::to_json(verdict).dump());
  });
}

qtk_status qtk_decompose_pairwise(const char *phases_json, int pairs, uint64_t seed, char **json_out,
                                  int *not_ruled_out) {
  QTK_REQUIRE(phases_json);
  QTK_REQUIRE(json_out);
  return guarded([&] {
    if (pairs < 1) throw qtk::DomainError("need at least one pair");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(phases_json);
    } catch (const nlohmann::json::parse_error &e) {
      throw qtk::ParseError(e.what());
    }
    const auto phases = qtk::parse_phase_list(doc);
    if (phases.size() < 2 || !std::has_single_bit(phases.size()))
      throw qtk::ValidationError("phase count must be 2^n with n >= 1");
    qtk::Rng rng(seed);
    const int n = std::countr_zero(phases.size());
    const auto sample = qtk::random_bit_pairs(n, static_cast<std::size_t>(pairs), rng);
    const bool ok = qtk::pairwise_necessary_check(phases, sample);
    if (not_ruled_out != nullptr) *not_ruled_out = ok ? 1 : 0;
    *json_out = copy_string(
        nlohmann::json{{"mode", "pairwise"}, {"pairs", pairs}, {"seed", seed}, {"not_ruled_out", ok}}.dump());
  });
}

qtk_status qtk_demo(const char *name, int num_qubits, uint64_t seed, double tolerance, char **json_out, int *pass) {
  QTK_REQUIRE(name);
  QTK_REQUIRE(json_out);
  return guarded([&] {
    const auto result = qtk::run_demo(name, num_qubits, seed, tolerance);
    if (pass != nullptr) *pass = result.pass ? 1 : 0;
    *json_out = copy_string(result.document.dump());
  });
}

}  // extern "C"
