// Copyright 2026 The httn Authors
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

#include "instance_config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdlib>

#include "httn/errors.hpp"
#include "httn/pauli.hpp"
#include "httn/random.hpp"

namespace httn::cli {

namespace {

using numkit::Complex;
using numkit::DenseMatrix;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

int require_int(const YAML::Node& node, const std::string& path) {
  if (!node || !node.IsScalar()) fail(path, "expected an integer");
  try {
    return node.as<int>();
  } catch (const YAML::Exception&) {
    fail(path, "expected an integer");
  }
}

std::uint64_t require_u64(const YAML::Node& node, const std::string& path) {
  if (!node || !node.IsScalar()) fail(path, "expected a non-negative integer");
  try {
    return node.as<std::uint64_t>();
  } catch (const YAML::Exception&) {
    fail(path, "expected a non-negative integer");
  }
}

Complex parse_complex_pair(const std::string& text, const std::string& path) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) fail(path, "expected \"re,im\", got '" + text + "'");
  char* end = nullptr;
  const std::string re_s = text.substr(0, comma);
  const std::string im_s = text.substr(comma + 1);
  const double re = std::strtod(re_s.c_str(), &end);
  if (end == re_s.c_str() || *end != '\0') fail(path, "bad real part '" + re_s + "'");
  const double im = std::strtod(im_s.c_str(), &end);
  if (end == im_s.c_str() || *end != '\0') fail(path, "bad imaginary part '" + im_s + "'");
  return {re, im};
}

DenseMatrix parse_literal_matrix(const YAML::Node& rows, std::size_t dim,
                                 const std::string& path) {
  if (!rows.IsSequence() || rows.size() != dim) {
    fail(path, "expected " + std::to_string(dim) + " rows");
  }
  DenseMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto row = rows[r];
    if (!row.IsSequence() || row.size() != dim) {
      fail(path + "[" + std::to_string(r) + "]",
           "expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = parse_complex_pair(row[c].as<std::string>(""),
                                   path + "[" + std::to_string(r) + "][" +
                                       std::to_string(c) + "]");
    }
  }
  return m;
}

DenseMatrix parse_gate_composition(const YAML::Node& ops, int qubits,
                                   const std::string& path) {
  if (!ops.IsSequence() || ops.size() == 0) fail(path, "expected a list of gates");
  auto u = DenseMatrix::identity(std::size_t{1} << qubits);
  std::size_t index = 0;
  for (const auto& op : ops) {
    const std::string op_path = path + "[" + std::to_string(index++) + "]";
    if (!op.IsMap()) fail(op_path, "expected {gate, site}");
    const std::string name = op["gate"].as<std::string>("");
    const int site = require_int(op["site"], op_path + ".site");
    if (site < 0 || site >= qubits) fail(op_path + ".site", "site out of range");
    DenseMatrix expanded = DenseMatrix::identity(1ULL << site);
    try {
      expanded = numkit::kron(expanded, numkit::gate_by_name(name));
    } catch (const ContractViolation& e) {
      fail(op_path + ".gate", e.what());
    }
    expanded = numkit::kron(
        expanded, DenseMatrix::identity(1ULL << (qubits - site - 1)));
    // Listed order is application order, so later gates multiply on the left.
    u = expanded * u;
  }
  return u;
}

DenseMatrix parse_matrix(const YAML::Node& node, int qubits, const std::string& path) {
  if (!node || !node.IsMap()) {
    fail(path, "expected a matrix node (haar / literal / gates)");
  }
  const std::size_t dim = std::size_t{1} << qubits;
  if (node["haar"]) {
    const auto haar = node["haar"];
    if (!haar["seed"]) fail(path + ".haar.seed", "seed is required");
    numkit::Rng rng(require_u64(haar["seed"], path + ".haar.seed"));
    return numkit::haar_random_unitary(qubits, rng);
  }
  if (node["literal"]) {
    return parse_literal_matrix(node["literal"], dim, path + ".literal");
  }
  if (node["gates"]) {
    return parse_gate_composition(node["gates"], qubits, path + ".gates");
  }
  fail(path, "unknown matrix form; use haar, literal, or gates");
}

DenseMatrix parse_unitary(const YAML::Node& node, int qubits, const std::string& path) {
  auto m = parse_matrix(node, qubits, path);
  const auto gram = m.adjoint() * m;
  const double deviation = gram.max_abs_diff(DenseMatrix::identity(m.dim()));
  if (deviation > 1e-9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", deviation);
    fail(path, std::string("matrix is not unitary (max deviation ") + buf + ")");
  }
  return m;
}

htncore::SubsystemMap parse_leaf(const YAML::Node& node, int n, const std::string& path) {
  if (!node || !node.IsMap()) fail(path, "expected indexed or init_state");
  if (node["indexed"]) {
    const auto body = node["indexed"];
    return htncore::SubsystemMap::indexed(
        parse_unitary(body["u0"], n, path + ".indexed.u0"),
        parse_unitary(body["u1"], n, path + ".indexed.u1"));
  }
  if (node["init_state"]) {
    return htncore::SubsystemMap::init_state(
        parse_unitary(node["init_state"]["u"], n, path + ".init_state.u"));
  }
  fail(path, "unknown leaf variant; use indexed or init_state");
}

htncore::HTNState parse_state(const YAML::Node& node, int k, int n,
                              const std::string& path) {
  if (!node || !node.IsMap()) fail(path, "expected a state section");
  const auto root = parse_unitary(node["root"], k, path + ".root");
  const auto leaves_node = node["leaves"];
  if (!leaves_node || !leaves_node.IsSequence() ||
      leaves_node.size() != static_cast<std::size_t>(k)) {
    fail(path + ".leaves", "expected " + std::to_string(k) + " leaves");
  }
  std::vector<htncore::SubsystemMap> leaves;
  leaves.reserve(static_cast<std::size_t>(k));
  for (std::size_t m = 0; m < leaves_node.size(); ++m) {
    leaves.push_back(parse_leaf(leaves_node[m], n,
                                path + ".leaves[" + std::to_string(m) + "]"));
  }
  return htncore::HTNState(root, std::move(leaves));
}

std::vector<htncore::SubsystemObservable> parse_observables(
    const YAML::Node& node, int k, int n, const std::string& path) {
  std::vector<htncore::SubsystemObservable> obs;
  if (node.IsScalar() && node.as<std::string>("") == "identity") {
    return obs;  // empty means identity everywhere
  }
  if (!node.IsSequence() || node.size() != static_cast<std::size_t>(k)) {
    fail(path, "expected 'identity' or one entry per subsystem");
  }
  obs.reserve(static_cast<std::size_t>(k));
  for (std::size_t m = 0; m < node.size(); ++m) {
    const std::string entry_path = path + "[" + std::to_string(m) + "]";
    const std::string text = node[m].as<std::string>("");
    if (text == "identity") {
      obs.push_back(htncore::SubsystemObservable::identity(n));
      continue;
    }
    if (static_cast<int>(text.size()) != n) {
      fail(entry_path, "Pauli string must have " + std::to_string(n) + " labels");
    }
    try {
      obs.push_back(htncore::SubsystemObservable::from_pauli_string(
          numkit::pauli_string_from_string(text)));
    } catch (const ContractViolation& e) {
      fail(entry_path, e.what());
    }
  }
  return obs;
}

void parse_estimation(const YAML::Node& node, InstanceConfig& cfg,
                      const std::string& path) {
  if (!node) return;
  if (!node.IsMap()) fail(path, "expected a mapping");
  if (node["engine"]) {
    const std::string name = node["engine"].as<std::string>("");
    if (name == "spectral") cfg.estimation.engine = htncore::Engine::Spectral;
    else if (name == "svd") cfg.estimation.engine = htncore::Engine::Svd;
    else if (name == "montecarlo") cfg.estimation.engine = htncore::Engine::MonteCarlo;
    else fail(path + ".engine", "unknown engine '" + name + "'");
    cfg.engine_specified = true;
  }
  if (node["mode"]) {
    const std::string name = node["mode"].as<std::string>("");
    if (name == "exact") cfg.estimation.mode = htncore::Mode::Exact;
    else if (name == "shots") cfg.estimation.mode = htncore::Mode::Shots;
    else fail(path + ".mode", "unknown mode '" + name + "'");
  }
  if (node["split"]) {
    const std::string name = node["split"].as<std::string>("");
    if (name == "stratified") cfg.estimation.split = htncore::Split::Stratified;
    else if (name == "randomized") cfg.estimation.split = htncore::Split::Randomized;
    else fail(path + ".split", "unknown split '" + name + "'");
  }
  if (node["shots"]) cfg.estimation.shots = require_u64(node["shots"], path + ".shots");
  if (node["seed"]) cfg.estimation.seed = require_u64(node["seed"], path + ".seed");
  if (node["construction_shots"]) {
    cfg.estimation.construction_shots_per_setting =
        require_u64(node["construction_shots"], path + ".construction_shots");
  }
  if (node["contraction_shots"]) {
    cfg.estimation.contraction_shots_per_setting =
        require_u64(node["contraction_shots"], path + ".contraction_shots");
  }
}

}  // namespace

InstanceConfig load_instance_config(const std::string& path, bool need_state2) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    throw ConfigError(path + ": cannot open file");
  } catch (const YAML::Exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!root.IsMap()) throw ConfigError(path + ": top level must be a mapping");

  InstanceConfig cfg;
  cfg.k = require_int(root["k"], "k");
  cfg.n = require_int(root["n"], "n");
  if (cfg.k < 1 || cfg.n < 1) throw ConfigError("k and n must be positive");
  if (cfg.k * cfg.n > statesim::kMaxQubits) {
    throw CapacityError("instance spans " + std::to_string(cfg.k * cfg.n) +
                        " qubits, beyond the register cap");
  }

  try {
    const auto s1 = root["state1"] ? root["state1"] : root["state"];
    if (!s1) throw ConfigError("state1: section is required");
    cfg.state1 = parse_state(s1, cfg.k, cfg.n, root["state1"] ? "state1" : "state");
    if (root["state2"]) {
      cfg.state2 = parse_state(root["state2"], cfg.k, cfg.n, "state2");
    } else if (need_state2) {
      throw ConfigError("state2: section is required for this command");
    }
    if (root["observable"]) {
      cfg.observables = parse_observables(root["observable"], cfg.k, cfg.n, "observable");
      cfg.observable_specified = true;
    }
    parse_estimation(root["estimation"], cfg, "estimation");
  } catch (const ContractViolation& e) {
    // Validation failures inside core types surface as config errors here.
    throw ConfigError(path + ": " + e.what());
  }
  return cfg;
}

}  // namespace httn::cli
