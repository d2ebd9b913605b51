// Copyright 2026 The qcost authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcost {

/// 0-based wire position. Wire 0 is the most significant bit of a basis-state
/// index; this convention is fixed here and used everywhere.
using WireId = std::uint32_t;

/// Absolute entrywise tolerance for all complex comparisons.
inline constexpr double kTolerance = 1e-9;

/// Dense-unitary simulation is allowed up to this many wires.
inline constexpr WireId kUnitaryOracleMaxWires = 10;

/// Permutation simulation of classical circuits is allowed up to this many wires.
inline constexpr WireId kPermutationOracleMaxWires = 16;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleTooLarge : public Error {
 public:
  explicit OracleTooLarge(WireId wires, WireId ceiling)
      : Error("circuit with " + std::to_string(wires) +
              " wires exceeds the simulation ceiling of " +
              std::to_string(ceiling)) {}
};

class NotClassical : public Error {
 public:
  NotClassical() : Error("circuit contains a gate with no classical action") {}
};

class RoleMismatch : public Error {
 public:
  explicit RoleMismatch(const std::string& what) : Error(what) {}
};

class NotCommutable : public Error {
 public:
  NotCommutable() : Error("gates on the move path do not commute") {}
};

class NoPrimaryOutputs : public Error {
 public:
  NoPrimaryOutputs() : Error("every output wire is marked garbage") {}
};

class UnknownKind : public Error {
 public:
  UnknownKind() : Error("unsupported gate kind") {}
};

class UnknownLibrary : public Error {
 public:
  explicit UnknownLibrary(const std::string& name)
      : Error("no built-in template library named '" + name + "'") {}
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& pass)
      : Error("pass '" + pass + "' broke circuit equivalence") {}
};

class UnserializableGate : public Error {
 public:
  UnserializableGate()
      : Error("circuit contains merged gates; write with merged gates enabled") {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class UnsupportedGate : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateWireInGate : public ParseError {
 public:
  using ParseError::ParseError;
};

class UndeclaredVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

class InvalidTemplate : public Error {
 public:
  explicit InvalidTemplate(const std::string& id)
      : Error("template '" + id + "' does not multiply to the identity"),
        id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class NonInjectiveMap : public Error {
 public:
  NonInjectiveMap() : Error("wire map assigns two formal wires to one wire") {}
};

class WireOutOfRange : public Error {
 public:
  WireOutOfRange() : Error("wire index outside the circuit") {}
};

}  // namespace qcost
