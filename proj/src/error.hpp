/*
 *   Copyright 2026 The inqlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INQLAB_ERROR_HPP
#define INQLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace inqlab {

// Every recoverable failure in the library carries one of these codes.
// The C API exposes them one-to-one as negative status values.
enum class Errc {
  SyntaxError,
  UnknownToken,
  SchemaArityMismatch,
  NonStandardSlot,
  NonStandardSubstituent,
  ForeignWorld,
  NotAPartialOrder,
  NotPersistent,
  NotALattice,
  NotCoreSubset,
  NotInCoreClosure,
  MissingAtom,
  MissingTensor,
  XIsTop,
  PhiIsValid,
  NotWellConnected,
  MapRoleMismatch,
  NotFCGW,
  BadInput,
  LimitExceeded,
  Internal,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownToken: return "UnknownToken";
    case Errc::SchemaArityMismatch: return "SchemaArityMismatch";
    case Errc::NonStandardSlot: return "NonStandardSlot";
    case Errc::NonStandardSubstituent: return "NonStandardSubstituent";
    case Errc::ForeignWorld: return "ForeignWorld";
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::NotPersistent: return "NotPersistent";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotCoreSubset: return "NotCoreSubset";
    case Errc::NotInCoreClosure: return "NotInCoreClosure";
    case Errc::MissingAtom: return "MissingAtom";
    case Errc::MissingTensor: return "MissingTensor";
    case Errc::XIsTop: return "XIsTop";
    case Errc::PhiIsValid: return "PhiIsValid";
    case Errc::NotWellConnected: return "NotWellConnected";
    case Errc::MapRoleMismatch: return "MapRoleMismatch";
    case Errc::NotFCGW: return "NotFCGW";
    case Errc::BadInput: return "BadInput";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::Internal: return "Internal";
  }
  return "Internal";
}

class InqError : public std::runtime_error {
 public:
  InqError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw InqError(code, what);
}

}  // namespace inqlab

#endif  // INQLAB_ERROR_HPP
