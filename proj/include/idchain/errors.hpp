// Copyright (c) 2026 The idchain Authors
// Distributed under the Apache License, Version 2.0; see the accompanying
// LICENSE file or https://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace idchain {

enum class ErrorCode {
    // encoding / plumbing
    DecodeError,
    // prf
    DegenerateKey,
    // threshold elgamal
    InvalidThreshold,
    ZeroRandomness,
    ScalarTooLarge,
    NotEnoughShares,
    InvalidShareProof,
    NotInRange,
    // blind signatures
    LengthMismatch,
    InvalidRequestProof,
    // relation proofs
    WitnessInconsistent,
    // identity protocol
    MalformedDocs,
    DocsRejected,
    RegistrationProofInvalid,
    DuplicateIdCredPub,
    PolicyUnsatisfied,
    MaxAccountsReached,
    CertExpired,
    UnknownRegId,
    CaRecordMissing,
    // boards
    InsufficientStake,
    TooFewMembers,
    // simulator
    ScenarioParseError,
    StepFailed,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DecodeError: return "DecodeError";
        case ErrorCode::DegenerateKey: return "DegenerateKey";
        case ErrorCode::InvalidThreshold: return "InvalidThreshold";
        case ErrorCode::ZeroRandomness: return "ZeroRandomness";
        case ErrorCode::ScalarTooLarge: return "ScalarTooLarge";
        case ErrorCode::NotEnoughShares: return "NotEnoughShares";
        case ErrorCode::InvalidShareProof: return "InvalidShareProof";
        case ErrorCode::NotInRange: return "NotInRange";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidRequestProof: return "InvalidRequestProof";
        case ErrorCode::WitnessInconsistent: return "WitnessInconsistent";
        case ErrorCode::MalformedDocs: return "MalformedDocs";
        case ErrorCode::DocsRejected: return "DocsRejected";
        case ErrorCode::RegistrationProofInvalid: return "RegistrationProofInvalid";
        case ErrorCode::DuplicateIdCredPub: return "DuplicateIdCredPub";
        case ErrorCode::PolicyUnsatisfied: return "PolicyUnsatisfied";
        case ErrorCode::MaxAccountsReached: return "MaxAccountsReached";
        case ErrorCode::CertExpired: return "CertExpired";
        case ErrorCode::UnknownRegId: return "UnknownRegId";
        case ErrorCode::CaRecordMissing: return "CaRecordMissing";
        case ErrorCode::InsufficientStake: return "InsufficientStake";
        case ErrorCode::TooFewMembers: return "TooFewMembers";
        case ErrorCode::ScenarioParseError: return "ScenarioParseError";
        case ErrorCode::StepFailed: return "StepFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, int detail = -1)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const { return code_; }
    // Context-dependent integer payload: offending share index, violated
    // clause number, scenario step index.
    int detail() const { return detail_; }

private:
    ErrorCode code_;
    int detail_;
};

}  // namespace idchain
