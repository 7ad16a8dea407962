#pragma once

// On-disk formats for matrices and certificates.
//
// Text matrix:   "mod <m> n <n>" then n rows of n integers.
// JSON matrix:   {"m": <m>, "n": <n>, "entries": [row-major]}
// Certificates:  JSON object or the line-oriented text form written by
//                write_certificate_text.  Both carry A, E, W, the exponent,
//                seed, provenance, checks and the residue-field tripotents.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "trinil/engine.hpp"

namespace trinil::cli {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Text };

/// Entries are reduced into [0, m).  `mod_override` replaces (or supplies)
/// the modulus from the document header.
MatZ read_matrix(const std::string& source, std::optional<std::uint64_t> mod_override = std::nullopt);

std::string write_certificate_json(const TrinilCertificate& cert);
std::string write_certificate_text(const TrinilCertificate& cert);
/// Detects the format from the first non-blank character.
TrinilCertificate read_certificate(const std::string& source);

}  // namespace trinil::cli
