// campaign-forensics: SHA-256 digests for run-manifest provenance.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

namespace cfx {

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

/// SHA-256 of a file's contents, lowercase hex.  Throws IoError.
std::string sha256_file_hex(const std::string& path);

}  // namespace cfx
