// Copyright 2026 The muxqec Authors
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

#ifndef MUXQEC_RESULTS_IO_H
#define MUXQEC_RESULTS_IO_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "muxqec/monte_carlo.h"

namespace muxqec {

inline constexpr std::string_view kCsvHeader =
    "p_loss,trials,failures,logical_errors,decoder_failures,rate,ci_low,ci_high,strategy,m,code,decoder,seed";

/// Header plus one line per row; numbers use shortest round-trip formatting.
std::string format_csv(const std::vector<SweepRow>& rows);

/// {"config": <config_json>, "rows": [...]} with the same fields as the CSV
/// plus photon counts and decoder-bug counters. config_json must be a JSON
/// document.
std::string format_json(const std::vector<SweepRow>& rows, std::string_view config_json);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe a partial file.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace muxqec

#endif  // MUXQEC_RESULTS_IO_H
