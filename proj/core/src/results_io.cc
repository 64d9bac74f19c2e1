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

#include "muxqec/results_io.h"

#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace muxqec {

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_csv(const std::vector<SweepRow>& rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const SweepRow& r : rows) {
        const Estimate& e = r.estimate;
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.p_loss, e.trials, e.failures,
                           r.logical_errors, r.decoder_failures, e.rate, e.ci_low, e.ci_high, csv_field(r.strategy),
                           r.m, csv_field(r.code), csv_field(r.decoder), r.seed);
    }
    return out;
}

std::string format_json(const std::vector<SweepRow>& rows, std::string_view config_json) {
    nlohmann::ordered_json doc;
    doc["config"] = nlohmann::ordered_json::parse(config_json);
    auto& list = doc["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        const Estimate& e = r.estimate;
        list.push_back({{"p_loss", r.p_loss},
                        {"trials", e.trials},
                        {"failures", e.failures},
                        {"logical_errors", r.logical_errors},
                        {"decoder_failures", r.decoder_failures},
                        {"rate", e.rate},
                        {"ci_low", e.ci_low},
                        {"ci_high", e.ci_high},
                        {"strategy", r.strategy},
                        {"m", r.m},
                        {"code", r.code},
                        {"decoder", r.decoder},
                        {"seed", r.seed},
                        {"photons", r.photons},
                        {"decoder_bugs", r.decoder_bugs},
                        {"z", e.z}});
    }
    return doc.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move results into " + path.string());
    }
}

}  // namespace muxqec
