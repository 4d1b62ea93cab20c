/**
 * Copyright 2026 The fdgst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fdgst::csv {

/// Quote a field when it holds a comma, quote, CR or LF (RFC 4180).
std::string field(std::string_view text);

/// Shortest decimal text that parses back to exactly `value`.
std::string number(double value);

std::string row(const std::vector<std::string> &fields);

using Table = std::vector<std::vector<std::string>>;

Table parse(std::string_view text);
Table read(const std::filesystem::path &path);

/// Writes `text` to `path`, throwing kIo on failure.
void write_text(const std::filesystem::path &path, std::string_view text);

}  // namespace fdgst::csv
