// Copyright 2026 The sublocal Authors
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

// JSON serialization of channels, parameter bundles, lifted pairs and
// dilations. Complex entries are [re, im] pairs; numbers are written with
// the shortest decimal form that parses back to the same double.

#include <string>

#include "json.hpp"
#include "sublocal/channel.hpp"
#include "sublocal/classify.hpp"
#include "sublocal/dilation.hpp"
#include "sublocal/secondq.hpp"

namespace sublocal::io {

using json = nlohmann::json;

enum class Representation { Kraus, Choi };

json to_json(const ComplexMatrix& m);
json to_json(const std::vector<cplx>& v);
/// ParseError on ragged rows, non-numeric entries or non-finite values.
ComplexMatrix matrix_from_json(const json& j);
std::vector<cplx> vector_from_json(const json& j);

json to_json(const ChannelShape& shape);
ChannelShape shape_from_json(const json& j);

struct ChannelFile {
  KrausChannel channel;
  json meta = json::object();
};

/// ShapeError if the channel spaces carry no split.
json channel_to_json(const KrausChannel& ch, Representation rep = Representation::Kraus,
                     const json& meta = json::object());
/// Choi data is converted to canonical Kraus form.
ChannelFile channel_from_json(const json& j);

json to_json(const LspParams& p);
json to_json(const SwapParams& p);
json to_json(const AbsorbParams& p);
json params_to_json(const SLParams& p);

json pair_to_json(const ProductChannelPair& pair, const ChannelShape& shape);
/// Returns the pair and the first-quantized shape.
std::pair<ProductChannelPair, ChannelShape> pair_from_json(const json& j);

json to_json(const DilationResult& d);

/// IoError when the file cannot be opened; ParseError on malformed JSON.
json read_file(const std::string& path);
/// Writes j with a trailing newline; IoError on failure.
void write_file(const std::string& path, const json& j);

}  // namespace sublocal::io
