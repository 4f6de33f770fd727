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

#include "sublocal/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sublocal/errors.hpp"

namespace sublocal::io {

namespace {

std::size_t positive(const json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() < 1) {
    throw ParseError(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

cplx entry(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError("complex entries must be [re, im] number pairs");
  }
  const double re = e[0].get<double>();
  const double im = e[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("complex entries must be finite");
  }
  return {re, im};
}

json space_pair(const SubspaceSplit& s) { return json::array({s.dim1(), s.dim2()}); }

SubspaceSplit split_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("a split must be a pair of dimensions");
  }
  return SubspaceSplit(positive(j[0], "subspace dimension"),
                       positive(j[1], "subspace dimension"));
}

json inner_to_json(const KrausChannel& ch) {
  json ks = json::array();
  for (const auto& k : ch.kraus()) ks.push_back(to_json(k));
  return {{"source_dim", ch.source().dim()},
          {"target_dim", ch.target().dim()},
          {"kraus", ks}};
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const cplx& z : m.row(r)) row.push_back(json::array({z.real(), z.imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  std::vector<cplx> data;
  data.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
    for (const auto& e : row) data.push_back(entry(e));
  }
  return ComplexMatrix(rows, cols, std::move(data));
}

std::vector<cplx> vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a vector must be an array");
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(entry(e));
  return v;
}

json to_json(const ChannelShape& shape) {
  return {{"source", space_pair(shape.source)}, {"target", space_pair(shape.target)}};
}

ChannelShape shape_from_json(const json& j) {
  return {split_from_json(field(j, "source")), split_from_json(field(j, "target"))};
}

json channel_to_json(const KrausChannel& ch, Representation rep, const json& meta) {
  json out;
  out["shape"] = to_json(ch.shape());
  if (rep == Representation::Kraus) {
    out["representation"] = "kraus";
    json ks = json::array();
    for (const auto& k : ch.kraus()) ks.push_back(to_json(k));
    out["data"] = std::move(ks);
  } else {
    out["representation"] = "choi";
    out["data"] = to_json(choi_from_kraus(ch).matrix());
  }
  if (!meta.empty()) out["meta"] = meta;
  return out;
}

ChannelFile channel_from_json(const json& j) {
  try {
    const ChannelShape shape = shape_from_json(field(j, "shape"));
    const json& rep = field(j, "representation");
    const json& data = field(j, "data");
    json meta = j.contains("meta") ? j.at("meta") : json::object();
    if (!meta.is_object()) throw ParseError("\"meta\" must be an object");
    if (rep == "kraus") {
      if (!data.is_array() || data.empty()) {
        throw ParseError("Kraus data must be a nonempty array of matrices");
      }
      std::vector<ComplexMatrix> ks;
      for (const auto& m : data) ks.push_back(matrix_from_json(m));
      return {KrausChannel(shape, std::move(ks)), std::move(meta)};
    }
    if (rep == "choi") {
      ChoiMatrix c(Space(shape.source), Space(shape.target), matrix_from_json(data));
      if (!is_hermitian(c.matrix())) throw ParseError("Choi matrix is not Hermitian");
      return {kraus_from_choi(c), std::move(meta)};
    }
    throw ParseError("representation must be \"kraus\" or \"choi\"");
  } catch (const ShapeError& e) {
    throw ParseError(std::string("inconsistent dimensions: ") + e.what());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json to_json(const LspParams& p) {
  json v = json::array();
  json w = json::array();
  for (const auto& k : p.kraus1) v.push_back(to_json(k));
  for (const auto& k : p.kraus2) w.push_back(to_json(k));
  return {{"class", "C1"}, {"V", v}, {"W", w}, {"c1", to_json(p.c1)}, {"c2", to_json(p.c2)}};
}

json to_json(const SwapParams& p) {
  return {{"class", "C2"},
          {"rho1", to_json(p.rho1)},
          {"rho2", to_json(p.rho2)},
          {"C", to_json(p.cmat)},
          {"D", to_json(p.dmat)}};
}

json to_json(const AbsorbParams& p) {
  return {{"rho", to_json(p.rho)}, {"inner", inner_to_json(p.inner)}};
}

json params_to_json(const SLParams& p) {
  if (const auto* l = std::get_if<LspParams>(&p)) return to_json(*l);
  if (const auto* s = std::get_if<SwapParams>(&p)) return to_json(*s);
  if (const auto* a = std::get_if<AbsorbParams>(&p)) return to_json(*a);
  return nullptr;
}

json pair_to_json(const ProductChannelPair& pair, const ChannelShape& shape) {
  return {{"kind", "lifted_pair"},
          {"shape", to_json(shape)},
          {"phi1", channel_to_json(pair.phi1)},
          {"phi2", channel_to_json(pair.phi2)}};
}

std::pair<ProductChannelPair, ChannelShape> pair_from_json(const json& j) {
  try {
    if (field(j, "kind") != "lifted_pair") throw ParseError("not a lifted pair bundle");
    const ChannelShape shape = shape_from_json(field(j, "shape"));
    KrausChannel phi1 = channel_from_json(field(j, "phi1")).channel;
    KrausChannel phi2 = channel_from_json(field(j, "phi2")).channel;
    if (phi1.source().dim() != shape.source.dim1() + 1 ||
        phi1.target().dim() != shape.target.dim1() + 1 ||
        phi2.source().dim() != shape.source.dim2() + 1 ||
        phi2.target().dim() != shape.target.dim2() + 1) {
      throw ParseError("lifted factors do not match the bundle shape");
    }
    return {ProductChannelPair{std::move(phi1), std::move(phi2)}, shape};
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json to_json(const DilationResult& d) {
  return {{"kind", "dilation"},
          {"split", space_pair(d.split)},
          {"dim_a1", d.dim_a1},
          {"dim_a2", d.dim_a2},
          {"a1", to_json(d.a1)},
          {"a2", to_json(d.a2)},
          {"V1", to_json(d.v1)},
          {"V2", to_json(d.v2)},
          {"U", to_json(d.u)},
          {"reproduction_distance", d.reproduction_distance}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace sublocal::io
