// Copyright 2026 The motifmine Authors
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

#include "motifmine/npy.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include "motifmine/error.hpp"

namespace motifmine::npy {

namespace {

constexpr char kMagic[6] = {'\x93', 'N', 'U', 'M', 'P', 'Y'};
constexpr std::size_t kAlign = 64;

void append_le(std::vector<std::uint8_t>& out, const void* src, std::size_t n) {
  const auto* p = static_cast<const std::uint8_t*>(src);
  out.insert(out.end(), p, p + n);
}

std::string shape_literal(const std::vector<std::size_t>& shape) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    os << shape[i];
    if (shape.size() == 1) os << ",";
    else if (i + 1 < shape.size()) os << ", ";
  }
  os << ")";
  return os.str();
}

// Extracts "'key': <value>" from the header dict. Values here are simple
// tokens or parenthesized tuples, never nested dicts.
std::string dict_value(const std::string& header, const std::string& key) {
  const std::string needle = "'" + key + "'";
  auto pos = header.find(needle);
  if (pos == std::string::npos) throw FormatError("npy header missing key " + key);
  pos = header.find(':', pos + needle.size());
  if (pos == std::string::npos) throw FormatError("npy header malformed at " + key);
  ++pos;
  while (pos < header.size() && header[pos] == ' ') ++pos;
  std::size_t end = pos;
  if (header[pos] == '(') {
    end = header.find(')', pos);
    if (end == std::string::npos) throw FormatError("npy header unclosed tuple");
    ++end;
  } else {
    while (end < header.size() && header[end] != ',' && header[end] != '}') ++end;
  }
  return header.substr(pos, end - pos);
}

}  // namespace

std::vector<std::uint8_t> encode(const Array& array) {
  if (array.shape.empty() || array.shape.size() > 3)
    throw ShapeError("npy encoder handles ranks 1 to 3");
  if (array.size() != array.values.size())
    throw ShapeError("npy shape does not match value count");

  std::string dict = "{'descr': '";
  dict += (array.dtype == Dtype::f4) ? "<f4" : "<f8";
  dict += "', 'fortran_order': False, 'shape': ";
  dict += shape_literal(array.shape);
  dict += ", }";

  // magic(6) + version(2) + header_len(2) + dict + padding + '\n',
  // padded with spaces to a multiple of 64 bytes.
  std::size_t preamble = 10 + dict.size() + 1;
  std::size_t padded = ((preamble + kAlign - 1) / kAlign) * kAlign;
  dict.append(padded - preamble, ' ');
  dict += '\n';

  std::vector<std::uint8_t> out;
  out.reserve(padded + array.values.size() * 8);
  append_le(out, kMagic, 6);
  out.push_back(0x01);
  out.push_back(0x00);
  const auto hlen = static_cast<std::uint16_t>(dict.size());
  out.push_back(static_cast<std::uint8_t>(hlen & 0xff));
  out.push_back(static_cast<std::uint8_t>(hlen >> 8));
  append_le(out, dict.data(), dict.size());

  if (array.dtype == Dtype::f4) {
    for (double v : array.values) {
      float f = static_cast<float>(v);
      append_le(out, &f, 4);
    }
  } else {
    for (double v : array.values) append_le(out, &v, 8);
  }
  return out;
}

Array decode(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 10 || std::memcmp(bytes.data(), kMagic, 6) != 0)
    throw FormatError("not an npy file (bad magic)");
  const int major = bytes[6];
  if (major != 1) throw UnsupportedError("unsupported npy version");
  const std::size_t hlen = bytes[8] | (static_cast<std::size_t>(bytes[9]) << 8);
  if (bytes.size() < 10 + hlen) throw FormatError("npy header truncated");
  const std::string header(reinterpret_cast<const char*>(bytes.data() + 10), hlen);

  Array out;
  const std::string descr = dict_value(header, "descr");
  if (descr == "'<f4'") out.dtype = Dtype::f4;
  else if (descr == "'<f8'") out.dtype = Dtype::f8;
  else throw UnsupportedError("npy dtype " + descr + " not supported");

  const std::string order = dict_value(header, "fortran_order");
  if (order != "False") throw UnsupportedError("fortran-order npy not supported");

  std::string shape = dict_value(header, "shape");
  if (shape.size() < 2 || shape.front() != '(' || shape.back() != ')')
    throw FormatError("npy shape literal malformed");
  shape = shape.substr(1, shape.size() - 2);
  std::istringstream ss(shape);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t begin = tok.find_first_not_of(' ');
    if (begin == std::string::npos) continue;
    out.shape.push_back(std::stoull(tok.substr(begin)));
  }
  if (out.shape.empty() || out.shape.size() > 3)
    throw UnsupportedError("npy rank not supported");

  const std::size_t count = out.size();
  const std::size_t width = (out.dtype == Dtype::f4) ? 4 : 8;
  if (bytes.size() != 10 + hlen + count * width)
    throw FormatError("npy data size does not match shape");

  out.values.resize(count);
  const std::uint8_t* p = bytes.data() + 10 + hlen;
  for (std::size_t i = 0; i < count; ++i, p += width) {
    if (out.dtype == Dtype::f4) {
      float f;
      std::memcpy(&f, p, 4);
      out.values[i] = f;
    } else {
      std::memcpy(&out.values[i], p, 8);
    }
  }
  return out;
}

void save(const std::string& path, const Array& array) {
  const auto bytes = encode(array);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("short write: " + path);
}

Array load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return decode(bytes);
}

void save_matrix(const std::string& path, const Matrix& m, Dtype dtype) {
  Array a;
  a.dtype = dtype;
  a.shape = {m.rows(), m.cols()};
  a.values = m.data();
  save(path, a);
}

void save_vector(const std::string& path, const std::vector<double>& v, Dtype dtype) {
  Array a;
  a.dtype = dtype;
  a.shape = {v.size()};
  a.values = v;
  save(path, a);
}

Matrix load_matrix(const std::string& path) {
  Array a = load(path);
  if (a.shape.size() != 2) throw ShapeError("expected 2-D npy: " + path);
  Matrix m(a.shape[0], a.shape[1]);
  m.data() = std::move(a.values);
  return m;
}

std::vector<double> load_vector(const std::string& path) {
  Array a = load(path);
  if (a.shape.size() != 1) throw ShapeError("expected 1-D npy: " + path);
  return std::move(a.values);
}

}  // namespace motifmine::npy
