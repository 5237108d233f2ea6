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
//
// NPY (NumPy array file) version 1.0 reader/writer for little-endian
// float32/float64 arrays in C order. The writer emits the exact byte
// layout NumPy produces: 6-byte magic, version 1.0, 2-byte header
// length, a Python-literal header dict padded with spaces so the full
// preamble is a multiple of 64 bytes, terminated by '\n'.

#ifndef MOTIFMINE_NPY_HPP_
#define MOTIFMINE_NPY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "motifmine/matrix.hpp"

namespace motifmine::npy {

enum class Dtype { f4, f8 };

struct Array {
  Dtype dtype = Dtype::f8;
  std::vector<std::size_t> shape;  // 1-D or 2-D
  std::vector<double> values;      // row-major, widened to double

  std::size_t size() const {
    std::size_t n = 1;
    for (auto s : shape) n *= s;
    return shape.empty() ? 0 : n;
  }
};

std::vector<std::uint8_t> encode(const Array& array);
Array decode(const std::vector<std::uint8_t>& bytes);

void save(const std::string& path, const Array& array);
Array load(const std::string& path);

// Shorthands for the shapes the pipeline persists.
void save_matrix(const std::string& path, const Matrix& m, Dtype dtype);
void save_vector(const std::string& path, const std::vector<double>& v, Dtype dtype);
Matrix load_matrix(const std::string& path);
std::vector<double> load_vector(const std::string& path);

}  // namespace motifmine::npy

#endif  // MOTIFMINE_NPY_HPP_
