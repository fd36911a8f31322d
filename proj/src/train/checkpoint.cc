// Copyright 2026 The VulnGraph Authors. All Rights Reserved.
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

#include "vulngraph/train/checkpoint.h"

#include <bit>
#include <cstring>
#include <filesystem>

#include "json.hpp"
#include "vulngraph/error.h"
#include "vulngraph/io.h"
#include "vulngraph/rng.h"

namespace vulngraph::train {
namespace {

static_assert(std::endian::native == std::endian::little,
              "checkpoint encoding assumes a little-endian host");

constexpr char kMagic[8] = {'V', 'G', 'C', 'K', 'P', 'T', '0', '1'};

template <typename T>
void Put(std::string& out, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  out.append(bytes, sizeof(T));
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T Get() {
    T value;
    std::memcpy(&value, Take(sizeof(T)).data(), sizeof(T));
    return value;
  }

  std::string_view Take(std::size_t n) {
    if (n > bytes_.size() - pos_) throw FormatError("checkpoint is truncated");
    std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

nlohmann::json ShapeToJson(const segnn::ModelShape& s) {
  return {{"input_width", s.input_width}, {"state_width", s.state_width},
          {"steps", s.steps},             {"gat_widths", s.gat_widths},
          {"dense_width", s.dense_width}, {"attention_slope", s.attention_slope}};
}

segnn::ModelShape ShapeFromJson(const nlohmann::json& j) {
  segnn::ModelShape s;
  s.input_width = j.at("input_width").get<int>();
  s.state_width = j.at("state_width").get<int>();
  s.steps = j.at("steps").get<int>();
  s.gat_widths = j.at("gat_widths").get<std::vector<int>>();
  s.dense_width = j.at("dense_width").get<int>();
  s.attention_slope = j.at("attention_slope").get<double>();
  return s;
}

}  // namespace

std::string SerializeCheckpoint(const Checkpoint& ckpt) {
  nlohmann::json history = nlohmann::json::array();
  for (const EpochRecord& r : ckpt.history.epochs) {
    history.push_back({{"epoch", r.epoch},
                       {"train_loss", r.train_loss},
                       {"test_accuracy", r.test_accuracy
                                             ? nlohmann::json(*r.test_accuracy)
                                             : nlohmann::json(nullptr)}});
  }
  nlohmann::json tensors = nlohmann::json::array();
  const auto names = segnn::TensorNames(ckpt.params);
  const auto params = segnn::TensorList(ckpt.params);
  for (std::size_t i = 0; i < params.size(); ++i) {
    tensors.push_back({names[i], params[i]->rows(), params[i]->cols()});
  }
  const nlohmann::json header = {
      {"shape", ShapeToJson(ckpt.params.shape)},
      {"epoch", ckpt.epoch},
      {"config_digest", ckpt.config_digest},
      {"initial_loss", ckpt.history.initial_loss},
      {"history", history},
      {"adam_step", ckpt.adam.step},
      {"tensors", tensors}};
  const std::string text = header.dump();

  std::string out(kMagic, sizeof kMagic);
  Put<std::uint32_t>(out, kCheckpointVersion);
  Put<std::uint64_t>(out, text.size());
  out += text;
  for (const segnn::SegnnParams* set : {&ckpt.params, &ckpt.adam.m, &ckpt.adam.v}) {
    for (const Matrix* m : segnn::TensorList(*set)) {
      out.append(reinterpret_cast<const char*>(m->data()),
                 static_cast<std::size_t>(m->size()) * sizeof(double));
    }
  }
  Put<std::uint64_t>(out, StableHash(out));
  return out;
}

Checkpoint DeserializeCheckpoint(const std::string& bytes) {
  if (bytes.size() < sizeof kMagic + sizeof(std::uint64_t) ||
      std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw FormatError("not a checkpoint file");
  }
  const std::string_view body(bytes.data(), bytes.size() - sizeof(std::uint64_t));
  std::uint64_t stored;
  std::memcpy(&stored, bytes.data() + body.size(), sizeof stored);
  Reader reader(body);
  reader.Take(sizeof kMagic);
  const auto version = reader.Get<std::uint32_t>();
  if (version != kCheckpointVersion) {
    throw CheckpointError("unsupported checkpoint version " +
                          std::to_string(version));
  }
  if (StableHash(body) != stored) {
    throw FormatError("checkpoint checksum mismatch");
  }
  const auto header_len = reader.Get<std::uint64_t>();
  Checkpoint ckpt;
  try {
    const auto header = nlohmann::json::parse(reader.Take(header_len));
    const segnn::ModelShape shape = ShapeFromJson(header.at("shape"));
    shape.Validate();
    ckpt.params = segnn::ZeroParams(shape);
    ckpt.adam = AdamState::Zeros(shape);
    ckpt.epoch = header.at("epoch").get<int>();
    ckpt.config_digest = header.at("config_digest").get<std::string>();
    ckpt.history.initial_loss = header.at("initial_loss").get<double>();
    for (const auto& r : header.at("history")) {
      EpochRecord rec;
      rec.epoch = r.at("epoch").get<int>();
      rec.train_loss = r.at("train_loss").get<double>();
      if (!r.at("test_accuracy").is_null()) {
        rec.test_accuracy = r.at("test_accuracy").get<double>();
      }
      ckpt.history.epochs.push_back(rec);
    }
    ckpt.adam.step = header.at("adam_step").get<std::int64_t>();
    const auto& tensors = header.at("tensors");
    const auto names = segnn::TensorNames(ckpt.params);
    const auto slots = segnn::TensorList(ckpt.params);
    if (tensors.size() != slots.size()) {
      throw FormatError("checkpoint tensor count does not match its shape");
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (tensors[i].at(0).get<std::string>() != names[i] ||
          tensors[i].at(1).get<Eigen::Index>() != slots[i]->rows() ||
          tensors[i].at(2).get<Eigen::Index>() != slots[i]->cols()) {
        throw FormatError("checkpoint tensor " + names[i] + " has the wrong shape");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed checkpoint header: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid model shape in checkpoint: ") + e.what());
  }
  for (segnn::SegnnParams* set : {&ckpt.params, &ckpt.adam.m, &ckpt.adam.v}) {
    for (Matrix* m : segnn::TensorList(*set)) {
      const std::size_t n = static_cast<std::size_t>(m->size()) * sizeof(double);
      std::memcpy(m->data(), reader.Take(n).data(), n);
    }
  }
  if (reader.remaining() != 0) throw FormatError("trailing bytes in checkpoint");
  return ckpt;
}

void SaveCheckpoint(const Checkpoint& ckpt, const std::string& path) {
  // Write then rename so an interrupted save never leaves a torn file.
  const std::string tmp = path + ".tmp";
  WriteFile(tmp, SerializeCheckpoint(ckpt));
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

Checkpoint LoadCheckpoint(const std::string& path) {
  try {
    return DeserializeCheckpoint(ReadFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace vulngraph::train
