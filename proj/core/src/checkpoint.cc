// Copyright 2026 The etype Authors.
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

#include "etype/checkpoint.h"

#include <cstring>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "etype/errors.h"

namespace etype {

using nlohmann::json;

namespace {

constexpr char kMagic[8] = {'E', 'T', 'Y', 'P', 'E', 'C', 'K', 'P'};

struct TensorRef {
  std::string name;
  double* data;
  Eigen::Index rows, cols;
};

void AppendMlp(const std::string& prefix, Mlp& mlp,
               std::vector<TensorRef>& out) {
  auto& layers = mlp.mutable_layers();
  for (size_t l = 0; l < layers.size(); ++l) {
    const std::string base = prefix + "." + std::to_string(l);
    out.push_back({base + ".weight", layers[l].weight.data(),
                   layers[l].weight.rows(), layers[l].weight.cols()});
    out.push_back({base + ".bias", layers[l].bias.data(),
                   layers[l].bias.size(), 1});
  }
}

std::vector<TensorRef> Tensors(LatentModel& m) {
  std::vector<TensorRef> out;
  AppendMlp("enc_p", m.enc_p, out);
  AppendMlp("dec_p", m.dec_p, out);
  AppendMlp("enc_o", m.enc_o, out);
  AppendMlp("dec_o", m.dec_o, out);
  out.push_back({"centers", m.centers.data(), m.centers.rows(),
                 m.centers.cols()});
  return out;
}

json ConfigJson(const TrainConfig& c) {
  return {{"num_clusters", c.num_clusters},
          {"latent_dim", c.latent_dim},
          {"encoder_hidden", c.encoder_hidden},
          {"kappa", c.kappa},
          {"lambda", c.lambda},
          {"delta", c.delta},
          {"max_iters", c.max_iters},
          {"learning_rate", c.learning_rate},
          {"batch_size", c.batch_size},
          {"pretrain_epochs", c.pretrain_epochs},
          {"seed", c.seed}};
}

TrainConfig ConfigFromJson(const json& j) {
  TrainConfig c;
  c.num_clusters = j.at("num_clusters").get<int>();
  c.latent_dim = j.at("latent_dim").get<int>();
  c.encoder_hidden = j.at("encoder_hidden").get<std::vector<int>>();
  c.kappa = j.at("kappa").get<double>();
  c.lambda = j.at("lambda").get<double>();
  c.delta = j.at("delta").get<double>();
  c.max_iters = j.at("max_iters").get<int>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.batch_size = j.at("batch_size").get<int>();
  c.pretrain_epochs = j.at("pretrain_epochs").get<int>();
  c.seed = j.at("seed").get<uint64_t>();
  return c;
}

void ReadExact(std::istream& in, void* dst, size_t n) {
  in.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n) {
    throw InputError("checkpoint: truncated file");
  }
}

// Rebuilds the layer list of an Mlp from the tensor table entries with the
// given prefix.
Mlp MlpFromTable(const std::string& prefix, const json& table) {
  Mlp mlp;
  auto& layers = mlp.mutable_layers();
  for (size_t l = 0;; ++l) {
    const std::string base = prefix + "." + std::to_string(l);
    const json* w = nullptr;
    const json* b = nullptr;
    for (const json& t : table) {
      if (t.at("name") == base + ".weight") w = &t;
      if (t.at("name") == base + ".bias") b = &t;
    }
    if (w == nullptr || b == nullptr) break;
    Mlp::Layer layer;
    layer.weight.resize(w->at("rows").get<Eigen::Index>(),
                        w->at("cols").get<Eigen::Index>());
    layer.bias.resize(b->at("rows").get<Eigen::Index>());
    layers.push_back(std::move(layer));
  }
  if (layers.empty()) throw InputError("checkpoint: missing " + prefix);
  return mlp;
}

}  // namespace

void SaveCheckpoint(std::ostream& out, const LatentModel& model,
                    const TrainConfig& config, const OutputMeta& meta) {
  LatentModel copy = model;
  const std::vector<TensorRef> tensors = Tensors(copy);
  json table = json::array();
  for (const TensorRef& t : tensors) {
    table.push_back({{"name", t.name}, {"rows", t.rows}, {"cols", t.cols}});
  }
  const json header = {{"tool_version", ToolVersion()},
                       {"config_hash", meta.config_hash},
                       {"seed", meta.seed},
                       {"config", ConfigJson(config)},
                       {"kappa", model.kappa},
                       {"tensors", table}};
  const std::string text = header.dump();
  const uint32_t version = kCheckpointVersion;
  const uint64_t length = text.size();
  out.write(kMagic, sizeof(kMagic));
  out.write(reinterpret_cast<const char*>(&version), sizeof(version));
  out.write(reinterpret_cast<const char*>(&length), sizeof(length));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const TensorRef& t : tensors) {
    out.write(reinterpret_cast<const char*>(t.data),
              static_cast<std::streamsize>(t.rows * t.cols * sizeof(double)));
  }
}

Checkpoint LoadCheckpoint(std::istream& in) {
  char magic[sizeof(kMagic)];
  ReadExact(in, magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw InputError("checkpoint: bad magic");
  }
  uint32_t version = 0;
  uint64_t length = 0;
  ReadExact(in, &version, sizeof(version));
  if (version != kCheckpointVersion) {
    throw InputError("checkpoint: unsupported version " +
                     std::to_string(version));
  }
  ReadExact(in, &length, sizeof(length));
  if (length > (1u << 30)) throw InputError("checkpoint: header too large");
  std::string text(length, '\0');
  ReadExact(in, text.data(), length);

  Checkpoint ckpt;
  try {
    const json header = json::parse(text);
    ckpt.config = ConfigFromJson(header.at("config"));
    ckpt.meta.config_hash = header.at("config_hash").get<std::string>();
    ckpt.meta.seed = header.at("seed").get<uint64_t>();
    const json& table = header.at("tensors");
    LatentModel& m = ckpt.model;
    m.kappa = header.at("kappa").get<double>();
    m.enc_p = MlpFromTable("enc_p", table);
    m.dec_p = MlpFromTable("dec_p", table);
    m.enc_o = MlpFromTable("enc_o", table);
    m.dec_o = MlpFromTable("dec_o", table);
    for (const json& t : table) {
      if (t.at("name") == "centers") {
        m.centers.resize(t.at("rows").get<Eigen::Index>(),
                         t.at("cols").get<Eigen::Index>());
      }
    }
    const std::vector<TensorRef> tensors = Tensors(m);
    if (tensors.size() != table.size()) {
      throw InputError("checkpoint: unexpected tensor table");
    }
    for (size_t i = 0; i < tensors.size(); ++i) {
      if (table[i].at("name") != tensors[i].name ||
          table[i].at("rows").get<Eigen::Index>() != tensors[i].rows ||
          table[i].at("cols").get<Eigen::Index>() != tensors[i].cols) {
        throw InputError("checkpoint: tensor table out of order at " +
                         tensors[i].name);
      }
      ReadExact(in, tensors[i].data,
                static_cast<size_t>(tensors[i].rows * tensors[i].cols) *
                    sizeof(double));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("checkpoint: ") + e.what());
  }
  return ckpt;
}

}  // namespace etype
