#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "adapfl/data.hpp"

namespace adapfl {

template <typename T>
struct TensorT {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<T> values;  // (row, col, channel) layout

  TensorT() = default;
  TensorT(int h, int w, int c)
      : height(h), width(w), channels(c),
        values(static_cast<std::size_t>(h) * w * c, T(0)) {}

  T& at(int r, int c, int ch) {
    return values[(static_cast<std::size_t>(r) * width + c) * channels + ch];
  }
  T at(int r, int c, int ch) const {
    return values[(static_cast<std::size_t>(r) * width + c) * channels + ch];
  }
};

// One 3x3 valid convolution with ReLU. Kernel layout is
// [out][in][row][col], matching the weight file format.
template <typename T>
struct ConvLayerT {
  int out_channels = 0;
  int in_channels = 0;
  std::vector<T> kernel;
  std::vector<T> bias;

  static constexpr int kKernelSize = 3;

  ConvLayerT() = default;
  ConvLayerT(int out_ch, int in_ch)
      : out_channels(out_ch), in_channels(in_ch),
        kernel(static_cast<std::size_t>(out_ch) * in_ch * kKernelSize * kKernelSize, T(0)),
        bias(static_cast<std::size_t>(out_ch), T(0)) {}

  std::size_t param_count() const { return kernel.size() + bias.size(); }
};

template <typename T>
struct ModelWeightsT {
  std::vector<ConvLayerT<T>> layers;

  std::size_t total_params() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.param_count();
    return n;
  }
};

using Tensor = TensorT<float>;
using ConvLayer = ConvLayerT<float>;
using ModelWeights = ModelWeightsT<float>;

// Channel progression of the nowcasting regressor, input to output.
std::vector<int> reference_channels();

// Glorot-uniform kernels, zero biases; deterministic per seed.
ModelWeights init_model(std::uint64_t seed);

template <typename T>
ModelWeightsT<T> init_model_with_channels(std::span<const int> channels,
                                          std::uint64_t seed);

// Throws DataError when layer shapes do not chain.
template <typename T>
void validate_model(const ModelWeightsT<T>& model);

template <typename T>
std::vector<std::size_t> param_counts(const ModelWeightsT<T>& model);

// Output shape of every layer for a square input of the given size.
template <typename T>
std::vector<std::array<int, 3>> activation_shapes(const ModelWeightsT<T>& model,
                                                  int input_size);

// Cross-correlation (no kernel flip) + bias + ReLU, valid padding.
template <typename T>
TensorT<T> conv2d_valid(const TensorT<T>& input, const ConvLayerT<T>& layer);

template <typename T>
TensorT<T> forward(const ModelWeightsT<T>& model, const TensorT<T>& input);

// Predictor frames stacked channel-wise in time order.
template <typename T>
TensorT<T> sample_input_tensor(const Sample& sample);

template <typename T>
struct LossGrad {
  double loss = 0.0;
  ModelWeightsT<T> gradients;
};

// Mean squared error over batch and pixels against center-cropped
// targets, with reverse-mode gradients (ReLU subgradient at 0 is 0).
template <typename T>
LossGrad<T> loss_and_gradients(const ModelWeightsT<T>& model,
                               std::span<const Sample* const> batch);

template <typename T>
LossGrad<T> loss_and_gradients(const ModelWeightsT<T>& model,
                               std::span<const Sample> batch);

template <typename T>
struct AdamStateT {
  long step_count = 0;
  ModelWeightsT<T> first_moment;
  ModelWeightsT<T> second_moment;
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon_hat = 1e-8;
};

using AdamState = AdamStateT<float>;

// Bias-corrected adaptive-moment update; moments are lazily shaped to
// the weights on first use.
template <typename T>
void adam_step(AdamStateT<T>& state, ModelWeightsT<T>& weights,
               const ModelWeightsT<T>& gradients);

struct TrainOptions {
  int epochs = 1;
  int batch_size = 32;
  std::uint64_t seed = 0;
  long epoch_offset = 0;  // shifts the per-epoch shuffle stream
  double learning_rate = 0.001;
};

// Seeded-shuffle mini-batch training; returns the updated weights and
// optionally the mean loss of the final epoch. When `state` is given the
// optimizer moments persist across calls, so consecutive invocations
// with advancing epoch_offset reproduce one long run bit-exactly.
ModelWeights train(ModelWeights weights, std::span<const Sample> data,
                   const TrainOptions& options, AdamState* state = nullptr,
                   float* final_epoch_mse = nullptr);

// Euclidean norm of all parameters as one flat vector.
template <typename T>
double flat_weight_norm(const ModelWeightsT<T>& model);

}  // namespace adapfl
