#include "bilink/rng.hpp"

#include <string_view>

namespace bilink {

Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t x : path) h = fold_seed(h, x);
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(splitmix64(h)),
                    static_cast<std::uint32_t>(splitmix64(h) >> 32)};
  return Rng(seq);
}

double draw_uniform(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

double draw_gamma(Rng& rng, double shape) {
  return std::gamma_distribution<double>(shape, 1.0)(rng);
}

double draw_beta(Rng& rng, double a, double b) {
  const double x = draw_gamma(rng, a);
  const double y = draw_gamma(rng, b);
  return x / (x + y);
}

void draw_dirichlet(Rng& rng, std::span<const double> alpha, std::span<double> out) {
  double total = 0.0;
  for (std::size_t l = 0; l < alpha.size(); ++l) {
    out[l] = draw_gamma(rng, alpha[l]);
    total += out[l];
  }
  for (std::size_t l = 0; l < alpha.size(); ++l) out[l] /= total;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace bilink
