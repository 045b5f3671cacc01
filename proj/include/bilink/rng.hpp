#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace bilink {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used only to derive stream seeds, never as the
// sampling generator itself.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fold_seed(std::uint64_t h, std::uint64_t x) {
  return splitmix64(h ^ splitmix64(x));
}

// Stream derivation rule: the root seed is folded with each path element in
// order, then expanded into a full seed sequence. Distinct paths give
// independent streams; the same path always gives the same stream. The
// sampler derives one stream per purpose (visit order, each Gibbs step) so
// adding a consumer never perturbs the others.
Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

// U(0,1) from the half-open unit interval.
double draw_uniform(Rng& rng);

// Gamma(shape, 1).
double draw_gamma(Rng& rng, double shape);

// Beta(a, b) via two gamma draws.
double draw_beta(Rng& rng, double a, double b);

// Dirichlet(alpha) via normalized gammas; out.size() == alpha.size().
void draw_dirichlet(Rng& rng, std::span<const double> alpha, std::span<double> out);

// FNV-1a over bytes; used for block keys and config digests.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace bilink
