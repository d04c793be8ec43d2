#pragma once

#include <cstdint>
#include <random>

#include "sylvan/cmatrix.hpp"

namespace sylvan {

/// splitmix64 step: mixes the state and returns the next word. Used to turn
/// small human-chosen seeds into well-spread engine seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic stream of doubles in [-1, 1]. mt19937_64 output is specified
/// bit-for-bit by the standard; the [0,1) mapping takes the top 53 bits
/// manually because std::uniform_real_distribution is not portable.
class UniformSource {
public:
  explicit UniformSource(std::uint64_t seed);
  double next();
  Complex next_complex();  // re then im, each in [-1, 1]

private:
  std::mt19937_64 engine_;
};

enum class GenFamily { Diagonal, HermitianBanded, Circulant, ShiftedCopy };

struct GenSpec {
  GenFamily family = GenFamily::Diagonal;
  Index n = 4;
  std::uint64_t seed = 0;
  Index band = 2;            // half-bandwidth for hermitian_banded
  double decay_alpha = 1.0;  // off-diagonal damping exponent (banded, circulant)
  double spread = 1.0;       // overall scale of the random entries
  Complex shift = 0.0;       // shifted_copy: added to the base matrix diagonal
  GenFamily base = GenFamily::Diagonal;  // family reproduced by shifted_copy
};

/// Deterministic test-matrix generator. Every family produces a normal
/// matrix: diagonal and circulant by structure, hermitian_banded because it
/// is Hermitian, shifted_copy because shifting preserves normality.
CMatrix generate(const GenSpec& spec);

/// A + shift * I with A's offsets.
CMatrix shifted_copy(const CMatrix& a, Complex shift);

/// Dense matrix with independent entries spread * (u + iv), u, v in [-1, 1].
/// Entries are drawn row-major, so the result is seed-reproducible.
CMatrix random_dense(Index nrows, Index ncols, std::uint64_t seed, double spread = 1.0);

}  // namespace sylvan
