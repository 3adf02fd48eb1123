#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mipslsh/transforms.hpp"

namespace mipslsh {

// One draw of the quantized L2 hash: h(z) = floor((a.z + b)/r),
// a ~ N(0,I), b ~ U[0,r).
struct L2HashDraw {
    Vec a;
    double b;
    double r;
};

// One draw of the hyperplane sign hash: h(z) = sign(a.z), a ~ N(0,I).
struct SignHashDraw {
    Vec a;
};

enum class Alphabet { integer, sign_bit };

// Length-K symbol sequence. Sign bits are stored as +1/-1 in the same symbol
// type as the integer alphabet; the tag keeps code sets from being mixed.
struct HashCode {
    std::vector<std::int64_t> symbols;
    Alphabet alphabet;

    std::size_t K() const { return symbols.size(); }
};

// floor((a.z + b)/r); a value landing exactly on a cell boundary goes to the
// upper cell (std::floor of an exact integer).
std::int64_t l2_symbol(std::span<const double> z, std::span<const double> a, double b, double r);
std::int64_t l2_symbol(const Vec& z, const L2HashDraw& draw);

// sign(a.z) with sign(0) = +1.
int sign_bit(std::span<const double> z, std::span<const double> a);
int sign_bit(const Vec& z, const SignHashDraw& draw);

enum class Side { data, query };

// K hash symbols per point. Draw k comes from the (seed, k) substream, so
// codes are identical across runs and across the data/query sides: symmetric
// schemes share draws and the transform, asymmetric schemes share draws while
// the transform differs per side.
std::vector<HashCode> build_codes(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign,
                                  const std::vector<Vec>& points, Side side, std::size_t K,
                                  std::uint64_t seed);

// Number of differing symbol positions; requires equal K and alphabet.
std::size_t hamming(const HashCode& c1, const HashCode& c2);

}  // namespace mipslsh
