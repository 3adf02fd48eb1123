#include "mipslsh/hashers.hpp"

#include <cmath>
#include <stdexcept>

#include "mipslsh/rng.hpp"

namespace mipslsh {

std::int64_t l2_symbol(std::span<const double> z, std::span<const double> a, double b, double r) {
    return static_cast<std::int64_t>(std::floor((dot(a, z) + b) / r));
}

std::int64_t l2_symbol(const Vec& z, const L2HashDraw& draw) {
    return l2_symbol(z, draw.a, draw.b, draw.r);
}

int sign_bit(std::span<const double> z, std::span<const double> a) {
    return dot(a, z) >= 0.0 ? 1 : -1;
}

int sign_bit(const Vec& z, const SignHashDraw& draw) { return sign_bit(z, draw.a); }

std::vector<HashCode> build_codes(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign,
                                  const std::vector<Vec>& points, Side side, std::size_t K,
                                  std::uint64_t seed) {
    if (K < 1) throw std::invalid_argument("build_codes: K must be >= 1");
    if (points.empty()) throw std::invalid_argument("build_codes: no points");

    std::vector<Vec> transformed;
    transformed.reserve(points.size());
    for (const Vec& p : points)
        transformed.push_back(transform_point(s, l2, sign, p, side == Side::query));

    const bool quantized = s == Scheme::l2_alsh_sl;
    const Alphabet alpha = quantized ? Alphabet::integer : Alphabet::sign_bit;
    const std::size_t dim = transformed.front().size();

    std::vector<HashCode> codes(points.size());
    for (HashCode& c : codes) {
        c.alphabet = alpha;
        c.symbols.resize(K);
    }

    Vec a(dim);
    for (std::size_t k = 0; k < K; ++k) {
        Rng rng = Rng::substream(seed, k);
        for (double& v : a) v = rng.next_gaussian();
        if (quantized) {
            const double b = rng.next_uniform(0.0, l2.r);
            for (std::size_t i = 0; i < transformed.size(); ++i)
                codes[i].symbols[k] = l2_symbol(transformed[i], a, b, l2.r);
        } else {
            for (std::size_t i = 0; i < transformed.size(); ++i)
                codes[i].symbols[k] = sign_bit(transformed[i], a);
        }
    }
    return codes;
}

std::size_t hamming(const HashCode& c1, const HashCode& c2) {
    if (c1.symbols.size() != c2.symbols.size())
        throw std::invalid_argument("hamming: code length mismatch");
    if (c1.alphabet != c2.alphabet) throw std::invalid_argument("hamming: alphabet mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < c1.symbols.size(); ++i)
        if (c1.symbols[i] != c2.symbols[i]) ++d;
    return d;
}

}  // namespace mipslsh
