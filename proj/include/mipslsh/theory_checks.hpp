#pragma once

#include <optional>
#include <string>

#include "mipslsh/transforms.hpp"

namespace mipslsh {

// Explicit point construction showing that a scheme violates the collision
// ordering required by an (S, cS) hashing problem: the pair (q_near, y_near)
// with sim <= c_eff * S_eff collides at least as often as the pair
// (q_far, x_far) with sim >= S_eff.
//
// Most constructions use one shared query (q_near == q_far). The ball-domain
// constructions need two: an on-sphere query for the similar pair and a
// shrunken one for the dissimilar pair.
//
// `margin` is the lemma's violation magnitude: a squared-distance gap for the
// quantized hash, a cosine gap for sign hashes, a probability gap for the
// identical-point construction. Degenerate corners (e.g. S = 1) yield
// margin = 0 and are flagged rather than rejected.
struct Witness {
    std::string lemma;
    Vec q_far;
    Vec x_far;
    Vec q_near;
    Vec y_near;
    double margin = 0.0;
    bool zero_margin = false;
    int branch = 0;  // which proof branch fired, when a lemma has several

    // thresholds the similarity constraints are stated against; equal to the
    // input (S, c) except for the identical-point construction, where the
    // operative threshold is cS^2 (see symmetric_ball_witness)
    double S_eff = 0.0;
    double c_eff = 0.0;

    std::optional<int> m;
    std::optional<double> U;
};

// One JSON object per line: lemma id, parameters, margin, pass/fail.
std::string witness_json_line(const Witness& w, bool pass);

// Range of c for which the quantized asymmetric hash provably fails to be an
// (S, cS) hash over {||x|| <= 1} x {||q|| = 1}: c >= this threshold.
double l2alsh_nonuniversal_c_threshold(const L2AlshParams& p, double S);

// Witness for that failure: q unit, x unit with q.x = S, y = cS q; the
// transformed distance of the dissimilar pair is strictly smaller.
// Rejects c below the threshold above. Built in 2-D, zero-padded to `dim`.
Witness l2alsh_nonuniversal_witness(const L2AlshParams& p, const ThresholdPair& t,
                                    std::size_t dim = 2);

// Identical-point construction against any symmetric hash over the ball:
// q = x with ||x|| = cS and y = x/c, so the hash collides with probability 1
// on the pair with the *lower* inner product. The operative thresholds are
// S_eff = cS^2, c_eff = c (the source text asserts q.x = cS, which only holds
// after rescaling; the verifier follows the construction as performed).
// Margin is 1 minus the symmetric scheme's collision probability on (q, y).
Witness symmetric_ball_witness(const ThresholdPair& t, std::size_t dim = 2);

// Ball-domain failure of the quantized asymmetric hash when S < (c+1)/2:
// pairs (q1, x1) unit with q1.x1 = S and (q2 = cS x2, x2 unit).
Witness l2alsh_ball_witness(const L2AlshParams& p, const ThresholdPair& t, std::size_t dim = 2);

// The two c-thresholds of the sign-scheme non-universality lemma.
struct SignAlshBounds {
    double sphere_bound;     // sqrt(1 - U^(2^(m+1)) (1-S^(2^(m+1))) / (U^(2^(m+1)) + m/4))
    double alpha_bound;      // alpha_m / (S U)
    bool alpha_applicable;   // alpha_bound < 1, i.e. some valid c can trigger it
};
SignAlshBounds signalsh_c_bounds(const SignAlshParams& p, double S);

// Witness that the sign scheme is not an (S, cS) hash over the sphere-query
// domain once c >= min of the two bounds; branch 1 uses y = cS q, branch 2
// uses y = (alpha_m / U) q.
Witness signalsh_nonuniversal_witness(const SignAlshParams& p, const ThresholdPair& t,
                                      std::size_t dim = 2);

// Ball-domain failure of the sign scheme for every S, c: normalized cosines
// of the two pairs reduce to U / sqrt(m/4 + U^(2^(m+1))) vs S times it.
Witness signalsh_bounded_witness(const SignAlshParams& p, const ThresholdPair& t,
                                 std::size_t dim = 2);

}  // namespace mipslsh
