#include "mipslsh/theory_checks.hpp"

#include <cmath>
#include <stdexcept>

#include "mipslsh/collision.hpp"
#include "mipslsh/rho.hpp"

#include "json.hpp"

namespace mipslsh {

namespace {

constexpr double kZeroMarginTol = 1e-12;

// 2-D construction embedded in dim coordinates by zero padding; the padding
// leaves every norm and inner product bit-identical.
Vec embed2(double a, double b, std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("witness dimension must be >= 2");
    Vec v(dim, 0.0);
    v[0] = a;
    v[1] = b;
    return v;
}

double cosine_of(const Vec& a, const Vec& b) { return dot(a, b) / (norm(a) * norm(b)); }

void finish(Witness& w) { w.zero_margin = w.margin <= kZeroMarginTol; }

}  // namespace

std::string witness_json_line(const Witness& w, bool pass) {
    nlohmann::json j;
    j["lemma"] = w.lemma;
    j["S"] = w.S_eff;
    j["c"] = w.c_eff;
    if (w.m) j["m"] = *w.m;
    if (w.U) j["U"] = *w.U;
    if (w.branch != 0) j["branch"] = w.branch;
    j["margin"] = w.margin;
    j["zero_margin"] = w.zero_margin;
    j["pass"] = pass;
    return j.dump();
}

double l2alsh_nonuniversal_c_threshold(const L2AlshParams& p, double S) {
    p.validate();
    // U^(2^(m+1)-1) (1 - S^(2^(m+1))) / (2S)
    const double u_pow = pow_2m1(p.U, p.m) / p.U;
    return 1.0 - u_pow * (1.0 - pow_2m1(S, p.m)) / (2.0 * S);
}

Witness l2alsh_nonuniversal_witness(const L2AlshParams& p, const ThresholdPair& t,
                                    std::size_t dim) {
    const double thr = l2alsh_nonuniversal_c_threshold(p, t.S);
    if (t.c < thr)
        throw std::invalid_argument("l2alsh_nonuniversal_witness: c = " + std::to_string(t.c) +
                                    " below the lemma threshold " + std::to_string(thr) +
                                    "; the construction is not guaranteed there");
    Witness w;
    w.lemma = "l2-nonuniversal";
    w.S_eff = t.S;
    w.c_eff = t.c;
    w.m = p.m;
    w.U = p.U;
    w.q_far = embed2(1.0, 0.0, dim);
    w.x_far = embed2(t.S, std::sqrt(1.0 - t.S * t.S), dim);
    w.q_near = w.q_far;
    w.y_near = embed2(t.cS(), 0.0, dim);

    const Vec qt = l2alsh_Q(w.q_far, p);
    const double d_far = squared_distance(l2alsh_P(w.x_far, p), qt);
    const double d_near = squared_distance(l2alsh_P(w.y_near, p), qt);
    w.margin = d_far - d_near;
    finish(w);
    return w;
}

Witness symmetric_ball_witness(const ThresholdPair& t, std::size_t dim) {
    Witness w;
    w.lemma = "symmetric-ball";
    // q = x with ||x|| = cS, y = x/c. Then q.y = cS^2 and q.x = c (cS^2), so
    // the constraints hold with S_eff = cS^2.
    w.S_eff = t.c * t.S * t.S;
    w.c_eff = t.c;
    const double xn = t.cS();
    w.q_near = embed2(xn, 0.0, dim);
    w.y_near = w.q_near;  // identical points: collision probability 1
    w.q_far = w.q_near;
    w.x_far = embed2(xn / t.c, 0.0, dim);

    const double p_far =
        sign_collision(cosine_of(simple_P(w.q_far), simple_P(w.x_far)));
    w.margin = 1.0 - p_far;
    finish(w);
    return w;
}

Witness l2alsh_ball_witness(const L2AlshParams& p, const ThresholdPair& t, std::size_t dim) {
    p.validate();
    if (!(t.S < (t.c + 1.0) / 2.0))
        throw std::invalid_argument("l2alsh_ball_witness: requires S < (c+1)/2, got S = " +
                                    std::to_string(t.S) + ", c = " + std::to_string(t.c));
    Witness w;
    w.lemma = "l2-ball";
    w.S_eff = t.S;
    w.c_eff = t.c;
    w.m = p.m;
    w.U = p.U;
    w.q_far = embed2(1.0, 0.0, dim);
    w.x_far = embed2(t.S, std::sqrt(1.0 - t.S * t.S), dim);
    w.y_near = embed2(1.0, 0.0, dim);
    w.q_near = embed2(t.cS(), 0.0, dim);

    const double d_far = squared_distance(l2alsh_P(w.x_far, p), l2alsh_Q(w.q_far, p));
    const double d_near = squared_distance(l2alsh_P(w.y_near, p), l2alsh_Q(w.q_near, p));
    w.margin = d_far - d_near;
    finish(w);
    return w;
}

SignAlshBounds signalsh_c_bounds(const SignAlshParams& p, double S) {
    p.validate();
    const double u_pow = pow_2m1(p.U, p.m);
    SignAlshBounds b;
    b.sphere_bound =
        std::sqrt(1.0 - u_pow * (1.0 - pow_2m1(S, p.m)) / (u_pow + p.m / 4.0));
    b.alpha_bound = sign_alpha(p.m) / (S * p.U);
    b.alpha_applicable = b.alpha_bound < 1.0;
    return b;
}

Witness signalsh_nonuniversal_witness(const SignAlshParams& p, const ThresholdPair& t,
                                      std::size_t dim) {
    const SignAlshBounds b = signalsh_c_bounds(p, t.S);
    if (t.c < b.sphere_bound && t.c < b.alpha_bound)
        throw std::invalid_argument(
            "signalsh_nonuniversal_witness: c below both lemma bounds (" +
            std::to_string(b.sphere_bound) + ", " + std::to_string(b.alpha_bound) + ")");
    Witness w;
    w.lemma = "sign-nonuniversal";
    w.S_eff = t.S;
    w.c_eff = t.c;
    w.m = p.m;
    w.U = p.U;
    w.q_far = embed2(1.0, 0.0, dim);
    w.x_far = embed2(t.S, std::sqrt(1.0 - t.S * t.S), dim);
    w.q_near = w.q_far;
    if (t.c >= b.sphere_bound) {
        w.branch = 1;
        w.y_near = embed2(t.cS(), 0.0, dim);
    } else {
        w.branch = 2;
        w.y_near = embed2(sign_alpha(p.m) / p.U, 0.0, dim);
    }

    const Vec qt = signalsh_Q(w.q_far, p);
    const Vec px = signalsh_P(w.x_far, p);
    const Vec py = signalsh_P(w.y_near, p);
    // ||Q(q)|| = 1 here, so normalizing by ||P(.)|| alone gives the cosines
    const double cos_far = dot(px, qt) / norm(px);
    const double cos_near = dot(py, qt) / norm(py);
    w.margin = cos_near - cos_far;
    finish(w);
    return w;
}

Witness signalsh_bounded_witness(const SignAlshParams& p, const ThresholdPair& t,
                                 std::size_t dim) {
    p.validate();
    Witness w;
    w.lemma = "sign-ball";
    w.S_eff = t.S;
    w.c_eff = t.c;
    w.m = p.m;
    w.U = p.U;
    w.q_far = embed2(1.0, 0.0, dim);
    w.x_far = embed2(t.S, std::sqrt(1.0 - t.S * t.S), dim);
    w.y_near = embed2(1.0, 0.0, dim);
    w.q_near = embed2(t.cS(), 0.0, dim);

    const double cos_far =
        cosine_of(signalsh_P(w.x_far, p), signalsh_Q(w.q_far, p));
    const double cos_near =
        cosine_of(signalsh_P(w.y_near, p), signalsh_Q(w.q_near, p));
    w.margin = cos_near - cos_far;
    finish(w);
    return w;
}

}  // namespace mipslsh
