#include "mipslsh/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace mipslsh {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::l2_alsh_sl: return "l2-alsh";
        case Scheme::sign_alsh_sl: return "sign-alsh";
        case Scheme::simple_lsh: return "simple-lsh";
        case Scheme::simple_alsh: return "simple-alsh";
    }
    throw std::logic_error("scheme_name: bad enum");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "l2-alsh") return Scheme::l2_alsh_sl;
    if (name == "sign-alsh") return Scheme::sign_alsh_sl;
    if (name == "simple-lsh") return Scheme::simple_lsh;
    if (name == "simple-alsh") return Scheme::simple_alsh;
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected l2-alsh | sign-alsh | simple-lsh | simple-alsh)");
}

void L2AlshParams::validate() const {
    if (m < 1) throw std::invalid_argument("L2AlshParams: m must be >= 1");
    if (!(U > 0.0 && U < 1.0)) throw std::invalid_argument("L2AlshParams: U must be in (0,1)");
    if (!(r > 0.0)) throw std::invalid_argument("L2AlshParams: r must be positive");
}

void SignAlshParams::validate() const {
    if (m < 1) throw std::invalid_argument("SignAlshParams: m must be >= 1");
    if (!(U > 0.0 && U < 1.0)) throw std::invalid_argument("SignAlshParams: U must be in (0,1)");
}

namespace {

void check_ball(const Vec& x, const char* where) {
    if (norm(x) > 1.0 + kNormTol)
        throw std::invalid_argument(std::string(where) + ": ||x|| > 1, input outside the unit ball");
}

// sqrt(1-||x||^2) with ||x||^2 clamped to 1 so that upstream rounding drift
// inside the kNormTol band cannot produce sqrt of a negative.
double ball_pad(const Vec& x) {
    double n2 = 0.0;
    for (double v : x) n2 += v * v;
    if (n2 > 1.0) n2 = 1.0;
    return std::sqrt(1.0 - n2);
}

}  // namespace

Vec l2alsh_P(const Vec& x, const L2AlshParams& p) {
    p.validate();
    check_ball(x, "l2alsh_P");
    Vec out;
    out.reserve(x.size() + static_cast<std::size_t>(p.m));
    double n2 = 0.0;
    for (double v : x) {
        const double s = p.U * v;
        out.push_back(s);
        n2 += s * s;
    }
    double pw = n2;  // ||Ux||^2
    for (int k = 0; k < p.m; ++k) {
        out.push_back(pw);
        pw *= pw;
    }
    return out;
}

Vec l2alsh_Q(const Vec& q, const L2AlshParams& p) {
    p.validate();
    Vec out = q;
    out.insert(out.end(), static_cast<std::size_t>(p.m), 0.5);
    return out;
}

Vec signalsh_P(const Vec& x, const SignAlshParams& p) {
    p.validate();
    check_ball(x, "signalsh_P");
    Vec out;
    out.reserve(x.size() + static_cast<std::size_t>(p.m));
    double n2 = 0.0;
    for (double v : x) {
        const double s = p.U * v;
        out.push_back(s);
        n2 += s * s;
    }
    double pw = n2;
    for (int k = 0; k < p.m; ++k) {
        out.push_back(0.5 - pw);
        pw *= pw;
    }
    return out;
}

Vec signalsh_Q(const Vec& q, const SignAlshParams& p) {
    p.validate();
    Vec out = q;
    out.insert(out.end(), static_cast<std::size_t>(p.m), 0.0);
    return out;
}

Vec simple_P(const Vec& x) {
    check_ball(x, "simple_P");
    Vec out = x;
    out.push_back(ball_pad(x));
    return out;
}

Vec simplealsh_P(const Vec& x) {
    check_ball(x, "simplealsh_P");
    Vec out = x;
    out.push_back(ball_pad(x));
    out.push_back(0.0);
    return out;
}

Vec simplealsh_Q(const Vec& y) {
    check_ball(y, "simplealsh_Q");
    Vec out = y;
    out.push_back(0.0);
    out.push_back(ball_pad(y));
    return out;
}

std::size_t transformed_dim(Scheme s, std::size_t d, int m) {
    switch (s) {
        case Scheme::l2_alsh_sl:
        case Scheme::sign_alsh_sl: return d + static_cast<std::size_t>(m);
        case Scheme::simple_lsh: return d + 1;
        case Scheme::simple_alsh: return d + 2;
    }
    throw std::logic_error("transformed_dim: bad enum");
}

Vec transform_point(Scheme s, const L2AlshParams& l2, const SignAlshParams& sign, const Vec& v,
                    bool query_side) {
    switch (s) {
        case Scheme::l2_alsh_sl: return query_side ? l2alsh_Q(v, l2) : l2alsh_P(v, l2);
        case Scheme::sign_alsh_sl: return query_side ? signalsh_Q(v, sign) : signalsh_P(v, sign);
        case Scheme::simple_lsh: return simple_P(v);
        case Scheme::simple_alsh: return query_side ? simplealsh_Q(v) : simplealsh_P(v);
    }
    throw std::logic_error("transform_point: bad enum");
}

}  // namespace mipslsh
