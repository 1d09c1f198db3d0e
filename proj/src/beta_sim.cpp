#include "rstirling/beta_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "rstirling/bounds.hpp"

namespace rstirling {

namespace {

void require_r(std::uint64_t r, const char* where) {
    if (r == 0) {
        throw std::invalid_argument(std::string(where) + ": requires r >= 1");
    }
}

void require_config(const MCConfig& cfg, const char* where) {
    if (cfg.n_samples == 0 || cfg.chunk_count == 0) {
        throw std::invalid_argument(std::string(where) +
                                    ": requires n_samples >= 1 and chunk_count >= 1");
    }
}

double ipow(double base, std::uint64_t e) {
    double out = 1.0;
    while (e > 0) {
        if (e & 1) {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace

double density_g(double x, std::uint64_t r) {
    require_r(r, "density_g");
    if (x < 0.0 || x > 1.0) {
        return 0.0;
    }
    return static_cast<double>(r) * ipow(1.0 - x, r - 1);
}

double density_h(double x, std::uint64_t r) {
    require_r(r, "density_h");
    if (x < 0.0 || x > 1.0) {
        return 0.0;
    }
    return static_cast<double>(r) * ipow(x, r - 1);
}

namespace {

double tail_density_value(double x, std::uint64_t m, std::uint64_t r) {
    const std::uint64_t mr = m * r;
    const ExactRational coeff(pow(factorial(r), m), factorial(mr - 1));
    return coeff.approx_double() * ipow(static_cast<double>(m) - x, mr - 1);
}

}  // namespace

double tail_density(double x, std::uint64_t m, std::uint64_t r) {
    require_r(r, "tail_density");
    if (m == 0) {
        throw std::invalid_argument("tail_density: requires m >= 1");
    }
    if (x < static_cast<double>(m) - 1.0 || x > static_cast<double>(m)) {
        throw std::domain_error("tail_density: x must lie in [m-1, m]");
    }
    return tail_density_value(x, m, r);
}

double tail_density_upper(double x, std::uint64_t m, std::uint64_t r) {
    require_r(r, "tail_density_upper");
    if (m == 0) {
        throw std::invalid_argument("tail_density_upper: requires m >= 1");
    }
    if (x < 0.0 || x > static_cast<double>(m)) {
        throw std::domain_error("tail_density_upper: x must lie in [0, m]");
    }
    return tail_density_value(x, m, r);
}

ExactRational tail_probability(const ExactRational& x, std::uint64_t m, std::uint64_t r) {
    require_r(r, "tail_probability");
    if (m == 0) {
        throw std::invalid_argument("tail_probability: requires m >= 1");
    }
    const ExactRational mm = ExactRational(Natural(m));
    if (x < mm - ExactRational(1) || x > mm) {
        throw std::domain_error("tail_probability: x must lie in [m-1, m]");
    }
    const std::uint64_t mr = m * r;
    return ExactRational(pow(factorial(r), m), factorial(mr)) *
           pow(mm - x, static_cast<std::int64_t>(mr));
}

double majorant_eval(double x, const ExactRational& a, std::uint64_t k) {
    const double c = majorant_constant(a, k).approx_double();
    const double ad = a.approx_double();
    const double ak1 = ipow(ad, k - 1);
    return ak1 * ad + static_cast<double>(k) * ak1 * (x - ad) + c * (x - ad) * (x - ad);
}

ExactRational majorant_eval_exact(const ExactRational& x, const ExactRational& a,
                                  std::uint64_t k) {
    const ExactRational c = majorant_constant(a, k);
    const ExactRational ak1 = pow(a, static_cast<std::int64_t>(k - 1));
    const ExactRational dx = x - a;
    return ak1 * a + ExactRational(static_cast<long>(k)) * ak1 * dx + c * dx * dx;
}

double sample_beta(double u, std::uint64_t r) {
    require_r(r, "sample_beta");
    if (r == 1) {
        return u;
    }
    return 1.0 - std::pow(1.0 - u, 1.0 / static_cast<double>(r));
}

namespace {

// One pass of chunked accumulation: fn(generator, count) returns the chunk's
// (sum, sum of squares); chunks are combined in index order.
template <typename Sampler>
MCEstimate accumulate_chunks(const MCConfig& cfg, Sampler&& sample_value) {
    const std::uint64_t base = cfg.n_samples / cfg.chunk_count;
    const std::uint64_t rem = cfg.n_samples % cfg.chunk_count;
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::uint64_t i = 0; i < cfg.chunk_count; ++i) {
        const std::uint64_t count = base + (i < rem ? 1 : 0);
        SplitMix64 gen(SplitMix64::substream_seed(cfg.seed, i));
        double c1 = 0.0;
        double c2 = 0.0;
        for (std::uint64_t s = 0; s < count; ++s) {
            const double v = sample_value(gen);
            c1 += v;
            c2 += v * v;
        }
        s1 += c1;
        s2 += c2;
    }
    const double n = static_cast<double>(cfg.n_samples);
    MCEstimate est;
    est.n = cfg.n_samples;
    est.mean = s1 / n;
    if (cfg.n_samples > 1) {
        const double var = (s2 - s1 * s1 / n) / (n - 1.0);
        est.std_error = var > 0.0 ? std::sqrt(var / n) : 0.0;
    }
    return est;
}

}  // namespace

MCEstimate mc_moment(const MomentQuery& q, const MCConfig& cfg) {
    if (q.r == 0 || q.m == 0) {
        throw std::invalid_argument("mc_moment: requires r >= 1 and m >= 1");
    }
    require_config(cfg, "mc_moment");
    return accumulate_chunks(cfg, [&](SplitMix64& gen) {
        double sum = 0.0;
        for (std::uint64_t j = 0; j < q.m; ++j) {
            sum += sample_beta(gen.next_unit(), q.r);
        }
        return ipow(sum, q.k);
    });
}

MCEstimate mc_stirling(const StirlingQuery& q, const MCConfig& cfg) {
    if (q.r == 0 || q.m == 0) {
        throw std::invalid_argument("mc_stirling: requires r >= 1 and m >= 1");
    }
    if (q.p < q.r * q.m) {
        throw std::invalid_argument("mc_stirling: requires p >= r*m");
    }
    const std::uint64_t k = q.p - q.r * q.m;
    const ExactRational prefactor(factorial(q.p),
                                  factorial(q.m) * pow(factorial(q.r), q.m) * factorial(k));
    MCEstimate est = mc_moment(MomentQuery{q.r, k, q.m}, cfg);
    const double scale = prefactor.approx_double();
    est.mean *= scale;
    est.std_error *= scale;
    return est;
}

MCEstimate mc_tail_probability(double x, std::uint64_t m, std::uint64_t r, const MCConfig& cfg) {
    require_r(r, "mc_tail_probability");
    if (m == 0) {
        throw std::invalid_argument("mc_tail_probability: requires m >= 1");
    }
    if (x < static_cast<double>(m) - 1.0 || x > static_cast<double>(m)) {
        throw std::domain_error("mc_tail_probability: x must lie in [m-1, m]");
    }
    require_config(cfg, "mc_tail_probability");
    MCEstimate est = accumulate_chunks(cfg, [&](SplitMix64& gen) {
        double sum = 0.0;
        for (std::uint64_t j = 0; j < m; ++j) {
            sum += sample_beta(gen.next_unit(), r);
        }
        return sum >= x ? 1.0 : 0.0;
    });
    // indicator variable: use the binomial standard error
    const double n = static_cast<double>(cfg.n_samples);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / n);
    return est;
}

}  // namespace rstirling
