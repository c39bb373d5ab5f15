#include "toric/heights.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>

namespace toric::heights {

namespace {

void require_nonzero(const Rat& x) {
    if (x == 0) throw_toric("ZeroInput", "gcd heights are defined for nonzero arguments");
}

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Place Place::finite(Int prime) {
    if (!is_prime_int(prime))
        throw_toric("ZeroInput", "finite places are indexed by primes",
                    {{"p", prime.str()}});
    return Place{false, std::move(prime)};
}

double LogValue::value() const {
    return std::log(numerator(arg).convert_to<double>()) -
           std::log(denominator(arg).convert_to<double>());
}

Rat FactoredLog::total_arg() const {
    Rat prod = infinite_factor;
    for (const auto& [p, k] : finite) prod *= Rat(Int(pow(p, k)));
    return prod;
}

double FactoredLog::value() const {
    double v = LogValue{infinite_factor}.value();
    for (const auto& [p, k] : finite) v += k * std::log(p.convert_to<double>());
    return v;
}

std::vector<std::pair<Int, int>> factor(const Int& n) {
    if (n == 0) throw_toric("ZeroInput", "cannot factor zero");
    Int m = abs(n);
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int k = 0;
        while (m % d == 0) {
            m /= d;
            ++k;
        }
        out.emplace_back(d, k);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

int ord_p(const Rat& x, const Int& p) {
    require_nonzero(x);
    int ord = 0;
    Int n = abs(numerator(x));
    while (n % p == 0) {
        n /= p;
        ++ord;
    }
    Int d = denominator(x);
    while (d % p == 0) {
        d /= p;
        --ord;
    }
    return ord;
}

std::vector<Int> support_primes(const Rat& a, const Rat& b) {
    std::set<Int> primes;
    for (const Rat* x : {&a, &b}) {
        for (const Int& part : {Int(abs(numerator(*x))), Int(denominator(*x))}) {
            if (part == 1) continue;
            for (const auto& [p, k] : factor(part)) primes.insert(p);
        }
    }
    return {primes.begin(), primes.end()};
}

FactoredLog log_gcd(const Int& a, const Int& b) {
    if (a == 0 || b == 0)
        throw_toric("ZeroInput", "log gcd is defined for nonzero integers");
    FactoredLog out;
    const Int g = gcd(abs(a), abs(b));
    if (g > 1) out.finite = factor(g);
    return out;
}

FactoredLog h_gcd(const Rat& alpha, const Rat& beta) {
    require_nonzero(alpha);
    require_nonzero(beta);
    FactoredLog out;
    // finite places: ord_p is positive for both arguments exactly at the
    // common primes of the (reduced) numerators
    const Int g = gcd(abs(numerator(alpha)), abs(numerator(beta)));
    if (g > 1) out.finite = factor(g);
    // infinite place: min(max(-log|a|, 0), max(-log|b|, 0))
    const Rat aa = abs_rat(alpha), ab = abs_rat(beta);
    if (aa < 1 && ab < 1) out.infinite_factor = Rat(1) / (aa > ab ? aa : ab);
    return out;
}

LogValue height_p1(const Rat& alpha) {
    const Int n = abs(numerator(alpha));
    const Int d = denominator(alpha);
    return LogValue{Rat(n > d ? n : d)};
}

LogValue weil_exceptional(const Place& v, const Rat& alpha, const Rat& beta) {
    require_nonzero(alpha);
    require_nonzero(beta);
    if (v.infinite) {
        const Rat aa = abs_rat(alpha), ab = abs_rat(beta);
        if (aa < 1 && ab < 1) return LogValue{Rat(1) / (aa > ab ? aa : ab)};
        return LogValue{};
    }
    const int k = std::min(std::max(ord_p(alpha, v.p), 0), std::max(ord_p(beta, v.p), 0));
    return LogValue{Rat(Int(pow(v.p, k)))};
}

LogValue weil_anticanonical(const Place& v, const Rat& alpha, const Rat& beta) {
    require_nonzero(alpha);
    require_nonzero(beta);
    if (v.infinite) {
        auto big = [](const Rat& x) {
            const Rat a = abs_rat(x);
            return a >= 1 ? a : Rat(1) / a;
        };
        return LogValue{big(alpha) * big(beta)};
    }
    const int k = std::abs(ord_p(alpha, v.p)) + std::abs(ord_p(beta, v.p));
    return LogValue{Rat(Int(pow(v.p, k)))};
}

bool product_formula_holds(const Rat& x) {
    require_nonzero(x);
    // prod_p p^{ord_p(x)} must equal |x| exactly
    Rat prod = 1;
    for (const Int& p : support_primes(x, x)) {
        const int k = ord_p(x, p);
        if (k >= 0) prod *= Rat(Int(pow(p, k)));
        else prod /= Rat(Int(pow(p, -k)));
    }
    return prod == abs_rat(x);
}

namespace {

bool place_excluded(const std::vector<Place>& s, const Place& v) {
    return std::find(s.begin(), s.end(), v) != s.end();
}

}  // namespace

SweepReport sweep_inequality(const GcdBoundReport& bound, const SweepParams& params) {
    if (params.grid < 1)
        throw_toric("EmptyGrid", "sweep grid must contain at least one value");

    SweepReport rep;
    rep.grid = params.grid;
    rep.epsilon = bound.epsilon;
    rep.delta = bound.delta;
    rep.r = bound.r;

    const Rat de = bound.delta + bound.epsilon;
    const Rat denom = (1 + de) * Rat(bound.r - 1);
    const double coeff_height = rat_to_double(de / denom);
    const double coeff_weil = rat_to_double(Rat(1) / denom);

    std::vector<std::pair<Rat, Rat>> pairs;
    pairs.reserve(static_cast<std::size_t>(params.grid) * params.grid + params.random_samples);
    for (int a = 1; a <= params.grid; ++a)
        for (int b = 1; b <= params.grid; ++b) pairs.emplace_back(Rat(a), Rat(b));

    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<int> pick(1, params.grid);
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < params.random_samples; ++s) {
        Rat alpha(pick(rng), pick(rng));
        Rat beta(pick(rng), pick(rng));
        if (coin(rng)) alpha = -alpha;
        if (coin(rng)) beta = -beta;
        pairs.emplace_back(std::move(alpha), std::move(beta));
    }

    rep.rows.reserve(pairs.size());
    bool first = true;
    for (const auto& [alpha, beta] : pairs) {
        SweepRow row;
        row.alpha = alpha;
        row.beta = beta;

        const FactoredLog lhs = h_gcd(alpha, beta);
        row.lhs = lhs.value();

        const double h_antican =
            2.0 * height_p1(alpha).value() + 2.0 * height_p1(beta).value();
        double lambda_sum = 0;
        for (const Int& p : support_primes(alpha, beta)) {
            const Place v = Place{false, p};
            if (place_excluded(params.excluded, v)) continue;
            lambda_sum += weil_anticanonical(v, alpha, beta).value();
        }
        if (!place_excluded(params.excluded, Place::inf()))
            lambda_sum += weil_anticanonical(Place::inf(), alpha, beta).value();

        row.rhs = coeff_height * h_antican + coeff_weil * lambda_sum;
        row.excess = row.lhs - row.rhs;

        if (lhs.is_zero()) {
            ++rep.coprime_count;
            if (row.rhs < -1e-9) ++rep.coprime_violations;
        }
        if (first || row.excess > rep.max_excess) rep.max_excess = row.excess;
        if (row.rhs > 1e-12) {
            const double ratio = row.lhs / row.rhs;
            if (first || ratio > rep.max_ratio) rep.max_ratio = ratio;
        }
        first = false;

        const int bin = static_cast<int>(std::floor(row.excess / 0.5));
        ++rep.excess_histogram[bin];
        rep.rows.push_back(std::move(row));
    }

    for (SweepRow& row : rep.rows) {
        if (row.rhs > 1e-12 && row.lhs > 0 &&
            row.lhs / row.rhs >= 0.95 * rep.max_ratio) {
            row.z_suspect = true;
            ++rep.flagged_count;
        }
    }
    rep.samples = rep.rows.size();
    return rep;
}

void write_sweep_csv(std::ostream& os, const SweepReport& report) {
    os << "alpha,beta,lhs,rhs,excess,z_suspect\n";
    char buf[64];
    for (const SweepRow& row : report.rows) {
        os << rat_to_string(row.alpha) << ',' << rat_to_string(row.beta) << ',';
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g", row.lhs, row.rhs, row.excess);
        os << buf << ',' << (row.z_suspect ? 1 : 0) << '\n';
    }
}

}  // namespace toric::heights
