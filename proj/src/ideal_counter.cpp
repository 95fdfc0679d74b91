#include "hrbound/ideal_counter.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include "hrbound/errors.hpp"
#include "hrbound/finite_field.hpp"
#include "hrbound/format.hpp"

namespace hrb {

int LocalShape::degree() const {
    int n = 0;
    for (const auto& i : ideals) n += i.ramification * i.residue_degree;
    return n;
}

ShapeOverrides parse_overrides(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ValidationError("override file: top level must be an object");
    ShapeOverrides out;
    for (const auto& [key, value] : doc.items()) {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("override file: key '" + key + "' is not a decimal prime");
        LocalShape shape;
        shape.prime = std::stoull(key);
        bool prime = shape.prime >= 2;
        for (std::uint64_t d = 2; prime && d * d <= shape.prime; ++d) prime = shape.prime % d != 0;
        if (!prime) throw ValidationError("override file: key '" + key + "' is not a prime");
        if (!value.is_array()) throw ValidationError("override file: entry for " + key + " must be a list");
        for (const auto& pair : value) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
                throw ValidationError("override file: entry for " + key + " must hold [e, f] integer pairs");
            const int e = pair[0].get<int>();
            const int f = pair[1].get<int>();
            if (e < 1 || f < 1) throw ValidationError("override file: e and f must be positive for " + key);
            shape.ideals.push_back({e, f});
        }
        out.emplace(shape.prime, std::move(shape));
    }
    return out;
}

ShapeOverrides load_overrides(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open override file '" + path + "'");
    try {
        return parse_overrides(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("override file '" + path + "': " + e.what());
    }
}

namespace {

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("binomial exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (prod > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("count exceeds 64 bits");
    return static_cast<std::uint64_t>(prod);
}

}  // namespace

std::uint64_t tau(int n, std::uint64_t m) {
    if (n < 1 || m < 1) throw PreconditionError("tau: n and m must be positive");
    std::uint64_t result = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        std::uint64_t a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        result = checked_mul(result, binomial_u64(a + n - 1, n - 1));
    }
    if (m > 1) result = checked_mul(result, static_cast<std::uint64_t>(n));
    return result;
}

LocalShape local_shape(const NumberFieldSpec& spec, const BigInt& witness, std::uint64_t p,
                       const ShapeOverrides& overrides, std::uint64_t seed) {
    if (witness % p == 0) {
        const auto it = overrides.find(p);
        if (it == overrides.end())
            throw IndexPrimeError(p, "prime " + std::to_string(p) +
                                         " may divide the index [O_K : Z[theta]]; supply an override");
        if (it->second.degree() != spec.degree)
            throw ValidationError("override for prime " + std::to_string(p) + ": sum of e*f is not the degree");
        return it->second;
    }
    LocalShape shape;
    shape.prime = p;
    for (const auto& [deg, mult] : factor_poly_mod_p(spec.poly, p, seed)) shape.ideals.push_back({mult, deg});
    return shape;
}

LocalShape local_shape(const NumberFieldSpec& spec, std::uint64_t p, const ShapeOverrides& overrides,
                       std::uint64_t seed) {
    return local_shape(spec, index_witness(spec), p, overrides, seed);
}

std::uint64_t prime_power_count(const LocalShape& shape, int k) {
    if (k < 0) return 0;
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(k) + 1, 0);
    dp[0] = 1;
    for (const auto& ideal : shape.ideals) {
        const int f = ideal.residue_degree;
        for (int j = f; j <= k; ++j) {
            dp[j] += dp[j - f];
            if (dp[j] < dp[j - f]) throw OverflowError("prime_power_count overflow");
        }
    }
    return dp[static_cast<std::size_t>(k)];
}

CoefficientTable::CoefficientTable(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2) throw PreconditionError("CoefficientTable: limit must be at least 1");
    counts_[0] = 0;
    sums_.assign(counts_.size(), 0);
    for (std::size_t m = 1; m < counts_.size(); ++m) sums_[m] = sums_[m - 1] + counts_[m];
}

void CoefficientTable::write_csv(std::ostream& out) const {
    out << "m,r,partial_sum\n";
    for (std::size_t m = 1; m < counts_.size(); ++m) out << m << ',' << counts_[m] << ',' << sums_[m] << '\n';
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

CoefficientTable sieve_coefficients(const NumberFieldSpec& spec, std::uint64_t limit, const SieveOptions& options) {
    if (limit < 1) throw PreconditionError("sieve_coefficients: limit must be at least 1");
    const BigInt witness = index_witness(spec);
    const std::vector<std::uint64_t> primes = primes_up_to(limit);

    // Local factors c_p(k) = r_K(p^k) for p^k <= limit, computed per prime.
    std::vector<std::vector<std::uint32_t>> local(primes.size());
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
    std::vector<std::exception_ptr> failures(primes.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const std::uint64_t p = primes[i];
                const LocalShape shape = local_shape(spec, witness, p, options.overrides, options.seed);
                std::vector<std::uint32_t> c{1};
                for (std::uint64_t pk = p; pk <= limit; pk = (pk > limit / p) ? limit + 1 : pk * p) {
                    const std::uint64_t v = prime_power_count(shape, static_cast<int>(c.size()));
                    if (v > std::numeric_limits<std::uint32_t>::max())
                        throw OverflowError("r_K(" + std::to_string(pk) + ") exceeds 32 bits");
                    c.push_back(static_cast<std::uint32_t>(v));
                }
                local[i] = std::move(c);
            } catch (...) {
                failures[i] = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        work(0, primes.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (primes.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(primes.size(), t * chunk);
            const std::size_t end = std::min(primes.size(), begin + chunk);
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::vector<std::uint32_t> r(limit + 1, 1);
    r[0] = 0;
    std::vector<bool> saturated;  // entries whose running product left 32 bits
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        std::uint64_t pk = p;
        for (std::size_t k = 1; k < local[i].size(); ++k, pk *= p) {
            const std::uint64_t c = local[i][k];
            if (c == 1) continue;
            for (std::uint64_t j = 1, m = pk; m <= limit; ++j, m += pk) {
                if (j % p == 0) continue;
                const std::uint64_t prod = static_cast<std::uint64_t>(r[m]) * c;
                if (prod > kMax) {
                    if (saturated.empty()) saturated.assign(limit + 1, false);
                    saturated[m] = true;
                    r[m] = static_cast<std::uint32_t>(kMax);
                } else {
                    r[m] = static_cast<std::uint32_t>(prod);
                    if (prod == 0 && !saturated.empty()) saturated[m] = false;
                }
            }
        }
    }
    if (!saturated.empty())
        for (std::uint64_t m = 1; m <= limit; ++m)
            if (saturated[m]) throw OverflowError("r_K(" + std::to_string(m) + ") exceeds 32 bits");
    return CoefficientTable(std::move(r));
}

DeltaProfile::DeltaProfile(const CoefficientTable& table, const Kappa& kappa) : kappa_(kappa) {
    const std::uint64_t limit = table.limit();
    at_.resize(limit);
    left_.resize(limit);
    for (std::uint64_t x = 1; x <= limit; ++x) {
        const double kx = kappa.value * static_cast<double>(x);
        at_[x - 1] = static_cast<double>(table.partial_sum(x)) - kx;
        left_[x - 1] = static_cast<double>(table.partial_sum(x - 1)) - kx;
        sup_ = std::max({sup_, std::abs(at_[x - 1]), std::abs(left_[x - 1])});
    }
}

void DeltaProfile::write_csv(std::ostream& out) const {
    out << "x,delta_at,delta_left\n";
    for (std::size_t i = 0; i < at_.size(); ++i)
        out << (i + 1) << ',' << shortest_repr(at_[i]) << ',' << shortest_repr(left_[i]) << '\n';
}

double empirical_C(const DeltaProfile& profile, double alpha) {
    if (profile.limit() == 0) throw PreconditionError("empirical_C: empty profile");
    double c = 0.0;
    for (std::uint64_t x = 1; x <= profile.limit(); ++x) {
        const double worst = std::max(std::abs(profile.delta_at(x)), std::abs(profile.delta_left(x)));
        c = std::max(c, worst * std::pow(static_cast<double>(x), alpha - 1.0));
    }
    return c;
}

Kappa estimate_kappa(const CoefficientTable& table, double alpha, double c_hyp) {
    const std::uint64_t x = table.limit();
    if (x < 1000) throw PreconditionError("estimate_kappa: sieve limit below 1000 gives no meaningful estimate");
    const double xd = static_cast<double>(x);
    return {static_cast<double>(table.partial_sum(x)) / xd, c_hyp * std::pow(xd, -alpha)};
}

}  // namespace hrb
