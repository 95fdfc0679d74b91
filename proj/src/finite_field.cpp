#include "hrbound/finite_field.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace hrb {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("invmod: zero has no inverse");
    return powmod(a, p - 2, p);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    const BigInt mod(p);
    for (const auto& a : f.coeffs()) {
        BigInt r = a % mod;
        if (r < 0) r += mod;
        c.push_back(r.convert_to<std::uint64_t>());
    }
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monomial(std::uint64_t p, int degree, std::uint64_t c) {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    const std::uint64_t inv = invmod(c_.back(), p_);
    auto v = c_;
    for (auto& c : v) c = mulmod(c, inv, p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::derivative() const {
    std::vector<std::uint64_t> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulmod(c_[i], i % p_, p_));
    return FpPoly(p_, std::move(v));
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
    return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
        const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
        v[i] = (x + y) % a.p_;
    }
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
        const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
        v[i] = (x + a.p_ - y) % a.p_;
    }
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
    std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
    return FpPoly(a.p_, std::move(v));
}

void FpPoly::divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) throw std::domain_error("FpPoly: division by zero polynomial");
    const std::uint64_t p = a.p_;
    auto rem = a.c_;
    const int db = b.degree();
    const std::uint64_t inv = invmod(b.c_.back(), p);
    std::vector<std::uint64_t> quot(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        const std::uint64_t coef = mulmod(rem[static_cast<std::size_t>(i)], inv, p);
        if (coef == 0) continue;
        const int shift = i - db;
        quot[static_cast<std::size_t>(shift)] = coef;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(shift + j)];
            slot = (slot + p - mulmod(coef, b.c_[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    q = FpPoly(p, std::move(quot));
    r = FpPoly(p, std::move(rem));
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) {
    FpPoly q(a.p_, {}), r(a.p_, {});
    FpPoly::divmod(a, b, q, r);
    return q;
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
    FpPoly q(a.p_, {}), r(a.p_, {});
    FpPoly::divmod(a, b, q, r);
    return r;
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
    FpPoly result = FpPoly(m.modulus(), {1}) % m;
    FpPoly b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

namespace {

FpPoly pth_root(const FpPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
    return FpPoly(p, std::move(v));
}

// a^{(p^d - 1)/2} mod f for odd p, without forming p^d.
FpPoly half_power(const FpPoly& a, int d, const FpPoly& f) {
    const std::uint64_t p = f.modulus();
    FpPoly acc = a % f;
    FpPoly frob = acc;
    for (int i = 1; i < d; ++i) {
        frob = powmod(frob, p, f);
        acc = (acc * frob) % f;
    }
    return powmod(acc, (p - 1) / 2, f);
}

// Sum_{i<d} a^{2^i} mod f, the absolute trace used for splitting over F_2.
FpPoly trace_map(const FpPoly& a, int d, const FpPoly& f) {
    FpPoly term = a % f;
    FpPoly acc = term;
    for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        acc = acc + term;
    }
    return acc;
}

FpPoly splitting_candidate(const FpPoly& a, int d, const FpPoly& f) {
    if (f.modulus() == 2) return gcd(f, trace_map(a, d, f));
    return gcd(f, half_power(a, d, f) - FpPoly(f.modulus(), {1}));
}

// Polynomial whose base-p digits are those of k, degree < max_degree.
FpPoly enumerate_poly(std::uint64_t k, std::uint64_t p, int max_degree) {
    std::vector<std::uint64_t> v;
    while (k > 0 && static_cast<int>(v.size()) < max_degree) {
        v.push_back(k % p);
        k /= p;
    }
    return FpPoly(p, std::move(v));
}

void edf_split(const FpPoly& f, int d, std::mt19937_64* rng, std::uint64_t& counter, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = f.modulus();
    while (true) {
        FpPoly a(p, {});
        if (rng) {
            std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
            std::vector<std::uint64_t> v(static_cast<std::size_t>(f.degree()));
            for (auto& c : v) c = coef(*rng);
            a = FpPoly(p, std::move(v));
        } else {
            a = enumerate_poly(++counter, p, f.degree());
            if (a.is_zero()) throw std::logic_error("equal_degree_factorization: enumeration exhausted");
        }
        if (a.degree() < 1) continue;
        const FpPoly g = splitting_candidate(a, d, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_split(g, d, rng, counter, out);
            edf_split(f / g, d, rng, counter, out);
            return;
        }
    }
}

bool factor_less(const FactorPower& a, const FactorPower& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return a.factor.coeffs() < b.factor.coeffs();
}

}  // namespace

std::vector<FactorPower> squarefree_factorization(const FpPoly& f_in) {
    const std::uint64_t p = f_in.modulus();
    const FpPoly f = f_in.monic();
    std::vector<FactorPower> out;
    if (f.degree() < 1) return out;
    const FpPoly fd = f.derivative();
    if (fd.is_zero()) {
        for (auto& [g, m] : squarefree_factorization(pth_root(f))) out.push_back({g, m * static_cast<int>(p)});
        return out;
    }
    FpPoly c = gcd(f, fd);
    FpPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        const FpPoly y = gcd(w, c);
        const FpPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_factorization(pth_root(c.monic())))
            out.push_back({g, m * static_cast<int>(p)});
    }
    return out;
}

std::vector<std::pair<int, FpPoly>> distinct_degree_factorization(const FpPoly& f_in) {
    const std::uint64_t p = f_in.modulus();
    FpPoly f = f_in.monic();
    std::vector<std::pair<int, FpPoly>> out;
    const FpPoly x = FpPoly::monomial(p, 1);
    FpPoly h = x % f;
    int d = 1;
    while (f.degree() >= 2 * d) {
        h = powmod(h, p, f);
        const FpPoly g = gcd(f, h - x);
        if (!g.is_one()) {
            out.emplace_back(d, g);
            f = f / g;
            h = h % f;
        }
        ++d;
    }
    if (f.degree() > 0) out.emplace_back(f.degree(), f);
    return out;
}

std::vector<FpPoly> equal_degree_factorization(const FpPoly& f_in, int d, std::uint64_t seed) {
    const FpPoly f = f_in.monic();
    const std::uint64_t p = f.modulus();
    std::vector<FpPoly> out;
    if (f.degree() < 1) return out;
    if (f.degree() % d != 0) throw std::invalid_argument("equal_degree_factorization: degree not a multiple of d");
    if (f.degree() == d) return {f};
    if (p < 50 && d == 1) {
        for (std::uint64_t r = 0; r < p; ++r)
            if (f.evaluate(r) == 0) out.push_back(FpPoly(p, {(p - r) % p, 1}));
        return out;
    }
    std::uint64_t counter = 0;
    if (p < 50) {
        edf_split(f, d, nullptr, counter, out);
    } else {
        std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ULL));
        edf_split(f, d, &rng, counter, out);
    }
    return out;
}

std::vector<FactorPower> factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed) {
    std::vector<FactorPower> out;
    const FpPoly fp = FpPoly::reduce(f, p);
    for (const auto& [part, mult] : squarefree_factorization(fp))
        for (const auto& [d, prod] : distinct_degree_factorization(part))
            for (auto& irreducible : equal_degree_factorization(prod, d, seed)) out.push_back({irreducible, mult});
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

std::vector<DegreeMultiplicity> factor_poly_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed) {
    std::vector<DegreeMultiplicity> out;
    for (const auto& fp : factor_mod_p(f, p, seed)) out.push_back({fp.factor.degree(), fp.multiplicity});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hrb
