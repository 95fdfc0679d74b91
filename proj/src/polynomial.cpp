#include "hrbound/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace hrb {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::operator[](int i) const {
    if (i < 0 || i > degree()) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long long>(i));
    return IntPoly(std::move(d));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

namespace {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return BigInt(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const BigRational q = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_of(const BigRational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return BigInt(0);
    const int m = f.degree();
    const int n = g.degree();
    const int size = m + n;
    if (size == 0) return BigInt(1);
    std::vector<std::vector<BigInt>> syl(static_cast<std::size_t>(size),
                                         std::vector<BigInt>(static_cast<std::size_t>(size), BigInt(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[r][r + i] = f[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[n + r][r + i] = g[n - i];
    return bareiss_determinant(std::move(syl));
}

BigInt poly_discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) return BigInt(0);
    BigInt res = resultant(f, f.derivative()) / f.leading();
    const long long half = static_cast<long long>(n) * (n - 1) / 2;
    return (half % 2 == 0) ? res : BigInt(-res);
}

int real_root_count(const IntPoly& f) {
    if (f.degree() < 1) return 0;
    RatPoly p0, p1;
    for (const auto& c : f.coeffs()) p0.emplace_back(c);
    const IntPoly df = f.derivative();
    for (const auto& c : df.coeffs()) p1.emplace_back(c);
    std::vector<RatPoly> chain{p0, p1};
    while (true) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& p : chain) {
        const int s = sign_of(p.back());
        const bool odd = (p.size() - 1) % 2 == 1;
        at_pos.push_back(s);
        at_neg.push_back(odd ? -s : s);
    }
    return variations(at_neg) - variations(at_pos);
}

double log_abs(const BigInt& v) {
    BigInt mag = abs(v);
    const std::size_t bits = boost::multiprecision::msb(mag) + 1;
    if (bits < 1000) return std::log(mag.convert_to<double>());
    const std::size_t shift = bits - 64;
    BigInt top = mag >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

BigInt exact_sqrt_or_negative(const BigInt& v) {
    if (v < 0) return BigInt(-1);
    BigInt r = boost::multiprecision::sqrt(v);
    return r * r == v ? r : BigInt(-1);
}

}  // namespace hrb
