#include "semican/qpoly.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace semican {

QPoly::QPoly(long c) : coeffs_{Integer(c)} { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(int degree, const Integer& coeff) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, Integer(0));
    c.back() = coeff;
    return QPoly(std::move(c));
}

Integer QPoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPoly::eval(const Integer& q) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Integer QPoly::at_one() const {
    Integer acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

bool QPoly::has_nonnegative_coefficients() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool show_coeff = k == 0 || mag != 1;
        if (show_coeff) out += mag.get_str();
        if (k > 0) {
            if (show_coeff) out += "*";
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

QPoly gauss_integer(int n) {
    if (n <= 0) return QPoly();
    return QPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

QPoly gauss_binom(int m, int k) {
    if (k < 0 || m < 0 || k > m) return QPoly();
    if (k == 0 || k == m) return QPoly(1);

    static std::mutex mu;
    static std::map<std::pair<int, int>, QPoly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({m, k}); it != memo.end()) return it->second;
    }
    // [m, k] = [m-1, k-1] + q^k [m-1, k]
    QPoly value = gauss_binom(m - 1, k - 1) + QPoly::monomial(k) * gauss_binom(m - 1, k);
    std::lock_guard lock(mu);
    memo.emplace(std::pair{m, k}, value);
    return value;
}

QPoly gauss_factorial(int n) {
    QPoly acc(1);
    for (int i = 1; i <= n; ++i) acc *= gauss_integer(i);
    return acc;
}

}  // namespace semican
